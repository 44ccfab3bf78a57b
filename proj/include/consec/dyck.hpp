#pragma once

#include <string>
#include <vector>

#include "consec/pattern.hpp"

namespace consec {

enum class Step : unsigned char { North, East };

// Lattice path from (0,0) to (n,n) over NORTH/EAST steps that never crosses
// below the diagonal (every prefix has #NORTH >= #EAST).
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<Step> steps);  // throws on invalid paths

  int length() const { return static_cast<int>(steps_.size()) / 2; }  // #NORTH
  const std::vector<Step>& steps() const { return steps_; }

  // Unit squares strictly above the diagonal and below the path.
  int area() const;

  std::string to_string() const;  // "NNEE"
  bool operator==(const DyckPath&) const = default;

 private:
  std::vector<Step> steps_;
};

std::vector<DyckPath> enumerate_dyck(int n, int cap = kDefaultCap);

// Standard two-row tableau of size 2n: step labels 1..2n, NORTH labels on the
// top row, EAST labels on the bottom row, both increasing left to right.
struct TwoRowTableau {
  std::vector<int> top;
  std::vector<int> bottom;
  bool operator==(const TwoRowTableau&) const = default;
};

TwoRowTableau dyck_to_two_row(const DyckPath& d);
DyckPath two_row_to_dyck(const TwoRowTableau& t);  // throws if rows are not a valid labelling

}  // namespace consec
