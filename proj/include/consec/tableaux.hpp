#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "consec/pattern.hpp"
#include "consec/permutation.hpp"

namespace consec {

struct StripCell {
  int entry;
  int row;  // grows downward, top row is 0
  int col;
  bool operator==(const StripCell&) const = default;
};

// Contiguous staircase of cells: listed from the leftmost/uppermost cell,
// each cell directly below or directly right of its predecessor.  Entries
// are 1..n; every column decreases bottom to top and every row decreases
// left to right.
class StripTableau {
 public:
  StripTableau() = default;
  explicit StripTableau(std::vector<StripCell> cells);  // validates, throws

  // Inverse column-reading map: scan p left to right, stacking on descents
  // and extending leftward on ascents, so that reading_word() recovers p.
  static StripTableau from_word(const Permutation& p);

  const std::vector<StripCell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }

  // Columns right to left, each bottom to top.
  Permutation reading_word() const;
  int inversion_count() const { return reading_word().inversion_count(); }

  std::optional<int> entry_at(int row, int col) const;
  int column_height(int col) const;
  int row_width(int row) const;
  int first_column() const;  // leftmost column index
  int last_column() const;   // rightmost column index

  std::string render() const;  // aligned grid, blanks for absent cells

  nlohmann::json to_json() const;
  static StripTableau from_json(const nlohmann::json& j);

  bool operator==(const StripTableau&) const = default;

 private:
  std::vector<StripCell> cells_;
};

// Structural avoidance test for the six consecutive length-3 patterns:
//   321 - every column has at most 2 entries
//   123 - every row has at most 2 entries
//   312 - right corners decrease: entry below < entry to the left
//   213 - right corners increase
//   231 - left corners decrease: entry above > entry to the right
//   132 - left corners increase
// A corner lacking either neighbour imposes no constraint.  Holds exactly
// when the reading word avoids the pattern (tested exhaustively).
// Throws std::invalid_argument for any other pattern.
bool structurally_avoids(const StripTableau& t, const GeneralizedPattern& g);

// Column heights over {1,2}; size is the sum of parts.
class FibonacciShape {
 public:
  FibonacciShape() = default;
  explicit FibonacciShape(std::vector<int> parts);  // throws unless parts are 1s and 2s

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int column_count() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;  // "122121"
  bool operator==(const FibonacciShape&) const = default;

 private:
  std::vector<int> parts_;
};

// Standard filling of a Fibonacci shape: bottom row strictly decreasing left
// to right, every height-2 column strictly decreasing bottom to top.
class FibonacciTableau {
 public:
  FibonacciTableau() = default;
  explicit FibonacciTableau(std::vector<std::vector<int>> columns);  // bottom-to-top per column

  const std::vector<std::vector<int>>& columns() const { return columns_; }
  FibonacciShape shape() const;
  int size() const;

  Permutation reading_word() const;
  int inversion_count() const { return reading_word().inversion_count(); }

  bool all_columns_height2() const;
  bool top_row_decreasing() const;  // across height-2 columns only

  std::string render() const;

  nlohmann::json to_json() const;
  static FibonacciTableau from_json(const nlohmann::json& j);

  bool operator==(const FibonacciTableau&) const = default;

 private:
  std::vector<std::vector<int>> columns_;
};

// Drop every column of a strip tableau to the bottom level.  Requires the
// structural conditions for both 321 and 312 (columns of height <= 2, right
// corners decreasing); the reading word is preserved.
FibonacciTableau strip_to_fibonacci(const StripTableau& t);

// All standard Fibonacci tableaux of size n over all shapes, optionally
// filtered.  Deterministic order: shapes enumerated with height-1 columns
// first, fillings by descending top entry.
void for_each_fibonacci_tableau(int n, const std::function<void(const FibonacciTableau&)>& visit,
                                int cap = kDefaultCap);
std::vector<FibonacciTableau> enumerate_fibonacci_tableaux(
    int n, const std::function<bool(const FibonacciTableau&)>& keep = nullptr,
    int cap = kDefaultCap);

}  // namespace consec
