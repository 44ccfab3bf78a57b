#pragma once

#include <compare>
#include <string>
#include <vector>

namespace consec {

// One-line permutation of {1,...,n}, n >= 0.  Values are 1-based to match
// the usual combinatorial notation; positions are 0-based in code.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless entries is a permutation of {1..n}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  // Accepts "3 2 8 5 7 4 6 1 9", "3,2,8", or compact digits "328574619".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int pos) const { return entries_[pos]; }
  const std::vector<int>& entries() const { return entries_; }

  // |{(i,j) : i<j, p_i>p_j}|, O(n^2) pair scan (n stays desk-sized here).
  int inversion_count() const;

  Permutation reverse() const;
  Permutation complement() const;
  Permutation inverse() const;

  // Position i (0-based) is a descent when p_i > p_{i+1}.
  int descent_count() const;

  std::string to_string() const;          // "3 2 8 5 7 4 6 1 9"
  std::string to_compact_string() const;  // "328574619" when n <= 9, else spaced

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

}  // namespace consec
