#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "consec/permutation.hpp"
#include "consec/qpolynomial.hpp"

namespace consec {

// Dash-separated pattern: letters inside a block must sit in adjacent
// positions of the host permutation, blocks may be separated by arbitrary
// (possibly empty) gaps.  "321" is consecutive (one block); "3-2-1" is the
// classical pattern; "31-2" mixes the two.
class GeneralizedPattern {
 public:
  // Throws std::invalid_argument unless the concatenated letters form a
  // permutation of {1..k} and every block is nonempty.
  explicit GeneralizedPattern(std::vector<std::vector<int>> blocks);
  static GeneralizedPattern parse(const std::string& text);  // e.g. "31-2"

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& letters() const { return letters_; }  // concatenation
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_consecutive() const { return blocks_.size() == 1; }
  bool is_standard() const;  // every block a single letter

  // Reverse flips the block order and each block; complement maps v -> k+1-v.
  // These mirror how the operations act on occurrences.
  GeneralizedPattern reversed() const;
  GeneralizedPattern complemented() const;

  std::string to_string() const;
  auto operator<=>(const GeneralizedPattern&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> letters_;
};

// Finite set of patterns, kept sorted and deduplicated.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<GeneralizedPattern> patterns);
  static PatternSet parse(const std::string& text);  // "321,312"

  const std::vector<GeneralizedPattern>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  int size() const { return static_cast<int>(patterns_.size()); }
  bool contains_pattern(const GeneralizedPattern& g) const;
  bool is_subset_of(const PatternSet& other) const;
  bool all_consecutive_of_length(int k) const;

  PatternSet reversed() const;
  PatternSet complemented() const;

  std::string to_string() const;                 // ascending, comma joined
  std::vector<std::string> pattern_strings() const;

  auto operator<=>(const PatternSet&) const = default;

 private:
  std::vector<GeneralizedPattern> patterns_;
};

// True iff p has an occurrence of g: one window per block, blocks in order,
// values across all blocks order-isomorphic to the letters.  Patterns longer
// than p trivially report false.
bool contains(const Permutation& p, const GeneralizedPattern& g);
bool avoids_all(const Permutation& p, const PatternSet& s);

inline constexpr int kDefaultCap = 12;

// Enumeration refuses n above the cap: n! work grows past desk scale.
struct CapExceeded : std::runtime_error {
  CapExceeded(int n, int cap)
      : std::runtime_error("n = " + std::to_string(n) + " exceeds the resource cap " +
                           std::to_string(cap)) {}
};

// Visits Av_n(s) in lexicographic order.
void for_each_avoider(int n, const PatternSet& s,
                      const std::function<void(const Permutation&)>& visit,
                      int cap = kDefaultCap);
std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& s, int cap = kDefaultCap);

// Brute-force oracle: sum of q^inv over Av_n(s).  Work is partitioned across
// `jobs` workers by first entry; partial polynomials merge by addition, so the
// result is independent of jobs.  jobs <= 0 means use hardware concurrency.
QPolynomial oracle_inv_poly(int n, const PatternSet& s, int cap = kDefaultCap, int jobs = 1);

}  // namespace consec
