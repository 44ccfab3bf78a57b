#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "consec/pattern.hpp"
#include "consec/qpolynomial.hpp"

namespace consec {

// How a member set's inversion polynomial relates to its row's canonical one:
// reverse/complement images need the q -> 1/q transport scaled by q^C(n,2);
// the reverse-complement image shares the canonical polynomial as-is.
enum class Transform { Identity, Reciprocal };

struct ClassMember {
  PatternSet set;
  Transform transform;
};

// One equivalence row: a canonical representative plus its closure under
// reverse/complement, with the transport flag per member.
struct ClassRow {
  std::string class_id;  // "1".."13", "size5-inc", "size5-other", "size6"
  PatternSet canonical;
  std::vector<ClassMember> members;
};

// All classified rows, in presentation order: size-5 rows, size-6, 1..13.
const std::vector<ClassRow>& classification_rows();

struct PatternSetClass {
  std::string class_id;  // as above, plus "size5-dec" and "unknown"
  PatternSet canonical;
  Transform transform = Transform::Identity;

  bool covered_by_formula() const { return class_id != "unknown" && class_id != "12"; }
};

// Identifies the row containing s (up to reverse/complement) and the
// transport needed.  Subsets of the six consecutive length-3 patterns only;
// anything else throws std::invalid_argument.  Sets of size <= 1 and the
// two-pattern sets outside the class-13 orbit come back as "unknown".
PatternSetClass classify(const PatternSet& s);

struct NotCovered : std::runtime_error {
  explicit NotCovered(const std::string& what) : std::runtime_error(what) {}
};
struct OpenFormula : std::runtime_error {
  explicit OpenFormula(const std::string& what) : std::runtime_error(what) {}
};

// Exact I_n(s;q) from the per-class closed forms and recursions, with
// reciprocal transport applied for non-canonical members.  n <= 2 returns the
// full S_n polynomial (no length-3 pattern fits).  Throws OpenFormula for
// class 12 and NotCovered for unknown sets.
QPolynomial inv_poly(const PatternSet& s, int n);

// Inversion polynomial restricted to avoiders whose strip tableau begins
// (leftmost column) with a column of height exactly k.  Supported for the
// canonical sets of classes 6, 7, 10, 11, 13.
QPolynomial aux_begin(const PatternSet& s, int n, int k);

// Same, restricted to tableaux ending (rightmost column) with height exactly
// k.  Supported for the canonical set of class 9.
QPolynomial aux_end(const PatternSet& s, int n, int k);

// Sum over 0 < a_1 < ... < a_k < n of q^{k(n-2k-1) + 3k(k+1)/2 - sum(a_i)}.
// Zero when no such subset exists; the minimum exponent is always k (checked).
QPolynomial class10_inner_sum(int n, int k);

inline int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace consec
