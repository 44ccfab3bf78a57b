#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace consec {

// Polynomial in q with 64-bit integer coefficients and nonnegative exponents,
// stored densely (coeffs_[e] is the coefficient of q^e, trailing zeros trimmed).
// Degrees here stay <= C(12,2) = 66 and coefficient magnitudes stay below
// |S_12| = 479001600, far inside int64 range.
class QPolynomial {
 public:
  QPolynomial() = default;  // zero polynomial
  explicit QPolynomial(std::vector<std::int64_t> coeffs);

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one() { return monomial(0, 1); }
  static QPolynomial monomial(int exponent, std::int64_t coeff = 1);
  // q^a + q^(a+1) + ... + q^b; zero when a > b.
  static QPolynomial geometric(int a, int b);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  std::int64_t coeff(int exponent) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t eval_at_one() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs);
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  QPolynomial shifted(int j) const;  // multiply by q^j

  // q^N * p(1/q): coefficient of q^e moves to q^(N-e).
  // Throws std::invalid_argument when degree() > N.
  QPolynomial reciprocal_transport(int N) const;

  bool is_palindromic() const;
  // c_i^2 >= c_{i-1} c_{i+1} across the support (zeros inside count).
  bool is_log_concave() const;

  std::string to_string() const;  // ascending exponents: "1 + 2*q + q^2"
  std::string coeffs_json() const;  // "[1,2,1]"

  bool operator==(const QPolynomial&) const = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

// Carlitz-Riordan q-Catalan polynomial, via the memoized recurrence
// C_k(q) = sum_{i=1..k} q^(i-1) C_{i-1}(q) C_{k-i}(q), C_0 = 1.
// At q=1 this is the k-th Catalan number.
QPolynomial q_catalan(int k);

}  // namespace consec
