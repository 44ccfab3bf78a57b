#include "consec/qpolynomial.hpp"

#include <cstdint>

#include "doctest.h"

#include "consec/dyck.hpp"
#include "consec/pattern.hpp"

using namespace consec;

namespace {

QPolynomial qp(std::vector<std::int64_t> coeffs) { return QPolynomial(std::move(coeffs)); }

// Independent route to the Catalan numbers.
std::int64_t catalan_number(int n) {
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK(qp({1, 1}) + qp({0, 1}) == qp({1, 2}));
  CHECK(qp({1, 1}) * qp({1, 1}) == qp({1, 2, 1}));
  CHECK(qp({1, 1}).shifted(2) == qp({0, 0, 1, 1}));
  CHECK(qp({1}) * QPolynomial::zero() == QPolynomial::zero());
  CHECK(qp({0, 0, 0}).is_zero());
  CHECK(qp({1, 2, 0, 0}).degree() == 1);  // trailing zeros trimmed
}

TEST_CASE("geometric blocks") {
  CHECK(QPolynomial::geometric(0, 3) == qp({1, 1, 1, 1}));
  CHECK(QPolynomial::geometric(1, 1) == qp({0, 1}));
  CHECK(QPolynomial::geometric(2, 4) == qp({0, 0, 1, 1, 1}));
  CHECK(QPolynomial::geometric(3, 2).is_zero());
}

TEST_CASE("reciprocal transport reflects exponents") {
  CHECK(qp({1, 1}).reciprocal_transport(3) == qp({0, 0, 1, 1}));
  CHECK(qp({0, 1, 1}).reciprocal_transport(2) == qp({1, 1}));
  CHECK_THROWS_AS(qp({1, 1, 1, 1}).reciprocal_transport(2), std::invalid_argument);
  // Involution when N is fixed.
  const QPolynomial p = qp({2, 0, 5, 1});
  CHECK(p.reciprocal_transport(5).reciprocal_transport(5) == p);
}

TEST_CASE("transport connects complemented avoider sets") {
  // {123,132} is the complement image of {321,312}; its oracle polynomial is
  // the C(4,2)=6 transport of the original.  Both sides brute-forced.
  const QPolynomial lhs = oracle_inv_poly(4, PatternSet::parse("321,312"));
  const QPolynomial rhs = oracle_inv_poly(4, PatternSet::parse("123,132"));
  CHECK(lhs.reciprocal_transport(6) == rhs);
}

TEST_CASE("q-Catalan against Dyck path enumeration") {
  CHECK(q_catalan(0) == QPolynomial::one());
  CHECK(q_catalan(3).eval_at_one() == 5);
  // Oracle first: sum q^area over all Dyck paths, then compare.
  for (int k = 0; k <= 7; ++k) {
    QPolynomial by_area;
    for (const DyckPath& d : enumerate_dyck(k)) by_area += QPolynomial::monomial(d.area());
    CHECK(q_catalan(k) == by_area);
  }
  CHECK(q_catalan(3) == qp({1, 2, 1, 1}));
}

TEST_CASE("q-Catalan specializes to the Catalan numbers") {
  for (int k = 0; k <= 10; ++k) CHECK(q_catalan(k).eval_at_one() == catalan_number(k));
}

TEST_CASE("palindromic and log-concave predicates") {
  CHECK(qp({1, 2, 1}).is_palindromic());
  CHECK(qp({0, 1, 1}).is_palindromic() == false);  // support offset matters
  CHECK(QPolynomial::zero().is_palindromic());
  CHECK(qp({1, 3, 3, 2, 1}).is_palindromic() == false);
  CHECK(qp({1, 3, 3, 2, 1}).is_log_concave());
  CHECK(qp({1, 1, 3, 1}).is_log_concave() == false);
}

TEST_CASE("text form ascends in the exponent") {
  CHECK(qp({1, 2, 1, 1}).to_string() == "1 + 2*q + q^2 + q^3");
  CHECK(qp({0, 1, 1}).to_string() == "q + q^2");
  CHECK(QPolynomial::zero().to_string() == "0");
  CHECK(QPolynomial::monomial(10).to_string() == "q^10");
  CHECK(qp({1, 2, 1}).coeffs_json() == "[1,2,1]");
}
