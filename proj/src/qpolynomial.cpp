#include "consec/qpolynomial.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace consec {

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(int exponent, std::int64_t coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return {};
  std::vector<std::int64_t> c(exponent + 1, 0);
  c[exponent] = coeff;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::geometric(int a, int b) {
  if (a < 0) throw std::invalid_argument("negative exponent");
  if (a > b) return {};
  std::vector<std::int64_t> c(b + 1, 0);
  for (int e = a; e <= b; ++e) c[e] = 1;
  return QPolynomial(std::move(c));
}

std::int64_t QPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[exponent];
}

std::int64_t QPolynomial::eval_at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<std::int64_t> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::shifted(int j) const {
  if (j < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || j == 0) return *this;
  std::vector<std::int64_t> c(coeffs_.size() + j, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + j);
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::reciprocal_transport(int N) const {
  if (N < 0) throw std::invalid_argument("negative transport degree");
  if (degree() > N) {
    throw std::invalid_argument("reciprocal transport would create negative exponents (degree " +
                                std::to_string(degree()) + " > N " + std::to_string(N) + ")");
  }
  std::vector<std::int64_t> c(N + 1, 0);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) c[N - e] = coeffs_[e];
  return QPolynomial(std::move(c));
}

bool QPolynomial::is_palindromic() const {
  std::size_t i = 0, j = coeffs_.size();
  while (i < j) {
    if (coeffs_[i] != coeffs_[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

bool QPolynomial::is_log_concave() const {
  for (std::size_t i = 1; i + 1 < coeffs_.size(); ++i) {
    if (coeffs_[i] * coeffs_[i] < coeffs_[i - 1] * coeffs_[i + 1]) return false;
  }
  return true;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const std::int64_t c = coeffs_[e];
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? " + " : " - ";
    else if (c < 0) out += "-";
    const std::int64_t a = c > 0 ? c : -c;
    if (e == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += (e == 1) ? "q" : "q^" + std::to_string(e);
    }
  }
  return out;
}

std::string QPolynomial::coeffs_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs_[i]);
  }
  return out + "]";
}

QPolynomial q_catalan(int k) {
  if (k < 0) throw std::invalid_argument("negative q-Catalan index");
  static std::mutex mtx;
  static std::vector<QPolynomial> memo = {QPolynomial::one()};
  std::lock_guard<std::mutex> lock(mtx);
  while (static_cast<int>(memo.size()) <= k) {
    const int m = static_cast<int>(memo.size());
    QPolynomial sum;
    for (int i = 1; i <= m; ++i) {
      sum += (memo[i - 1] * memo[m - i]).shifted(i - 1);
    }
    memo.push_back(std::move(sum));
  }
  return memo[k];
}

}  // namespace consec
