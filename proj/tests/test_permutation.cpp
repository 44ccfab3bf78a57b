#include "consec/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

using namespace consec;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

template <typename Fn>
void for_all_sn(int n, Fn&& fn) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  do {
    fn(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace

TEST_CASE("inversion count point values") {
  CHECK(P("3 2 8 5 7 4 6 1 9").inversion_count() == 15);
  CHECK(P("328574619").inversion_count() == 15);  // same permutation, compact form
  CHECK(P("1 2 3 4").inversion_count() == 0);
  CHECK(P("4 3 2 1").inversion_count() == 6);
  CHECK(Permutation().inversion_count() == 0);
  CHECK(P("1").inversion_count() == 0);
}

TEST_CASE("reverse, complement, inverse definitions") {
  CHECK(P("1 2 3").reverse() == P("3 2 1"));
  CHECK(P("2 3 1").reverse() == P("1 3 2"));
  CHECK(Permutation().reverse() == Permutation());

  CHECK(P("1 2 3").complement() == P("3 2 1"));
  CHECK(P("2 3 1").complement() == P("2 1 3"));
  CHECK(P("1").complement() == P("1"));

  CHECK(P("2 3 1").inverse() == P("3 1 2"));
  CHECK(P("1 2 3").inverse() == P("1 2 3"));
  CHECK(P("2 1").inverse() == P("2 1"));
}

TEST_CASE("parse accepts spaces, commas and compact digits") {
  CHECK(P("2,3,1") == P("2 3 1"));
  CHECK(P("231") == P("2 3 1"));
  CHECK(P("10 9 8 7 6 5 4 3 2 1").size() == 10);
  CHECK_THROWS_AS(P("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(P("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(P("2 4"), std::invalid_argument);
  CHECK_THROWS_AS(P("a b"), std::invalid_argument);
}

TEST_CASE("inversion transport identities hold across all of S_n") {
  for (int n = 0; n <= 6; ++n) {
    const int total = n * (n - 1) / 2;
    for_all_sn(n, [&](const Permutation& p) {
      CHECK(p.inversion_count() == p.inverse().inversion_count());
      CHECK(p.reverse().inversion_count() == total - p.inversion_count());
      CHECK(p.complement().inversion_count() == total - p.inversion_count());
      CHECK(p.reverse().reverse() == p);
      CHECK(p.complement().complement() == p);
      CHECK(p.inverse().inverse() == p);
    });
  }
}

TEST_CASE("reverse, complement and inverse are bijections on S_n") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> rev, comp, inv;
    std::size_t count = 0;
    for_all_sn(n, [&](const Permutation& p) {
      rev.insert(p.reverse());
      comp.insert(p.complement());
      inv.insert(p.inverse());
      ++count;
    });
    CHECK(rev.size() == count);
    CHECK(comp.size() == count);
    CHECK(inv.size() == count);
  }
}

TEST_CASE("text round trips") {
  CHECK(P("3 2 8 5 7 4 6 1 9").to_string() == "3 2 8 5 7 4 6 1 9");
  CHECK(P("3 2 8 5 7 4 6 1 9").to_compact_string() == "328574619");
  const Permutation big = P("11 10 9 8 7 6 5 4 3 2 1");
  CHECK(Permutation::parse(big.to_string()) == big);
  CHECK(big.to_compact_string() == big.to_string());  // no compact form past 9
}

TEST_CASE("descents") {
  CHECK(P("1 2 3").descent_count() == 0);
  CHECK(P("3 2 1").descent_count() == 2);
  CHECK(P("2 3 11 7 10 9 1 5 6 8 4").descent_count() == 4);
}
