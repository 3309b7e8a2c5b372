#include <doctest.h>

#include <numeric>

#include "curvebound/semigroup.hpp"
#include "oracle.hpp"

using curvebound::NumericalSemigroup;
using curvebound::SimplePairSingularity;

TEST_CASE("semigroup <4,7>") {
  NumericalSemigroup s({4, 7});
  CHECK(s.gaps() == std::vector<long long>{1, 2, 3, 5, 6, 9, 10, 13, 17});
  CHECK(s.delta() == 9);
  CHECK(s.mu() == 18);
  CHECK(s.conductor() == 18);
  CHECK(s.is_symmetric());
  CHECK(s.multiplicity() == 4);
}

TEST_CASE("semigroup <1> is the whole of Z_{>=0}") {
  NumericalSemigroup s({1});
  CHECK(s.gaps().empty());
  CHECK(s.delta() == 0);
  CHECK(s.conductor() == 0);
  CHECK(s.contains(0));
  CHECK(s.contains(12345));
  CHECK(s.count_below(10) == 10);
}

TEST_CASE("semigroup <2,379>") {
  NumericalSemigroup s({2, 379});
  CHECK(s.delta() == 189);
  CHECK(s.conductor() == 378);
  // independent enumeration
  auto members = oracle::naive_members({2, 379}, 2 * 378);
  for (long long m = 0; m <= 2 * 378; ++m) CHECK(s.contains(m) == (members.count(m) > 0));
}

TEST_CASE("rejected generator lists") {
  CHECK_THROWS_AS(NumericalSemigroup({}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(NumericalSemigroup({6, 10}), doctest::Contains("not a numerical semigroup"),
                       std::invalid_argument);
}

TEST_CASE("conductor is exact for wider generator sets") {
  // The two smallest generators alone do not bound the conductor here; the
  // sieve has to grow its window to prove it.
  NumericalSemigroup s({4, 6, 101});
  CHECK(s.conductor() == 104);
  CHECK(!s.contains(103));
  CHECK(s.contains(104));
  auto members = oracle::naive_members({4, 6, 101}, 230);
  for (long long m = 0; m <= 230; ++m) CHECK(s.contains(m) == (members.count(m) > 0));

  NumericalSemigroup t({3, 4, 5});
  CHECK(t.gaps() == std::vector<long long>{1, 2});
  CHECK(!t.is_symmetric());
}

TEST_CASE("count_below on <4,7> and <2,379>") {
  NumericalSemigroup s({4, 7});
  CHECK(s.count_below(7) == 2);
  CHECK(s.count_below(11) == 4);
  CHECK(s.count_below(0) == 0);
  NumericalSemigroup t({2, 379});
  CHECK(t.count_below(22) == 11);
  // beyond the conductor the formula m - delta takes over
  CHECK(s.count_below(100) == 100 - 9);
}

TEST_CASE("membership sieve matches enumeration for coprime pairs up to 50") {
  for (long long p = 2; p <= 50; ++p) {
    for (long long q = p + 1; q <= 50; ++q) {
      if (std::gcd(p, q) != 1) continue;
      NumericalSemigroup s({p, q});
      CHECK(s.conductor() == (p - 1) * (q - 1));
      CHECK(s.delta() == (p - 1) * (q - 1) / 2);
      CHECK(s.is_symmetric());
      auto members = oracle::naive_members({p, q}, 2 * s.conductor());
      bool all_ok = true;
      for (long long m = 0; m <= 2 * s.conductor(); ++m)
        all_ok = all_ok && s.contains(m) == (members.count(m) > 0);
      CHECK(all_ok);
    }
  }
}

TEST_CASE("count_below increments exactly on members") {
  for (auto gens : std::vector<std::vector<long long>>{{4, 7}, {2, 379}, {3, 4, 5}, {6, 7, 16}}) {
    NumericalSemigroup s(gens);
    for (long long m = 0; m <= 2 * s.conductor() + 5; ++m) {
      long long step = s.count_below(m + 1) - s.count_below(m);
      CHECK((step == 0 || step == 1));
      CHECK((step == 1) == s.contains(m));
    }
  }
}

TEST_CASE("Alexander polynomial of <4,7>") {
  NumericalSemigroup s({4, 7});
  std::vector<long long> expected = {1, -1, 0, 0, 1, -1, 0, 1, 0, -1, 0, 1, 0, -1, 1, 0, 0, -1, 1};
  CHECK(curvebound::alexander_polynomial(s) == expected);
}

TEST_CASE("Alexander polynomial trivial cases") {
  CHECK(curvebound::alexander_polynomial(NumericalSemigroup({1})) == std::vector<long long>{1});
  CHECK(curvebound::alexander_polynomial(NumericalSemigroup({2, 3})) ==
        std::vector<long long>{1, -1, 1});
}

TEST_CASE("Alexander polynomial properties") {
  for (auto gens : std::vector<std::vector<long long>>{{2, 3}, {4, 7}, {5, 11}, {8, 55}, {3, 7}}) {
    NumericalSemigroup s(gens);
    auto coeff = curvebound::alexander_polynomial(s);
    CHECK(static_cast<long long>(coeff.size()) - 1 == s.mu());
    long long at_one = 0;
    for (long long c : coeff) at_one += c;
    CHECK(at_one == 1);
    auto reversed = coeff;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(reversed == coeff);
  }
}

TEST_CASE("second expansion of <4,7>") {
  NumericalSemigroup s({4, 7});
  std::vector<long long> expected = {9, 8, 7, 6, 6, 5, 4, 4, 4, 3, 2, 2, 2, 1, 1, 1, 1};
  CHECK(curvebound::alexander_second_expansion(s) == expected);
}

TEST_CASE("second expansion edge cases") {
  CHECK(curvebound::alexander_second_expansion(NumericalSemigroup({1})).empty());
  CHECK(curvebound::alexander_second_expansion(NumericalSemigroup({2, 3})) ==
        std::vector<long long>{1});
}

TEST_CASE("second expansion re-expands to the Alexander polynomial") {
  for (auto gens : std::vector<std::vector<long long>>{{2, 3}, {4, 7}, {5, 11}, {4, 9}}) {
    NumericalSemigroup s(gens);
    auto k = curvebound::alexander_second_expansion(s);
    CHECK(k.front() == s.delta());
    // 1 + (t-1)*delta + (t-1)^2 * sum_j k_j t^j
    std::vector<long long> tm1 = {-1, 1};
    auto lhs = oracle::poly_add({1}, oracle::poly_mul(tm1, {s.delta()}));
    lhs = oracle::poly_add(lhs, oracle::poly_mul(oracle::poly_mul(tm1, tm1), k));
    CHECK(lhs == curvebound::alexander_polynomial(s));
  }
}

TEST_CASE("simple pair validation and Orevkov numbers") {
  CHECK_THROWS_AS(SimplePairSingularity(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(SimplePairSingularity(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(SimplePairSingularity(5, 4), std::invalid_argument);
  CHECK(SimplePairSingularity(2, 3).mbar() == 1);
  CHECK(SimplePairSingularity(4, 7).mbar() == 7);
  for (long long a = 2; a <= 12; ++a) CHECK(SimplePairSingularity(a, 9 * a + 1).mbar() == 10 * a - 11);
}
