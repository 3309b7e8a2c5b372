#include <doctest.h>

#include <random>

#include "curvebound/gapfn.hpp"
#include "oracle.hpp"

using curvebound::GapFunction;
using curvebound::NumericalSemigroup;

namespace {

// Deterministic pool of small semigroups for the property tests.
std::vector<NumericalSemigroup> small_pool() {
  std::vector<NumericalSemigroup> pool;
  for (auto gens : std::vector<std::vector<long long>>{
           {1}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 7}, {5, 6}, {3, 7}, {4, 9},
           {3, 4, 5}, {4, 6, 101}, {6, 7, 16}, {5, 7, 9}})
    pool.emplace_back(gens);
  return pool;
}

}  // namespace

TEST_CASE("gap function of <4,7>") {
  GapFunction i = GapFunction::of(NumericalSemigroup({4, 7}));
  CHECK(i.h() == 9);
  CHECK(i(1) == 9);
  CHECK(i(4) == 6);
  CHECK(i(11) == 2);
  CHECK(i(18) == 0);
  CHECK(i(100) == 0);
}

TEST_CASE("gap function tails") {
  for (auto gens : std::vector<std::vector<long long>>{{1}, {2, 3}, {4, 7}, {3, 4, 5}}) {
    NumericalSemigroup s(gens);
    GapFunction i = GapFunction::of(s);
    CHECK(i(0) == i.h());
    CHECK(i(-3) == i.h() + 3);
    CHECK(i(i.support() + 1) == 0);
  }
}

TEST_CASE("gap function of <2,3>") {
  GapFunction i = GapFunction::of(NumericalSemigroup({2, 3}));
  CHECK(i(1) == 1);
  CHECK(i(2) == 0);
}

TEST_CASE("gap function matches the definition everywhere") {
  for (const auto& s : small_pool()) {
    GapFunction i = GapFunction::of(s);
    for (long long m = -12; m <= 2 * s.mu() + 12; ++m)
      CHECK(i(m) == oracle::naive_gap_value(s.gaps(), m));
  }
}

TEST_CASE("gap function is non-increasing with unit steps") {
  for (const auto& s : small_pool()) {
    GapFunction i = GapFunction::of(s);
    for (long long m = -10; m <= i.support() + 10; ++m) {
      long long step = i(m) - i(m + 1);
      CHECK((step == 0 || step == 1));
    }
    CHECK(i(1) == i.h());
  }
}

TEST_CASE("counting function relation R(m) = m - h + I(m)") {
  for (const auto& s : small_pool()) {
    GapFunction i = GapFunction::of(s);
    for (long long m = 0; m <= s.mu() + 10; ++m)
      CHECK(s.count_below(m) == m - i.h() + i(m));
  }
}

TEST_CASE("diamond with the trivial profile is the identity") {
  GapFunction one = GapFunction::of(NumericalSemigroup({1}));
  for (const auto& s : small_pool()) {
    GapFunction i = GapFunction::of(s);
    GapFunction d = diamond(i, one);
    for (long long m = -i.support() - 2; m <= i.support() + 2; ++m) {
      CHECK(d(m) == i(m));
      CHECK(d(m) == oracle::wide_diamond(i, one, m));
    }
  }
}

TEST_CASE("diamond of <2,3> with itself") {
  GapFunction i = GapFunction::of(NumericalSemigroup({2, 3}));
  GapFunction d = diamond(i, i);
  CHECK(d(2) == 1);
  CHECK(d.h() == 2);
}

TEST_CASE("windowed diamond equals unwindowed brute force") {
  auto pool = small_pool();
  for (size_t a = 0; a < pool.size(); ++a) {
    for (size_t b = a; b < pool.size(); ++b) {
      GapFunction ia = GapFunction::of(pool[a]);
      GapFunction ib = GapFunction::of(pool[b]);
      GapFunction d = diamond(ia, ib);
      CHECK(d.h() == ia.h() + ib.h());
      for (long long s = -8; s <= ia.support() + ib.support() + 8; ++s)
        CHECK(d(s) == oracle::wide_diamond(ia, ib, s));
    }
  }
}

TEST_CASE("diamond is symmetric") {
  auto pool = small_pool();
  for (size_t a = 0; a < pool.size(); ++a) {
    for (size_t b = a + 1; b < pool.size(); ++b) {
      GapFunction d1 = diamond(GapFunction::of(pool[a]), GapFunction::of(pool[b]));
      GapFunction d2 = diamond(GapFunction::of(pool[b]), GapFunction::of(pool[a]));
      for (long long s = -10; s <= d1.support() + 10; ++s) CHECK(d1(s) == d2(s));
    }
  }
}

TEST_CASE("diamond is associative on random triples") {
  auto pool = small_pool();
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    GapFunction a = GapFunction::of(pool[pick(rng)]);
    GapFunction b = GapFunction::of(pool[pick(rng)]);
    GapFunction c = GapFunction::of(pool[pick(rng)]);
    if (a.support() > 60 || b.support() > 60 || c.support() > 60) continue;
    GapFunction left = diamond(diamond(a, b), c);
    GapFunction right = diamond(a, diamond(b, c));
    long long top = a.support() + b.support() + c.support();
    for (long long s = -10; s <= top + 10; ++s) CHECK(left(s) == right(s));
  }
}

TEST_CASE("multi_count_below basics") {
  NumericalSemigroup t23({2, 3});
  CHECK(curvebound::multi_count_below({t23, t23}, 4) == 2);
  CHECK_THROWS_AS(curvebound::multi_count_below({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(curvebound::multi_count_below({t23}, -1), std::invalid_argument);

  // one singularity: plain counting, including a zero block
  NumericalSemigroup s({4, 7});
  for (long long u = 0; u <= 2 * s.conductor(); ++u)
    CHECK(curvebound::multi_count_below({s}, u) == s.count_below(u));
  CHECK(curvebound::multi_count_below({s, t23}, 0) == 0);
}

TEST_CASE("multi_count_below equals the partition minimum") {
  std::vector<std::vector<NumericalSemigroup>> sets = {
      {NumericalSemigroup({2, 3}), NumericalSemigroup({2, 3})},
      {NumericalSemigroup({2, 5}), NumericalSemigroup({3, 4})},
      {NumericalSemigroup({2, 3}), NumericalSemigroup({3, 5}), NumericalSemigroup({2, 7})},
      {NumericalSemigroup({4, 7}), NumericalSemigroup({3, 4, 5})},
  };
  for (const auto& sings : sets) {
    for (long long u = 0; u <= 200; ++u)
      CHECK(curvebound::multi_count_below(sings, u) == oracle::partition_min(sings, u));
  }
}
