#pragma once

// Brute-force reference implementations used only by tests.  Everything here
// is deliberately naive and independent of the library's computation paths:
// set enumeration instead of sieves, unwindowed minimization, explicit
// partition search.

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "curvebound/gapfn.hpp"
#include "curvebound/obstruct.hpp"
#include "curvebound/semigroup.hpp"

namespace oracle {

// All sums a_1*g_1 + ... + a_k*g_k <= bound with a_i >= 0, by recursive
// enumeration of coefficient vectors.
inline std::set<long long> naive_members(const std::vector<long long>& gens, long long bound) {
  std::set<long long> out;
  std::function<void(size_t, long long)> rec = [&](size_t idx, long long sum) {
    if (idx == gens.size()) {
      out.insert(sum);
      return;
    }
    for (long long v = sum; v <= bound; v += gens[idx]) rec(idx + 1, v);
  };
  rec(0, 0);
  return out;
}

inline long long naive_count_below(const std::set<long long>& members, long long m) {
  long long c = 0;
  for (long long v : members) {
    if (v >= m) break;
    ++c;
  }
  return c;
}

// Gap-function values straight from the definition: count gaps and negative
// integers >= s.
inline long long naive_gap_value(const std::vector<long long>& gaps, long long s) {
  long long c = 0;
  for (long long g : gaps)
    if (g >= s) ++c;
  if (s < 0) c += -s;
  return c;
}

// Min-plus convolution over a window far wider than the supports.
inline long long wide_diamond(const curvebound::GapFunction& a, const curvebound::GapFunction& b,
                              long long s) {
  long long w = a.support() + b.support() + std::llabs(s) + 16;
  long long best = std::numeric_limits<long long>::max();
  for (long long m = -w; m <= w; ++m) best = std::min(best, a(m) + b(s - m));
  return best;
}

// min over ordered partitions u = k_1 + ... + k_n of the summed counts.
inline long long partition_min(const std::vector<curvebound::NumericalSemigroup>& sings,
                               long long u) {
  std::function<long long(size_t, long long)> rec = [&](size_t idx, long long left) -> long long {
    if (idx + 1 == sings.size()) return sings[idx].count_below(left);
    long long best = std::numeric_limits<long long>::max();
    for (long long k = 0; k <= left; ++k)
      best = std::min(best, sings[idx].count_below(k) + rec(idx + 1, left - k));
    return best;
  };
  return rec(0, u);
}

// gamma over the raw Minkowski sum, no Pareto reduction.
inline long long gamma_of_sum(const curvebound::Staircase& a, const curvebound::Staircase& b,
                              long long m) {
  long long best = std::numeric_limits<long long>::max();
  for (const auto& [i1, j1] : a.vertices)
    for (const auto& [i2, j2] : b.vertices)
      best = std::min(best, std::max(i1 + i2, j1 + j2 - m));
  return best;
}

// Independent re-evaluation of the counting obstruction: partition-minimum R
// and a literal transcription of the two-sided inequality.  Returns the set
// of failing (j, b).
inline std::vector<std::pair<long long, long long>> slow_theorem_main_failures(
    const curvebound::CurveHypothesis& h) {
  auto sings = h.semigroups();
  std::vector<std::pair<long long, long long>> fails;
  for (long long j = 1; j <= h.d - 2; ++j) {
    for (long long b = 0; b <= h.g; ++b) {
      long long u = j * h.d - 2 * b + 1;
      long long r = u <= 0 ? 0 : partition_min(sings, u);
      long long mid = r - (j + 1) * (j + 2) / 2 + b;
      if (!(0 <= mid && mid <= h.g)) fails.emplace_back(j, b);
    }
  }
  return fails;
}

// Dense polynomial helpers for the Alexander-polynomial identities.
inline std::vector<long long> poly_mul(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

inline std::vector<long long> poly_add(std::vector<long long> a, const std::vector<long long>& b) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace oracle
