#pragma once

#include <utility>
#include <vector>

#include "curvebound/gapfn.hpp"
#include "curvebound/rational.hpp"
#include "curvebound/semigroup.hpp"
#include "curvebound/verdict.hpp"

namespace curvebound {

/// Antichain of integer bifiltration levels: the filtration levels of the
/// grading-zero cycles of a staircase-type knot complex.  No vertex weakly
/// dominates another (componentwise <=).
struct Staircase {
  /// Sorted by first coordinate; second coordinate strictly decreasing.
  std::vector<std::pair<long long, long long>> vertices;

  /// Keeps the Pareto-minimal subset of `pts` (minimal under componentwise
  /// <=, duplicates removed).
  static Staircase from_points(std::vector<std::pair<long long, long long>> pts);
};

/// gamma_m(T) = min over (i,j) in T of max(i, j - m): the diagonal distance
/// from T to the lower-left quadrant with top-right corner (0, m).
long long gamma(const Staircase& t, long long m);

/// The staircase of the link of a singularity, recovered from the gap
/// function: the Pareto-minimal subset of {(I(m+h), I(m+h)+m) : m in [-h,h]}
/// with h the number of gaps.  Its gamma-profile reproduces I(m+h).
Staircase staircase_from_semigroup(const NumericalSemigroup& s);

/// Vertex set of a connected sum: Pareto-minimal part of the Minkowski sum.
Staircase staircase_sum(const Staircase& a, const Staircase& b);

/// Total gamma-profile of a connected sum of algebraic links, backed by the
/// combined gap function so that evaluation is defined on all of Z:
/// gamma(m) = I(m + h) with h the genus of the connected sum.
struct GammaProfile {
  GapFunction gap;
  long long knot_genus;

  long long operator()(long long m) const { return gap(m + knot_genus); }

  static GammaProfile of(const std::vector<NumericalSemigroup>& sings);
};

/// The q symmetric Spin-c indices -(q-1)/2, ..., (q-1)/2 (half-integers for
/// even q), exact.
struct SpincIndexRange {
  long long q = 0;
  std::vector<Rational> values;
};

SpincIndexRange spinc_range(long long q);

/// Bottom and top correction terms of n-surgery on the connected sum of a
/// genus-g Borromean-type knot with an algebraic link of genus h, in the
/// m-th torsion Spin-c structure:
///
///   d_b = -2 * max_{a+b=g, a,b>=0} { gamma_{m-b+a} + a } + g + s
///   d_t = -2 * min_{a+b=g, a,b>=0} { gamma_{m-b+a} + a } + g + s
///
/// with grading shift s = ((2m-n)^2 - n) / (4n).  Requires the large-surgery
/// hypothesis n >= 2h + 2g - 1.
Rational d_bottom(long long n, long long m, long long g, const GammaProfile& profile);
Rational d_top(long long n, long long m, long long g, const GammaProfile& profile);

/// For a hypothetical degree-d genus-g curve with the given singularities,
/// checks over every k in the Spin-c range of d (with m = kd, n = d^2) that
///
///   d_b >= -g   and   d_t <= g.
///
/// Witness indices record j = k + (d-3)/2, which is always an integer; lhs
/// is the offending correction term, bounded by [-g, g].  Validates the
/// genus formula first and rejects the input if it fails.
CheckResult check_dinvariant_bounds(long long d, long long g,
                                    const std::vector<NumericalSemigroup>& sings);

}  // namespace curvebound
