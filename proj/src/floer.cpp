#include "curvebound/floer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace curvebound {

Staircase Staircase::from_points(std::vector<std::pair<long long, long long>> pts) {
  if (pts.empty()) throw std::invalid_argument("staircase needs at least one vertex");
  std::sort(pts.begin(), pts.end());
  Staircase t;
  long long best_j = std::numeric_limits<long long>::max();
  for (const auto& p : pts) {
    if (p.second < best_j) {
      t.vertices.push_back(p);
      best_j = p.second;
    }
  }
  return t;
}

long long gamma(const Staircase& t, long long m) {
  if (t.vertices.empty()) throw std::invalid_argument("gamma of an empty staircase");
  long long best = std::numeric_limits<long long>::max();
  for (const auto& [i, j] : t.vertices) best = std::min(best, std::max(i, j - m));
  return best;
}

Staircase staircase_from_semigroup(const NumericalSemigroup& s) {
  GapFunction gap = GapFunction::of(s);
  long long h = s.delta();
  std::vector<std::pair<long long, long long>> pts;
  pts.reserve(static_cast<size_t>(2 * h + 1));
  for (long long m = -h; m <= h; ++m) {
    long long i = gap(m + h);
    pts.emplace_back(i, i + m);
  }
  return Staircase::from_points(std::move(pts));
}

Staircase staircase_sum(const Staircase& a, const Staircase& b) {
  if (a.vertices.empty() || b.vertices.empty())
    throw std::invalid_argument("staircase sum needs nonempty summands");
  std::vector<std::pair<long long, long long>> pts;
  pts.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& [i1, j1] : a.vertices)
    for (const auto& [i2, j2] : b.vertices) pts.emplace_back(i1 + i2, j1 + j2);
  return Staircase::from_points(std::move(pts));
}

GammaProfile GammaProfile::of(const std::vector<NumericalSemigroup>& sings) {
  GapFunction total = combined_gap_function(sings);
  long long h = total.h();
  return GammaProfile{std::move(total), h};
}

SpincIndexRange spinc_range(long long q) {
  if (q < 1) throw std::invalid_argument("Spin-c range needs q >= 1");
  SpincIndexRange r;
  r.q = q;
  r.values.reserve(static_cast<size_t>(q));
  for (long long t = 0; t < q; ++t) r.values.emplace_back(-(q - 1) + 2 * t, 2);
  return r;
}

namespace {

// max (want_max) or min of gamma_{m-b+a} + a over a+b = g, a,b >= 0.
long long extremal_term(const GammaProfile& profile, long long m, long long g, bool want_max) {
  long long best = 0;
  bool first = true;
  for (long long b = 0; b <= g; ++b) {
    long long a = g - b;
    long long v = profile(m - b + a) + a;
    if (first || (want_max ? v > best : v < best)) best = v;
    first = false;
  }
  return best;
}

Rational correction_term(long long n, long long m, long long g, const GammaProfile& profile,
                         bool bottom) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  long long needed = 2 * profile.knot_genus + 2 * g - 1;
  if (n < needed)
    throw std::invalid_argument("large-surgery hypothesis violated: n = " + std::to_string(n) +
                                " < 2*" + std::to_string(profile.knot_genus) + " + 2*" +
                                std::to_string(g) + " - 1 = " + std::to_string(needed));
  Rational s(( 2 * m - n) * (2 * m - n) - n, 4 * n);
  long long e = extremal_term(profile, m, g, bottom);
  return s + Rational(g - 2 * e);
}

}  // namespace

Rational d_bottom(long long n, long long m, long long g, const GammaProfile& profile) {
  return correction_term(n, m, g, profile, /*bottom=*/true);
}

Rational d_top(long long n, long long m, long long g, const GammaProfile& profile) {
  return correction_term(n, m, g, profile, /*bottom=*/false);
}

CheckResult check_dinvariant_bounds(long long d, long long g,
                                    const std::vector<NumericalSemigroup>& sings) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  if (sings.empty()) throw std::invalid_argument("at least one singularity is required");
  long long delta_sum = 0;
  for (const auto& s : sings) delta_sum += s.delta();
  if ((d - 1) * (d - 2) != 2 * g + 2 * delta_sum)
    throw std::invalid_argument("genus formula violated: correction-term bounds do not apply");

  GammaProfile profile = GammaProfile::of(sings);
  long long n = d * d;
  CheckResult res{"dinvariant", CheckStatus::pass, {}};
  for (const Rational& k : spinc_range(d).values) {
    // m = k*d is an integer even when k is a half-integer (d even then).
    long long twom = 2 * k.num() * d / k.den();
    if (twom % 2 != 0) throw std::logic_error("Spin-c index k*d is not an integer");
    long long m = twom / 2;
    long long twok = 2 * k.num() / k.den();
    if ((twok + d - 3) % 2 != 0) throw std::logic_error("j = k + (d-3)/2 is not an integer");
    long long j = (twok + d - 3) / 2;

    Rational db = d_bottom(n, m, g, profile);
    Rational dt = d_top(n, m, g, profile);
    if (db < Rational(-g)) {
      res.status = CheckStatus::fail;
      res.witnesses.push_back(Witness{{j}, db, Rational(-g), Rational(g)});
    }
    if (dt > Rational(g)) {
      res.status = CheckStatus::fail;
      res.witnesses.push_back(Witness{{j}, dt, Rational(-g), Rational(g)});
    }
  }
  return res;
}

}  // namespace curvebound
