#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curvebound/floer.hpp"
#include "curvebound/gapfn.hpp"
#include "curvebound/rational.hpp"
#include "curvebound/semigroup.hpp"
#include "curvebound/verdict.hpp"

namespace curvebound {

/// A singular point of a hypothetical curve: either a one-Puiseux-pair type
/// (p,q), or an explicit semigroup given by generators with an optional
/// user-supplied Orevkov number (the closed form only covers the pair case).
class Singularity {
 public:
  static Singularity pair(long long p, long long q);
  static Singularity from_generators(std::vector<long long> gens,
                                     std::optional<long long> mbar = std::nullopt);

  bool is_pair() const { return pair_.has_value(); }
  const SimplePairSingularity& as_pair() const;
  const NumericalSemigroup& semigroup() const { return semigroup_; }

  long long delta() const { return semigroup_.delta(); }
  long long multiplicity() const { return semigroup_.multiplicity(); }
  std::optional<long long> mbar() const;

  friend bool operator==(const Singularity& a, const Singularity& b);

 private:
  Singularity(std::optional<SimplePairSingularity> p, NumericalSemigroup s,
              std::optional<long long> mbar);

  std::optional<SimplePairSingularity> pair_;
  NumericalSemigroup semigroup_;
  std::optional<long long> mbar_override_;
};

/// A hypothetical cuspidal curve: degree d >= 3, genus g >= 0 and a nonempty
/// list of singular points, each with delta >= 1 (smooth points rejected).
/// Whether the genus formula holds is a check, not a construction invariant.
struct CurveHypothesis {
  long long d;
  long long g;
  std::vector<Singularity> sings;

  CurveHypothesis(long long d_, long long g_, std::vector<Singularity> sings_);

  long long delta_sum() const;
  std::vector<NumericalSemigroup> semigroups() const;

  friend bool operator==(const CurveHypothesis& a, const CurveHypothesis& b);
};

/// Multiset of exact rationals in (0,2) with a common denominator (pq for a
/// torus-knot singularity, d^2 for the comparison spectrum).  Entries are
/// sorted numerators with multiplicities.
class SpectrumMultiset {
 public:
  SpectrumMultiset(long long den, std::vector<std::pair<long long, long long>> entries);

  long long den() const { return den_; }
  const std::vector<std::pair<long long, long long>>& entries() const { return entries_; }

  /// Total count with multiplicity (the Milnor number).
  long long total() const;

  /// #(Sigma intersect (lo, hi)), both endpoints strictly excluded.
  long long count_open(const Rational& lo, const Rational& hi) const;

  /// Distinct values as reduced rationals (multiplicity dropped).
  std::vector<Rational> values() const;

 private:
  long long den_;
  std::vector<std::pair<long long, long long>> entries_;  // (numerator, multiplicity)
  std::vector<long long> prefix_;                         // running multiplicity totals
};

/// Spectrum of x^p - y^q: the multiset { i/p + j/q : 1<=i<=p-1, 1<=j<=q-1 }
/// counted with the number of representations.  p == q is allowed (that is
/// the x^d - y^d comparison spectrum); p < q requires coprimality.
SpectrumMultiset spectrum_torus(long long p, long long q);

enum class SpectrumMode { ssl, full };

// Check names, in the fixed evaluation and report order.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"genus_formula", "bmy",       "multiplicity",
                                                 "theorem_main",  "spectrum",  "dinvariant"};
  return names;
}

/// Exact test of g = (d-1)(d-2)/2 - sum delta_i.  Failure is a verdict.
CheckResult check_genus_formula(const CurveHypothesis& h);

/// The semigroup-counting obstruction: for every j = 1..d-2, b = 0..g,
///
///     0 <= R(jd - 2b + 1) - (j+1)(j+2)/2 + b <= g
///
/// with R the multi-singularity counting function.  Witnesses carry (j, b),
/// the R value and the interval it had to lie in.  Requires the genus
/// formula to hold.
CheckResult check_theorem_main(const CurveHypothesis& h);

/// sum of Orevkov numbers <= 3d + 4g - 5.  Skipped when g = 0 (the bound
/// needs positive genus) or when some singularity has no known Orevkov
/// number.
CheckResult check_bmy(const CurveHypothesis& h);

/// Degree-versus-multiplicity bound for genus one and a single singular
/// point, in its exact quadratic form d^2 - 3(1+m)d + (m^2 - m) <= 0 with
/// m the multiplicity.  Skipped otherwise.
CheckResult check_multiplicity_bound(const CurveHypothesis& h);

/// Spectrum semicontinuity against the degree-d comparison spectrum.
/// "ssl" checks the d-1 inequalities at x = -1 + l/d, i.e.
/// sum_j #(Sigma_j intersect (0, l/d)) <= (l-1)(l-2)/2; "full" checks
/// #(Sigma_{d,d} intersect (x,x+1)) >= sum_j #(Sigma_j intersect (x,x+1))
/// at every critical x.  Skipped unless all singularities are simple pairs.
CheckResult check_spectrum_semicontinuity(const CurveHypothesis& h,
                                          SpectrumMode mode = SpectrumMode::ssl);

/// check_dinvariant_bounds lifted to a hypothesis.
CheckResult check_dinvariants(const CurveHypothesis& h);

struct ReportOptions {
  /// Which checks run; the genus formula is always evaluated (it gates the
  /// counting and correction-term checks).  Defaults to every check except
  /// the d-invariant cross-check.
  std::set<std::string> enabled = {"genus_formula", "bmy", "multiplicity", "theorem_main",
                                   "spectrum"};
  bool early_exit = false;
  SpectrumMode spectrum_mode = SpectrumMode::ssl;
};

/// Verdicts of all checks in fixed order.  Overall verdict is "fail" exactly
/// when some executed check fails.
struct ObstructionReport {
  CurveHypothesis hypothesis;
  std::vector<CheckResult> checks;

  bool obstructed() const;
  std::string verdict() const { return obstructed() ? "fail" : "pass"; }
  const CheckResult& check(const std::string& name) const;

  friend bool operator==(const ObstructionReport& a, const ObstructionReport& b);
};

ObstructionReport full_report(const CurveHypothesis& h, const ReportOptions& opts = {});

}  // namespace curvebound
