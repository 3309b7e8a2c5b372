#include "curvebound/obstruct.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvebound {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  throw std::logic_error("unhandled check status");
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  if (s == "not-applicable") return CheckStatus::not_applicable;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

Singularity::Singularity(std::optional<SimplePairSingularity> p, NumericalSemigroup s,
                         std::optional<long long> mbar)
    : pair_(std::move(p)), semigroup_(std::move(s)), mbar_override_(mbar) {}

Singularity Singularity::pair(long long p, long long q) {
  SimplePairSingularity sp(p, q);
  return Singularity(sp, sp.semigroup(), std::nullopt);
}

Singularity Singularity::from_generators(std::vector<long long> gens,
                                         std::optional<long long> mbar) {
  NumericalSemigroup s(std::move(gens));
  if (s.delta() == 0)
    throw std::invalid_argument("generators describe a smooth point, not a singularity");
  return Singularity(std::nullopt, std::move(s), mbar);
}

const SimplePairSingularity& Singularity::as_pair() const {
  if (!pair_) throw std::logic_error("singularity is not of simple type");
  return *pair_;
}

std::optional<long long> Singularity::mbar() const {
  if (mbar_override_) return mbar_override_;
  if (pair_) return pair_->mbar();
  return std::nullopt;
}

bool operator==(const Singularity& a, const Singularity& b) {
  return a.is_pair() == b.is_pair() &&
         a.semigroup_.generators() == b.semigroup_.generators() && a.mbar() == b.mbar();
}

CurveHypothesis::CurveHypothesis(long long d_, long long g_, std::vector<Singularity> sings_)
    : d(d_), g(g_), sings(std::move(sings_)) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  if (sings.empty()) throw std::invalid_argument("at least one singularity is required");
}

long long CurveHypothesis::delta_sum() const {
  long long s = 0;
  for (const auto& z : sings) s += z.delta();
  return s;
}

std::vector<NumericalSemigroup> CurveHypothesis::semigroups() const {
  std::vector<NumericalSemigroup> out;
  out.reserve(sings.size());
  for (const auto& z : sings) out.push_back(z.semigroup());
  return out;
}

bool operator==(const CurveHypothesis& a, const CurveHypothesis& b) {
  return a.d == b.d && a.g == b.g && a.sings == b.sings;
}

SpectrumMultiset::SpectrumMultiset(long long den, std::vector<std::pair<long long, long long>> entries)
    : den_(den), entries_(std::move(entries)) {
  if (den_ < 1) throw std::invalid_argument("spectrum denominator must be positive");
  prefix_.resize(entries_.size() + 1, 0);
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0 && entries_[i - 1].first >= entries_[i].first)
      throw std::invalid_argument("spectrum entries must be strictly increasing");
    if (entries_[i].second < 1) throw std::invalid_argument("spectrum multiplicity must be positive");
    prefix_[i + 1] = prefix_[i] + entries_[i].second;
  }
}

long long SpectrumMultiset::total() const { return prefix_.back(); }

long long SpectrumMultiset::count_open(const Rational& lo, const Rational& hi) const {
  using i128 = __int128;
  // first entry with num/den > lo
  auto begin = std::partition_point(entries_.begin(), entries_.end(), [&](const auto& e) {
    return i128(e.first) * lo.den() <= i128(lo.num()) * den_;
  });
  // first entry with num/den >= hi
  auto end = std::partition_point(entries_.begin(), entries_.end(), [&](const auto& e) {
    return i128(e.first) * hi.den() < i128(hi.num()) * den_;
  });
  return prefix_[static_cast<size_t>(end - entries_.begin())] -
         prefix_[static_cast<size_t>(begin - entries_.begin())];
}

std::vector<Rational> SpectrumMultiset::values() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& [num, mult] : entries_) out.emplace_back(num, den_);
  return out;
}

SpectrumMultiset spectrum_torus(long long p, long long q) {
  if (p < 2 || q < 2) throw std::invalid_argument("spectrum needs p, q >= 2");
  if (p > q) throw std::invalid_argument("require p <= q");
  if (p < q) SimplePairSingularity check(p, q);  // validates coprimality
  std::vector<long long> nums;
  nums.reserve(static_cast<size_t>((p - 1) * (q - 1)));
  for (long long i = 1; i <= p - 1; ++i)
    for (long long j = 1; j <= q - 1; ++j) nums.push_back(i * q + j * p);
  std::sort(nums.begin(), nums.end());
  std::vector<std::pair<long long, long long>> entries;
  for (size_t i = 0; i < nums.size();) {
    size_t j = i;
    while (j < nums.size() && nums[j] == nums[i]) ++j;
    entries.emplace_back(nums[i], static_cast<long long>(j - i));
    i = j;
  }
  return SpectrumMultiset(p * q, std::move(entries));
}

namespace {

bool genus_formula_holds(const CurveHypothesis& h) {
  return (h.d - 1) * (h.d - 2) == 2 * h.g + 2 * h.delta_sum();
}

// counts[l] = #(Sigma intersect (0, l/d)) for l = 0..d-1, via bucketing each
// entry at the least level that sees it.
std::vector<long long> level_counts(const SpectrumMultiset& sp, long long d) {
  std::vector<long long> counts(static_cast<size_t>(d), 0);
  for (const auto& [num, mult] : sp.entries()) {
    // num/den < l/d  <=>  l > num*d/den
    long long lmin = num * d / sp.den() + 1;
    if (lmin <= d - 1) counts[static_cast<size_t>(lmin)] += mult;
  }
  for (size_t l = 1; l < counts.size(); ++l) counts[l] += counts[l - 1];
  return counts;
}

}  // namespace

CheckResult check_genus_formula(const CurveHypothesis& h) {
  CheckResult res{"genus_formula", CheckStatus::pass, {}};
  if (!genus_formula_holds(h)) {
    res.status = CheckStatus::fail;
    // (d-1)(d-2) - 2*sum(delta) may be odd; report twice the genus exactly.
    long long twice_formula_genus = (h.d - 1) * (h.d - 2) - 2 * h.delta_sum();
    res.witnesses.push_back(
        Witness{{}, Rational(twice_formula_genus, 2), Rational(h.g), Rational(h.g)});
  }
  return res;
}

CheckResult check_theorem_main(const CurveHypothesis& h) {
  if (!genus_formula_holds(h))
    throw std::invalid_argument("genus formula violated: counting bound does not apply");
  GapFunction total = combined_gap_function(h.semigroups());
  long long hsum = total.h();
  CheckResult res{"theorem_main", CheckStatus::pass, {}};
  for (long long j = 1; j <= h.d - 2; ++j) {
    for (long long b = 0; b <= h.g; ++b) {
      long long u = j * h.d - 2 * b + 1;
      long long r = u - hsum + total(u);  // R(u); the tails make this 0 for u <= 0
      long long lo = (j + 1) * (j + 2) / 2 - b;
      long long hi = lo + h.g;
      if (r < lo || r > hi) {
        res.status = CheckStatus::fail;
        res.witnesses.push_back(Witness{{j, b}, Rational(r), Rational(lo), Rational(hi)});
      }
    }
  }
  return res;
}

CheckResult check_bmy(const CurveHypothesis& h) {
  if (h.g == 0) return CheckResult{"bmy", CheckStatus::skipped, {}};
  long long sum = 0;
  for (const auto& z : h.sings) {
    auto m = z.mbar();
    if (!m) return CheckResult{"bmy", CheckStatus::skipped, {}};
    sum += *m;
  }
  long long bound = 3 * h.d + 4 * h.g - 5;
  CheckResult res{"bmy", CheckStatus::pass, {}};
  if (sum > bound) {
    res.status = CheckStatus::fail;
    res.witnesses.push_back(Witness{{}, Rational(sum), std::nullopt, Rational(bound)});
  }
  return res;
}

CheckResult check_multiplicity_bound(const CurveHypothesis& h) {
  if (h.g != 1 || h.sings.size() != 1)
    return CheckResult{"multiplicity", CheckStatus::skipped, {}};
  long long m = h.sings.front().multiplicity();
  long long value = h.d * h.d - 3 * (1 + m) * h.d + (m * m - m);
  CheckResult res{"multiplicity", CheckStatus::pass, {}};
  if (value > 0) {
    res.status = CheckStatus::fail;
    res.witnesses.push_back(Witness{{}, Rational(value), std::nullopt, Rational(0)});
  }
  return res;
}

CheckResult check_spectrum_semicontinuity(const CurveHypothesis& h, SpectrumMode mode) {
  for (const auto& z : h.sings)
    if (!z.is_pair()) return CheckResult{"spectrum", CheckStatus::skipped, {}};

  CheckResult res{"spectrum", CheckStatus::pass, {}};
  std::vector<SpectrumMultiset> spectra;
  spectra.reserve(h.sings.size());
  for (const auto& z : h.sings) spectra.push_back(spectrum_torus(z.as_pair().p, z.as_pair().q));

  if (mode == SpectrumMode::ssl) {
    std::vector<long long> total(static_cast<size_t>(h.d), 0);
    for (const auto& sp : spectra) {
      auto counts = level_counts(sp, h.d);
      for (size_t l = 0; l < counts.size(); ++l) total[l] += counts[l];
    }
    for (long long l = 1; l <= h.d - 1; ++l) {
      long long rhs = (l - 1) * (l - 2) / 2;
      long long lhs = total[static_cast<size_t>(l)];
      if (lhs > rhs) {
        res.status = CheckStatus::fail;
        res.witnesses.push_back(Witness{{l}, Rational(lhs), Rational(0), Rational(rhs)});
      }
    }
    return res;
  }

  // Full semicontinuity: both sides of the inequality only change when x or
  // x+1 crosses a spectrum value, so it is enough to look at every value,
  // every value minus one, and midpoints between consecutive candidates.
  SpectrumMultiset dd = spectrum_torus(h.d, h.d);
  std::vector<Rational> xs;
  auto add_values = [&xs](const SpectrumMultiset& sp) {
    for (const Rational& v : sp.values()) {
      xs.push_back(v);
      xs.push_back(v - Rational(1));
    }
  };
  add_values(dd);
  for (const auto& sp : spectra) add_values(sp);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> probes = xs;
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    probes.push_back((xs[i] + xs[i + 1]) * Rational(1, 2));
  std::sort(probes.begin(), probes.end());

  for (const Rational& x : probes) {
    Rational x1 = x + Rational(1);
    long long lhs = dd.count_open(x, x1);
    long long rhs = 0;
    for (const auto& sp : spectra) rhs += sp.count_open(x, x1);
    if (rhs > lhs) {
      res.status = CheckStatus::fail;
      res.witnesses.push_back(Witness{{x.num(), x.den()}, Rational(rhs), Rational(0), Rational(lhs)});
    }
  }
  return res;
}

CheckResult check_dinvariants(const CurveHypothesis& h) {
  return check_dinvariant_bounds(h.d, h.g, h.semigroups());
}

bool ObstructionReport::obstructed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
}

const CheckResult& ObstructionReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::invalid_argument("no check named '" + name + "' in report");
}

bool operator==(const ObstructionReport& a, const ObstructionReport& b) {
  return a.hypothesis == b.hypothesis && a.checks == b.checks;
}

ObstructionReport full_report(const CurveHypothesis& h, const ReportOptions& opts) {
  for (const auto& name : opts.enabled)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw std::invalid_argument("unknown check name '" + name + "'");

  bool genus_ok = genus_formula_holds(h);
  ObstructionReport report{h, {}};
  bool stop = false;
  for (const auto& name : check_names()) {
    bool enabled = opts.enabled.count(name) > 0 || name == "genus_formula";
    if (!enabled || stop) {
      report.checks.push_back(CheckResult{name, CheckStatus::not_applicable, {}});
      continue;
    }
    CheckResult r{name, CheckStatus::not_applicable, {}};
    if (name == "genus_formula") {
      r = check_genus_formula(h);
    } else if (name == "bmy") {
      r = check_bmy(h);
    } else if (name == "multiplicity") {
      r = check_multiplicity_bound(h);
    } else if (name == "theorem_main") {
      r = genus_ok ? check_theorem_main(h) : CheckResult{name, CheckStatus::skipped, {}};
    } else if (name == "spectrum") {
      r = check_spectrum_semicontinuity(h, opts.spectrum_mode);
    } else if (name == "dinvariant") {
      r = genus_ok ? check_dinvariants(h) : CheckResult{name, CheckStatus::skipped, {}};
    }
    report.checks.push_back(r);
    if (opts.early_exit && r.failed()) stop = true;
  }
  return report;
}

}  // namespace curvebound
