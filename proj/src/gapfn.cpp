#include "curvebound/gapfn.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace curvebound {

GapFunction::GapFunction(long long h, std::vector<long long> vals) : h_(h), vals_(std::move(vals)) {
  if (h_ < 0) throw std::invalid_argument("gap function with negative h");
  while (!vals_.empty() && vals_.back() == 0) vals_.pop_back();
  if (vals_.empty()) {
    if (h_ != 0) throw std::invalid_argument("gap function with h > 0 needs a table");
    return;
  }
  if (vals_.front() != h_) throw std::invalid_argument("gap function must have I(1) = h");
  for (size_t i = 0; i + 1 < vals_.size(); ++i) {
    long long step = vals_[i] - vals_[i + 1];
    if (step < 0 || step > 1)
      throw std::invalid_argument("gap function must be non-increasing with unit steps");
  }
}

GapFunction GapFunction::of(const NumericalSemigroup& s) {
  const auto& gaps = s.gaps();
  long long h = static_cast<long long>(gaps.size());
  if (h == 0) return GapFunction(0, {});
  long long largest = gaps.back();
  std::vector<long long> vals(static_cast<size_t>(largest));
  // I(s) = #{gaps >= s}; gaps ascending, so one forward cursor suffices.
  size_t cursor = 0;
  for (long long sarg = 1; sarg <= largest; ++sarg) {
    while (cursor < gaps.size() && gaps[cursor] < sarg) ++cursor;
    vals[static_cast<size_t>(sarg - 1)] = static_cast<long long>(gaps.size() - cursor);
  }
  return GapFunction(h, std::move(vals));
}

GapFunction diamond(const GapFunction& a, const GapFunction& b) {
  long long h = a.h() + b.h();
  long long sa = a.support();
  long long sb = b.support();
  // An empty table forces h = 0 (the profile of the full semigroup), and
  // such a factor is the identity of the min-plus convolution.
  if (sa == 0) return b;
  if (sb == 0) return a;

  long long top = sa + sb + 1;
  std::vector<long long> vals(static_cast<size_t>(top));
  for (long long s = 1; s <= top; ++s) {
    long long lo = std::min<long long>(0, s - sb - 1) - 2;
    long long hi = std::max<long long>(sa + 1, s) + 2;
    long long best = std::numeric_limits<long long>::max();
    for (long long m = lo; m <= hi; ++m) best = std::min(best, a(m) + b(s - m));
    vals[static_cast<size_t>(s - 1)] = best;
  }
  return GapFunction(h, std::move(vals));
}

GapFunction combined_gap_function(const std::vector<NumericalSemigroup>& sings) {
  if (sings.empty()) throw std::invalid_argument("at least one singularity is required");
  GapFunction acc = GapFunction::of(sings.front());
  for (size_t i = 1; i < sings.size(); ++i) acc = diamond(acc, GapFunction::of(sings[i]));
  return acc;
}

long long multi_count_below(const std::vector<NumericalSemigroup>& sings, long long u) {
  if (sings.empty()) throw std::invalid_argument("at least one singularity is required");
  if (u < 0) throw std::invalid_argument("cutoff must be non-negative");
  GapFunction total = combined_gap_function(sings);
  return u - total.h() + total(u);
}

}  // namespace curvebound
