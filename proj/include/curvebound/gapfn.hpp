#pragma once

#include <vector>

#include "curvebound/semigroup.hpp"

namespace curvebound {

/// The gap function of a finite set G of positive integers (usually a gap
/// sequence) with h = #G:
///
///     I(s) = #{ k in G union Z_{<0} : k >= s }.
///
/// It is total on Z: I(s) = h - s for s <= 0 and I(s) = 0 beyond the largest
/// element of G.  Only the finite middle part is stored; the linear tails are
/// implicit.  I is non-increasing and steps down by at most one, and for the
/// gap sequence of a semigroup S it ties the counting function to h via
/// count_below(m) = m - h + I(m) for m >= 0.
class GapFunction {
 public:
  /// `vals[i]` is I(i+1).  Validates monotonicity, unit steps, I(1) = h and
  /// a trimmed positive tail entry.
  GapFunction(long long h, std::vector<long long> vals);

  static GapFunction of(const NumericalSemigroup& s);

  long long h() const { return h_; }

  /// Largest s with I(s) > 0; zero when I vanishes on all positives.
  long long support() const { return static_cast<long long>(vals_.size()); }

  long long operator()(long long s) const {
    if (s <= 0) return h_ - s;
    if (s <= support()) return vals_[static_cast<size_t>(s - 1)];
    return 0;
  }

 private:
  long long h_ = 0;
  std::vector<long long> vals_;
};

/// Min-plus convolution  (I ◇ I')(s) = min_m { I(m) + I'(s-m) }.
///
/// The minimum over all of Z is attained inside a finite window: outside
/// [min(0, s - supp' - 1), max(supp + 1, s)] one summand sits on a linear
/// tail and the total is non-decreasing as m moves further out.  The window
/// is evaluated with two units of slack on each side.
GapFunction diamond(const GapFunction& a, const GapFunction& b);

/// Iterated diamond of the gap functions of the given semigroups.
GapFunction combined_gap_function(const std::vector<NumericalSemigroup>& sings);

/// The multi-singularity counting function
///
///     R(u) = min over k_1+...+k_n = u, k_i >= 0 of sum_i #(S_i intersect [0,k_i))
///
/// computed through R(u) = u - sum_i h_i + (I_1 ◇ ... ◇ I_n)(u) rather than
/// by enumerating partitions.  Requires a nonempty list and u >= 0.
long long multi_count_below(const std::vector<NumericalSemigroup>& sings, long long u);

}  // namespace curvebound
