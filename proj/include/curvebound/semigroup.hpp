#pragma once

#include <vector>

namespace curvebound {

/// A numerical semigroup: an additively closed subset of the non-negative
/// integers containing 0 whose complement (the gap sequence) is finite.
///
/// For a unibranched plane curve singularity this is the set of intersection
/// multiplicities of the branch with local holomorphic functions; when the
/// link is a (p,q) torus knot it is generated by p and q.  The number of
/// gaps delta is the genus of the link and mu = 2*delta its Milnor number.
///
/// Membership is tabulated exactly up to the conductor (the least c with
/// [c, oo) contained in S); everything at or above the conductor is a member.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `gens`.  The generators must be
  /// positive with overall gcd 1; otherwise the complement is infinite and
  /// the input is rejected ("not a numerical semigroup of a knot").
  explicit NumericalSemigroup(std::vector<long long> gens);

  const std::vector<long long>& generators() const { return gens_; }
  const std::vector<long long>& gaps() const { return gaps_; }

  long long conductor() const { return conductor_; }
  long long delta() const { return static_cast<long long>(gaps_.size()); }
  long long mu() const { return 2 * delta(); }

  /// Smallest nonzero element (the multiplicity of the singularity).
  long long multiplicity() const { return gens_.front(); }

  bool contains(long long m) const;

  /// R(m) = #(S intersect [0,m)).  Equals m - delta once m exceeds the
  /// conductor; zero for m <= 0.
  long long count_below(long long m) const;

  /// True when the largest gap equals 2*delta - 1, which characterises the
  /// semigroups of algebraic knots among numerical semigroups.
  bool is_symmetric() const;

 private:
  std::vector<long long> gens_;
  std::vector<long long> gaps_;
  long long conductor_ = 0;
  std::vector<char> member_;       // [0, conductor)
  std::vector<long long> prefix_;  // prefix_[m] = #(S intersect [0,m)), m <= conductor
};

/// One-Puiseux-pair singularity data: the link is the (p,q) torus knot.
/// Requires 2 <= p < q coprime; p = 1 would be a smooth point and is
/// rejected rather than silently accepted.
struct SimplePairSingularity {
  long long p;
  long long q;

  SimplePairSingularity(long long p_, long long q_);

  /// Orevkov number p + q - floor(q/p) - 3 entering the BMY-type bound.
  long long mbar() const { return p + q - q / p - 3; }

  NumericalSemigroup semigroup() const { return NumericalSemigroup({p, q}); }
};

/// Coefficients, lowest degree first, of the Alexander polynomial of the
/// link written over the gap sequence:  1 + (t-1) * sum_j t^{g_j}.
std::vector<long long> alexander_polynomial(const NumericalSemigroup& s);

/// The sequence k_0..k_{mu-2} from the further expansion
/// 1 + (t-1)*delta + (t-1)^2 * sum_j k_j t^j, where k_j counts gaps
/// strictly greater than j.  Empty when delta = 0.
std::vector<long long> alexander_second_expansion(const NumericalSemigroup& s);

}  // namespace curvebound
