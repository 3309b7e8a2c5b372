#include "curvebound/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curvebound {

namespace {

// Sieves membership of the semigroup generated by `gens` on [0, bound).
std::vector<char> sieve(const std::vector<long long>& gens, long long bound) {
  std::vector<char> member(static_cast<size_t>(bound), 0);
  if (bound > 0) member[0] = 1;
  for (long long i = 1; i < bound; ++i) {
    for (long long g : gens) {
      if (g > i) break;  // gens sorted
      if (member[static_cast<size_t>(i - g)]) {
        member[static_cast<size_t>(i)] = 1;
        break;
      }
    }
  }
  return member;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<long long> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (long long g : gens)
    if (g < 1) throw std::invalid_argument("generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  long long gcd_all = 0;
  for (long long g : gens) gcd_all = std::gcd(gcd_all, g);
  if (gcd_all != 1)
    throw std::invalid_argument("generators have gcd " + std::to_string(gcd_all) +
                                ": not a numerical semigroup of a knot");
  gens_ = gens;

  if (gens_.front() == 1) {
    conductor_ = 0;  // the whole of Z_{>=0}; no gaps
  } else {
    // The conductor is confirmed once the sieve window shows a run of
    // gens[0] consecutive members past the last gap; adding the smallest
    // generator then reaches everything beyond the run.  The two-generator
    // case lands in the first window via the closed form (p-1)(q-1); wider
    // generator sets may need the window doubled.
    long long a = gens_[0];
    long long b = gens_.size() > 1 ? gens_[1] : gens_[0];
    long long bound = (a - 1) * (b - 1) + a + 1;
    for (;;) {
      member_ = sieve(gens_, bound);
      long long last_gap = -1;
      for (long long i = bound - 1; i >= 0; --i) {
        if (!member_[static_cast<size_t>(i)]) {
          last_gap = i;
          break;
        }
      }
      if (last_gap + a < bound) {
        conductor_ = last_gap + 1;
        break;
      }
      bound *= 2;
    }
    member_.resize(static_cast<size_t>(conductor_));
    for (long long i = 0; i < conductor_; ++i)
      if (!member_[static_cast<size_t>(i)]) gaps_.push_back(i);
  }

  prefix_.resize(static_cast<size_t>(conductor_) + 1);
  long long running = 0;
  for (long long i = 0; i <= conductor_; ++i) {
    prefix_[static_cast<size_t>(i)] = running;
    if (i < conductor_ && member_[static_cast<size_t>(i)]) ++running;
  }
}

bool NumericalSemigroup::contains(long long m) const {
  if (m < 0) return false;
  if (m >= conductor_) return true;
  return member_[static_cast<size_t>(m)] != 0;
}

long long NumericalSemigroup::count_below(long long m) const {
  if (m <= 0) return 0;
  if (m >= conductor_) return m - delta();
  return prefix_[static_cast<size_t>(m)];
}

bool NumericalSemigroup::is_symmetric() const {
  if (gaps_.empty()) return true;
  return gaps_.back() == 2 * delta() - 1;
}

SimplePairSingularity::SimplePairSingularity(long long p_, long long q_) : p(p_), q(q_) {
  if (p < 2) throw std::invalid_argument("p = " + std::to_string(p) +
                                         " denotes a smooth point, not a singularity");
  if (q <= p) throw std::invalid_argument("require p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

std::vector<long long> alexander_polynomial(const NumericalSemigroup& s) {
  // 1 + (t-1) * sum over gaps g of t^g
  const auto& gaps = s.gaps();
  long long deg = gaps.empty() ? 0 : gaps.back() + 1;
  std::vector<long long> coeff(static_cast<size_t>(deg) + 1, 0);
  coeff[0] = 1;
  for (long long g : gaps) {
    coeff[static_cast<size_t>(g + 1)] += 1;
    coeff[static_cast<size_t>(g)] -= 1;
  }
  while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
  return coeff;
}

std::vector<long long> alexander_second_expansion(const NumericalSemigroup& s) {
  long long delta = s.delta();
  if (delta == 0) return {};
  const auto& gaps = s.gaps();
  std::vector<long long> k(static_cast<size_t>(s.mu()) - 1, 0);
  // k_j = #{gaps > j}; gaps ascending, so walk a cursor once.
  size_t cursor = 0;
  for (long long j = 0; j + 2 <= s.mu(); ++j) {
    while (cursor < gaps.size() && gaps[cursor] <= j) ++cursor;
    k[static_cast<size_t>(j)] = static_cast<long long>(gaps.size() - cursor);
  }
  return k;
}

}  // namespace curvebound
