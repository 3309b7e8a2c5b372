#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <string>
#include <vector>

#include "curvebound/obstruct.hpp"
#include "curvebound/verdict.hpp"

namespace curvebound {

using BigInt = boost::multiprecision::cpp_int;

/// A (p,q;d) candidate at genus g, i.e. coprime p < q with
/// (p-1)(q-1) = (d-1)(d-2) - 2g, so that the genus formula holds.
struct CandidateTriple {
  long long p = 0;
  long long q = 0;
  long long d = 0;
  long long g = 0;

  friend bool operator==(const CandidateTriple& a, const CandidateTriple& b) {
    return a.p == b.p && a.q == b.q && a.d == b.d && a.g == b.g;
  }
  friend bool operator<(const CandidateTriple& a, const CandidateTriple& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
};

/// All candidates for one degree and genus, by divisor enumeration of
/// (d-1)(d-2) - 2g, sorted by p.  Empty when the target is non-positive.
std::vector<CandidateTriple> candidates_for(long long d, long long g);

/// One evaluated candidate with the statuses of the four standard checks.
struct SearchRow {
  CandidateTriple triple;
  CheckStatus theorem_main = CheckStatus::not_applicable;
  CheckStatus bmy = CheckStatus::not_applicable;
  CheckStatus multiplicity = CheckStatus::not_applicable;
  CheckStatus spectrum = CheckStatus::not_applicable;

  bool survives() const;

  friend bool operator==(const SearchRow& a, const SearchRow& b) {
    return a.triple == b.triple && a.theorem_main == b.theorem_main && a.bmy == b.bmy &&
           a.multiplicity == b.multiplicity && a.spectrum == b.spectrum;
  }
};

inline const std::set<std::string>& search_filter_names() {
  static const std::set<std::string> names = {"theorem_main", "bmy", "multiplicity", "spectrum"};
  return names;
}

/// Thread count actually used: `requested` (<= 0 means all hardware
/// threads), capped by the CURVEBOUND_THREADS environment variable when set.
int resolve_thread_count(int requested);

/// Evaluates every candidate for every degree in [d_min, d_max] against the
/// selected checks.  Rows come back ordered by (d, p) regardless of the
/// schedule; degrees are distributed over an OpenMP worker pool.
std::vector<SearchRow> evaluate_candidates(long long d_min, long long d_max, long long g,
                                           const std::set<std::string>& filters,
                                           int threads = 0);

/// Serial reference for evaluate_candidates; kept as the comparison baseline
/// for tests and benchmarks.
std::vector<SearchRow> evaluate_candidates_serial(long long d_min, long long d_max, long long g,
                                                  const std::set<std::string>& filters);

/// Survivor table: the rows of evaluate_candidates that pass every selected
/// check.  Unknown filter names are an input error.
std::vector<SearchRow> search(long long d_min, long long d_max, long long g,
                              const std::set<std::string>& filters, int threads = 0);

/// Fibonacci numbers with phi_0 = 0, phi_1 = 1, unbounded precision.
BigInt fibonacci(long long n);

/// The genus-one family member (phi_{4j-2}, phi_{4j+2}; phi_{4j}).  Validates
/// (phi_{4j-2}-1)(phi_{4j+2}-1) = phi_{4j}(phi_{4j}-3) before returning; a
/// failure there is an internal error.  j = 1 gives p = 1 (a smooth point)
/// and is rejected, so the family starts at j = 2.
struct FibonacciTriple {
  long long j;
  BigInt p, q, d;
};
FibonacciTriple fibonacci_triple(long long j);

/// Family members with d <= d_max, as machine-word triples (g = 1).
std::vector<CandidateTriple> fibonacci_triples_upto(long long d_max);

/// All d <= n such that 5d^2 + 4 is a perfect square; these are exactly the
/// even-index Fibonacci numbers.
std::vector<long long> pell_degrees(long long n);

struct ClassifiedCurve {
  SearchRow row;
  std::string family;  // "fibonacci" or "exceptional"
  bool realized;       // a construction of the curve is known
};

struct RejectedCandidate {
  CandidateTriple triple;
  std::vector<std::string> failed;  // names of the checks that obstructed it
};

struct ClassificationResult {
  long long d_max = 0;
  std::vector<ClassifiedCurve> survivors;
  std::vector<RejectedCandidate> rejected;
};

/// Reproduces the genus-one single-singularity classification for degrees in
/// [4, d_max]: runs the counting obstruction and the Orevkov-number bound
/// over all candidates, partitions the survivors into the Fibonacci family
/// and the exceptional list, and records every rejected candidate with the
/// checks that killed it.
ClassificationResult classify_genus_one(long long d_max, int threads = 0);

}  // namespace curvebound
