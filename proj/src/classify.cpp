#include "curvebound/classify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curvebound {

namespace {

long long isqrt(long long x) {
  if (x < 0) throw std::invalid_argument("isqrt of a negative number");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

const std::vector<CandidateTriple>& realized_exceptional_cases() {
  // Known constructions: the three small sporadic curves and the degree-six
  // member of the (p, 9p+1; 3p) family.
  static const std::vector<CandidateTriple> cases = {
      {2, 5, 4, 1}, {2, 11, 5, 1}, {3, 10, 6, 1}, {2, 19, 6, 1}};
  return cases;
}

}  // namespace

std::vector<CandidateTriple> candidates_for(long long d, long long g) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  long long target = (d - 1) * (d - 2) - 2 * g;
  std::vector<CandidateTriple> out;
  if (target <= 0) return out;
  for (long long a = 1; a <= isqrt(target); ++a) {
    if (target % a != 0) continue;
    long long b = target / a;
    if (a >= b) continue;  // p < q strictly; a == b would give p == q
    long long p = a + 1, q = b + 1;
    if (std::gcd(p, q) == 1) out.push_back(CandidateTriple{p, q, d, g});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SearchRow::survives() const {
  for (CheckStatus s : {theorem_main, bmy, multiplicity, spectrum})
    if (s == CheckStatus::fail) return false;
  return true;
}

int resolve_thread_count(int requested) {
  int threads = requested > 0 ? requested : omp_get_max_threads();
  if (const char* env = std::getenv("CURVEBOUND_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1)
      throw std::invalid_argument("CURVEBOUND_THREADS must be a positive integer");
    threads = std::min<long>(threads, cap);
  }
  return std::max(threads, 1);
}

namespace {

void validate_filters(const std::set<std::string>& filters) {
  if (filters.empty()) throw std::invalid_argument("at least one filter is required");
  for (const auto& f : filters)
    if (!search_filter_names().count(f))
      throw std::invalid_argument("unknown filter name '" + f + "'");
}

std::vector<SearchRow> evaluate_degree(long long d, long long g,
                                       const std::set<std::string>& filters) {
  std::vector<SearchRow> rows;
  for (const CandidateTriple& t : candidates_for(d, g)) {
    CurveHypothesis h(d, g, {Singularity::pair(t.p, t.q)});
    ReportOptions opts;
    opts.enabled = filters;
    ObstructionReport report = full_report(h, opts);
    SearchRow row;
    row.triple = t;
    row.theorem_main = report.check("theorem_main").status;
    row.bmy = report.check("bmy").status;
    row.multiplicity = report.check("multiplicity").status;
    row.spectrum = report.check("spectrum").status;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<SearchRow> evaluate_candidates_serial(long long d_min, long long d_max, long long g,
                                                  const std::set<std::string>& filters) {
  if (d_min < 3 || d_min > d_max) throw std::invalid_argument("need 3 <= d_min <= d_max");
  validate_filters(filters);
  std::vector<SearchRow> rows;
  for (long long d = d_min; d <= d_max; ++d) {
    auto part = evaluate_degree(d, g, filters);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::vector<SearchRow> evaluate_candidates(long long d_min, long long d_max, long long g,
                                           const std::set<std::string>& filters, int threads) {
  if (d_min < 3 || d_min > d_max) throw std::invalid_argument("need 3 <= d_min <= d_max");
  validate_filters(filters);
  int t = resolve_thread_count(threads);
  long long n = d_max - d_min + 1;
  // One slot per degree; whichever thread fills a slot, the merge below is
  // in degree order and the output is schedule-independent.
  std::vector<std::vector<SearchRow>> per_degree(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(t)
  for (long long idx = 0; idx < n; ++idx)
    per_degree[static_cast<size_t>(idx)] = evaluate_degree(d_min + idx, g, filters);
  std::vector<SearchRow> rows;
  for (const auto& part : per_degree) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

std::vector<SearchRow> search(long long d_min, long long d_max, long long g,
                              const std::set<std::string>& filters, int threads) {
  std::vector<SearchRow> rows = evaluate_candidates(d_min, d_max, g, filters, threads);
  std::vector<SearchRow> survivors;
  for (const auto& r : rows)
    if (r.survives()) survivors.push_back(r);
  return survivors;
}

BigInt fibonacci(long long n) {
  if (n < 0) throw std::invalid_argument("Fibonacci index must be non-negative");
  BigInt a = 0, b = 1;
  for (long long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

FibonacciTriple fibonacci_triple(long long j) {
  if (j < 1) throw std::invalid_argument("family index must be positive");
  if (j == 1)
    throw std::invalid_argument("j = 1 gives p = 1, a smooth point; the family starts at j = 2");
  FibonacciTriple t{j, fibonacci(4 * j - 2), fibonacci(4 * j + 2), fibonacci(4 * j)};
  if ((t.p - 1) * (t.q - 1) != t.d * (t.d - 3))
    throw std::logic_error("Fibonacci triple identity failed");  // must never fire
  return t;
}

std::vector<CandidateTriple> fibonacci_triples_upto(long long d_max) {
  std::vector<CandidateTriple> out;
  for (long long j = 2;; ++j) {
    FibonacciTriple t = fibonacci_triple(j);
    if (t.d > d_max) break;
    if (t.q > std::numeric_limits<long long>::max())
      throw std::overflow_error("Fibonacci triple exceeds 64-bit range");
    out.push_back(CandidateTriple{static_cast<long long>(t.p), static_cast<long long>(t.q),
                                  static_cast<long long>(t.d), 1});
  }
  return out;
}

std::vector<long long> pell_degrees(long long n) {
  if (n < 1) throw std::invalid_argument("bound must be positive");
  if (n > 1000000000LL) throw std::invalid_argument("bound too large for 64-bit arithmetic");
  std::vector<long long> out;
  for (long long d = 1; d <= n; ++d) {
    long long x = 5 * d * d + 4;
    long long r = isqrt(x);
    if (r * r == x) out.push_back(d);
  }
  return out;
}

ClassificationResult classify_genus_one(long long d_max, int threads) {
  if (d_max < 4) throw std::invalid_argument("classification needs d_max >= 4");
  ClassificationResult result;
  result.d_max = d_max;

  auto rows = evaluate_candidates(4, d_max, 1, {"theorem_main", "bmy"}, threads);
  auto fib = fibonacci_triples_upto(d_max);

  for (const auto& row : rows) {
    if (row.survives()) {
      ClassifiedCurve c;
      c.row = row;
      bool is_fib = std::find(fib.begin(), fib.end(), row.triple) != fib.end();
      c.family = is_fib ? "fibonacci" : "exceptional";
      c.realized = is_fib || std::find(realized_exceptional_cases().begin(),
                                       realized_exceptional_cases().end(),
                                       row.triple) != realized_exceptional_cases().end();
      result.survivors.push_back(c);
    } else {
      RejectedCandidate r;
      r.triple = row.triple;
      if (row.theorem_main == CheckStatus::fail) r.failed.push_back("theorem_main");
      if (row.bmy == CheckStatus::fail) r.failed.push_back("bmy");
      if (row.multiplicity == CheckStatus::fail) r.failed.push_back("multiplicity");
      if (row.spectrum == CheckStatus::fail) r.failed.push_back("spectrum");
      result.rejected.push_back(r);
    }
  }
  return result;
}

}  // namespace curvebound
