#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvebound/rational.hpp"

namespace curvebound {

/// Outcome of a single obstruction check.  "skipped" means the check's own
/// hypothesis is unmet (e.g. genus 0 where a bound needs positive genus);
/// "not-applicable" means the check was not requested for this run.
enum class CheckStatus { pass, fail, skipped, not_applicable };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

/// One concrete violation: the indices locating it (e.g. {j, b}), the value
/// that breaks the inequality and the bounds it had to respect.  One-sided
/// bounds leave the missing side empty.
struct Witness {
  std::vector<long long> indices;
  Rational lhs;
  std::optional<Rational> bound_lo;
  std::optional<Rational> bound_hi;

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.indices == b.indices && a.lhs == b.lhs && a.bound_lo == b.bound_lo &&
           a.bound_hi == b.bound_hi;
  }
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<Witness> witnesses;

  bool failed() const { return status == CheckStatus::fail; }

  friend bool operator==(const CheckResult& a, const CheckResult& b) {
    return a.name == b.name && a.status == b.status && a.witnesses == b.witnesses;
  }
};

}  // namespace curvebound
