#include "curvebound/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace curvebound {

namespace {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& r) {
  if (r.is_integer()) return json(r.num());
  return json(r.str());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected integer or \"num/den\" string");
}

json witness_to_json(const Witness& w) {
  json j;
  j["indices"] = w.indices;
  j["lhs"] = rational_to_json(w.lhs);
  j["bound_lo"] = w.bound_lo ? rational_to_json(*w.bound_lo) : json(nullptr);
  j["bound_hi"] = w.bound_hi ? rational_to_json(*w.bound_hi) : json(nullptr);
  return j;
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.indices = j.at("indices").get<std::vector<long long>>();
  w.lhs = rational_from_json(j.at("lhs"));
  if (!j.at("bound_lo").is_null()) w.bound_lo = rational_from_json(j.at("bound_lo"));
  if (!j.at("bound_hi").is_null()) w.bound_hi = rational_from_json(j.at("bound_hi"));
  return w;
}

json singularity_to_json(const Singularity& s) {
  json j;
  if (s.is_pair()) {
    j["type"] = "pair";
    j["p"] = s.as_pair().p;
    j["q"] = s.as_pair().q;
  } else {
    j["type"] = "semigroup";
    j["generators"] = s.semigroup().generators();
  }
  j["delta"] = s.delta();
  j["mbar"] = s.mbar() ? json(*s.mbar()) : json(nullptr);
  return j;
}

Singularity singularity_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "pair") return Singularity::pair(j.at("p").get<long long>(), j.at("q").get<long long>());
  if (type == "semigroup") {
    std::optional<long long> mbar;
    if (!j.at("mbar").is_null()) mbar = j.at("mbar").get<long long>();
    return Singularity::from_generators(j.at("generators").get<std::vector<long long>>(), mbar);
  }
  throw std::invalid_argument("unknown singularity type '" + type + "'");
}

}  // namespace

json report_to_json(const ObstructionReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json hyp;
  hyp["d"] = r.hypothesis.d;
  hyp["g"] = r.hypothesis.g;
  json sings = json::array();
  for (const auto& s : r.hypothesis.sings) sings.push_back(singularity_to_json(s));
  hyp["singularities"] = sings;
  j["hypothesis"] = hyp;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    json ws = json::array();
    for (const auto& w : c.witnesses) ws.push_back(witness_to_json(w));
    cj["witnesses"] = ws;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["verdict"] = r.verdict();
  return j;
}

std::string emit_report_json(const ObstructionReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

ObstructionReport parse_report_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema_version").get<std::string>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version");
  const json& hyp = j.at("hypothesis");
  std::vector<Singularity> sings;
  for (const auto& sj : hyp.at("singularities")) sings.push_back(singularity_from_json(sj));
  CurveHypothesis h(hyp.at("d").get<long long>(), hyp.at("g").get<long long>(), std::move(sings));
  ObstructionReport report{std::move(h), {}};
  for (const auto& cj : j.at("checks")) {
    CheckResult c;
    c.name = cj.at("name").get<std::string>();
    c.status = check_status_from_string(cj.at("status").get<std::string>());
    for (const auto& wj : cj.at("witnesses")) c.witnesses.push_back(witness_from_json(wj));
    report.checks.push_back(std::move(c));
  }
  if (j.at("verdict").get<std::string>() != report.verdict())
    throw std::invalid_argument("verdict does not match check statuses");
  return report;
}

namespace {

std::string join_indices(const std::vector<long long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string emit_report_csv(const ObstructionReport& r) {
  // One line per check; one extra line per witness.
  std::string out = "check,status,indices,lhs,bound_lo,bound_hi\n";
  for (const auto& c : r.checks) {
    out += c.name + "," + to_string(c.status) + ",,,,\n";
    for (const auto& w : c.witnesses) {
      out += c.name + "," + to_string(c.status) + "," + join_indices(w.indices) + "," +
             w.lhs.str() + "," + (w.bound_lo ? w.bound_lo->str() : "") + "," +
             (w.bound_hi ? w.bound_hi->str() : "") + "\n";
    }
  }
  return out;
}

std::string emit_report_table(const ObstructionReport& r) {
  std::ostringstream out;
  out << "hypothesis: d=" << r.hypothesis.d << " g=" << r.hypothesis.g << " singularities=";
  for (size_t i = 0; i < r.hypothesis.sings.size(); ++i) {
    const auto& s = r.hypothesis.sings[i];
    if (i) out << "+";
    if (s.is_pair())
      out << "(" << s.as_pair().p << "," << s.as_pair().q << ")";
    else {
      out << "<";
      const auto& gens = s.semigroup().generators();
      for (size_t k = 0; k < gens.size(); ++k) out << (k ? "," : "") << gens[k];
      out << ">";
    }
  }
  out << "\n";
  for (const auto& c : r.checks) {
    out << "  " << std::left << std::setw(14) << c.name << " " << to_string(c.status);
    if (!c.witnesses.empty()) {
      out << "  [";
      for (size_t i = 0; i < c.witnesses.size(); ++i) {
        const auto& w = c.witnesses[i];
        if (i) out << "; ";
        out << "(" << join_indices(w.indices) << ") ";
        if (w.bound_lo) out << w.bound_lo->str() << " <= ";
        out << w.lhs.str();
        if (w.bound_hi) out << " <= " << w.bound_hi->str();
      }
      out << "]";
    }
    out << "\n";
  }
  out << "verdict: " << r.verdict() << "\n";
  return out.str();
}

std::string emit_rows_csv(const std::vector<SearchRow>& rows) {
  std::string out = "d,p,q,genus,theorem_main,bmy,multiplicity,spectrum,verdict\n";
  for (const auto& r : rows) {
    out += std::to_string(r.triple.d) + "," + std::to_string(r.triple.p) + "," +
           std::to_string(r.triple.q) + "," + std::to_string(r.triple.g) + "," +
           to_string(r.theorem_main) + "," + to_string(r.bmy) + "," + to_string(r.multiplicity) +
           "," + to_string(r.spectrum) + "," + (r.survives() ? "pass" : "fail") + "\n";
  }
  return out;
}

std::vector<SearchRow> parse_rows_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "d,p,q,genus,theorem_main,bmy,multiplicity,spectrum,verdict")
    throw std::invalid_argument("bad survivor CSV header");
  std::vector<SearchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 9) throw std::invalid_argument("bad survivor CSV row: " + line);
    SearchRow r;
    r.triple.d = std::stoll(fields[0]);
    r.triple.p = std::stoll(fields[1]);
    r.triple.q = std::stoll(fields[2]);
    r.triple.g = std::stoll(fields[3]);
    r.theorem_main = check_status_from_string(fields[4]);
    r.bmy = check_status_from_string(fields[5]);
    r.multiplicity = check_status_from_string(fields[6]);
    r.spectrum = check_status_from_string(fields[7]);
    if (fields[8] != (r.survives() ? "pass" : "fail"))
      throw std::invalid_argument("verdict does not match statuses: " + line);
    rows.push_back(r);
  }
  return rows;
}

std::string emit_rows_json(const std::vector<SearchRow>& rows, long long d_min, long long d_max,
                           long long g, const std::vector<std::string>& filters) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["genus"] = g;
  j["d_min"] = d_min;
  j["d_max"] = d_max;
  j["filters"] = filters;
  json out = json::array();
  for (const auto& r : rows) {
    json rj;
    rj["d"] = r.triple.d;
    rj["p"] = r.triple.p;
    rj["q"] = r.triple.q;
    rj["genus"] = r.triple.g;
    rj["theorem_main"] = to_string(r.theorem_main);
    rj["bmy"] = to_string(r.bmy);
    rj["multiplicity"] = to_string(r.multiplicity);
    rj["spectrum"] = to_string(r.spectrum);
    rj["verdict"] = r.survives() ? "pass" : "fail";
    out.push_back(rj);
  }
  j["rows"] = out;
  return j.dump(2) + "\n";
}

std::string emit_rows_table(const std::vector<SearchRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "d" << std::setw(7) << "p" << std::setw(9) << "q"
      << std::setw(7) << "genus" << std::setw(15) << "theorem_main" << std::setw(15) << "bmy"
      << std::setw(15) << "multiplicity" << std::setw(15) << "spectrum" << "verdict\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(5) << r.triple.d << std::setw(7) << r.triple.p << std::setw(9)
        << r.triple.q << std::setw(7) << r.triple.g << std::setw(15) << to_string(r.theorem_main)
        << std::setw(15) << to_string(r.bmy) << std::setw(15) << to_string(r.multiplicity)
        << std::setw(15) << to_string(r.spectrum) << (r.survives() ? "pass" : "fail") << "\n";
  }
  return out.str();
}

std::string emit_classification_json(const ClassificationResult& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["d_max"] = c.d_max;
  json surv = json::array();
  for (const auto& s : c.survivors) {
    json sj;
    sj["d"] = s.row.triple.d;
    sj["p"] = s.row.triple.p;
    sj["q"] = s.row.triple.q;
    sj["genus"] = s.row.triple.g;
    sj["family"] = s.family;
    sj["realized"] = s.realized;
    sj["theorem_main"] = to_string(s.row.theorem_main);
    sj["bmy"] = to_string(s.row.bmy);
    surv.push_back(sj);
  }
  j["survivors"] = surv;
  json rej = json::array();
  for (const auto& r : c.rejected) {
    json rj;
    rj["d"] = r.triple.d;
    rj["p"] = r.triple.p;
    rj["q"] = r.triple.q;
    rj["failed"] = r.failed;
    rej.push_back(rj);
  }
  j["rejected"] = rej;
  return j.dump(2) + "\n";
}

std::string emit_classification_csv(const ClassificationResult& c) {
  std::vector<SearchRow> rows;
  for (const auto& s : c.survivors) rows.push_back(s.row);
  return emit_rows_csv(rows);
}

std::string emit_classification_table(const ClassificationResult& c) {
  std::ostringstream out;
  out << "classification of genus-one curves with one singularity of simple type, 4 <= d <= "
      << c.d_max << "\n\nsurvivors:\n";
  out << std::left << std::setw(5) << "  d" << std::setw(9) << "p" << std::setw(11) << "q"
      << std::setw(13) << "family" << "realized\n";
  for (const auto& s : c.survivors) {
    out << std::left << "  " << std::setw(3) << s.row.triple.d << std::setw(9) << s.row.triple.p
        << std::setw(11) << s.row.triple.q << std::setw(13) << s.family
        << (s.realized ? "yes" : "open") << "\n";
  }
  out << "\nrejected: " << c.rejected.size() << " candidates";
  size_t bmy_only = 0;
  for (const auto& r : c.rejected)
    if (r.failed == std::vector<std::string>{"bmy"}) ++bmy_only;
  out << " (" << bmy_only << " by the Orevkov-number bound alone)\n";
  return out.str();
}

}  // namespace curvebound
