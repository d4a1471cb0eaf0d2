#include "speclab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace speclab {

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["status"] = all_pass() ? "pass" : "fail";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json row;
    row["identity_id"] = r.identity_id;
    row["paper_eq"] = r.paper_eq;
    row["dimension"] = r.dimension;
    row["degree_cap"] = r.degree_cap;
    row["status"] = r.pass ? "pass" : "fail";
    row["cases"] = r.cases;
    if (!r.pass) row["counterexample"] = r.counterexample;
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "identity_id,paper_eq,dimension,degree_cap,status,cases,counterexample\n";
  for (const auto& r : results)
    os << csv_quote(r.identity_id) << ',' << csv_quote(r.paper_eq) << ',' << r.dimension << ',' << r.degree_cap
       << ',' << (r.pass ? "pass" : "fail") << ',' << r.cases << ',' << csv_quote(r.counterexample) << '\n';
  return os.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << suite << ": " << (all_pass() ? "PASS" : "FAIL") << '\n';
  for (const auto& r : results) {
    os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.identity_id << "  " << r.paper_eq << "  (n=" << r.dimension
       << ", cap=" << r.degree_cap << ", " << r.cases << " cases)\n";
    if (!r.pass) os << "         counterexample: " << r.counterexample << '\n';
  }
  return os.str();
}

}  // namespace speclab
