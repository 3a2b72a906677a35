#include "jordanlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace jordanlab::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Informational: return "informational";
  }
  return "unknown";
}

VerificationReport check(std::string suite, std::string claim_id, std::string anchor, nlohmann::json computed,
                         nlohmann::json expected, std::string provenance, std::string note) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.claim_id = std::move(claim_id);
  r.anchor = std::move(anchor);
  r.status = computed == expected ? Status::Pass : Status::Fail;
  r.computed = std::move(computed);
  r.expected = std::move(expected);
  r.provenance = std::move(provenance);
  r.note = std::move(note);
  return r;
}

VerificationReport info(std::string suite, std::string claim_id, std::string anchor, nlohmann::json computed,
                        std::string provenance, std::string note) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.claim_id = std::move(claim_id);
  r.anchor = std::move(anchor);
  r.computed = std::move(computed);
  r.provenance = std::move(provenance);
  r.status = Status::Informational;
  r.note = std::move(note);
  return r;
}

VerificationReport failure(std::string suite, std::string claim_id, std::string anchor, const std::string& error) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.claim_id = std::move(claim_id);
  r.anchor = std::move(anchor);
  r.computed = nullptr;
  r.expected = nlohmann::json("no error");
  r.provenance = "module error";
  r.status = Status::Fail;
  r.note = error;
  return r;
}

nlohmann::json to_json(const VerificationReport& r, bool timings) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["claim_id"] = r.claim_id;
  j["anchor"] = r.anchor;
  j["computed"] = r.computed;
  j["expected"] = r.expected ? *r.expected : nlohmann::json(nullptr);
  j["provenance"] = r.provenance;
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.details.is_null()) j["details"] = r.details;
  if (timings) j["wall_ms"] = r.wall_ms;
  return j;
}

namespace {

std::string cell(const nlohmann::json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string markdown(const std::vector<VerificationReport>& reports, bool timings) {
  std::ostringstream os;
  if (reports.empty()) {
    os << "| claim | anchor | computed | expected | provenance | status | note |\n";
    os << "|---|---|---|---|---|---|---|\n";
    return os.str();
  }
  std::string current;
  bool first = true;
  for (const auto& r : reports) {
    if (first || r.suite != current) {
      if (!first) os << "\n";
      current = r.suite;
      first = false;
      os << "## " << current << "\n\n";
      os << "| claim | anchor | computed | expected | provenance | status | note |" << (timings ? " ms |" : "") << "\n";
      os << "|---|---|---|---|---|---|---|" << (timings ? "---|" : "") << "\n";
    }
    os << "| " << r.claim_id << " | " << cell(r.anchor) << " | " << cell(r.computed) << " | "
       << (r.expected ? cell(*r.expected) : std::string("-")) << " | " << cell(r.provenance) << " | "
       << to_string(r.status) << " | " << cell(r.note) << " |";
    if (timings) os << " " << std::fixed << std::setprecision(1) << r.wall_ms << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit(const std::vector<VerificationReport>& reports, const EmitOptions& options) {
  if (options.format == Format::Markdown) return markdown(reports, options.timings);
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) doc.push_back(to_json(r, options.timings));
  return doc.dump(2) + "\n";
}

bool any_failed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return true;
  return false;
}

int exit_code(const std::vector<VerificationReport>& reports) { return any_failed(reports) ? 1 : 0; }

}  // namespace jordanlab::report
