#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace jordanlab::report {

enum class Status { Pass, Fail, Informational };

std::string to_string(Status s);

/// One checked (or cited) claim. `expected` is empty exactly for
/// informational rows.
struct VerificationReport {
  std::string suite;
  std::string claim_id;
  std::string anchor;
  nlohmann::json computed;
  std::optional<nlohmann::json> expected;
  std::string provenance;
  Status status = Status::Informational;
  std::string note;
  nlohmann::json details;  // supporting data; omitted when null
  double wall_ms = 0.0;
};

/// Pass iff computed == expected.
VerificationReport check(std::string suite, std::string claim_id, std::string anchor, nlohmann::json computed,
                         nlohmann::json expected, std::string provenance, std::string note = {});

VerificationReport info(std::string suite, std::string claim_id, std::string anchor, nlohmann::json computed,
                        std::string provenance, std::string note = {});

/// Fail row for a module error captured during a suite run.
VerificationReport failure(std::string suite, std::string claim_id, std::string anchor, const std::string& error);

enum class Format { Json, Markdown };

struct EmitOptions {
  Format format = Format::Json;
  bool timings = false;  // wall time varies run to run
};

std::string emit(const std::vector<VerificationReport>& reports, const EmitOptions& options = {});

nlohmann::json to_json(const VerificationReport& r, bool timings = false);

bool any_failed(const std::vector<VerificationReport>& reports);

/// 0 when no row failed, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace jordanlab::report
