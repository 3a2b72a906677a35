#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "jordanlab/group.hpp"
#include "jordanlab/report.hpp"

namespace jordanlab::suites {

struct SuiteOptions {
  std::vector<int> lemma52_n{5, 7, 11};
  std::vector<int> determinant_n{2, 3, 4, 5, 6, 7, 9, 11, 13};
  bool allow_bad_n = false;  // run n with gcd(n, 6) != 1 as informational rows
  std::vector<int> degrees{1, 2, 3, 4, 5, 6};
  bool list_configurations = false;
  std::size_t cap = group::kDefaultCap;
  std::uint64_t seed = 1;
  std::size_t trials = 500;
  bool parallel = false;
};

inline const std::vector<std::string> kSuiteNames{"lemma52", "prop44", "dp5", "conic", "all"};

/// Rows of one suite, in a fixed order. Module errors become fail rows.
/// Throws UnknownSuite for a name outside kSuiteNames, and HypothesisViolated
/// when a lemma52 n shares a factor with 6 and allow_bad_n is off.
std::vector<report::VerificationReport> run_suite(const std::string& name, const SuiteOptions& options = {});

std::vector<report::VerificationReport> lemma52_suite(const SuiteOptions& options);
std::vector<report::VerificationReport> prop44_suite(const SuiteOptions& options);
std::vector<report::VerificationReport> dp5_suite(const SuiteOptions& options);
std::vector<report::VerificationReport> conic_suite(const SuiteOptions& options);

/// Loads a group description:
///   {"kind": "perm", "degree": d, "generators": [[[1, 2, 3]], [[1, 2]]]}
///   {"kind": "modmatrix", "modulus": p, "dim": k, "generators": [[row-major entries], ...]}
///   {"kind": "lemma52", "n": n}
/// with optional "name" and "expected_jordan_index". Throws ParseError.
struct GroupFile {
  std::string name;
  group::FiniteGroup group;
  std::optional<std::size_t> expected_jordan_index;
};

GroupFile load_group_file(const std::filesystem::path& path, std::size_t cap = group::kDefaultCap);
GroupFile parse_group(const nlohmann::json& doc, const std::string& fallback_name,
                      std::size_t cap = group::kDefaultCap);

/// One row for the Jordan index of a loaded group.
report::VerificationReport jordan_report(const GroupFile& file);

}  // namespace jordanlab::suites
