// jordanlab: command-line front end for the verification suites.
//
// Exit status: 0 when no row failed, 1 when some row failed, 2 on a usage
// error (bad arguments, unreadable group file, hypothesis not met).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jordanlab/error.hpp"
#include "jordanlab/report.hpp"
#include "jordanlab/suites.hpp"

using namespace jordanlab;

namespace {

constexpr int kUsageError = 2;

bool usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::HypothesisViolated:
    case ErrorCode::InvalidDegree:
    case ErrorCode::UnknownSuite:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group checks for Jordan-type bounds: normal abelian subgroups, symmetric boundary cycles, "
               "invariant lines and conic-bundle swaps."};
  app.fallthrough();
  app.require_subcommand(1);

  std::string emit = "json";
  std::size_t cap = group::kDefaultCap;
  bool parallel = false, timings = false;
  app.add_option("--emit", emit, "Output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  app.add_option("--cap", cap, "Largest group order to materialize")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--parallel", parallel, "Run independent work on several threads");
  app.add_flag("--timings", timings, "Include wall time per row (output is then not reproducible)");

  suites::SuiteOptions options;
  std::vector<int> ns;
  auto* verify = app.add_subcommand("verify", "Verify a named claim");
  verify->require_subcommand(1);
  auto* lemma = verify->add_subcommand("lemma52", "Jordan index of (Z/n)^2 x| D6 for each n");
  lemma->add_option("--n", ns, "Moduli, comma or space separated")->required()->delimiter(',');
  lemma->add_flag("--allow-bad-n", options.allow_bad_n, "Accept n sharing a factor with 6 (informational rows)");

  int degree = 0;
  bool all_configs = false;
  auto* enumerate = app.add_subcommand("enumerate", "Boundary cycles of a del Pezzo degree and their symmetry");
  enumerate->add_option("--degree", degree, "Degree 1..8")->required();
  enumerate->add_flag("--list", all_configs, "Include every configuration in the details");

  auto* dp5 = app.add_subcommand("dp5", "Invariant lines for subgroups of S5");
  dp5->require_subcommand(1);
  dp5->add_subcommand("check", "Run the five named subgroups");

  auto* conic = app.add_subcommand("conic", "Conic-bundle fiber models");
  conic->require_subcommand(1);
  auto* simulate = conic->add_subcommand("simulate", "Random admissible models and their swap-free subgroups");
  simulate->add_option("--seed", options.seed, "Random seed")->capture_default_str();
  simulate->add_option("--trials", options.trials, "Number of models")->capture_default_str();

  std::string group_file;
  auto* jordan_cmd = app.add_subcommand("jordan", "Jordan index of a group given in a JSON file");
  jordan_cmd->add_option("groupfile", group_file, "Group description")->required()->check(CLI::ExistingFile);

  std::string suite;
  auto* report_cmd = app.add_subcommand("report", "Run a suite and emit every row");
  report_cmd->add_option("suite", suite, "lemma52, prop44, dp5, conic or all")
      ->required()
      ->check(CLI::IsMember(suites::kSuiteNames));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  options.cap = cap;
  options.parallel = parallel;
  std::vector<report::VerificationReport> rows;
  try {
    if (verify->parsed()) {
      options.lemma52_n = ns;
      options.determinant_n.clear();
      rows = suites::lemma52_suite(options);
    } else if (enumerate->parsed()) {
      if (degree < 1 || degree > 8) throw Error(ErrorCode::InvalidDegree, "degree must be in 1..8");
      options.degrees = {degree};
      options.list_configurations = all_configs;
      rows = suites::prop44_suite(options);
      rows.pop_back();  // the recorded constant belongs to full reports only
    } else if (dp5->parsed()) {
      rows = suites::dp5_suite(options);
    } else if (conic->parsed()) {
      rows = suites::conic_suite(options);
    } else if (jordan_cmd->parsed()) {
      rows = {suites::jordan_report(suites::load_group_file(group_file, cap))};
    } else if (report_cmd->parsed()) {
      rows = suites::run_suite(suite, options);
    }
  } catch (const Error& e) {
    std::cerr << "jordanlab: " << e.what() << "\n";
    return usage_code(e.code()) ? kUsageError : 1;
  } catch (const std::exception& e) {
    std::cerr << "jordanlab: " << e.what() << "\n";
    return 1;
  }

  report::EmitOptions emit_options;
  emit_options.format = emit == "md" ? report::Format::Markdown : report::Format::Json;
  emit_options.timings = timings;
  std::cout << report::emit(rows, emit_options);
  return report::exit_code(rows);
}
