// isohom: integral homology of surfaces isogenous to a product with abelian
// group action.
//
//   isohom list
//   isohom compute <case|file> [--method paper|oracle|both] [--json]
//   isohom verify [--all] [case...]
//   isohom export <case|file> [--format json|text]
//
// Exit codes: 0 success, 1 validation failure or method mismatch,
// 2 usage or parse error.

#include "isohom/casefile.hpp"
#include "isohom/extension.hpp"
#include "isohom/families.hpp"
#include "isohom/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace isohom;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

FamilyCase resolve_case(const std::string& target) {
  if (target.size() == 1 && target[0] >= '1' && target[0] <= '4') return builtin_case(target[0] - '0');
  std::ifstream in(target);
  if (!in) throw CaseFileError("cannot open case file \"" + target + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  return to_family_case(parse_case_file(text.str()));
}

void print_failures(const std::vector<std::string>& failures) {
  for (const auto& f : failures) std::cerr << "error: " << f << '\n';
}

int cmd_list() {
  for (const auto& fc : builtin_cases()) {
    std::cout << fc.id << "  " << fc.group().to_string() << "  k=" << fc.action.k
              << " n=" << fc.action.n() << " m=" << fc.action.m() << "  ";
    if (fc.family_dimension == 0)
      std::cout << "family: two points\n";
    else
      std::cout << "family dimension " << fc.family_dimension << '\n';
  }
  return kOk;
}

int cmd_compute(const std::string& target, const std::string& method, bool json) {
  const FamilyCase fc = resolve_case(target);
  if (auto failures = fc.action.validate(); !failures.empty()) {
    print_failures(failures);
    return kFailure;
  }
  if (!fc.action.is_free()) std::cerr << "warning: action not free\n";

  std::optional<InvariantFactors> extension, oracle;
  if (method == "paper" || method == "both") extension = h1_extension(fc.action);
  if (method == "oracle" || method == "both") oracle = kernel_h1(fc.action);

  if (json) {
    std::cout << compute_report_json(fc.label, extension, oracle);
  } else {
    std::cout << fc.label << '\n';
    if (extension) std::cout << "paper:  " << format_factors(*extension) << '\n';
    if (oracle) std::cout << "oracle: " << format_factors(*oracle) << '\n';
  }
  if (extension && oracle && *extension != *oracle) {
    std::cerr << "error: methods disagree\n";
    return kFailure;
  }
  return kOk;
}

int cmd_verify(std::vector<int> ids) {
  if (ids.empty()) ids = {1, 2, 3, 4};
  int status = kOk;
  for (int id : ids) {
    const FamilyCase fc = builtin_case(id);
    std::cout << "Case " << id << ": ";
    auto failures = fc.action.validate();
    if (!fc.action.is_free()) failures.push_back("action not free");
    if (!failures.empty()) {
      std::cout << "INVALID";
      for (const auto& f : failures) std::cout << " [" << f << ']';
      std::cout << '\n';
      status = kFailure;
      continue;
    }
    const auto report = cross_check(fc.action);
    if (report.match) {
      std::cout << "MATCH " << format_factors(report.extension) << '\n';
    } else {
      std::cout << "MISMATCH paper=" << format_factors(report.extension)
                << " oracle=" << format_factors(report.oracle) << '\n';
      status = kFailure;
    }
  }
  return status;
}

int cmd_export(const std::string& target, const std::string& format) {
  const FamilyCase fc = resolve_case(target);
  if (format == "json")
    std::cout << serialize_case_file(to_case_file(fc));
  else
    std::cout << describe_case(fc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral homology of surfaces isogenous to a product with abelian group action"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List the builtin cases");

  auto* compute = app.add_subcommand("compute", "Compute H_1 of a builtin case or a case file");
  std::string compute_target;
  std::string method = "both";
  bool json = false;
  compute->add_option("case", compute_target, "Builtin case id (1-4) or path to a JSON case file")
      ->required();
  compute->add_option("--method", method, "Which computation to run")
      ->check(CLI::IsMember({"paper", "oracle", "both"}));
  compute->add_flag("--json", json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Cross-check both methods on builtin cases");
  bool verify_all = false;
  std::vector<int> verify_ids;
  verify->add_flag("--all", verify_all, "Verify all four builtin cases");
  verify->add_option("cases", verify_ids, "Builtin case ids")->check(CLI::Range(1, 4));

  auto* exporter = app.add_subcommand("export", "Write case data");
  std::string export_target;
  std::string format = "json";
  exporter->add_option("case", export_target, "Builtin case id (1-4) or path to a JSON case file")
      ->required();
  exporter->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand(compute)) return cmd_compute(compute_target, method, json);
    if (app.got_subcommand(verify)) return cmd_verify(verify_all ? std::vector<int>{} : verify_ids);
    if (app.got_subcommand(exporter)) return cmd_export(export_target, format);
  } catch (const CaseFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    print_failures(e.failures());
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
