// menon: verification sweeps for gcd-weighted Dirichlet character sums.
//
//   menon verify <identity> [--n-max N] [--s 1,2,3] [--tolerance T] [--format F] [--jobs J]
//   menon remark [--format F]
//   menon search [--n-max N] [--s 2] [--format F] [--jobs J]
//   menon char-table <n> [--format csv|json]
//
// Exit codes: 0 all expectations met, 1 unexpected identity violation or
// integrity failure, 2 usage or configuration error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "menon/errors.hpp"
#include "menon/harness.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<unsigned> default_s(menon::Identity id) {
  using menon::Identity;
  switch (id) {
    case Identity::sury: return {2, 3};
    case Identity::theorem1:
    case Identity::theorem2:
    case Identity::lemma31:
    case Identity::lemma33:
    case Identity::lemma34:
    case Identity::cohen_partition: return {1, 2, 3};
    default: return {1};
  }
}

const std::vector<std::string> kFormats = {"text", "csv", "json"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive checks of gcd-weighted Dirichlet character sum identities"};
  app.require_subcommand(1);

  std::vector<std::string> identities;
  for (auto id : {menon::Identity::menon, menon::Identity::sury, menon::Identity::zhao_cao, menon::Identity::theorem1,
                  menon::Identity::theorem2, menon::Identity::lemma31, menon::Identity::lemma33,
                  menon::Identity::lemma34, menon::Identity::cohen_partition})
    identities.emplace_back(menon::to_string(id));

  std::string identity_name;
  menon::u64 n_max = 100;
  std::vector<unsigned> s_values;
  double tolerance = 1e-6;
  std::string format_name = "text";
  unsigned jobs = 1;
  menon::u64 table_modulus = 0;

  auto* verify = app.add_subcommand("verify", "Sweep one identity over its full parameter grid");
  verify->add_option("identity", identity_name, "Identity to verify")->required()->check(CLI::IsMember(identities));
  verify->add_option("--n-max", n_max, "Largest modulus in the sweep")->capture_default_str();
  verify->add_option("--s", s_values, "Comma-separated s values")->delimiter(',');
  verify->add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();
  verify->add_option("--format", format_name, "text, csv or json")->check(CLI::IsMember(kFormats));
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  auto* remark = app.add_subcommand("remark", "Reproduce the n=4, s=2 counterexample (expected failure)");
  remark->add_option("--format", format_name, "text, csv or json")->check(CLI::IsMember(kFormats));

  menon::u64 search_n_max = 36;
  auto* search = app.add_subcommand("search", "List every counterexample to the unrestricted statement");
  search->add_option("--n-max", search_n_max, "Largest modulus")->capture_default_str();
  search->add_option("--s", s_values, "Comma-separated s values (default 2)")->delimiter(',');
  search->add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();
  search->add_option("--format", format_name, "text, csv or json")->check(CLI::IsMember(kFormats));
  search->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  auto* table = app.add_subcommand("char-table", "Dump every character mod n with its values at 0..n-1");
  table->add_option("n", table_modulus, "Modulus")->required();
  table->add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  menon::OutputFormat format = *menon::parse_format(format_name);
  try {
    if (*verify) {
      const menon::Identity identity = *menon::parse_identity(identity_name);
      menon::SweepConfig cfg;
      cfg.identity = identity;
      cfg.n_max = n_max;
      cfg.s_values = s_values.empty() ? default_s(identity) : s_values;
      cfg.tolerance = tolerance;
      cfg.output = format;
      cfg.parallelism = jobs;
      const auto report = menon::run_sweep(cfg);
      std::cout << menon::format_report(report, format);
      return menon::expectations_met(report) ? 0 : kExitViolation;
    }
    if (*remark) {
      const auto report = menon::reproduce_remark();
      std::cout << menon::format_report(report, format);
      return 0;
    }
    if (*search) {
      const auto report = menon::search_counterexamples(search_n_max, s_values.empty() ? std::vector<unsigned>{2} : s_values,
                                                         jobs, tolerance);
      std::cout << menon::format_report(report, format);
      return 0;
    }
    if (*table) {
      if (table->count("--format") == 0) format = menon::OutputFormat::csv;
      std::cout << menon::format_char_table(table_modulus, format);
      return 0;
    }
  } catch (const menon::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
