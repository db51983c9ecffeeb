#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fortdesign/commands.hpp"

namespace {

using fortdesign::cli::kExitInputError;

// "-" reads standard input.
std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") {
    return std::make_unique<std::istream>(std::cin.rdbuf());
  }
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) return nullptr;
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Existence of Top-designs on infinite Fort spaces"};
  app.require_subcommand(1);

  std::string format_name = "record";
  app.add_option("--format", format_name, "Output format: text or record")
      ->check(CLI::IsMember({"text", "record"}));

  std::string query_path;
  auto* decide = app.add_subcommand("decide", "Decide whether a design exists for a query");
  decide->add_option("query", query_path, "Query file, or - for stdin")->required();
  decide->fallthrough();

  fortdesign::cli::VerifyOptions verify_options;
  auto* verify =
      app.add_subcommand("verify", "Check the witness family on the countable model");
  verify->add_option("query", query_path, "Query file, or - for stdin")->required();
  verify->add_option("probes", verify_options.probes,
                     "Concrete copies of C such as fin:0,2 or cofin:3");
  verify->add_option("--cutoff", verify_options.cutoff, "Saturation bound for block counts")
      ->capture_default_str();
  verify->add_flag("--refutation-demo", verify_options.refutation_demo,
                   "Check ClassW(D) even when no design exists");
  verify->fallthrough();

  fortdesign::SweepOptions sweep_options;
#ifdef FORTDESIGN_INJECT_FAULT
  sweep_options.inject_fault = true;
#endif
  auto* crosscheck =
      app.add_subcommand("crosscheck", "Sweep the descriptor grid for inconsistencies");
  crosscheck->add_option("--grid-max-aleph", sweep_options.max_aleph, "Largest aleph index of X")
      ->capture_default_str()
      ->check(CLI::Range(0u, fortdesign::kDefaultMaxAlephIndex));
  crosscheck->add_option("--grid-max-finite", sweep_options.max_finite,
                         "Largest finite size in the grid")
      ->capture_default_str()
      ->check(CLI::Range(0u, 64u));
  crosscheck->add_flag("--finite-only", sweep_options.finite_only,
                       "Restrict C and D to finite sizes");
  crosscheck->fallthrough();

  std::string instance_path;
  fortdesign::cli::BruteOptions brute_options;
  std::uint32_t t = 0;
  auto* brute = app.add_subcommand("brute", "Brute-force λ on a finite instance");
  brute->add_option("instance", instance_path, "Instance file, or - for stdin")->required();
  auto* t_option = brute->add_option("--t", t, "Size of the copies of C (overrides the file)");
  brute->add_option("--type", brute_options.type, "Design type 1-4")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));
  brute->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  const auto format = fortdesign::cli::parse_output_format(format_name);

  if (*crosscheck) {
    return fortdesign::cli::cmd_crosscheck(sweep_options, format, std::cout, std::cerr);
  }

  const std::string& path = *brute ? instance_path : query_path;
  auto input = open_input(path);
  if (!input) {
    std::cerr << "error: cannot open " << path << '\n';
    return kExitInputError;
  }
  if (*decide) {
    return fortdesign::cli::cmd_decide(*input, format, std::cout, std::cerr);
  }
  if (*verify) {
    verify_options.format = format;
    return fortdesign::cli::cmd_verify(*input, verify_options, std::cout, std::cerr);
  }
  brute_options.format = format;
  if (*t_option) brute_options.t = t;
  return fortdesign::cli::cmd_brute(*input, brute_options, std::cout, std::cerr);
}
