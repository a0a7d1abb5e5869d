#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "symrad/errors.hpp"
#include "symrad_tools/driver.hpp"

namespace {

using namespace symrad::cli;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string read_target(const std::string& target) {
  if (target == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (std::filesystem::is_regular_file(target)) {
    std::ifstream in(target);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return target;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radical solutions of polynomial equations with hidden symmetry"};
  app.require_subcommand(1);

  std::string text;
  std::string unknowns;
  std::vector<std::string> params;
  std::string as_iterate;
  std::string format = "text";
  int precision = 15;
  std::uint64_t seed = symrad::kDefaultSeed;
  int samples = 20;
  double tol = 1e-9;
  bool no_verify = false;
  std::string which = "1,2,3";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--precision", precision, "Significant digits for numeric output (15..40)")
        ->check(CLI::Range(15, 40));
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--seed", seed, "Seed for randomized verification");
  };

  auto* solve = app.add_subcommand("solve", "Solve an equation or a two-equation system");
  solve->add_option("text", text, "Equation(s), e.g. \"(x^3+a)^3+a=x\" or \"x^2+y^2=a; x*y=b\"")->required();
  solve->add_option("--unknowns", unknowns, "Comma-separated unknowns (default: x,y)");
  solve->add_option("--param", params, "Parameter binding name=value (exact \"5\", \"-3/2\" or decimal \"7.0\")");
  solve->add_option("--as-iterate", as_iterate, "Treat the equation as f(f(x)) = x for f=<expr>");
  solve->add_option("--samples", samples, "Verification samples (0 skips verification)")->check(CLI::Range(0, 10000));
  solve->add_option("--tol", tol, "Relative residual tolerance");
  solve->add_flag("--no-verify", no_verify, "Skip verification");
  add_common(solve);

  auto* problems = app.add_subcommand("testproblems", "Run the built-in parameter grid");
  problems->add_option("--which", which, "Comma-separated subset of 1,2,3");
  problems->add_option("--samples", samples, "Verification samples per row (0 skips)")->check(CLI::Range(0, 10000));
  add_common(problems);

  std::string target;
  auto* verify = app.add_subcommand("verify", "Verify a machine-format report, or solve and verify an input");
  verify->add_option("target", target, "Report file, '-' for stdin, or equation text")->required();
  verify->add_option("--param", params, "Parameter binding name=value");
  verify->add_option("--unknowns", unknowns, "Comma-separated unknowns");
  verify->add_option("--samples", samples, "Number of random parameter samples")->check(CLI::Range(1, 10000));
  verify->add_option("--tol", tol, "Relative residual tolerance");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    SolveOptions options;
    if (!unknowns.empty()) options.unknowns = split_list(unknowns);
    for (const auto& p : params) options.params.push_back(parse_binding(p));
    if (!as_iterate.empty()) {
      const auto eq = as_iterate.find('=');
      options.as_iterate = eq == std::string::npos ? as_iterate : as_iterate.substr(eq + 1);
    }
    options.precision = precision;
    options.seed = seed;
    options.samples = samples;
    options.tol = tol;

    if (*solve) {
      options.verify = !no_verify && samples > 0;
      const SolveReport report = cmd_solve(text, options);
      std::cout << (format == "machine" ? render_machine(report) : render_text(report));
      return exit_status(report);
    }
    if (*problems) {
      std::vector<int> subset;
      for (const auto& w : split_list(which)) {
        const int n = std::stoi(w);
        if (n < 1 || n > 3) throw symrad::DomainError("--which takes problem numbers 1, 2 and 3");
        subset.push_back(n);
      }
      const auto rows = cmd_testproblems(subset, precision, samples, seed);
      std::cout << (format == "machine" ? render_testproblems_machine(rows) : render_testproblems_text(rows));
      for (const auto& r : rows) {
        if (!r.error.empty() || (r.verified && !*r.verified)) return kExitFailed;
      }
      return samples > 0 ? kExitVerified : kExitUnverified;
    }
    const std::string content = read_target(target);
    const auto first = content.find_first_not_of(" \t\r\n");
    const VerifyOutcome outcome = first != std::string::npos && content[first] == '{'
                                      ? cmd_verify_report(content, options)
                                      : cmd_verify_input(content, options);
    std::cout << outcome.text;
    return outcome.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_status(e);
  }
}
