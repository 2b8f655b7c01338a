#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using opde::cli::CliConfig;

  CLI::App app{"Exact orthogonal polynomial solutions of bivariate hypergeometric equations"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "json";
  std::string out_path;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--pde", cfg.pde_source, "Equation coefficients as JSON (file or -)");
    sub->add_option("--alpha", cfg.alpha, "Appell alpha as p/q (used without --pde)");
    sub->add_option("--beta", cfg.beta, "Appell beta as p/q (used without --pde)");
    sub->add_option("-N", cfg.N, "Degree bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "json, latex or pretty")
        ->check(CLI::IsMember({"json", "latex", "pretty"}));
    sub->add_option("--out", out_path, "Write the report to a file");
  };

  auto* check = app.add_subcommand("check", "Admissibility and self-adjointness report");
  auto* classify = app.add_subcommand("classify", "Weight-factor classification");
  auto* build = app.add_subcommand("build", "Build a family and its matrices");
  auto* rodrigues = app.add_subcommand("rodrigues", "Evaluate the Rodrigues formula");
  auto* verify = app.add_subcommand("verify", "Run every identity suite");
  for (auto* sub : {check, classify, build, rodrigues, verify}) add_common(sub);
  for (auto* sub : {classify, rodrigues, verify}) {
    sub->add_option("--weight", cfg.weight_source, "Weight as JSON {u, v, factors}");
  }
  for (auto* sub : {build, verify}) {
    sub->add_option("--family", cfg.family, "monic, appell-F or koornwinder")
        ->check(CLI::IsMember({"monic", "appell-F", "koornwinder"}));
  }
  verify->add_option("--inject-fault", cfg.inject_fault, "Corrupt one matrix: <suite>:<n>:<axis>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : opde::cli::kParseError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = opde::cli::parse_format(format);

  if (out_path.empty()) return opde::cli::run(cfg, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return opde::cli::kParseError;
  }
  return opde::cli::run(cfg, out, std::cerr);
}
