#include <CLI11.hpp>
#include <iostream>

#include "periods/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "periods: exact Deligne-period monomials for tensor products of pure\n"
      "motives given as combinatorial Hodge data, with randomized exact\n"
      "verification against Kronecker period realizations"};
  app.require_subcommand(1);

  periods::cli::JobConfig cfg;
  std::string motive_a, motive_b, type_spec;
  std::string variant = "auto";
  std::string format = "json";

  auto add_common = [&](CLI::App* sub, bool needs_b) {
    sub->add_option("--motive-a,-a", motive_a,
                    "first motive: file path, '-' for stdin, or inline JSON")
        ->required();
    auto* b = sub->add_option("--motive-b,-b", motive_b,
                              "second motive: file path, '-' for stdin, or inline JSON");
    if (needs_b) b->required();
    sub->add_option("--trials", cfg.trials, "oracle trials per check");
    sub->add_option("--seed", cfg.seed, "64-bit seed");
    sub->add_option("--variant", variant, "exponent variant: ledger|theorem|auto");
    sub->add_option("--format", format, "output format: json|text");
    sub->add_option("--bound", cfg.bound, "entry bound for sampled matrices");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "Betti splits, tensor profile, criticality and the a-counts");
  add_common(analyze, false);
  auto* formula =
      app.add_subcommand("formula", "emit the predicted period monomials");
  add_common(formula, true);
  auto* verify = app.add_subcommand(
      "verify", "verify the period monomials against random realizations");
  add_common(verify, true);
  auto* ratio = app.add_subcommand(
      "ratio", "verify the c+/c- ratio relation against random realizations");
  add_common(ratio, true);
  auto* discover = app.add_subcommand(
      "discover", "fit the monomial exponents from samples and confirm exactly");
  add_common(discover, true);

  auto* inv = app.add_subcommand(
      "invariant", "construct the invariant polynomial of an admissibility type");
  inv->add_option("--type,-t", type_spec,
                  "admissibility type: file path, '-' for stdin, or inline JSON")
      ->required();
  inv->add_option("--format", format, "output format: json|text");

  CLI11_PARSE(app, argc, argv);

  using periods::cli::Command;
  if (analyze->parsed()) cfg.command = Command::Analyze;
  if (formula->parsed()) cfg.command = Command::Formula;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (ratio->parsed()) cfg.command = Command::Ratio;
  if (discover->parsed()) cfg.command = Command::Discover;
  if (inv->parsed()) cfg.command = Command::Invariant;

  if (!motive_a.empty()) cfg.motive_a = motive_a;
  if (!motive_b.empty()) cfg.motive_b = motive_b;
  if (!type_spec.empty()) cfg.type_spec = type_spec;

  if (variant == "ledger")
    cfg.variant = periods::cli::VariantMode::Ledger;
  else if (variant == "theorem")
    cfg.variant = periods::cli::VariantMode::Theorem;
  else if (variant == "auto")
    cfg.variant = periods::cli::VariantMode::Auto;
  else {
    std::cerr << "unknown variant: " << variant << "\n";
    return 1;
  }

  if (format == "text")
    cfg.format = periods::cli::Format::Text;
  else if (format != "json") {
    std::cerr << "unknown format: " << format << "\n";
    return 1;
  }

  periods::cli::RunResult res = periods::cli::run(cfg);
  std::cout << res.output;
  return res.exit_code;
}
