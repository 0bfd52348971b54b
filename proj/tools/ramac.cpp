// ramac: ramification invariants and normal basis criterion checks for
// Artin-Schreier towers over F_q((t)).
#include <CLI11.hpp>
#include <iostream>

#include "ramac/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact ramification and normal-basis computations over F_q((t))"};
  app.require_subcommand(1);

  ramac::RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec) sub->add_option("--spec", cfg.spec_path, "tower spec JSON path")->required();
    sub->add_option("--json", cfg.json_path, "write the JSON report to this path");
    sub->add_option("--format", cfg.format, "stdout format: table|json")
        ->check(CLI::IsMember({"table", "json"}));
  };

  auto* ramify = app.add_subcommand("ramify", "breaks, different exponent, Herbrand data");
  add_common(ramify, true);

  auto* euler = app.add_subcommand("euler", "Euler dual-basis trace table");
  add_common(euler, true);

  auto* check = app.add_subcommand("check", "classify one element");
  check->add_option("expr", cfg.expr, "element expression, e.g. \"t*x1\"")->required();
  add_common(check, true);

  auto* verify = app.add_subcommand("verify", "randomized criterion verification + sharpness");
  verify->add_option("--trials", cfg.trials, "number of class-r* samples");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  add_common(verify, true);

  auto* tideal = app.add_subcommand("trace-ideal", "trace image of fractional ideals");
  tideal->add_option("--k-min", cfg.k_min, "window start");
  tideal->add_option("--k-max", cfg.k_max, "window end");
  add_common(tideal, true);

  auto* counter = app.add_subcommand("counterexample", "tame/unramified necessity demonstrations");
  counter->add_option("kind", cfg.counter_kind, "tame|unramified")
      ->required()
      ->check(CLI::IsMember({"tame", "unramified"}));
  counter->add_option("--q", cfg.q, "residue field size");
  counter->add_option("--e", cfg.e, "tame degree (kind=tame)");
  counter->add_option("--f", cfg.f, "unramified degree (kind=unramified)");
  counter->add_option("--i-min", cfg.i_min, "first valuation");
  counter->add_option("--i-max", cfg.i_max, "last valuation");
  add_common(counter, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (ramify->parsed()) cfg.command = ramac::RunConfig::Command::Ramify;
  if (euler->parsed()) cfg.command = ramac::RunConfig::Command::Euler;
  if (check->parsed()) cfg.command = ramac::RunConfig::Command::Check;
  if (verify->parsed()) cfg.command = ramac::RunConfig::Command::Verify;
  if (tideal->parsed()) cfg.command = ramac::RunConfig::Command::TraceIdeal;
  if (counter->parsed()) cfg.command = ramac::RunConfig::Command::Counterexample;

  return ramac::run(cfg, std::cout, std::cerr);
}
