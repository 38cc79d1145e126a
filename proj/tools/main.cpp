#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chowcert/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact contact degrees, Chow semistability and "
               "approximation-threshold certificates"};
  app.require_subcommand(1);

  chowcert::RunConfig config;
  std::string out_path;
  int m_max = 0;

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input)
      cmd->add_option("--input", config.input_path, "configuration file")
          ->required();
    cmd->add_option("--out", out_path, "write the result document here");
    cmd->add_option("--jobs", config.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    return cmd;
  };

  auto* contact = add_common(app.add_subcommand(
      "contact", "contact degree, degree and limit mean weight of a flag"));
  contact->add_option("--m-max", m_max, "largest graded piece to sample");
  auto* semistable = add_common(app.add_subcommand(
      "semistable", "Chow semistability verdict of a weighted flag"));
  semistable->add_option("--m-max", m_max, "largest graded piece to sample");
  auto* destabilize = add_common(app.add_subcommand(
      "destabilize", "search coordinate flags for a destabilizing one"));
  destabilize->add_option("--m-max", m_max, "largest graded piece to sample");
  destabilize->add_option("--weight-bound", config.weight_bound,
                          "largest weight entry to scan");
  add_common(app.add_subcommand(
      "multiplicity", "colength, multiplicity and chain invariants"));
  auto* certify = add_common(app.add_subcommand(
      "certify", "evaluate a threshold certificate"));
  certify->add_option("theorem", config.theorem, "certificate id")->required();
  add_common(app.add_subcommand("heights", "height data of a rational point"));
  auto* search = add_common(app.add_subcommand(
      "search", "bounded-height solutions of an approximation system"));
  search->add_option("--height-bound", config.height_bound,
                     "parameter coordinate bound")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  if (m_max > 0)
    config.m_max = m_max;

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return chowcert::exit_bad_input;
    }
    return chowcert::run(config, out, std::cerr);
  }
  return chowcert::run(config, std::cout, std::cerr);
}
