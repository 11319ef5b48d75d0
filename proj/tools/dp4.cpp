// Command-line front door: classification queries, group operations,
// line-orbit reports, surface verification, trace-form dumps.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dp4/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"quartic del Pezzo automorphism machinery"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit JSON instead of text");

  std::optional<std::string> field, profile;
  auto* classify = app.add_subcommand("classify", "maximal classes for a field profile");
  classify->add_option("--field", field, "named field: Q, Q(i), Q(eps3), Q(sqrt5), Q(sqrt2)");
  classify->add_option("--profile", profile,
                       "profile like i=yes,eps3=no,sqrt5=no,s2s=yes or all-true/all-false");

  std::string gens, group_op, group_arg;
  auto* group = app.add_subcommand("group", "operations on subgroups of W(D5)");
  group->add_option("generators", gens, "comma-separated element words, e.g. \"c4c5,(123)\"")
      ->required();
  group->add_option("op", group_op,
                    "order|centralizer|image-s5|kernel|is-split|conjugate-into")
      ->required();
  group->add_option("arg", group_arg, "class name for conjugate-into");

  std::string scenario;
  auto* lines = app.add_subcommand("lines", "Galois orbits of the 16 lines");
  lines->add_option("--scenario", scenario, "scenario JSON file")->required();

  std::string surface_name;
  bool verify = false;
  auto* surface = app.add_subcommand("surface", "catalog surfaces");
  surface->add_option("name", surface_name, "c2|c4|s3-split|d5|c23-semidirect|c23-nonsplit")
      ->required();
  surface->add_flag("--verify", verify, "run all checks for the record");

  std::string minpoly, pcoeffs, lambda;
  auto* traceform = app.add_subcommand("traceform", "pencil from a degree-5 polynomial");
  traceform->add_option("--minpoly", minpoly, "base field minimal polynomial, low->high");
  traceform->add_option("--p", pcoeffs, "monic separable degree-5 polynomial, low->high")
      ->required();
  traceform->add_option("--lambda", lambda, "twisting element, degree < 5");

  CLI11_PARSE(app, argc, argv);

  dp4::Report report;
  if (classify->parsed())
    report = dp4::cmd_classify(field, profile);
  else if (group->parsed())
    report = dp4::cmd_group(gens, group_op, group_arg);
  else if (lines->parsed())
    report = dp4::cmd_lines(scenario);
  else if (surface->parsed())
    report = dp4::cmd_surface(surface_name, verify);
  else if (traceform->parsed())
    report = dp4::cmd_traceform(minpoly, pcoeffs, lambda);

  if (json_mode)
    std::cout << report.json.dump(2) << "\n";
  else
    std::cout << report.text;
  return report.exit_code;
}
