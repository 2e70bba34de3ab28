#include <iostream>

#include "CLI11.hpp"
#include "lexstate/cli.hpp"

int main(int argc, char** argv) {
  using namespace lexstate::cli;
  CLI::App app{"Exact checks for lattice-ordered algebras, their states and hyperstates"};
  app.require_subcommand(1);

  Command cmd;
  std::string format = "json";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--window", cmd.window, "coordinate bound for symbolic windows")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_flag("--no-timing", cmd.no_timing, "omit the timing field");
  };

  struct Verb {
    const char* name;
    const char* help;
    const char* args;
  };
  const Verb verbs[] = {
      {"validate", "run the axiom validator for the structure in FILE", "FILE"},
      {"skeleton", "Boolean skeleton of an IBP0-algebra", "ALGEBRA"},
      {"radical", "radical and coradical of an IBP0-algebra", "ALGEBRA"},
      {"decompose", "skeleton/radical decomposition of elements", "ALGEBRA [ELEMENT...]"},
      {"grothendieck", "lattice-ordered envelope of an l-monoid or semihoop", "STRUCTURE"},
      {"states", "states of a semihoop; validates STATE if given", "SEMIHOOP [STATE]"},
      {"hyperstate", "split, join or validate a hyperstate", "MODE ALGEBRA HYPERSTATE"},
      {"corpus", "write the corpus documents and fixtures", "DIRECTORY"},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    common(sub);
    sub->add_option("args", cmd.args, v.args)->required();
    if (std::string(v.name) == "validate") {
      auto* ibp0 = sub->add_flag("--ibp0", "MTL axioms plus (DL) and (Inv) (default for algebras)");
      sub->add_flag("--mtl", cmd.mtl_only, "MTL axioms only")->excludes(ibp0);
    }
    sub->callback([&cmd, sub] { cmd.verb = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }
  cmd.format = format == "tsv" ? Format::tsv : Format::json;
  const RunReport report = run(cmd);
  std::cout << report.text;
  return report.exit_code;
}
