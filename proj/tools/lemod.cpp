#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lemod/cli.hpp"

using namespace lemod;
using namespace lemod::cli;

namespace {

Format parse_format(const std::string& s) {
  if (s == "structured") return Format::Structured;
  if (s == "dot") return Format::Dot;
  return Format::Text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lemod: prime spectra of finite le-modules"};
  app.require_subcommand(1);

  std::string out_path, format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output to this file");
    sub->add_option("--format", format, "text, structured or dot")
        ->check(CLI::IsMember({"text", "structured", "dot"}));
  };

  std::string input;
  auto* validate = app.add_subcommand("validate", "check a descriptor against the le-module axioms");
  validate->add_option("input", input, "descriptor file or catalog name")->required();
  add_common(validate);

  auto* spec = app.add_subcommand("spec", "list Spec(M), colon ideals, Spec(R/Ann(M)) and psi");
  spec->add_option("input", input, "descriptor file or catalog name")->required();
  add_common(spec);

  std::string which;
  auto* topology = app.add_subcommand("topology", "closed sets and separation flags of a topology on Spec(M)");
  topology->add_option("input", input, "descriptor file or catalog name")->required();
  topology->add_option("--which", which, "star, prime or quasi")
      ->default_val("star")
      ->check(CLI::IsMember({"star", "prime", "quasi"}));
  add_common(topology);

  std::vector<std::string> inputs;
  bool use_catalog = false, timing = false;
  auto* verify = app.add_subcommand("verify", "run every statement check and write a report");
  verify->add_option("inputs", inputs, "descriptor files or catalog names");
  verify->add_flag("--catalog", use_catalog, "include the whole default catalog");
  verify->add_flag("--timing", timing, "include per-check timings (makes output nondeterministic)");
  add_common(verify);

  std::string target;
  auto* dot = app.add_subcommand("export-dot", "Graphviz export of the lattice or the specialization order");
  dot->add_option("input", input, "descriptor file or catalog name")->required();
  dot->add_option("--which", target, "lattice or specialization")
      ->default_val("lattice")
      ->check(CLI::IsMember({"lattice", "specialization"}));
  add_common(dot);

  auto* cat = app.add_subcommand("catalog", "inspect the default catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "print instance names");
  add_common(cat_list);
  std::string name;
  auto* cat_show = cat->add_subcommand("show", "print an instance as a descriptor");
  cat_show->add_option("name", name)->required();
  add_common(cat_show);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::input_error;
  }

  const Format fmt = parse_format(format);
  CommandResult r;
  if (*validate) {
    r = cmd_validate(input, fmt);
  } else if (*spec) {
    r = cmd_spec(input, fmt);
  } else if (*topology) {
    const auto kind = which == "quasi" ? TopologyKind::Quasi
                      : which == "prime" ? TopologyKind::Prime
                                         : TopologyKind::Star;
    r = cmd_topology(input, kind, fmt);
  } else if (*verify) {
    r = cmd_verify(inputs, use_catalog, fmt, timing);
  } else if (*dot) {
    r = cmd_export_dot(input, target);
  } else if (*cat_list) {
    r = cmd_catalog_list(fmt);
  } else if (*cat_show) {
    r = cmd_catalog_show(name);
  }
  r = emit(std::move(r), out_path);
  if (r.exit_code == exit_code::input_error || r.exit_code == exit_code::axiom_violation)
    std::cerr << r.output;
  else
    std::cout << r.output;
  return r.exit_code;
}
