// seqcore: batch driver for `.seq` programs.
//
//   seqcore check FILE            typecheck every declaration
//   seqcore core FILE             print the compiled core program
//   seqcore run FILE --entry f    normalize f, optionally applied to --arg
//   seqcore trace FILE --entry f  run and print every reduction step
//
// Exit codes: 0 success, 1 type or coverage error, 2 parse error,
// 3 fuel exhausted, 4 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "seqcore/read.hpp"
#include "seqcore/surface/program.hpp"

namespace {

using namespace seqcore;
using namespace seqcore::surface;

enum Exit { ok = 0, type_error = 1, parse_error = 2, out_of_fuel = 3, usage = 4 };

struct RunConfig {
  std::string command;
  std::string file;
  std::string entry;
  std::optional<std::string> arg;
  bool dependent = false;
  bool structural_patterns = false;
  bool trace = false;
  std::optional<std::size_t> fuel;
};

std::size_t fuel_of(const RunConfig& cfg) {
  if (cfg.fuel) return *cfg.fuel;
  if (const char* env = std::getenv("SEQCORE_FUEL")) {
    try {
      std::size_t n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "WARNING ignoring SEQCORE_FUEL=" << env << "\n";
  }
  return default_fuel;
}

int report(const Program& prog) {
  for (const auto& w : prog.warnings) std::cerr << w.render() << "\n";
  for (const auto& e : prog.errors) std::cerr << e.render() << "\n";
  if (prog.parse_failed) return parse_error;
  return prog.ok() ? ok : type_error;
}

int run(const RunConfig& cfg, const Program& prog, const ProgramOptions& opts) {
  std::optional<Expr> arg;
  if (cfg.arg) {
    try {
      arg = parse_expr(*cfg.arg);
    } catch (const ParseError& e) {
      std::cerr << e.diagnostic().render() << "\n";
      return parse_error;
    }
  }
  if (!prog.sig.find(cfg.entry)) {
    std::cerr << "unknown entry point " << cfg.entry << "\n";
    return usage;
  }
  Invocation inv = invoke(prog, cfg.entry, arg, opts);
  if (inv.error) {
    std::cerr << inv.error->render() << "\n";
    return type_error;
  }
  bool show_trace = cfg.trace || cfg.command == "trace";
  Normalized n = show_trace ? trace(prog.sig, *inv.term, opts.fuel) : normalize(prog.sig, *inv.term, opts.fuel);
  if (show_trace) {
    std::cout << "    " << print(*inv.term) << "\n";
    std::size_t i = 0;
    for (const auto& s : n.trace) std::cout << ++i << " " << s.rule << "  " << print(s.term) << "\n";
  }
  switch (n.status) {
    case Normalized::Status::normal_form:
      std::cout << print(n.term) << "\n";
      return ok;
    case Normalized::Status::out_of_fuel:
      std::cerr << "ERROR fuel exhausted after " << n.steps << " steps\n";
      return out_of_fuel;
    case Normalized::Status::stuck:
      std::cerr << "ERROR stuck: " << n.reason << "\n";
      return type_error;
  }
  return type_error;
}

int dispatch(const RunConfig& cfg) {
  std::ifstream in(cfg.file);
  if (!in) {
    std::cerr << "cannot read " << cfg.file << "\n";
    return usage;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  ProgramOptions opts;
  opts.mode = cfg.dependent ? Mode::dependent : Mode::propositional;
  opts.structural_patterns = cfg.structural_patterns;
  opts.fuel = fuel_of(cfg);
  Program prog = compile_program(ss.str(), cfg.file, opts);
  if (int code = report(prog); code != ok) return code;

  if (cfg.command == "check") {
    std::cout << "ok (" << prog.decls.size() << " declarations)\n";
    return ok;
  }
  if (cfg.command == "core") {
    std::cout << print_program(prog.sig);
    return ok;
  }
  return run(cfg, prog, opts);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"seqcore: equational programs compiled to a focused sequent calculus"};
  app.require_subcommand(1);
  struct Command {
    const char* name;
    const char* help;
    bool needs_entry;
  };
  for (const Command& s : {Command{"check", "typecheck all declarations", false}, Command{"core", "print compiled core syntax", false},
                        Command{"run", "normalize an entry point", true}, Command{"trace", "normalize and show every step", true}}) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", cfg.file, "program (.seq)")->required();
    sub->add_flag("--dependent", cfg.dependent, "use the dependent rules");
    sub->add_flag("--structural-patterns", cfg.structural_patterns, "accept p@q and _ in core patterns");
    sub->add_option("--fuel", cfg.fuel, "reduction step bound")->check(CLI::PositiveNumber);
    if (s.needs_entry) {
      sub->add_option("--entry", cfg.entry, "definition to normalize")->required();
      sub->add_option("--arg", cfg.arg, "surface expression for the first argument");
      sub->add_flag("--trace", cfg.trace, "print every reduction step");
    }
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  return dispatch(cfg);
}
