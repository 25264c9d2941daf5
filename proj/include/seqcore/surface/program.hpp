#pragma once

// Whole `.seq` files: declarations enter the signature in file order, each
// definition is compiled and then typechecked at its declared type.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqcore/check_dep.hpp"
#include "seqcore/check_prop.hpp"
#include "seqcore/eval.hpp"
#include "seqcore/surface/compile.hpp"
#include "seqcore/surface/parse.hpp"
#include "seqcore/surface/polarize.hpp"
#include "seqcore/surface/pretty.hpp"
#include "seqcore/wellformed.hpp"

namespace seqcore::surface {

struct CompiledDecl {
  Decl source;
  std::optional<NegType> type;  // absent for atoms
  std::optional<Term> term;     // definitions only
};

struct Program {
  Sig sig;
  std::vector<CompiledDecl> decls;
  std::vector<Diagnostic> errors;
  std::vector<Warning> warnings;
  bool parse_failed = false;

  bool ok() const { return errors.empty(); }
};

struct ProgramOptions {
  Mode mode = Mode::propositional;
  bool structural_patterns = false;
  std::size_t fuel = default_fuel;
};

inline CheckResult check_at(const Sig& sig, const Term& t, const NegType& ty, const ProgramOptions& opts, Span span) {
  CheckOptions co;
  co.mode = opts.mode;
  co.structural_patterns = opts.structural_patterns;
  co.fuel = opts.fuel;
  co.span = std::move(span);
  if (opts.mode == Mode::dependent) return dep_check_term(sig, {}, t, ty, co);
  return check_term(sig, {}, t, ty, co);
}

inline Program compile_program(std::string_view src, const std::string& file = {}, const ProgramOptions& opts = {}) {
  Program prog;
  std::vector<Decl> decls;
  try {
    decls = parse(src, file);
  } catch (const ParseError& e) {
    prog.parse_failed = true;
    prog.errors.push_back(e.diagnostic());
    return prog;
  }
  for (const auto& d : decls) {
    CompiledDecl out{d, std::nullopt, std::nullopt};
    auto report = [&](Diagnostic diag) {
      if (diag.span.line == 0) diag.span = d.span;
      prog.errors.push_back(std::move(diag));
    };
    try {
      if (d.kind == Decl::atom) {
        prog.sig.declare_atom(d.name);
        prog.decls.push_back(std::move(out));
        continue;
      }
      NegType ty = polarize(*d.type, opts.mode);
      if (auto wf = well_formed_neg(ty, prog.sig, opts.mode); !wf.ok) {
        for (auto& diag : wf.diagnostics) report(diag);
        continue;
      }
      out.type = ty;
      if (d.kind == Decl::definition) {
        Compiled c = compile_clauses(d, ty, prog.sig, opts.mode);
        prog.warnings.insert(prog.warnings.end(), c.warnings.begin(), c.warnings.end());
        if (auto r = check_at(prog.sig, c.term, ty, opts, d.span); !r) {
          report(r.diagnostic());
          continue;
        }
        out.term = c.term;
      }
      prog.sig.add({global(d.name), ty, out.term, d.span});
      prog.decls.push_back(std::move(out));
    } catch (const CompileError& e) {
      report(e.diag);
    } catch (const std::invalid_argument& e) {
      report(make_diagnostic(rule::declaration, "a fresh name", d.name, e.what()));
    }
  }
  return prog;
}

// An entry point applied to at most one argument, ready to normalize.
struct Invocation {
  std::optional<Term> term;
  NegType type = atom("?");
  std::optional<Diagnostic> error;
};

inline Invocation invoke(const Program& prog, const std::string& entry, const std::optional<Expr>& arg,
                         const ProgramOptions& opts = {}) {
  Invocation out;
  const SigEntry* e = prog.sig.find(entry);
  if (!e) {
    out.error = make_diagnostic(rule::scope, "a declared name", entry, "unknown entry point");
    return out;
  }
  try {
    if (!arg) {
      out.term = app(e->name, nil());
      out.type = e->type;
    } else {
      auto [args, rest] = peel(e->type, 1, e->span);
      DataVal d = Elaborator(prog.sig, {}).data(*arg, args[0]);
      out.term = app(e->name, cons(d, nil()));
      out.type = rest;
      if (auto p = e->type.as<Pi>()) out.type = subst_data_in_neg(p->res, p->binder, p->arg, d);
    }
  } catch (const CompileError& err) {
    out.error = err.diag;
    out.term.reset();
    return out;
  }
  if (auto r = check_at(prog.sig, *out.term, out.type, opts, {}); !r) {
    out.error = r.diagnostic();
    out.term.reset();
  }
  return out;
}

}  // namespace seqcore::surface
