#pragma once

// Clause sets to core terms. Each argument is bound by one pattern that
// decomposes its type completely; the splitting tree becomes nested splits,
// and every or-label still undecided at a leaf is split there as well.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seqcore/alpha.hpp"
#include "seqcore/depify.hpp"
#include "seqcore/sig.hpp"
#include "seqcore/subst.hpp"
#include "seqcore/surface/case_tree.hpp"

namespace seqcore::surface {

// What a surface variable stands for while elaborating a right-hand side.
struct Binding {
  std::optional<Name> local;  // a variable of Ψ, when the position has a ↓ type
  NegType local_type = atom("?");
  std::optional<DataVal> data;  // otherwise the data rebuilt from its parts
  PosType data_type = down(atom("?"));
};

using Env = std::map<std::string, Binding>;

// Right-hand sides with thunk/ε/done coercions inserted.
class Elaborator {
 public:
  Elaborator(const Sig& sig, const Env& env) : sig_(sig), env_(env) {}

  Term term(const Expr& e, const NegType& goal) {
    if (auto a = e.as<EApp>()) {
      auto b = env_.find(a->head);
      if (b != env_.end() && b->second.data) {
        auto u = goal.as<Up>();
        if (!a->args.empty() || !u) mismatch(e, print(goal), print(b->second.data_type), a->span);
        return done(data(e, u->body));
      }
      auto [head, ty] = head_of(*a);
      std::vector<DataVal> args;
      for (const auto& x : a->args) {
        if (auto i = ty.as<Imp>()) {
          args.push_back(data(x, i->arg));
          ty = i->res;
        } else if (auto p = ty.as<Pi>()) {
          args.push_back(data(x, p->arg));
          ty = subst_data_in_neg(p->res, p->binder, p->arg, args.back());
        } else {
          compile_fail(rule::elaborate, "function type", print(ty), a->span, "too many arguments for " + a->head);
        }
      }
      if (alpha_eq(ty, goal)) {
        Spine k = nil();
        for (auto it = args.rbegin(); it != args.rend(); ++it) k = cons(*it, k);
        return app(head, k);
      }
      if (auto u = goal.as<Up>()) return done(data(e, u->body));
      mismatch(e, print(goal), print(ty), a->span);
    }
    if (auto p = e.as<EPair>(); p && goal.is<With>()) {
      auto w = goal.as<With>();
      return pair(term(p->left, w->left), term(p->right, w->right));
    }
    if (auto u = goal.as<Up>()) return done(data(e, u->body));
    mismatch(e, print(goal), "data", {});
  }

  DataVal data(const Expr& e, const PosType& ty) {
    if (auto a = e.as<EApp>()) {
      auto b = env_.find(a->head);
      if (b != env_.end() && b->second.data && a->args.empty()) {
        if (!alpha_eq(b->second.data_type, ty)) mismatch(e, print(ty), print(b->second.data_type), a->span);
        return *b->second.data;
      }
      if (auto d = ty.as<Down>()) return thunk(term(e, d->body));
      mismatch(e, print(ty), "an application", a->span, "only ↓ positions may hold computations");
    }
    if (auto d = ty.as<Down>()) return thunk(term(e, d->body));
    if (auto o = ty.as<Or>()) {
      if (auto l = e.as<EInl>()) return inl(data(l->body, o->left));
      if (auto r = e.as<EInr>()) return inr(data(r->body, o->right));
    }
    if (auto p = e.as<EPair>()) {
      if (auto pr = ty.as<Prod>()) return dpair(data(p->left, pr->left), data(p->right, pr->right));
      if (auto sg = ty.as<Sigma>()) {
        DataVal first = data(p->left, sg->first);
        return dpair(first, data(p->right, subst_data_in_pos(sg->second, sg->binder, sg->first, first)));
      }
    }
    mismatch(e, print(ty), render(e), {});
  }

  static std::string render(const Expr& e) {
    if (auto a = e.as<EApp>()) {
      std::string out = a->head;
      for (const auto& x : a->args) {
        std::string s = render(x);
        bool atomic = x.is<EPair>() || (x.is<EApp>() && x.as<EApp>()->args.empty());
        out += " " + (atomic ? s : "(" + s + ")");
      }
      return out;
    }
    if (auto p = e.as<EPair>()) return "(" + render(p->left) + ", " + render(p->right) + ")";
    auto wrap = [](const Expr& x) {
      std::string s = render(x);
      bool atomic = x.is<EPair>() || (x.is<EApp>() && x.as<EApp>()->args.empty());
      return atomic ? s : "(" + s + ")";
    };
    if (auto l = e.as<EInl>()) return "inl " + wrap(l->body);
    return "inr " + wrap(e.as<EInr>()->body);
  }

 private:
  const Sig& sig_;
  const Env& env_;

  std::pair<Name, NegType> head_of(const EApp& a) const {
    if (auto b = env_.find(a.head); b != env_.end()) return {*b->second.local, b->second.local_type};
    if (auto g = sig_.find(a.head)) return {g->name, g->type};
    compile_fail(rule::scope, "a bound variable or declared name", a.head, a.span);
  }

  [[noreturn]] static void mismatch(const Expr& e, std::string expected, std::string found, Span span,
                                    std::string note = {}) {
    if (note.empty()) note = "in " + render(e);
    compile_fail(rule::elaborate, std::move(expected), std::move(found), std::move(span), std::move(note));
  }
};

struct Compiled {
  Term term;
  CaseTree tree;
  std::vector<Warning> warnings;
};

namespace detail {

inline void collect_vars(const Pat& p, std::vector<std::string>& out) {
  if (auto v = p.as<SVar>()) out.push_back(v->name);
  if (auto a = p.as<SAs>()) {
    out.push_back(a->name);
    collect_vars(a->body, out);
  }
  if (auto pr = p.as<SPair>()) {
    collect_vars(pr->left, out);
    collect_vars(pr->right, out);
  }
  if (auto l = p.as<SInl>()) collect_vars(l->body, out);
  if (auto r = p.as<SInr>()) collect_vars(r->body, out);
}

class Emitter {
 public:
  Emitter(const Sig& sig, const Decl& decl, std::vector<PosType> args, NegType result)
      : sig_(sig), decl_(decl), args_(std::move(args)), result_(std::move(result)) {}

  Term emit(const CaseTree& tree) {
    name_positions();
    std::vector<Pattern> pats;
    for (std::size_t i = 0; i < args_.size(); ++i) pats.push_back(pattern(Occ{i, {}}));
    Term body = node(tree, {});
    for (auto it = pats.rbegin(); it != pats.rend(); ++it) body = lam(*it, body);
    return body;
  }

 private:
  const Sig& sig_;
  const Decl& decl_;
  std::vector<PosType> args_;
  NegType result_;
  std::map<Occ, Name> names_;  // variable of each ↓ position, label of each ∨ position

  PosType type_of(const Occ& o) const { return *type_at(args_, o); }

  // Names ↓ positions after the first clause variable bound there.
  void name_positions() {
    std::map<Occ, std::string> hints;
    std::function<void(const Pat&, const Occ&)> walk = [&](const Pat& p, const Occ& o) {
      if (auto v = p.as<SVar>()) hints.emplace(o, v->name);
      if (auto a = p.as<SAs>()) {
        hints.emplace(o, a->name);
        walk(a->body, o);
      }
      if (auto pr = p.as<SPair>()) {
        walk(pr->left, o + Step::fst);
        walk(pr->right, o + Step::snd);
      }
      if (auto l = p.as<SInl>()) walk(l->body, o + Step::inl);
      if (auto r = p.as<SInr>()) walk(r->body, o + Step::inr);
    };
    for (const auto& c : decl_.clauses)
      for (std::size_t i = 0; i < c.lhs.size(); ++i) walk(c.lhs[i], Occ{i, {}});
    std::function<void(const Occ&)> assign = [&](const Occ& o) {
      PosType ty = type_of(o);
      if (ty.is<Down>()) {
        auto h = hints.find(o);
        names_.emplace(o, fresh(h == hints.end() ? "u" : h->second));
      } else if (ty.is<Or>()) {
        names_.emplace(o, fresh("w"));
        assign(o + Step::inl);
        assign(o + Step::inr);
      } else {
        assign(o + Step::fst);
        assign(o + Step::snd);
      }
    };
    for (std::size_t i = 0; i < args_.size(); ++i) assign(Occ{i, {}});
  }

  Pattern pattern(const Occ& o) {
    PosType ty = type_of(o);
    if (ty.is<Down>()) return pvar(names_.at(o));
    if (ty.is<Or>()) return por(names_.at(o), pattern(o + Step::inl), pattern(o + Step::inr));
    return ppair(pattern(o + Step::fst), pattern(o + Step::snd));
  }

  // Or positions that are live under `dec` but not yet decided, outermost first.
  std::optional<Occ> pending(const Decisions& dec) const {
    std::optional<Occ> best;
    std::function<void(const Occ&)> walk = [&](const Occ& o) {
      PosType ty = type_of(o);
      if (ty.is<Down>()) return;
      if (ty.is<Or>()) {
        auto it = dec.find(o);
        if (it == dec.end()) {
          if (!best || o.path.size() < best->path.size()) best = o;
          return;
        }
        walk(o + (it->second ? Step::inl : Step::inr));
        return;
      }
      walk(o + Step::fst);
      walk(o + Step::snd);
    };
    for (std::size_t i = 0; i < args_.size(); ++i) walk(Occ{i, {}});
    return best;
  }

  DataVal rebuild(const Occ& o, const Decisions& dec) const {
    PosType ty = type_of(o);
    if (ty.is<Down>()) return thunk(app(names_.at(o), nil()));
    if (ty.is<Or>()) {
      bool left = dec.at(o);
      DataVal inner = rebuild(o + (left ? Step::inl : Step::inr), dec);
      return left ? inl(inner) : inr(inner);
    }
    return dpair(rebuild(o + Step::fst, dec), rebuild(o + Step::snd, dec));
  }

  Term node(const CaseTree& t, const Decisions& dec) {
    if (t.kind == CaseTree::pair) return node(t.children[0], dec);
    if (t.kind == CaseTree::split) {
      Decisions l = dec, r = dec;
      l[t.occ] = true;
      r[t.occ] = false;
      return split(names_.at(t.occ), node(t.children[0], l), node(t.children[1], r));
    }
    if (t.kind == CaseTree::fail) compile_fail(rule::coverage, "exhaustive clauses", "a missing case", decl_.span);
    if (auto o = pending(dec)) {
      Decisions l = dec, r = dec;
      l[*o] = true;
      r[*o] = false;
      return split(names_.at(*o), node(t, l), node(t, r));
    }
    Env env;
    for (const auto& [x, o] : t.bindings) {
      Binding b;
      PosType ty = type_of(o);
      if (auto d = ty.as<Down>()) {
        b.local = names_.at(o);
        b.local_type = d->body;
      } else {
        b.data = rebuild(o, dec);
        b.data_type = ty;
      }
      env[x] = b;
    }
    return Elaborator(sig_, env).term(decl_.clauses[t.clause].rhs, result_);
  }
};

}  // namespace detail

// Splits a function type into its first `n` argument types and the rest.
inline std::pair<std::vector<PosType>, NegType> peel(const NegType& ty, std::size_t n, const Span& span) {
  std::vector<PosType> args;
  NegType rest = ty;
  while (args.size() < n) {
    if (auto i = rest.as<Imp>()) {
      args.push_back(i->arg);
      rest = i->res;
    } else if (auto p = rest.as<Pi>()) {
      args.push_back(p->arg);
      rest = p->res;
    } else {
      compile_fail(rule::elaborate, "at most " + std::to_string(args.size()) + " patterns", std::to_string(n), span,
                   "the type has fewer arguments than the clauses");
    }
  }
  return {std::move(args), rest};
}

inline Compiled compile_clauses(const Decl& decl, const NegType& type, const Sig& sig, Mode mode = Mode::propositional) {
  if (decl.clauses.empty()) compile_fail(rule::declaration, "at least one clause", "none", decl.span, "use postulate");
  for (const auto& c : decl.clauses) {
    std::vector<std::string> vars;
    for (const auto& p : c.lhs) detail::collect_vars(p, vars);
    std::sort(vars.begin(), vars.end());
    if (auto it = std::adjacent_find(vars.begin(), vars.end()); it != vars.end())
      compile_fail(rule::elaborate, "linear patterns", *it + " bound twice", c.span);
  }
  auto [args, result] = peel(type, decl.clauses.front().lhs.size(), decl.span);
  TreeResult tr = build_case_tree(decl.clauses, args, decl.span);
  if (tr.missing)
    compile_fail(rule::coverage, "exhaustive clauses", "no clause for " + decl.name + " " + *tr.missing, decl.span,
                 "missing case " + *tr.missing);
  Compiled out{detail::Emitter(sig, decl, args, result).emit(tr.tree), tr.tree, {}};
  if (mode == Mode::dependent) out.term = depify(out.term);

  std::set<std::size_t> used;
  tr.tree.leaves(used);
  for (std::size_t j = 0; j < decl.clauses.size(); ++j) {
    const Clause& c = decl.clauses[j];
    if (!used.count(j)) {
      out.warnings.push_back({"unused-clause", c.span, "clause " + std::to_string(j + 1) + " of " + decl.name + " is never reached"});
      continue;
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (overlaps(decl.clauses[i].lhs, c.lhs)) {
        out.warnings.push_back({"overlap", c.span,
                                "clause " + std::to_string(j + 1) + " of " + decl.name + " overlaps clause " +
                                    std::to_string(i + 1) + "; the first match wins"});
        break;
      }
    }
  }
  return out;
}

}  // namespace seqcore::surface
