#pragma once

// Variable-based checker for the dependent fragment (Π, Σ, dependent
// eliminators). The context is one telescope: ↓N variables are persistent,
// Σ- and ∨-typed variables wait for an eliminator, and binding cuts add
// transparent local definitions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqcore/check_prop.hpp"
#include "seqcore/convert.hpp"
#include "seqcore/diagnostic.hpp"
#include "seqcore/print.hpp"
#include "seqcore/sig.hpp"
#include "seqcore/subst.hpp"
#include "seqcore/syntax.hpp"
#include "seqcore/wellformed.hpp"

namespace seqcore {

struct DepEntry {
  Name var;
  PosType type;
};
using DepCtx = std::vector<DepEntry>;

namespace detail {

struct Local {
  Name var;
  PosType type;
  std::optional<DataVal> def;
  // Out of reach inside a focused datum, as Γ is in the propositional rules.
  bool hidden = false;

  bool pending() const { return !hidden && !type.is<Down>(); }
};
using Locals = std::vector<Local>;

}  // namespace detail

class DepChecker {
 public:
  DepChecker(const Sig& sig, CheckOptions opts) : sig_(sig), opts_(std::move(opts)) { opts_.mode = Mode::dependent; }

  static detail::Locals locals(const DepCtx& ctx) {
    detail::Locals out;
    for (const auto& e : ctx) out.push_back({e.var, e.type, std::nullopt, false});
    return out;
  }

  CheckResult term(detail::Locals ctx, const Term& t, const NegType& goal) {
    return std::visit(
        [&](const auto& n) -> CheckResult {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Lam>) {
            auto v = n.pat.template as<PVar>();
            if (!v) return fail(rule::mode, "variable binder", print(n.pat), "dependent mode binds variables only");
            auto p = goal.as<Pi>();
            if (!p) return fail(rule::pi_right, print(goal), "λ-abstraction", "goal is not a Π-type");
            NegType body_goal = subst_data_in_neg(p->res, p->binder, p->arg, var_as_data(v->name, p->arg));
            ctx.push_back({v->name, p->arg, std::nullopt, false});
            return term(std::move(ctx), n.body, body_goal).within(rule::pi_right);
          } else if constexpr (std::is_same_v<T, Pair>) {
            auto w = goal.as<With>();
            if (!w) return fail(rule::with_right, print(goal), "pair ⟨t, u⟩", "goal is not a conjunction");
            if (auto r = term(ctx, n.left, w->left); !r) return std::move(r).within(rule::with_right);
            return term(std::move(ctx), n.right, w->right).within(rule::with_right);
          } else if constexpr (std::is_same_v<T, Done>) {
            if (auto r = no_pending(ctx, rule::done); !r) return r;
            auto u = goal.as<Up>();
            if (!u) return fail(rule::done, print(goal), "done", "goal is not ↑P");
            return data(ctx, n.data, u->body).within(rule::done);
          } else if constexpr (std::is_same_v<T, App>) {
            if (auto r = no_pending(ctx, rule::focus); !r) return r;
            auto head = lookup(ctx, n.head);
            if (!head) return fail(rule::scope, "variable of type ↓N", n.head.text, "unbound variable");
            return spine(std::move(ctx), *head, n.spine, goal).within(rule::focus);
          } else if constexpr (std::is_same_v<T, Split>) {
            return fail(rule::mode, "case on a variable", "split on " + n.label.text,
                        "labelled splits belong to the propositional rules");
          } else if constexpr (std::is_same_v<T, BindCut>) {
            auto v = n.pat.template as<PVar>();
            if (!v) return fail(rule::mode, "variable binder", print(n.pat), "dependent mode binds variables only");
            if (auto r = annotation(ctx, n.type); !r) return r;
            if (auto r = data(focused(ctx), n.data, n.type); !r) return std::move(r).within(rule::bind_cut);
            ctx.push_back({v->name, n.type, n.data, false});
            return term(std::move(ctx), n.body, goal).within(rule::bind_cut);
          } else if constexpr (std::is_same_v<T, AppCut>) {
            if (auto r = annotation(ctx, n.type); !r) return r;
            if (auto r = term(ctx, n.fun, n.type); !r) return std::move(r).within(rule::app_cut);
            return spine(focused(ctx), n.type, n.spine, goal).within(rule::app_cut);
          } else if constexpr (std::is_same_v<T, Case>) {
            return case_of_var(std::move(ctx), n, goal);
          } else {
            return unpair_var(std::move(ctx), n, goal);
          }
        },
        t.get());
  }

  CheckResult data(const detail::Locals& ctx, const DataVal& d, const PosType& goal) {
    if (auto dn = goal.as<Down>()) {
      auto th = d.as<Thunk>();
      if (!th) return fail(rule::thunk, print(goal), describe(d));
      return term(focused(ctx), th->body, dn->body).within(rule::thunk);
    }
    if (auto o = goal.as<Or>()) {
      if (auto l = d.as<Inl>()) return data(ctx, l->body, o->left).within(rule::or_right1);
      if (auto r = d.as<Inr>()) return data(ctx, r->body, o->right).within(rule::or_right2);
      return fail(rule::or_right1, print(goal), describe(d));
    }
    if (auto s = goal.as<Sigma>()) {
      auto dp = d.as<DPair>();
      if (!dp) return fail(rule::sigma_right, print(goal), describe(d));
      if (auto r = data(ctx, dp->left, s->first); !r) return std::move(r).within(rule::sigma_right);
      PosType second = subst_data_in_pos(s->second, s->binder, s->first, dp->left);
      return data(ctx, dp->right, second).within(rule::sigma_right);
    }
    return fail(rule::mode, "dependent type", print(goal), "× belongs to the propositional rules");
  }

  CheckResult spine(detail::Locals ctx, const NegType& focus, const Spine& k, const NegType& goal) {
    if (k.is<Nil>()) return axiom(ctx, focus, goal);
    if (auto c = k.as<Cons>()) {
      auto p = focus.as<Pi>();
      if (!p) {
        if (focus.is<Imp>()) return fail(rule::mode, "Π-type", print(focus), "⊃ belongs to the propositional rules");
        return fail(rule::pi_left, print(focus), "argument", "focus is not a Π-type");
      }
      if (auto r = data(ctx, c->arg, p->arg); !r) return std::move(r).within(rule::pi_left);
      NegType res = subst_data_in_neg(p->res, p->binder, p->arg, c->arg);
      return spine(std::move(ctx), res, c->rest, goal).within(rule::pi_left);
    }
    if (auto p = k.as<Proj1>()) {
      auto w = focus.as<With>();
      if (!w) return fail(rule::with_left1, print(focus), "π1", "focus is not a conjunction");
      return spine(std::move(ctx), w->left, p->rest, goal).within(rule::with_left1);
    }
    if (auto p = k.as<Proj2>()) {
      auto w = focus.as<With>();
      if (!w) return fail(rule::with_left2, print(focus), "π2", "focus is not a conjunction");
      return spine(std::move(ctx), w->right, p->rest, goal).within(rule::with_left2);
    }
    auto kp = k.as<Kappa>();
    auto u = focus.as<Up>();
    if (!u) return fail(rule::blur, print(focus), "κ", "focus is not ↑P");
    auto v = kp->pat.as<PVar>();
    if (!v) return fail(rule::mode, "variable binder", print(kp->pat), "dependent mode binds variables only");
    ctx.push_back({v->name, u->body, std::nullopt, false});
    return term(std::move(ctx), kp->body, goal).within(rule::blur);
  }

  // Unfolds local definitions, innermost first.
  template <class Ty>
  static Ty unfold(const detail::Locals& ctx, Ty ty) {
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
      if (!it->def) continue;
      if constexpr (std::is_same_v<Ty, NegType>) ty = subst_data_in_neg(ty, it->var, it->type, *it->def);
      else ty = subst_data_in_pos(ty, it->var, it->type, *it->def);
    }
    return ty;
  }

  const CheckOptions& options() const { return opts_; }

  CheckResult fail(std::string_view r, std::string expected, std::string found, std::string note = {}) const {
    Diagnostic d = make_diagnostic(r, std::move(expected), std::move(found), std::move(note));
    d.span = opts_.span;
    return d;
  }

  template <class Ty>
  CheckResult annotation(const detail::Locals& ctx, const Ty& ty) const {
    NameSet scope;
    for (const auto& e : ctx) scope.insert(e.var);
    WellFormed w;
    if constexpr (std::is_same_v<Ty, NegType>) w = well_formed_neg(ty, sig_, Mode::dependent, scope);
    else w = well_formed_pos(ty, sig_, Mode::dependent, scope);
    if (w.ok) return CheckResult::success();
    Diagnostic d = w.diagnostics.front();
    d.span = opts_.span;
    return d;
  }

  static detail::Locals focused(detail::Locals ctx) {
    for (auto& e : ctx)
      if (!e.type.is<Down>()) e.hidden = true;
    return ctx;
  }

 private:
  const Sig& sig_;
  CheckOptions opts_;

  CheckResult axiom(const detail::Locals& ctx, const NegType& focus, const NegType& goal) const {
    if (alpha_eq(focus, goal)) return CheckResult::success();
    Conversion c = convert(sig_, unfold(ctx, focus), unfold(ctx, goal), opts_.fuel);
    if (c.out_of_fuel)
      return fail(rule::conversion_fuel, print(goal), print(focus), "normalization ran out of fuel while comparing");
    if (c.equal) return CheckResult::success();
    return fail(rule::conversion, print(goal), print(focus), "types are not convertible");
  }

  CheckResult no_pending(const detail::Locals& ctx, std::string_view r) const {
    for (const auto& e : ctx)
      if (e.pending())
        return fail(r, "no pending assumptions", e.var.text + " : " + print(e.type),
                    "eliminate it with case or let (y, z) first");
    return CheckResult::success();
  }

  std::optional<NegType> lookup(const detail::Locals& ctx, const Name& x) const {
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
      if (it->var != x) continue;
      if (auto d = it->type.as<Down>()) return d->body;
      return std::nullopt;
    }
    if (auto e = sig_.find(x)) return e->type;
    return std::nullopt;
  }

  std::optional<std::size_t> position(const detail::Locals& ctx, const Name& x) const {
    for (std::size_t i = ctx.size(); i-- > 0;)
      if (ctx[i].var == x) return i;
    return std::nullopt;
  }

  // Replaces entry i by `fresh` and substitutes `value` for the old variable
  // in every later entry and in the goal.
  static std::pair<detail::Locals, NegType> motive(const detail::Locals& ctx, std::size_t i,
                                                   std::vector<detail::Local> fresh, const DataVal& value,
                                                   const NegType& goal) {
    const Name x = ctx[i].var;
    const PosType x_type = ctx[i].type;
    detail::Locals out(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto& f : fresh) out.push_back(std::move(f));
    for (std::size_t j = i + 1; j < ctx.size(); ++j) {
      detail::Local e = ctx[j];
      e.type = subst_data_in_pos(e.type, x, x_type, value);
      if (e.def) e.def = subst_data(*e.def, x, x_type, value);
      out.push_back(std::move(e));
    }
    return {std::move(out), subst_data_in_neg(goal, x, x_type, value)};
  }

  // The definition of entry i, looking through variable-to-variable definitions.
  std::optional<DataVal> known(const detail::Locals& ctx, std::size_t i) const {
    std::optional<DataVal> d = ctx[i].def;
    while (d) {
      auto v = d->as<DVar>();
      if (!v) break;
      auto j = position(ctx, v->name);
      if (!j) break;
      d = ctx[*j].def;
    }
    return d;
  }

  CheckResult case_of_var(detail::Locals ctx, const Case& n, const NegType& goal) {
    auto i = position(ctx, n.scrutinee);
    if (!i || ctx[*i].hidden)
      return fail(rule::scope, "assumption " + n.scrutinee.text, "none in context", "case on a variable not at hand");
    auto o = ctx[*i].type.as<Or>();
    if (!o) return fail(rule::or_left, "P ∨ Q", print(ctx[*i].type), "case on " + n.scrutinee.text);
    // A definition by injection selects its branch and defines the branch variable.
    auto def = known(ctx, *i);
    auto l = def ? def->as<Inl>() : nullptr;
    auto rr = def ? def->as<Inr>() : nullptr;
    if (!rr) {
      std::optional<DataVal> ld;
      if (l) ld = l->body;
      auto [lctx, lgoal] =
          motive(ctx, *i, {{n.left_var, o->left, ld, false}}, inl(var_as_data(n.left_var, o->left)), goal);
      if (auto r = term(std::move(lctx), n.left, lgoal); !r || l) return std::move(r).within(rule::or_left);
    }
    std::optional<DataVal> rd;
    if (rr) rd = rr->body;
    auto [rctx, rgoal] =
        motive(ctx, *i, {{n.right_var, o->right, rd, false}}, inr(var_as_data(n.right_var, o->right)), goal);
    return term(std::move(rctx), n.right, rgoal).within(rule::or_left);
  }

  CheckResult unpair_var(detail::Locals ctx, const Unpair& n, const NegType& goal) {
    auto i = position(ctx, n.scrutinee);
    if (!i || ctx[*i].hidden)
      return fail(rule::scope, "assumption " + n.scrutinee.text, "none in context", "unpair of a variable not at hand");
    auto s = ctx[*i].type.as<Sigma>();
    if (!s) {
      if (ctx[*i].type.is<Prod>()) return fail(rule::mode, "Σ-type", print(ctx[*i].type), "× belongs to the propositional rules");
      return fail(rule::sigma_left, "Σ(x : P). Q", print(ctx[*i].type), "unpair of " + n.scrutinee.text);
    }
    DataVal y = var_as_data(n.first, s->first);
    PosType second = subst_data_in_pos(s->second, s->binder, s->first, y);
    DataVal value = dpair(y, var_as_data(n.second, second));
    std::optional<DataVal> d1, d2;
    if (auto def = known(ctx, *i); def && def->is<DPair>()) {
      d1 = def->as<DPair>()->left;
      d2 = def->as<DPair>()->right;
    }
    auto [bctx, bgoal] = motive(ctx, *i, {{n.first, s->first, d1, false}, {n.second, second, d2, false}}, value, goal);
    return term(std::move(bctx), n.body, bgoal).within(rule::sigma_left);
  }
};

inline CheckResult dep_check_term(const Sig& sig, const DepCtx& ctx, const Term& t, const NegType& goal,
                                  const CheckOptions& opts = {}) {
  return DepChecker(sig, opts).term(DepChecker::locals(ctx), t, goal);
}

inline CheckResult dep_check_spine(const Sig& sig, const DepCtx& ctx, const NegType& focus, const Spine& k,
                                   const NegType& goal, const CheckOptions& opts = {}) {
  return DepChecker(sig, opts).spine(DepChecker::focused(DepChecker::locals(ctx)), focus, k, goal);
}

inline CheckResult dep_check_data(const Sig& sig, const DepCtx& ctx, const DataVal& d, const PosType& goal,
                                  const CheckOptions& opts = {}) {
  return DepChecker(sig, opts).data(DepChecker::focused(DepChecker::locals(ctx)), d, goal);
}

// The binding cut as a rule: from Γ ⊢ d : [A] and Γ, x:A, Δ ⊢ t : B
// conclude Γ, Δ{d/x} ⊢ (x = d in t) : B{d/x}.
struct DepBindCut {
  CheckResult result;
  DepCtx ctx;      // Γ, Δ{d/x}
  Term term;       // x : A = d in t
  NegType type;    // B{d/x}
};

inline DepBindCut dep_bind_cut(const Sig& sig, const DepCtx& gamma, const Name& x, const PosType& a, const DataVal& d,
                               const DepCtx& delta, const Term& t, const NegType& b, const CheckOptions& opts = {}) {
  DepChecker c(sig, opts);
  DepCtx out_ctx = gamma;
  for (const auto& e : delta) out_ctx.push_back({e.var, subst_data_in_pos(e.type, x, a, d)});
  DepBindCut out{CheckResult::success(), std::move(out_ctx), bind_cut(pvar(x), d, a, t), subst_data_in_neg(b, x, a, d)};

  NameSet scope;
  for (const auto& e : gamma) scope.insert(e.var);
  for (const auto& y : free_names(d)) {
    if (scope.count(y) || sig.find(y)) continue;
    out.result = c.fail(rule::scope, "data over Γ", y.text, "the cut datum mentions a variable outside Γ");
    return out;
  }
  if (auto r = c.data(DepChecker::focused(DepChecker::locals(gamma)), d, a); !r) {
    out.result = std::move(r).within(rule::bind_cut);
    return out;
  }
  DepCtx premise = gamma;
  premise.push_back({x, a});
  premise.insert(premise.end(), delta.begin(), delta.end());
  out.result = dep_check_term(sig, premise, t, b, opts).within(rule::bind_cut);
  return out;
}

}  // namespace seqcore
