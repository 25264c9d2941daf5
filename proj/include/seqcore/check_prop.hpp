#pragma once

// Pattern-based checker for the propositional fragment: inversion
// (Ψ | Γ ⊢ t : N), right focus (Ψ ⊨ d : [P]) and left focus
// (Ψ, [N] ⊨ k : M), plus the two cuts.

#include <string>
#include <utility>
#include <vector>

#include "seqcore/alpha.hpp"
#include "seqcore/diagnostic.hpp"
#include "seqcore/print.hpp"
#include "seqcore/sig.hpp"
#include "seqcore/syntax.hpp"
#include "seqcore/wellformed.hpp"

namespace seqcore {

// Persistent variables introduced by the store rule.
struct PsiEntry {
  Name name;
  NegType type;
};
using Psi = std::vector<PsiEntry>;

struct CtxEntry {
  Pattern pat;
  PosType type;
};
using Ctx = std::vector<CtxEntry>;

inline std::string describe(const Term& t) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Done>) return "done";
        else if constexpr (std::is_same_v<T, Lam>) return "λ-abstraction";
        else if constexpr (std::is_same_v<T, App>) return "application of " + n.head.text;
        else if constexpr (std::is_same_v<T, Pair>) return "pair ⟨t, u⟩";
        else if constexpr (std::is_same_v<T, Split>) return "split on " + n.label.text;
        else if constexpr (std::is_same_v<T, BindCut>) return "binding cut";
        else if constexpr (std::is_same_v<T, AppCut>) return "application cut";
        else if constexpr (std::is_same_v<T, Case>) return "case on " + n.scrutinee.text;
        else return "unpair of " + n.scrutinee.text;
      },
      t.get());
}

inline std::string describe(const DataVal& d) {
  if (d.is<Thunk>()) return "thunk";
  if (d.is<DPair>()) return "data pair";
  if (d.is<Inl>()) return "inl";
  if (d.is<Inr>()) return "inr";
  return "variable " + d.as<DVar>()->name.text;
}

inline std::string describe(const Spine& k) {
  if (k.is<Nil>()) return "ε";
  if (k.is<Cons>()) return "argument";
  if (k.is<Proj1>()) return "π1";
  if (k.is<Proj2>()) return "π2";
  return "κ";
}

// Linearity: pattern variables and labels pairwise distinct.
inline bool pattern_linear(const Pattern& p) {
  auto names = pattern_binders(p);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) return false;
  return true;
}

class PropChecker {
 public:
  PropChecker(const Sig& sig, CheckOptions opts) : sig_(sig), opts_(std::move(opts)) {}

  CheckResult term(Psi psi, Ctx ctx, const Term& t, const NegType& goal) {
    // Inversion on the left: decompose everything but or-patterns.
    Ctx deferred;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      CtxEntry e = ctx[i];
      if (auto v = e.pat.as<PVar>()) {
        auto d = e.type.as<Down>();
        if (d) {
          psi.push_back({v->name, d->body});
        } else if (!opts_.structural_patterns) {
          return fail(rule::store, "↓N", print(e.type), "pattern variable " + v->name.text);
        }
        // Otherwise x names a whole positive value it can never consume:
        // an instance of weakening.
      } else if (auto pp = e.pat.as<PPair>()) {
        auto pr = e.type.as<Prod>();
        if (!pr) return fail(rule::prod_left, "P × Q", print(e.type), "pair pattern");
        ctx.push_back({pp->left, pr->left});
        ctx.push_back({pp->right, pr->right});
      } else if (auto at = e.pat.as<PAt>()) {
        if (!opts_.structural_patterns)
          return fail(rule::structural_disabled, "pattern without @", "p@q", "enable structural patterns");
        ctx.push_back({at->left, e.type});
        ctx.push_back({at->right, e.type});
      } else if (e.pat.is<PWild>()) {
        if (!opts_.structural_patterns)
          return fail(rule::structural_disabled, "pattern without _", "_", "enable structural patterns");
      } else {
        if (!e.type.is<Or>()) return fail(rule::or_left, "P ∨ Q", print(e.type), "or-pattern");
        deferred.push_back(e);
      }
    }

    if (auto s = t.as<Split>()) {
      for (std::size_t i = deferred.size(); i-- > 0;) {
        auto po = deferred[i].pat.as<POr>();
        if (po->label != s->label) continue;
        auto ty = deferred[i].type.as<Or>();
        Ctx rest = deferred;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        Ctx left = rest, right = rest;
        left.push_back({po->left, ty->left});
        right.push_back({po->right, ty->right});
        if (auto r = term(psi, left, s->left, goal); !r) return std::move(r).within(rule::or_left);
        return term(psi, right, s->right, goal).within(rule::or_left);
      }
      return fail(rule::or_left, "or-assumption labelled " + s->label.text, "none in context", "split label not at hand");
    }

    return std::visit(
        [&](const auto& n) -> CheckResult {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Lam>) {
            auto im = goal.as<Imp>();
            if (!im) return fail(rule::imp_right, print(goal), "λ-abstraction", "goal is not an implication");
            if (!pattern_linear(n.pat)) return fail(rule::well_formed, "linear pattern", print(n.pat));
            deferred.push_back({n.pat, im->arg});
            return term(psi, deferred, n.body, im->res).within(rule::imp_right);
          } else if constexpr (std::is_same_v<T, Pair>) {
            auto w = goal.as<With>();
            if (!w) return fail(rule::with_right, print(goal), "pair ⟨t, u⟩", "goal is not a conjunction");
            if (auto r = term(psi, deferred, n.left, w->left); !r) return std::move(r).within(rule::with_right);
            return term(psi, deferred, n.right, w->right).within(rule::with_right);
          } else if constexpr (std::is_same_v<T, Done>) {
            if (!deferred.empty()) return pending(deferred, rule::done);
            auto u = goal.as<Up>();
            if (!u) return fail(rule::done, print(goal), "done", "goal is not ↑P");
            return data(psi, n.data, u->body).within(rule::done);
          } else if constexpr (std::is_same_v<T, App>) {
            if (!deferred.empty()) return pending(deferred, rule::focus);
            auto head = lookup(psi, n.head);
            if (!head) return fail(rule::scope, "variable of type ↓N", n.head.text, "unbound variable");
            return spine(psi, *head, n.spine, goal).within(rule::focus);
          } else if constexpr (std::is_same_v<T, BindCut>) {
            if (auto r = annotation(n.type); !r) return r;
            if (!pattern_linear(n.pat)) return fail(rule::well_formed, "linear pattern", print(n.pat));
            if (auto r = data(psi, n.data, n.type); !r) return std::move(r).within(rule::bind_cut);
            deferred.push_back({n.pat, n.type});
            return term(psi, deferred, n.body, goal).within(rule::bind_cut);
          } else if constexpr (std::is_same_v<T, AppCut>) {
            if (auto r = annotation(n.type); !r) return r;
            if (auto r = term(psi, deferred, n.fun, n.type); !r) return std::move(r).within(rule::app_cut);
            return spine(psi, n.type, n.spine, goal).within(rule::app_cut);
          } else if constexpr (std::is_same_v<T, Split>) {
            return CheckResult::success();  // handled above
          } else {
            return fail(rule::mode, "propositional term", describe(t), "variable eliminators need dependent mode");
          }
        },
        t.get());
  }

  CheckResult data(const Psi& psi, const DataVal& d, const PosType& goal) {
    if (auto dn = goal.as<Down>()) {
      auto th = d.as<Thunk>();
      if (!th) return fail(rule::thunk, print(goal), describe(d));
      return term(psi, {}, th->body, dn->body).within(rule::thunk);
    }
    if (auto pr = goal.as<Prod>()) {
      auto dp = d.as<DPair>();
      if (!dp) return fail(rule::prod_right, print(goal), describe(d));
      if (auto r = data(psi, dp->left, pr->left); !r) return std::move(r).within(rule::prod_right);
      return data(psi, dp->right, pr->right).within(rule::prod_right);
    }
    if (auto o = goal.as<Or>()) {
      if (auto l = d.as<Inl>()) return data(psi, l->body, o->left).within(rule::or_right1);
      if (auto r = d.as<Inr>()) return data(psi, r->body, o->right).within(rule::or_right2);
      return fail(rule::or_right1, print(goal), describe(d));
    }
    return fail(rule::mode, "propositional type", print(goal), "Σ needs dependent mode");
  }

  CheckResult spine(const Psi& psi, const NegType& focus, const Spine& k, const NegType& goal) {
    if (k.is<Nil>()) {
      if (alpha_eq(focus, goal)) return CheckResult::success();
      return fail(rule::axiom, print(goal), print(focus), "unfinished spine");
    }
    if (auto c = k.as<Cons>()) {
      auto im = focus.as<Imp>();
      if (!im) return fail(rule::imp_left, print(focus), "argument", "focus is not an implication");
      if (auto r = data(psi, c->arg, im->arg); !r) return std::move(r).within(rule::imp_left);
      return spine(psi, im->res, c->rest, goal).within(rule::imp_left);
    }
    if (auto p = k.as<Proj1>()) {
      auto w = focus.as<With>();
      if (!w) return fail(rule::with_left1, print(focus), "π1", "focus is not a conjunction");
      return spine(psi, w->left, p->rest, goal).within(rule::with_left1);
    }
    if (auto p = k.as<Proj2>()) {
      auto w = focus.as<With>();
      if (!w) return fail(rule::with_left2, print(focus), "π2", "focus is not a conjunction");
      return spine(psi, w->right, p->rest, goal).within(rule::with_left2);
    }
    auto kp = k.as<Kappa>();
    auto u = focus.as<Up>();
    if (!u) return fail(rule::blur, print(focus), "κ", "focus is not ↑P");
    if (!pattern_linear(kp->pat)) return fail(rule::well_formed, "linear pattern", print(kp->pat));
    return term(psi, {{kp->pat, u->body}}, kp->body, goal).within(rule::blur);
  }

 private:
  const Sig& sig_;
  CheckOptions opts_;

  CheckResult fail(std::string_view r, std::string expected, std::string found, std::string note = {}) const {
    Diagnostic d = make_diagnostic(r, std::move(expected), std::move(found), std::move(note));
    d.span = opts_.span;
    return d;
  }

  CheckResult pending(const Ctx& deferred, std::string_view r) const {
    return fail(r, "empty context", print(deferred.front().pat) + " : " + print(deferred.front().type),
                "undischarged or-assumption");
  }

  CheckResult annotation(const PosType& ty) const {
    auto w = well_formed_pos(ty, sig_, Mode::propositional);
    if (w.ok) return CheckResult::success();
    Diagnostic d = w.diagnostics.front();
    d.span = opts_.span;
    return d;
  }
  CheckResult annotation(const NegType& ty) const {
    auto w = well_formed_neg(ty, sig_, Mode::propositional);
    if (w.ok) return CheckResult::success();
    Diagnostic d = w.diagnostics.front();
    d.span = opts_.span;
    return d;
  }

  std::optional<NegType> lookup(const Psi& psi, const Name& x) const {
    for (auto it = psi.rbegin(); it != psi.rend(); ++it)
      if (it->name == x) return it->type;
    if (auto e = sig_.find(x)) return e->type;
    return std::nullopt;
  }
};

inline CheckResult check_term(const Sig& sig, const Ctx& ctx, const Term& t, const NegType& goal,
                              const CheckOptions& opts = {}, const Psi& psi = {}) {
  return PropChecker(sig, opts).term(psi, ctx, t, goal);
}

inline CheckResult check_data(const Sig& sig, const DataVal& d, const PosType& goal, const CheckOptions& opts = {},
                              const Psi& psi = {}) {
  return PropChecker(sig, opts).data(psi, d, goal);
}

inline CheckResult check_spine(const Sig& sig, const NegType& focus, const Spine& k, const NegType& goal,
                               const CheckOptions& opts = {}, const Psi& psi = {}) {
  return PropChecker(sig, opts).spine(psi, focus, k, goal);
}

}  // namespace seqcore
