#pragma once

// Small-step cut elimination. One step rewrites the first redex found by a
// head-first, left-to-right walk; the walk continues under binders, so
// normal forms are cut-free.
//
//   R1  (λp.t : P ⊃ N) (d :: k)        ~> (p : P = d in t : N) k
//   R2  (done d : ↑P) (κp.t)           ~> p : P = d in t
//   R3  (⟨t, u⟩ : N ∧ M) (.1 k)         ~> (t : N) k            (.2 symmetric)
//   R4  (t : N) []                     ~> t
//   R5  pattern decomposition of a binding cut
//   R6  x : P = d in t                 ~> t{d/x}
//   R7  spine concatenation, commuting conversions, δ-unfolding

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqcore/print.hpp"
#include "seqcore/sig.hpp"
#include "seqcore/subst.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore {

struct StepResult {
  enum class Kind { stepped, normal_form, stuck };
  Kind kind = Kind::normal_form;
  std::optional<Term> next;
  std::string rule;    // set when stepped
  std::string reason;  // set when stuck

  bool stepped() const { return kind == Kind::stepped; }
  bool normal() const { return kind == Kind::normal_form; }
  bool stuck() const { return kind == Kind::stuck; }
};

namespace detail {

template <class T>
struct Reduct {
  T next;
  std::string rule;
};

class Stepper {
 public:
  explicit Stepper(const Sig& sig) : sig_(sig) {}

  const std::optional<std::string>& stuck_reason() const { return stuck_; }

  std::optional<Reduct<Term>> term(const Term& t) {
    if (auto c = t.as<AppCut>()) return cut(*c);
    if (auto b = t.as<BindCut>()) {
      if (auto r = bind_root(*b)) return r;
      if (auto r = data(b->data)) return Reduct<Term>{bind_cut(b->pat, r->next, b->type, b->body), r->rule};
      if (auto r = term(b->body)) return Reduct<Term>{bind_cut(b->pat, b->data, b->type, r->next), r->rule};
      return std::nullopt;
    }
    if (auto a = t.as<App>()) {
      if (auto e = sig_.find(a->head); e && e->body) return Reduct<Term>{app_cut(freshen(*e->body), e->type, a->spine), "R7"};
      if (auto r = spine(a->spine)) return Reduct<Term>{app(a->head, r->next), r->rule};
      return std::nullopt;
    }
    if (auto d = t.as<Done>()) {
      if (auto r = data(d->data)) return Reduct<Term>{done(r->next), r->rule};
      return std::nullopt;
    }
    if (auto l = t.as<Lam>()) {
      if (auto r = term(l->body)) return Reduct<Term>{lam(l->pat, r->next), r->rule};
      return std::nullopt;
    }
    if (auto p = t.as<Pair>()) {
      if (auto r = term(p->left)) return Reduct<Term>{pair(r->next, p->right), r->rule};
      if (auto r = term(p->right)) return Reduct<Term>{pair(p->left, r->next), r->rule};
      return std::nullopt;
    }
    if (auto s = t.as<Split>()) {
      if (auto r = term(s->left)) return Reduct<Term>{split(s->label, r->next, s->right), r->rule};
      if (auto r = term(s->right)) return Reduct<Term>{split(s->label, s->left, r->next), r->rule};
      return std::nullopt;
    }
    if (auto c = t.as<Case>()) {
      if (auto r = term(c->left)) return Reduct<Term>{case_of(c->scrutinee, c->left_var, r->next, c->right_var, c->right), r->rule};
      if (auto r = term(c->right)) return Reduct<Term>{case_of(c->scrutinee, c->left_var, c->left, c->right_var, r->next), r->rule};
      return std::nullopt;
    }
    auto u = t.as<Unpair>();
    if (auto r = term(u->body)) return Reduct<Term>{unpair(u->first, u->second, u->scrutinee, r->next), r->rule};
    return std::nullopt;
  }

  std::optional<Reduct<DataVal>> data(const DataVal& d) {
    if (auto th = d.as<Thunk>()) {
      if (auto r = term(th->body)) return Reduct<DataVal>{thunk(r->next), r->rule};
    } else if (auto p = d.as<DPair>()) {
      if (auto r = data(p->left)) return Reduct<DataVal>{dpair(r->next, p->right), r->rule};
      if (auto r = data(p->right)) return Reduct<DataVal>{dpair(p->left, r->next), r->rule};
    } else if (auto l = d.as<Inl>()) {
      if (auto r = data(l->body)) return Reduct<DataVal>{inl(r->next), r->rule};
    } else if (auto rr = d.as<Inr>()) {
      if (auto r = data(rr->body)) return Reduct<DataVal>{inr(r->next), r->rule};
    }
    return std::nullopt;
  }

  std::optional<Reduct<Spine>> spine(const Spine& k) {
    if (auto c = k.as<Cons>()) {
      if (auto r = data(c->arg)) return Reduct<Spine>{cons(r->next, c->rest), r->rule};
      if (auto r = spine(c->rest)) return Reduct<Spine>{cons(c->arg, r->next), r->rule};
    } else if (auto p = k.as<Proj1>()) {
      if (auto r = spine(p->rest)) return Reduct<Spine>{proj1(r->next), r->rule};
    } else if (auto p2 = k.as<Proj2>()) {
      if (auto r = spine(p2->rest)) return Reduct<Spine>{proj2(r->next), r->rule};
    } else if (auto kp = k.as<Kappa>()) {
      if (auto r = term(kp->body)) return Reduct<Spine>{kappa(kp->pat, r->next), r->rule};
    }
    return std::nullopt;
  }

 private:
  const Sig& sig_;
  std::optional<std::string> stuck_;

  void block(std::string reason) {
    if (!stuck_) stuck_ = std::move(reason);
  }

  std::optional<Reduct<Term>> cut(const AppCut& c) {
    const Term& f = c.fun;
    const Spine& k = c.spine;
    if (auto inner = f.as<AppCut>())
      return Reduct<Term>{app_cut(inner->fun, inner->type, spine_concat(inner->spine, k, c.type)), "R7"};
    if (auto b = f.as<BindCut>()) {
      if (auto r = bind_root(*b)) return Reduct<Term>{app_cut(r->next, c.type, k), r->rule};
      auto [p, body] = avoid(b->pat, b->body, free_names(k));
      return Reduct<Term>{bind_cut(p, b->data, b->type, app_cut(body, c.type, k)), "R7"};
    }
    if (auto a = f.as<App>()) {
      if (k.is<Nil>()) return Reduct<Term>{f, "R4"};
      return Reduct<Term>{app(a->head, spine_concat(a->spine, k, c.type)), "R7"};
    }
    if (auto s = f.as<Split>())
      return Reduct<Term>{split(s->label, app_cut(s->left, c.type, k), app_cut(s->right, c.type, freshen(k))), "R7"};
    if (auto cs = f.as<Case>()) return commute_case(*cs, c);
    if (auto up = f.as<Unpair>()) return commute_unpair(*up, c);

    if (k.is<Nil>()) return Reduct<Term>{f, "R4"};
    if (auto l = f.as<Lam>()) {
      auto cn = k.as<Cons>();
      if (cn) {
        if (auto im = c.type.as<Imp>())
          return Reduct<Term>{app_cut(bind_cut(l->pat, cn->arg, im->arg, l->body), im->res, cn->rest), "R1"};
        if (auto p = c.type.as<Pi>()) {
          NegType res = subst_data_in_neg(p->res, p->binder, p->arg, cn->arg);
          return Reduct<Term>{app_cut(bind_cut(l->pat, cn->arg, p->arg, l->body), res, cn->rest), "R1"};
        }
      }
    } else if (auto d = f.as<Done>()) {
      auto kp = k.as<Kappa>();
      auto u = c.type.as<Up>();
      if (kp && u) return Reduct<Term>{bind_cut(kp->pat, d->data, u->body, kp->body), "R2"};
    } else if (auto pr = f.as<Pair>()) {
      auto w = c.type.as<With>();
      if (w) {
        if (auto p1 = k.as<Proj1>()) return Reduct<Term>{app_cut(pr->left, w->left, p1->rest), "R3"};
        if (auto p2 = k.as<Proj2>()) return Reduct<Term>{app_cut(pr->right, w->right, p2->rest), "R3"};
      }
    }
    block(describe_clash(f, k));
    return inside(c);
  }

  // Continues the walk inside a cut that cannot fire.
  std::optional<Reduct<Term>> inside(const AppCut& c) {
    if (auto r = term(c.fun)) return Reduct<Term>{app_cut(r->next, c.type, c.spine), r->rule};
    if (auto r = spine(c.spine)) return Reduct<Term>{app_cut(c.fun, c.type, r->next), r->rule};
    return std::nullopt;
  }

  std::optional<Reduct<Term>> commute_case(const Case& cs, const AppCut& c) {
    if (free_names(c.type).count(cs.scrutinee)) {
      block("application cut on a case whose result type depends on " + cs.scrutinee.text);
      return inside(c);
    }
    NameSet fv = free_names(c.spine);
    Name y = cs.left_var, z = cs.right_var;
    Term l = cs.left, r = cs.right;
    if (fv.count(y)) {
      Name ny = fresh_like(y);
      l = Renamer(NameMap{{y, ny}}).term(l);
      y = ny;
    }
    if (fv.count(z)) {
      Name nz = fresh_like(z);
      r = Renamer(NameMap{{z, nz}}).term(r);
      z = nz;
    }
    return Reduct<Term>{case_of(cs.scrutinee, y, app_cut(l, c.type, c.spine), z, app_cut(r, c.type, freshen(c.spine))),
                        "R7"};
  }

  std::optional<Reduct<Term>> commute_unpair(const Unpair& up, const AppCut& c) {
    if (free_names(c.type).count(up.scrutinee)) {
      block("application cut on an unpair whose result type depends on " + up.scrutinee.text);
      return inside(c);
    }
    NameSet fv = free_names(c.spine);
    NameMap clash;
    Name y = up.first, z = up.second;
    for (Name* b : {&y, &z}) {
      if (!fv.count(*b)) continue;
      Name nb = fresh_like(*b);
      clash.emplace(*b, nb);
      *b = nb;
    }
    Term body = clash.empty() ? up.body : Renamer(clash).term(up.body);
    return Reduct<Term>{unpair(y, z, up.scrutinee, app_cut(body, c.type, c.spine)), "R7"};
  }

  // R5/R6 at the root of a binding cut, if its pattern and datum line up.
  std::optional<Reduct<Term>> bind_root(const BindCut& b) {
    const Pattern& p = b.pat;
    const DataVal& d = b.data;
    if (auto v = p.as<PVar>()) return Reduct<Term>{subst_term(b.body, v->name, b.type, d), "R6"};
    if (p.is<PWild>()) return Reduct<Term>{b.body, "R5"};
    if (auto at = p.as<PAt>()) {
      auto [q, body] = avoid(at->left, bind_cut(at->right, freshen(d), b.type, b.body), free_names(d));
      return Reduct<Term>{bind_cut(q, d, b.type, body), "R5"};
    }
    if (d.is<DVar>()) return std::nullopt;
    if (auto pp = p.as<PPair>()) {
      auto dp = d.as<DPair>();
      if (!dp) {
        block("pair pattern against " + print(d));
        return std::nullopt;
      }
      std::optional<std::pair<PosType, PosType>> parts;
      if (auto pr = b.type.as<Prod>()) parts.emplace(pr->left, pr->right);
      if (auto sg = b.type.as<Sigma>())
        parts.emplace(sg->first, subst_data_in_pos(sg->second, sg->binder, sg->first, dp->left));
      if (!parts) {
        block("pair pattern at type " + print(b.type));
        return std::nullopt;
      }
      const auto& [first, second] = *parts;
      auto [q, body] = avoid(pp->left, bind_cut(pp->right, dp->right, second, b.body), free_names(dp->right));
      return Reduct<Term>{bind_cut(q, dp->left, first, body), "R5"};
    }
    auto po = p.as<POr>();
    auto o = b.type.as<Or>();
    if (!o) {
      block("or-pattern at type " + print(b.type));
      return std::nullopt;
    }
    if (auto l = d.as<Inl>()) return Reduct<Term>{bind_cut(po->left, l->body, o->left, select_branch(b.body, po->label, true)), "R5"};
    if (auto r = d.as<Inr>()) return Reduct<Term>{bind_cut(po->right, r->body, o->right, select_branch(b.body, po->label, false)), "R5"};
    block("or-pattern against " + print(d));
    return std::nullopt;
  }

  // Renames binders of `p` that would capture names in `fv`.
  static std::pair<Pattern, Term> avoid(const Pattern& p, const Term& body, const NameSet& fv) {
    NameMap clash;
    for (const auto& b : pattern_binders(p))
      if (fv.count(b)) clash.emplace(b, fresh_like(b));
    if (clash.empty()) return {p, body};
    return {rename_pattern(p, clash), Renamer(clash).term(body)};
  }

  static std::string describe_clash(const Term& f, const Spine& k) {
    std::string what = f.is<Lam>() ? "λ-abstraction" : f.is<Done>() ? "done" : f.is<Pair>() ? "pair" : "term";
    std::string against = k.is<Cons>() ? "an argument" : k.is<Kappa>() ? "κ" : k.is<Nil>() ? "ε" : "a projection";
    return what + " applied to " + against;
  }
};

}  // namespace detail

inline StepResult step(const Sig& sig, const Term& t) {
  detail::Stepper s(sig);
  StepResult out;
  if (auto r = s.term(t)) {
    out.kind = StepResult::Kind::stepped;
    out.next = std::move(r->next);
    out.rule = std::move(r->rule);
  } else if (s.stuck_reason()) {
    out.kind = StepResult::Kind::stuck;
    out.reason = *s.stuck_reason();
  }
  return out;
}

struct TraceStep {
  std::string rule;
  Term term;
};

struct Normalized {
  enum class Status { normal_form, stuck, out_of_fuel };
  Status status = Status::normal_form;
  Term term;
  std::size_t steps = 0;
  std::string reason;
  std::vector<TraceStep> trace;

  bool ok() const { return status != Status::out_of_fuel; }
};

namespace detail {

inline Normalized run(const Sig& sig, Term t, std::size_t fuel, bool record) {
  Normalized out{Normalized::Status::normal_form, t, 0, {}, {}};
  while (true) {
    StepResult r = step(sig, out.term);
    if (r.normal()) return out;
    if (r.stuck()) {
      out.status = Normalized::Status::stuck;
      out.reason = r.reason;
      return out;
    }
    if (out.steps == fuel) {
      out.status = Normalized::Status::out_of_fuel;
      out.reason = "fuel of " + std::to_string(fuel) + " steps exhausted";
      return out;
    }
    out.term = *r.next;
    ++out.steps;
    if (record) out.trace.push_back({r.rule, out.term});
  }
}

}  // namespace detail

inline Normalized normalize(const Sig& sig, const Term& t, std::size_t fuel = default_fuel) {
  return detail::run(sig, t, fuel, false);
}

inline Normalized trace(const Sig& sig, const Term& t, std::size_t fuel = default_fuel) {
  return detail::run(sig, t, fuel, true);
}

struct NormalizedData {
  DataVal data;
  std::size_t steps = 0;
  bool out_of_fuel = false;
};

// Normalizes the terms inside a datum; used by conversion.
inline NormalizedData normalize_data(const Sig& sig, const DataVal& d, std::size_t fuel = default_fuel) {
  NormalizedData out{d};
  while (true) {
    detail::Stepper s(sig);
    auto r = s.data(out.data);
    if (!r) return out;
    if (out.steps == fuel) {
      out.out_of_fuel = true;
      return out;
    }
    out.data = r->next;
    ++out.steps;
  }
}

}  // namespace seqcore
