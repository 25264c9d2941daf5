#pragma once

// Translation of propositional terms into the variable-based dependent
// syntax: ⊃ becomes a vacuous Π, × a vacuous Σ, deep patterns become
// `let (y, z) = x` and `case x` eliminators placed where the original
// decomposition or labelled split happened.

#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "seqcore/sig.hpp"
#include "seqcore/subst.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore {

inline NegType depify(const NegType& ty);

inline PosType depify(const PosType& ty) {
  if (auto d = ty.as<Down>()) return down(depify(d->body));
  if (auto o = ty.as<Or>()) return disj(depify(o->left), depify(o->right));
  if (auto p = ty.as<Prod>()) return sigma(fresh("_"), depify(p->left), depify(p->right));
  auto s = ty.as<Sigma>();
  return sigma(s->binder, depify(s->first), depify(s->second));
}

inline NegType depify(const NegType& ty) {
  if (ty.is<Atom>()) return ty;
  if (auto u = ty.as<Up>()) return up(depify(u->body));
  if (auto i = ty.as<Imp>()) return pi(fresh("_"), depify(i->arg), depify(i->res));
  if (auto w = ty.as<With>()) return with(depify(w->left), depify(w->right));
  auto p = ty.as<Pi>();
  return pi(p->binder, depify(p->arg), depify(p->res));
}

namespace detail {

class Depifier {
 public:
  Term term(const Term& t) {
    if (auto d = t.as<Done>()) return done(data(d->data));
    if (auto l = t.as<Lam>()) {
      Name v = var_for(l->pat);
      return lam(pvar(v), bind(l->pat, v, [&] { return term(l->body); }));
    }
    if (auto a = t.as<App>()) return app(a->head, spine(a->spine));
    if (auto p = t.as<Pair>()) return pair(term(p->left), term(p->right));
    if (auto s = t.as<Split>()) {
      auto it = labels_.find(s->label);
      if (it == labels_.end()) return split(s->label, term(s->left), term(s->right));
      auto [v, lp, rp] = it->second;
      split_.insert(s->label);
      Name y = var_for(lp), z = var_for(rp);
      Term l = bind(lp, y, [&] { return term(s->left); });
      Term r = bind(rp, z, [&] { return term(s->right); });
      return case_of(v, y, l, z, r);
    }
    if (auto b = t.as<BindCut>()) {
      Name v = var_for(b->pat);
      return bind_cut(pvar(v), data(b->data), depify(b->type), bind(b->pat, v, [&] { return term(b->body); }));
    }
    if (auto c = t.as<AppCut>()) return app_cut(term(c->fun), depify(c->type), spine(c->spine));
    throw std::invalid_argument("depify: term is already in dependent form");
  }

  DataVal data(const DataVal& d) {
    if (auto th = d.as<Thunk>()) return thunk(term(th->body));
    if (auto p = d.as<DPair>()) return dpair(data(p->left), data(p->right));
    if (auto l = d.as<Inl>()) return inl(data(l->body));
    if (auto r = d.as<Inr>()) return inr(data(r->body));
    return d;
  }

  Spine spine(const Spine& k) {
    if (auto c = k.as<Cons>()) return cons(data(c->arg), spine(c->rest));
    if (auto p = k.as<Proj1>()) return proj1(spine(p->rest));
    if (auto p = k.as<Proj2>()) return proj2(spine(p->rest));
    if (auto kp = k.as<Kappa>()) {
      Name v = var_for(kp->pat);
      return kappa(pvar(v), bind(kp->pat, v, [&] { return term(kp->body); }));
    }
    return k;
  }

 private:
  struct Deferred {
    Name var;
    Pattern left, right;
  };
  std::unordered_map<Name, Deferred, NameHash> labels_;
  std::unordered_set<Name, NameHash> split_;

  static Name var_for(const Pattern& p) {
    if (auto v = p.as<PVar>()) return v->name;
    if (p.is<PAt>() || p.is<PWild>()) throw std::invalid_argument("depify: structural patterns have no dependent form");
    return fresh("v");
  }

  // Destructures variable v according to p around the body built by k.
  Term bind(const Pattern& p, const Name& v, const std::function<Term()>& k) {
    if (p.is<PVar>()) return k();
    if (auto pp = p.as<PPair>()) {
      Name y = var_for(pp->left), z = var_for(pp->right);
      return unpair(y, z, v, bind(pp->left, y, [&] { return bind(pp->right, z, k); }));
    }
    if (auto po = p.as<POr>()) {
      labels_.insert_or_assign(po->label, Deferred{v, po->left, po->right});
      Term body = k();
      if (!split_.count(po->label))
        throw std::invalid_argument("depify: or-pattern " + po->label.text + " is never split");
      return body;
    }
    throw std::invalid_argument("depify: structural patterns have no dependent form");
  }
};

}  // namespace detail

inline Term depify(const Term& t) { return detail::Depifier{}.term(t); }
inline DataVal depify(const DataVal& d) { return detail::Depifier{}.data(d); }

inline Sig depify(const Sig& sig) {
  Sig out;
  for (const auto& [a, arity] : sig.atoms()) out.declare_atom(a, arity);
  for (const auto& e : sig.entries()) {
    SigEntry d = e;
    d.type = depify(e.type);
    if (e.body) d.body = depify(*e.body);
    out.add(std::move(d));
  }
  return out;
}

}  // namespace seqcore
