#pragma once

// Surface types to polarized core types with the fewest shifts.

#include <string>
#include <utility>
#include <vector>

#include "seqcore/sig.hpp"
#include "seqcore/surface/ast.hpp"

namespace seqcore::surface {

inline bool positive(const Type& ty) {
  if (auto b = ty.as<TBin>()) return b->op != TBin::with;
  if (auto b = ty.as<TBinder>()) return b->kind == TBinder::sigma;
  return false;
}

namespace detail {

class Polarizer {
 public:
  explicit Polarizer(Mode mode) : mode_(mode) {}

  NegType neg(const Type& ty) {
    if (positive(ty)) return up(pos(ty));
    if (auto a = ty.as<TAtom>()) return atom(a->name);
    if (auto f = ty.as<TArrow>()) {
      PosType arg = pos(f->arg);
      NegType res = neg(f->res);
      if (mode_ == Mode::dependent) return pi(fresh("_"), arg, res);
      return imp(arg, res);
    }
    if (auto b = ty.as<TBin>()) return with(neg(b->left), neg(b->right));
    auto b = ty.as<TBinder>();
    PosType arg = pos(b->bound);
    Name x = fresh(b->var);
    return pi(x, arg, neg(b->body));
  }

  PosType pos(const Type& ty) {
    if (!positive(ty)) return down(neg(ty));
    if (auto b = ty.as<TBin>()) {
      PosType l = pos(b->left);
      PosType r = pos(b->right);
      if (b->op == TBin::sum) return disj(l, r);
      if (mode_ == Mode::dependent) return sigma(fresh("_"), l, r);
      return prod(l, r);
    }
    auto b = ty.as<TBinder>();
    PosType first = pos(b->bound);
    Name x = fresh(b->var);
    return sigma(x, first, pos(b->body));
  }

 private:
  Mode mode_;
};

}  // namespace detail

inline NegType polarize(const Type& ty, Mode mode = Mode::propositional) { return detail::Polarizer(mode).neg(ty); }
inline PosType polarize_pos(const Type& ty, Mode mode = Mode::propositional) { return detail::Polarizer(mode).pos(ty); }

// Surface rendering of a polarized type; shifts are implicit.
std::string unpolarize(const NegType& ty);
std::string unpolarize(const PosType& ty);

namespace detail {

inline bool arrow_like(const NegType& ty) { return ty.is<Imp>() || ty.is<Pi>(); }

inline std::string neg_operand(const NegType& ty) {
  if (ty.is<Atom>()) return unpolarize(ty);
  if (auto u = ty.as<Up>(); u && u->body.is<Down>()) return unpolarize(ty);
  return "(" + unpolarize(ty) + ")";
}

// The domain of an arrow; binders and arrows extend rightwards.
inline std::string domain(const PosType& ty) {
  std::string s = unpolarize(ty);
  auto d = ty.as<Down>();
  auto sg = ty.as<Sigma>();
  if ((d && arrow_like(d->body)) || (sg && sg->binder.text != "_")) return "(" + s + ")";
  return s;
}

inline std::string pos_operand(const PosType& ty) {
  if (auto d = ty.as<Down>(); d && d->body.is<Atom>()) return unpolarize(ty);
  return "(" + unpolarize(ty) + ")";
}

}  // namespace detail

inline std::string unpolarize(const NegType& ty) {
  if (auto a = ty.as<Atom>()) return a->name;
  if (auto u = ty.as<Up>()) return unpolarize(u->body);
  if (auto i = ty.as<Imp>()) return detail::domain(i->arg) + " -> " + unpolarize(i->res);
  if (auto w = ty.as<With>()) return detail::neg_operand(w->left) + " /\\ " + detail::neg_operand(w->right);
  auto p = ty.as<Pi>();
  if (p->binder.text == "_") return detail::domain(p->arg) + " -> " + unpolarize(p->res);
  return "Pi (" + p->binder.text + " : " + unpolarize(p->arg) + "). " + unpolarize(p->res);
}

inline std::string unpolarize(const PosType& ty) {
  if (auto d = ty.as<Down>()) return unpolarize(d->body);
  if (auto o = ty.as<Or>()) return detail::pos_operand(o->left) + " + " + detail::pos_operand(o->right);
  if (auto p = ty.as<Prod>()) return detail::pos_operand(p->left) + " * " + detail::pos_operand(p->right);
  auto s = ty.as<Sigma>();
  if (s->binder.text == "_") return detail::pos_operand(s->first) + " * " + detail::pos_operand(s->second);
  return "Sigma (" + s->binder.text + " : " + unpolarize(s->first) + "). " + unpolarize(s->second);
}

}  // namespace seqcore::surface
