#pragma once

// Definitional equality of types: normalize every embedded datum, then
// compare up to alpha-renaming.

#include <cstddef>
#include <type_traits>
#include <vector>

#include "seqcore/alpha.hpp"
#include "seqcore/eval.hpp"
#include "seqcore/sig.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore {

struct Conversion {
  bool equal = false;
  bool out_of_fuel = false;

  explicit operator bool() const { return equal; }
};

namespace detail {

class TypeNormalizer {
 public:
  TypeNormalizer(const Sig& sig, std::size_t fuel) : sig_(sig), fuel_(fuel) {}

  bool out_of_fuel() const { return out_of_fuel_; }

  NegType neg(const NegType& ty) {
    if (auto a = ty.as<Atom>()) {
      std::vector<DataVal> args;
      for (const auto& d : a->args) args.push_back(data(d));
      return atom(a->name, std::move(args));
    }
    if (auto u = ty.as<Up>()) return up(pos(u->body));
    if (auto i = ty.as<Imp>()) return imp(pos(i->arg), neg(i->res));
    if (auto w = ty.as<With>()) return with(neg(w->left), neg(w->right));
    auto p = ty.as<Pi>();
    return pi(p->binder, pos(p->arg), neg(p->res));
  }

  PosType pos(const PosType& ty) {
    if (auto d = ty.as<Down>()) return down(neg(d->body));
    if (auto o = ty.as<Or>()) return disj(pos(o->left), pos(o->right));
    if (auto p = ty.as<Prod>()) return prod(pos(p->left), pos(p->right));
    auto s = ty.as<Sigma>();
    return sigma(s->binder, pos(s->first), pos(s->second));
  }

  DataVal data(const DataVal& d) {
    auto r = normalize_data(sig_, d, fuel_);
    fuel_ -= r.steps;
    if (r.out_of_fuel) out_of_fuel_ = true;
    return r.data;
  }

 private:
  const Sig& sig_;
  std::size_t fuel_;
  bool out_of_fuel_ = false;
};

template <class Ty>
Conversion convert_impl(const Sig& sig, const Ty& a, const Ty& b, std::size_t fuel) {
  if (alpha_eq(a, b)) return {true, false};
  TypeNormalizer n(sig, fuel);
  auto norm = [&](const Ty& ty) {
    if constexpr (std::is_same_v<Ty, NegType>) return n.neg(ty);
    else return n.pos(ty);
  };
  Ty na = norm(a);
  Ty nb = norm(b);
  if (n.out_of_fuel()) return {false, true};
  return {alpha_eq(na, nb), false};
}

}  // namespace detail

inline Conversion convert(const Sig& sig, const NegType& a, const NegType& b, std::size_t fuel = default_fuel) {
  return detail::convert_impl(sig, a, b, fuel);
}

inline Conversion convert(const Sig& sig, const PosType& a, const PosType& b, std::size_t fuel = default_fuel) {
  return detail::convert_impl(sig, a, b, fuel);
}

}  // namespace seqcore
