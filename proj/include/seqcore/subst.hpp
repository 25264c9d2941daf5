#pragma once

// Free names, renaming, capture-avoiding substitution of data for a
// variable, label-directed branch selection and spine concatenation.

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "seqcore/syntax.hpp"

namespace seqcore {

using NameSet = std::unordered_set<Name, NameHash>;
using NameMap = std::unordered_map<Name, Name, NameHash>;

// Raised when a substitution meets a datum of the wrong shape (App x k with
// x := inl d, say). Only reachable on ill-typed input.
struct IllTypedSubstitution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

class FreeNames {
 public:
  NameSet result;

  void term(const Term& t) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Done>) {
            data(n.data);
          } else if constexpr (std::is_same_v<T, Lam>) {
            scoped(pattern_binders(n.pat), [&] { term(n.body); });
          } else if constexpr (std::is_same_v<T, App>) {
            use(n.head);
            spine(n.spine);
          } else if constexpr (std::is_same_v<T, Pair>) {
            term(n.left);
            term(n.right);
          } else if constexpr (std::is_same_v<T, Split>) {
            use(n.label);
            term(n.left);
            term(n.right);
          } else if constexpr (std::is_same_v<T, BindCut>) {
            data(n.data);
            pos(n.type);
            scoped(pattern_binders(n.pat), [&] { term(n.body); });
          } else if constexpr (std::is_same_v<T, AppCut>) {
            term(n.fun);
            neg(n.type);
            spine(n.spine);
          } else if constexpr (std::is_same_v<T, Case>) {
            use(n.scrutinee);
            scoped({n.left_var}, [&] { term(n.left); });
            scoped({n.right_var}, [&] { term(n.right); });
          } else if constexpr (std::is_same_v<T, Unpair>) {
            use(n.scrutinee);
            scoped({n.first, n.second}, [&] { term(n.body); });
          }
        },
        t.get());
  }

  void data(const DataVal& d) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Thunk>) {
            term(n.body);
          } else if constexpr (std::is_same_v<T, DPair>) {
            data(n.left);
            data(n.right);
          } else if constexpr (std::is_same_v<T, Inl> || std::is_same_v<T, Inr>) {
            data(n.body);
          } else {
            use(n.name);
          }
        },
        d.get());
  }

  void spine(const Spine& k) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Cons>) {
            data(n.arg);
            spine(n.rest);
          } else if constexpr (std::is_same_v<T, Proj1> || std::is_same_v<T, Proj2>) {
            spine(n.rest);
          } else if constexpr (std::is_same_v<T, Kappa>) {
            scoped(pattern_binders(n.pat), [&] { term(n.body); });
          }
        },
        k.get());
  }

  void neg(const NegType& ty) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            for (const auto& a : n.args) data(a);
          } else if constexpr (std::is_same_v<T, Up>) {
            pos(n.body);
          } else if constexpr (std::is_same_v<T, Imp>) {
            pos(n.arg);
            neg(n.res);
          } else if constexpr (std::is_same_v<T, With>) {
            neg(n.left);
            neg(n.right);
          } else {
            pos(n.arg);
            scoped({n.binder}, [&] { neg(n.res); });
          }
        },
        ty.get());
  }

  void pos(const PosType& ty) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Down>) {
            neg(n.body);
          } else if constexpr (std::is_same_v<T, Or> || std::is_same_v<T, Prod>) {
            pos(n.left);
            pos(n.right);
          } else {
            pos(n.first);
            scoped({n.binder}, [&] { pos(n.second); });
          }
        },
        ty.get());
  }

 private:
  std::unordered_map<Name, int, NameHash> bound_;

  void use(const Name& x) {
    auto it = bound_.find(x);
    if (it == bound_.end() || it->second == 0) result.insert(x);
  }

  template <class F>
  void scoped(const std::vector<Name>& names, F&& body) {
    for (const auto& x : names) ++bound_[x];
    body();
    for (const auto& x : names) --bound_[x];
  }
};

}  // namespace detail

inline NameSet free_names(const Term& t) {
  detail::FreeNames f;
  f.term(t);
  return std::move(f.result);
}
inline NameSet free_names(const DataVal& d) {
  detail::FreeNames f;
  f.data(d);
  return std::move(f.result);
}
inline NameSet free_names(const Spine& k) {
  detail::FreeNames f;
  f.spine(k);
  return std::move(f.result);
}
inline NameSet free_names(const NegType& ty) {
  detail::FreeNames f;
  f.neg(ty);
  return std::move(f.result);
}
inline NameSet free_names(const PosType& ty) {
  detail::FreeNames f;
  f.pos(ty);
  return std::move(f.result);
}

// Renames free occurrences per `map`. With `refresh`, every binder met on
// the way is replaced by a fresh name; binders listed in `avoid` are always
// refreshed.
class Renamer {
 public:
  explicit Renamer(NameMap map, bool refresh = false, NameSet avoid = {})
      : map_(std::move(map)), refresh_(refresh), avoid_(std::move(avoid)) {}

  Term term(const Term& t) {
    return std::visit(
        [&](const auto& n) -> Term {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Done>) {
            return done(data(n.data));
          } else if constexpr (std::is_same_v<T, Lam>) {
            Saved saved;
            Pattern p = bind_pattern(n.pat, saved);
            Term body = term(n.body);
            restore(saved);
            return lam(p, body);
          } else if constexpr (std::is_same_v<T, App>) {
            return app(use(n.head), spine(n.spine));
          } else if constexpr (std::is_same_v<T, Pair>) {
            return pair(term(n.left), term(n.right));
          } else if constexpr (std::is_same_v<T, Split>) {
            return split(use(n.label), term(n.left), term(n.right));
          } else if constexpr (std::is_same_v<T, BindCut>) {
            DataVal d = data(n.data);
            PosType ty = pos(n.type);
            Saved saved;
            Pattern p = bind_pattern(n.pat, saved);
            Term body = term(n.body);
            restore(saved);
            return bind_cut(p, d, ty, body);
          } else if constexpr (std::is_same_v<T, AppCut>) {
            return app_cut(term(n.fun), neg(n.type), spine(n.spine));
          } else if constexpr (std::is_same_v<T, Case>) {
            Name x = use(n.scrutinee);
            Saved s1;
            Name y = bind(n.left_var, s1);
            Term l = term(n.left);
            restore(s1);
            Saved s2;
            Name z = bind(n.right_var, s2);
            Term r = term(n.right);
            restore(s2);
            return case_of(x, y, l, z, r);
          } else {
            Name x = use(n.scrutinee);
            Saved saved;
            Name y = bind(n.first, saved);
            Name z = bind(n.second, saved);
            Term body = term(n.body);
            restore(saved);
            return unpair(y, z, x, body);
          }
        },
        t.get());
  }

  DataVal data(const DataVal& d) {
    return std::visit(
        [&](const auto& n) -> DataVal {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Thunk>) {
            return thunk(term(n.body));
          } else if constexpr (std::is_same_v<T, DPair>) {
            return dpair(data(n.left), data(n.right));
          } else if constexpr (std::is_same_v<T, Inl>) {
            return inl(data(n.body));
          } else if constexpr (std::is_same_v<T, Inr>) {
            return inr(data(n.body));
          } else {
            return dvar(use(n.name));
          }
        },
        d.get());
  }

  Spine spine(const Spine& k) {
    return std::visit(
        [&](const auto& n) -> Spine {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Nil>) {
            return nil();
          } else if constexpr (std::is_same_v<T, Cons>) {
            return cons(data(n.arg), spine(n.rest));
          } else if constexpr (std::is_same_v<T, Proj1>) {
            return proj1(spine(n.rest));
          } else if constexpr (std::is_same_v<T, Proj2>) {
            return proj2(spine(n.rest));
          } else {
            Saved saved;
            Pattern p = bind_pattern(n.pat, saved);
            Term body = term(n.body);
            restore(saved);
            return kappa(p, body);
          }
        },
        k.get());
  }

  NegType neg(const NegType& ty) {
    return std::visit(
        [&](const auto& n) -> NegType {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            std::vector<DataVal> args;
            for (const auto& a : n.args) args.push_back(data(a));
            return atom(n.name, std::move(args));
          } else if constexpr (std::is_same_v<T, Up>) {
            return up(pos(n.body));
          } else if constexpr (std::is_same_v<T, Imp>) {
            return imp(pos(n.arg), neg(n.res));
          } else if constexpr (std::is_same_v<T, With>) {
            return with(neg(n.left), neg(n.right));
          } else {
            PosType arg = pos(n.arg);
            Saved saved;
            Name b = bind(n.binder, saved);
            NegType res = neg(n.res);
            restore(saved);
            return pi(b, arg, res);
          }
        },
        ty.get());
  }

  PosType pos(const PosType& ty) {
    return std::visit(
        [&](const auto& n) -> PosType {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Down>) {
            return down(neg(n.body));
          } else if constexpr (std::is_same_v<T, Or>) {
            return disj(pos(n.left), pos(n.right));
          } else if constexpr (std::is_same_v<T, Prod>) {
            return prod(pos(n.left), pos(n.right));
          } else {
            PosType first = pos(n.first);
            Saved saved;
            Name b = bind(n.binder, saved);
            PosType second = pos(n.second);
            restore(saved);
            return sigma(b, first, second);
          }
        },
        ty.get());
  }

 private:
  using Saved = std::vector<std::pair<Name, std::optional<Name>>>;

  NameMap map_;
  bool refresh_;
  NameSet avoid_;

  Name use(const Name& x) const {
    auto it = map_.find(x);
    return it == map_.end() ? x : it->second;
  }

  Name bind(const Name& b, Saved& saved) {
    auto it = map_.find(b);
    saved.emplace_back(b, it == map_.end() ? std::nullopt : std::optional<Name>(it->second));
    if (refresh_ || avoid_.count(b)) {
      Name nb = fresh_like(b);
      map_[b] = nb;
      return nb;
    }
    if (it != map_.end()) map_.erase(it);
    return b;
  }

  Pattern bind_pattern(const Pattern& p, Saved& saved) {
    return std::visit(
        [&](const auto& n) -> Pattern {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, PVar>) {
            return pvar(bind(n.name, saved));
          } else if constexpr (std::is_same_v<T, PPair>) {
            Pattern l = bind_pattern(n.left, saved);
            return ppair(l, bind_pattern(n.right, saved));
          } else if constexpr (std::is_same_v<T, PAt>) {
            Pattern l = bind_pattern(n.left, saved);
            return pat_at(l, bind_pattern(n.right, saved));
          } else if constexpr (std::is_same_v<T, POr>) {
            Name w = bind(n.label, saved);
            Pattern l = bind_pattern(n.left, saved);
            return por(w, l, bind_pattern(n.right, saved));
          } else {
            return wild();
          }
        },
        p.get());
  }

  void restore(Saved& saved) {
    for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
      if (it->second) {
        map_[it->first] = *it->second;
      } else {
        map_.erase(it->first);
      }
    }
    saved.clear();
  }
};

// Renames the binders of a pattern per `m`.
inline Pattern rename_pattern(const Pattern& p, const NameMap& m) {
  auto ren = [&](const Name& x) {
    auto it = m.find(x);
    return it == m.end() ? x : it->second;
  };
  return std::visit(
      [&](const auto& n) -> Pattern {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PVar>) {
          return pvar(ren(n.name));
        } else if constexpr (std::is_same_v<T, PPair>) {
          return ppair(rename_pattern(n.left, m), rename_pattern(n.right, m));
        } else if constexpr (std::is_same_v<T, PAt>) {
          return pat_at(rename_pattern(n.left, m), rename_pattern(n.right, m));
        } else if constexpr (std::is_same_v<T, POr>) {
          return por(ren(n.label), rename_pattern(n.left, m), rename_pattern(n.right, m));
        } else {
          return wild();
        }
      },
      p.get());
}

// Copies with every binder replaced by a fresh name.
inline Term freshen(const Term& t) { return Renamer({}, true).term(t); }
inline DataVal freshen(const DataVal& d) { return Renamer({}, true).data(d); }
inline Spine freshen(const Spine& k) { return Renamer({}, true).spine(k); }

// Replaces the variable `var` (of positive type `var_type`) by `value`.
// Occurrences as spine heads become cuts: App(x, k) with x := thunk u gives
// (u : N) k, or just u when k is empty. Case/Unpair on x with a constructor
// datum become binding cuts.
class Substitution {
 public:
  Substitution(Name var, PosType var_type, DataVal value)
      : var_(std::move(var)), type_(std::move(var_type)), value_(std::move(value)), fv_(free_names(value_)) {}

  Term term(const Term& t) {
    return std::visit(
        [&](const auto& n) -> Term {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Done>) {
            return done(data(n.data));
          } else if constexpr (std::is_same_v<T, Lam>) {
            auto [p, body] = under_pattern(n.pat, n.body);
            return lam(p, body);
          } else if constexpr (std::is_same_v<T, App>) {
            Spine k = spine(n.spine);
            if (n.head != var_) return app(n.head, k);
            if (auto dv = value_.as<DVar>()) return app(dv->name, k);
            auto th = value_.as<Thunk>();
            auto dn = type_.as<Down>();
            if (!th || !dn) throw IllTypedSubstitution("variable applied to a spine is bound to non-thunk data");
            Term u = freshen(th->body);
            if (k.is<Nil>()) return u;
            return app_cut(u, dn->body, k);
          } else if constexpr (std::is_same_v<T, Pair>) {
            return pair(term(n.left), term(n.right));
          } else if constexpr (std::is_same_v<T, Split>) {
            return split(n.label, term(n.left), term(n.right));
          } else if constexpr (std::is_same_v<T, BindCut>) {
            DataVal d = data(n.data);
            PosType ty = pos(n.type);
            auto [p, body] = under_pattern(n.pat, n.body);
            return bind_cut(p, d, ty, body);
          } else if constexpr (std::is_same_v<T, AppCut>) {
            return app_cut(term(n.fun), neg(n.type), spine(n.spine));
          } else if constexpr (std::is_same_v<T, Case>) {
            auto [y, l] = under_binder(n.left_var, n.left);
            auto [z, r] = under_binder(n.right_var, n.right);
            if (n.scrutinee != var_) return case_of(n.scrutinee, y, l, z, r);
            if (auto dv = value_.as<DVar>()) return case_of(dv->name, y, l, z, r);
            auto ty = type_.as<Or>();
            if (!ty) throw IllTypedSubstitution("case on a variable of non-sum type");
            if (auto d = value_.as<Inl>()) return bind_cut(pvar(y), freshen(d->body), ty->left, l);
            if (auto d = value_.as<Inr>()) return bind_cut(pvar(z), freshen(d->body), ty->right, r);
            throw IllTypedSubstitution("case on a variable bound to non-injection data");
          } else {
            auto [names, body] = under_binders({n.first, n.second}, n.body);
            if (n.scrutinee != var_) return unpair(names[0], names[1], n.scrutinee, body);
            if (auto dv = value_.as<DVar>()) return unpair(names[0], names[1], dv->name, body);
            auto dp = value_.as<DPair>();
            if (!dp) throw IllTypedSubstitution("unpair of a variable bound to non-pair data");
            DataVal d1 = freshen(dp->left);
            DataVal d2 = freshen(dp->right);
            if (auto sg = type_.as<Sigma>()) {
              PosType second = Substitution(sg->binder, sg->first, d1).pos(sg->second);
              return bind_cut(pvar(names[0]), d1, sg->first, bind_cut(pvar(names[1]), d2, second, body));
            }
            if (auto pr = type_.as<Prod>()) {
              return bind_cut(pvar(names[0]), d1, pr->left, bind_cut(pvar(names[1]), d2, pr->right, body));
            }
            throw IllTypedSubstitution("unpair of a variable of non-product type");
          }
        },
        t.get());
  }

  DataVal data(const DataVal& d) {
    return std::visit(
        [&](const auto& n) -> DataVal {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Thunk>) {
            return thunk(term(n.body));
          } else if constexpr (std::is_same_v<T, DPair>) {
            return dpair(data(n.left), data(n.right));
          } else if constexpr (std::is_same_v<T, Inl>) {
            return inl(data(n.body));
          } else if constexpr (std::is_same_v<T, Inr>) {
            return inr(data(n.body));
          } else {
            return n.name == var_ ? value_ : d;
          }
        },
        d.get());
  }

  Spine spine(const Spine& k) {
    return std::visit(
        [&](const auto& n) -> Spine {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Nil>) {
            return nil();
          } else if constexpr (std::is_same_v<T, Cons>) {
            return cons(data(n.arg), spine(n.rest));
          } else if constexpr (std::is_same_v<T, Proj1>) {
            return proj1(spine(n.rest));
          } else if constexpr (std::is_same_v<T, Proj2>) {
            return proj2(spine(n.rest));
          } else {
            auto [p, body] = under_pattern(n.pat, n.body);
            return kappa(p, body);
          }
        },
        k.get());
  }

  NegType neg(const NegType& ty) {
    return std::visit(
        [&](const auto& n) -> NegType {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            std::vector<DataVal> args;
            for (const auto& a : n.args) args.push_back(data(a));
            return atom(n.name, std::move(args));
          } else if constexpr (std::is_same_v<T, Up>) {
            return up(pos(n.body));
          } else if constexpr (std::is_same_v<T, Imp>) {
            return imp(pos(n.arg), neg(n.res));
          } else if constexpr (std::is_same_v<T, With>) {
            return with(neg(n.left), neg(n.right));
          } else {
            PosType arg = pos(n.arg);
            if (n.binder == var_) return pi(n.binder, arg, n.res);
            Name b = n.binder;
            NegType res = n.res;
            if (fv_.count(b)) {
              Name nb = fresh_like(b);
              res = Renamer(NameMap{{b, nb}}).neg(res);
              b = nb;
            }
            return pi(b, arg, neg(res));
          }
        },
        ty.get());
  }

  PosType pos(const PosType& ty) {
    return std::visit(
        [&](const auto& n) -> PosType {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Down>) {
            return down(neg(n.body));
          } else if constexpr (std::is_same_v<T, Or>) {
            return disj(pos(n.left), pos(n.right));
          } else if constexpr (std::is_same_v<T, Prod>) {
            return prod(pos(n.left), pos(n.right));
          } else {
            PosType first = pos(n.first);
            if (n.binder == var_) return sigma(n.binder, first, n.second);
            Name b = n.binder;
            PosType second = n.second;
            if (fv_.count(b)) {
              Name nb = fresh_like(b);
              second = Renamer(NameMap{{b, nb}}).pos(second);
              b = nb;
            }
            return sigma(b, first, pos(second));
          }
        },
        ty.get());
  }

 private:
  Name var_;
  PosType type_;
  DataVal value_;
  NameSet fv_;

  // Enters the scope of a pattern: stops at shadowing, renames binders that
  // would capture free names of the value.
  std::pair<Pattern, Term> under_pattern(const Pattern& p, const Term& body) {
    auto binders = pattern_binders(p);
    for (const auto& b : binders)
      if (b == var_) return {p, body};
    NameMap clash;
    for (const auto& b : binders)
      if (fv_.count(b)) clash.emplace(b, fresh_like(b));
    if (clash.empty()) return {p, term(body)};
    return {rename_pattern(p, clash), term(Renamer(clash).term(body))};
  }

  std::pair<Name, Term> under_binder(const Name& b, const Term& body) {
    if (b == var_) return {b, body};
    if (fv_.count(b)) {
      Name nb = fresh_like(b);
      return {nb, term(Renamer(NameMap{{b, nb}}).term(body))};
    }
    return {b, term(body)};
  }

  std::pair<std::vector<Name>, Term> under_binders(std::vector<Name> names, const Term& body) {
    for (const auto& b : names)
      if (b == var_) return {names, body};
    NameMap clash;
    for (auto& b : names) {
      if (fv_.count(b)) {
        Name nb = fresh_like(b);
        clash.emplace(b, nb);
        b = nb;
      }
    }
    if (clash.empty()) return {names, term(body)};
    return {names, term(Renamer(clash).term(body))};
  }

};

inline Term subst_term(const Term& t, const Name& x, const PosType& x_type, const DataVal& d) {
  return Substitution(x, x_type, d).term(t);
}
inline DataVal subst_data(const DataVal& e, const Name& x, const PosType& x_type, const DataVal& d) {
  return Substitution(x, x_type, d).data(e);
}
inline Spine subst_spine(const Spine& k, const Name& x, const PosType& x_type, const DataVal& d) {
  return Substitution(x, x_type, d).spine(k);
}
inline NegType subst_data_in_neg(const NegType& ty, const Name& x, const PosType& x_type, const DataVal& d) {
  return Substitution(x, x_type, d).neg(ty);
}
inline PosType subst_data_in_pos(const PosType& ty, const Name& x, const PosType& x_type, const DataVal& d) {
  return Substitution(x, x_type, d).pos(ty);
}

// Replaces every split on `label` by its left (or right) branch; stops where
// a pattern rebinds the label.
class BranchSelector {
 public:
  BranchSelector(Name label, bool left) : label_(std::move(label)), left_(left) {}

  Term term(const Term& t) {
    return std::visit(
        [&](const auto& n) -> Term {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Done>) {
            return done(data(n.data));
          } else if constexpr (std::is_same_v<T, Lam>) {
            return rebinds(n.pat) ? t : lam(n.pat, term(n.body));
          } else if constexpr (std::is_same_v<T, App>) {
            return app(n.head, spine(n.spine));
          } else if constexpr (std::is_same_v<T, Pair>) {
            return pair(term(n.left), term(n.right));
          } else if constexpr (std::is_same_v<T, Split>) {
            if (n.label == label_) return term(left_ ? n.left : n.right);
            return split(n.label, term(n.left), term(n.right));
          } else if constexpr (std::is_same_v<T, BindCut>) {
            return bind_cut(n.pat, data(n.data), n.type, rebinds(n.pat) ? n.body : term(n.body));
          } else if constexpr (std::is_same_v<T, AppCut>) {
            return app_cut(term(n.fun), n.type, spine(n.spine));
          } else if constexpr (std::is_same_v<T, Case>) {
            return case_of(n.scrutinee, n.left_var, term(n.left), n.right_var, term(n.right));
          } else {
            return unpair(n.first, n.second, n.scrutinee, term(n.body));
          }
        },
        t.get());
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
    if (auto kp = k.as<Kappa>()) return rebinds(kp->pat) ? k : kappa(kp->pat, term(kp->body));
    return k;
  }

 private:
  Name label_;
  bool left_;

  bool rebinds(const Pattern& p) const {
    for (const auto& b : pattern_binders(p))
      if (b == label_) return true;
    return false;
  }
};

inline Term select_branch(const Term& t, const Name& label, bool left) { return BranchSelector(label, left).term(t); }

// front @ back, where `junction` is the goal type of `front` (the focus of
// `back`). Kappa(p, t) @ k = Kappa(p, (t : junction) k).
inline Spine spine_concat(const Spine& front, const Spine& back, const NegType& junction) {
  return std::visit(
      [&](const auto& n) -> Spine {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Nil>) {
          return back;
        } else if constexpr (std::is_same_v<T, Cons>) {
          return cons(n.arg, spine_concat(n.rest, back, junction));
        } else if constexpr (std::is_same_v<T, Proj1>) {
          return proj1(spine_concat(n.rest, back, junction));
        } else if constexpr (std::is_same_v<T, Proj2>) {
          return proj2(spine_concat(n.rest, back, junction));
        } else {
          NameSet fv = free_names(back);
          NameMap clash;
          for (const auto& b : pattern_binders(n.pat))
            if (fv.count(b)) clash.emplace(b, fresh_like(b));
          if (clash.empty()) return kappa(n.pat, app_cut(n.body, junction, back));
          return kappa(rename_pattern(n.pat, clash), app_cut(Renamer(clash).term(n.body), junction, back));
        }
      },
      front.get());
}

}  // namespace seqcore
