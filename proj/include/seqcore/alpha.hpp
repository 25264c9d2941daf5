#pragma once

// Equality up to renaming of bound names.

#include <unordered_map>
#include <vector>

#include "seqcore/syntax.hpp"

namespace seqcore {

namespace detail {

class AlphaEq {
 public:
  bool term(const Term& a, const Term& b) {
    if (a.index() != b.index()) return false;
    if (auto x = a.as<Done>()) return data(x->data, b.as<Done>()->data);
    if (auto x = a.as<Lam>()) {
      auto y = b.as<Lam>();
      return scoped_pattern(x->pat, y->pat, [&] { return term(x->body, y->body); });
    }
    if (auto x = a.as<App>()) {
      auto y = b.as<App>();
      return use(x->head, y->head) && spine(x->spine, y->spine);
    }
    if (auto x = a.as<Pair>()) {
      auto y = b.as<Pair>();
      return term(x->left, y->left) && term(x->right, y->right);
    }
    if (auto x = a.as<Split>()) {
      auto y = b.as<Split>();
      return use(x->label, y->label) && term(x->left, y->left) && term(x->right, y->right);
    }
    if (auto x = a.as<BindCut>()) {
      auto y = b.as<BindCut>();
      return data(x->data, y->data) && pos(x->type, y->type) &&
             scoped_pattern(x->pat, y->pat, [&] { return term(x->body, y->body); });
    }
    if (auto x = a.as<AppCut>()) {
      auto y = b.as<AppCut>();
      return term(x->fun, y->fun) && neg(x->type, y->type) && spine(x->spine, y->spine);
    }
    if (auto x = a.as<Case>()) {
      auto y = b.as<Case>();
      return use(x->scrutinee, y->scrutinee) &&
             scoped({x->left_var}, {y->left_var}, [&] { return term(x->left, y->left); }) &&
             scoped({x->right_var}, {y->right_var}, [&] { return term(x->right, y->right); });
    }
    auto x = a.as<Unpair>();
    auto y = b.as<Unpair>();
    return use(x->scrutinee, y->scrutinee) &&
           scoped({x->first, x->second}, {y->first, y->second}, [&] { return term(x->body, y->body); });
  }

  bool data(const DataVal& a, const DataVal& b) {
    if (a.index() != b.index()) return false;
    if (auto x = a.as<Thunk>()) return term(x->body, b.as<Thunk>()->body);
    if (auto x = a.as<DPair>()) {
      auto y = b.as<DPair>();
      return data(x->left, y->left) && data(x->right, y->right);
    }
    if (auto x = a.as<Inl>()) return data(x->body, b.as<Inl>()->body);
    if (auto x = a.as<Inr>()) return data(x->body, b.as<Inr>()->body);
    return use(a.as<DVar>()->name, b.as<DVar>()->name);
  }

  bool spine(const Spine& a, const Spine& b) {
    if (a.index() != b.index()) return false;
    if (a.is<Nil>()) return true;
    if (auto x = a.as<Cons>()) {
      auto y = b.as<Cons>();
      return data(x->arg, y->arg) && spine(x->rest, y->rest);
    }
    if (auto x = a.as<Proj1>()) return spine(x->rest, b.as<Proj1>()->rest);
    if (auto x = a.as<Proj2>()) return spine(x->rest, b.as<Proj2>()->rest);
    auto x = a.as<Kappa>();
    auto y = b.as<Kappa>();
    return scoped_pattern(x->pat, y->pat, [&] { return term(x->body, y->body); });
  }

  bool neg(const NegType& a, const NegType& b) {
    if (a.index() != b.index()) return false;
    if (auto x = a.as<Atom>()) {
      auto y = b.as<Atom>();
      if (x->name != y->name || x->args.size() != y->args.size()) return false;
      for (std::size_t i = 0; i < x->args.size(); ++i)
        if (!data(x->args[i], y->args[i])) return false;
      return true;
    }
    if (auto x = a.as<Up>()) return pos(x->body, b.as<Up>()->body);
    if (auto x = a.as<Imp>()) {
      auto y = b.as<Imp>();
      return pos(x->arg, y->arg) && neg(x->res, y->res);
    }
    if (auto x = a.as<With>()) {
      auto y = b.as<With>();
      return neg(x->left, y->left) && neg(x->right, y->right);
    }
    auto x = a.as<Pi>();
    auto y = b.as<Pi>();
    return pos(x->arg, y->arg) && scoped({x->binder}, {y->binder}, [&] { return neg(x->res, y->res); });
  }

  bool pos(const PosType& a, const PosType& b) {
    if (a.index() != b.index()) return false;
    if (auto x = a.as<Down>()) return neg(x->body, b.as<Down>()->body);
    if (auto x = a.as<Or>()) {
      auto y = b.as<Or>();
      return pos(x->left, y->left) && pos(x->right, y->right);
    }
    if (auto x = a.as<Prod>()) {
      auto y = b.as<Prod>();
      return pos(x->left, y->left) && pos(x->right, y->right);
    }
    auto x = a.as<Sigma>();
    auto y = b.as<Sigma>();
    return pos(x->first, y->first) && scoped({x->binder}, {y->binder}, [&] { return pos(x->second, y->second); });
  }

 private:
  using Env = std::unordered_map<Name, std::vector<int>, NameHash>;
  Env left_, right_;
  int depth_ = 0;

  static int lookup(const Env& env, const Name& x) {
    auto it = env.find(x);
    if (it == env.end() || it->second.empty()) return -1;
    return it->second.back();
  }

  bool use(const Name& x, const Name& y) const {
    int i = lookup(left_, x);
    int j = lookup(right_, y);
    if (i < 0 && j < 0) return x == y;
    return i == j;
  }

  template <class F>
  bool scoped(const std::vector<Name>& xs, const std::vector<Name>& ys, F&& body) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      left_[xs[i]].push_back(depth_);
      right_[ys[i]].push_back(depth_);
      ++depth_;
    }
    bool r = body();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      left_[xs[i]].pop_back();
      right_[ys[i]].pop_back();
      --depth_;
    }
    return r;
  }

  static bool same_shape(const Pattern& a, const Pattern& b) {
    if (a.index() != b.index()) return false;
    if (auto x = a.as<PPair>()) {
      auto y = b.as<PPair>();
      return same_shape(x->left, y->left) && same_shape(x->right, y->right);
    }
    if (auto x = a.as<PAt>()) {
      auto y = b.as<PAt>();
      return same_shape(x->left, y->left) && same_shape(x->right, y->right);
    }
    if (auto x = a.as<POr>()) {
      auto y = b.as<POr>();
      return same_shape(x->left, y->left) && same_shape(x->right, y->right);
    }
    return true;
  }

  template <class F>
  bool scoped_pattern(const Pattern& a, const Pattern& b, F&& body) {
    if (!same_shape(a, b)) return false;
    return scoped(pattern_binders(a), pattern_binders(b), std::forward<F>(body));
  }
};

}  // namespace detail

inline bool alpha_eq(const Term& a, const Term& b) { return detail::AlphaEq{}.term(a, b); }
inline bool alpha_eq(const DataVal& a, const DataVal& b) { return detail::AlphaEq{}.data(a, b); }
inline bool alpha_eq(const Spine& a, const Spine& b) { return detail::AlphaEq{}.spine(a, b); }
inline bool alpha_eq(const NegType& a, const NegType& b) { return detail::AlphaEq{}.neg(a, b); }
inline bool alpha_eq(const PosType& a, const PosType& b) { return detail::AlphaEq{}.pos(a, b); }

}  // namespace seqcore
