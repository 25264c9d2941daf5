#pragma once

// Independent tree walk counting free occurrences of a name and of a datum
// inside types and terms. Deliberately written without the library's
// traversal helpers.

#include <cstddef>

#include "seqcore/alpha.hpp"
#include "seqcore/syntax.hpp"

namespace oracle {

using namespace seqcore;

struct Counter {
  Name target;
  std::size_t count = 0;

  void t(const Term& x) {
    if (auto n = x.as<Done>()) return d(n->data);
    if (auto n = x.as<Lam>()) return bound_in(n->pat) ? void() : t(n->body);
    if (auto n = x.as<App>()) {
      if (n->head == target) ++count;
      return k(n->spine);
    }
    if (auto n = x.as<Pair>()) {
      t(n->left);
      return t(n->right);
    }
    if (auto n = x.as<Split>()) {
      if (n->label == target) ++count;
      t(n->left);
      return t(n->right);
    }
    if (auto n = x.as<BindCut>()) {
      d(n->data);
      p(n->type);
      if (!bound_in(n->pat)) t(n->body);
      return;
    }
    if (auto n = x.as<AppCut>()) {
      t(n->fun);
      nt(n->type);
      return k(n->spine);
    }
    if (auto n = x.as<Case>()) {
      if (n->scrutinee == target) ++count;
      if (n->left_var != target) t(n->left);
      if (n->right_var != target) t(n->right);
      return;
    }
    auto n = x.as<Unpair>();
    if (n->scrutinee == target) ++count;
    if (n->first != target && n->second != target) t(n->body);
  }

  void d(const DataVal& x) {
    if (auto n = x.as<Thunk>()) return t(n->body);
    if (auto n = x.as<DPair>()) {
      d(n->left);
      return d(n->right);
    }
    if (auto n = x.as<Inl>()) return d(n->body);
    if (auto n = x.as<Inr>()) return d(n->body);
    if (x.as<DVar>()->name == target) ++count;
  }

  void k(const Spine& x) {
    if (auto n = x.as<Cons>()) {
      d(n->arg);
      return k(n->rest);
    }
    if (auto n = x.as<Proj1>()) return k(n->rest);
    if (auto n = x.as<Proj2>()) return k(n->rest);
    if (auto n = x.as<Kappa>()) {
      if (!bound_in(n->pat)) t(n->body);
    }
  }

  void nt(const NegType& x) {
    if (auto n = x.as<Atom>()) {
      for (const auto& a : n->args) d(a);
      return;
    }
    if (auto n = x.as<Up>()) return p(n->body);
    if (auto n = x.as<Imp>()) {
      p(n->arg);
      return nt(n->res);
    }
    if (auto n = x.as<With>()) {
      nt(n->left);
      return nt(n->right);
    }
    auto n = x.as<Pi>();
    p(n->arg);
    if (n->binder != target) nt(n->res);
  }

  void p(const PosType& x) {
    if (auto n = x.as<Down>()) return nt(n->body);
    if (auto n = x.as<Or>()) {
      p(n->left);
      return p(n->right);
    }
    if (auto n = x.as<Prod>()) {
      p(n->left);
      return p(n->right);
    }
    auto n = x.as<Sigma>();
    p(n->first);
    if (n->binder != target) p(n->second);
  }

  bool bound_in(const Pattern& x) const {
    if (auto n = x.as<PVar>()) return n->name == target;
    if (auto n = x.as<PPair>()) return bound_in(n->left) || bound_in(n->right);
    if (auto n = x.as<PAt>()) return bound_in(n->left) || bound_in(n->right);
    if (auto n = x.as<POr>()) return n->label == target || bound_in(n->left) || bound_in(n->right);
    return false;
  }
};

inline std::size_t occurrences(const Name& x, const NegType& ty) {
  Counter c{x};
  c.nt(ty);
  return c.count;
}
inline std::size_t occurrences(const Name& x, const PosType& ty) {
  Counter c{x};
  c.p(ty);
  return c.count;
}
inline std::size_t occurrences(const Name& x, const Term& t) {
  Counter c{x};
  c.t(t);
  return c.count;
}

// Counts subterm positions alpha-equal to `needle` inside a type.
struct DataCounter {
  DataVal needle;
  std::size_t count = 0;

  void d(const DataVal& x) {
    if (alpha_eq(x, needle)) {
      ++count;
      return;
    }
    if (auto n = x.as<DPair>()) {
      d(n->left);
      d(n->right);
    } else if (auto n = x.as<Inl>()) {
      d(n->body);
    } else if (auto n = x.as<Inr>()) {
      d(n->body);
    }
  }
  void nt(const NegType& x) {
    if (auto n = x.as<Atom>()) {
      for (const auto& a : n->args) d(a);
    } else if (auto n = x.as<Up>()) {
      p(n->body);
    } else if (auto n = x.as<Imp>()) {
      p(n->arg);
      nt(n->res);
    } else if (auto n = x.as<With>()) {
      nt(n->left);
      nt(n->right);
    } else if (auto n = x.as<Pi>()) {
      p(n->arg);
      nt(n->res);
    }
  }
  void p(const PosType& x) {
    if (auto n = x.as<Down>()) {
      nt(n->body);
    } else if (auto n = x.as<Or>()) {
      p(n->left);
      p(n->right);
    } else if (auto n = x.as<Prod>()) {
      p(n->left);
      p(n->right);
    } else if (auto n = x.as<Sigma>()) {
      p(n->first);
      p(n->second);
    }
  }
};

inline std::size_t data_occurrences(const DataVal& needle, const NegType& ty) {
  DataCounter c{needle};
  c.nt(ty);
  return c.count;
}
inline std::size_t data_occurrences(const DataVal& needle, const PosType& ty) {
  DataCounter c{needle};
  c.p(ty);
  return c.count;
}

}  // namespace oracle
