#pragma once

#include <string>
#include <vector>

#include "seqcore/diagnostic.hpp"
#include "seqcore/print.hpp"
#include "seqcore/sig.hpp"
#include "seqcore/subst.hpp"

namespace seqcore {

struct WellFormed {
  bool ok = true;
  std::vector<Diagnostic> diagnostics;
  explicit operator bool() const { return ok; }
};

namespace detail {

class WellFormedness {
 public:
  WellFormedness(const Sig& sig, Mode mode, NameSet scope) : sig_(sig), mode_(mode), scope_(std::move(scope)) {}

  WellFormed result;

  void neg(const NegType& ty) {
    if (auto a = ty.as<Atom>()) {
      auto arity = sig_.atom_arity(a->name);
      if (!arity) {
        fail(rule::well_formed, "declared atom", a->name, "undeclared atom");
      } else if (mode_ == Mode::propositional && !a->args.empty()) {
        fail(rule::mode, "plain atom", print(ty), "indexed atoms need dependent mode");
      } else if (*arity != a->args.size()) {
        fail(rule::well_formed, std::to_string(*arity) + " indices", std::to_string(a->args.size()),
             "atom " + a->name);
      }
      for (const auto& d : a->args) index(d);
    } else if (auto u = ty.as<Up>()) {
      pos(u->body);
    } else if (auto i = ty.as<Imp>()) {
      if (mode_ == Mode::dependent) fail(rule::mode, "Π", print(ty), "implication outside propositional mode");
      pos(i->arg);
      neg(i->res);
    } else if (auto w = ty.as<With>()) {
      neg(w->left);
      neg(w->right);
    } else if (auto p = ty.as<Pi>()) {
      if (mode_ == Mode::propositional) fail(rule::mode, "⊃", print(ty), "Π outside dependent mode");
      pos(p->arg);
      bound(p->binder, [&] { neg(p->res); });
    }
  }

  void pos(const PosType& ty) {
    if (auto d = ty.as<Down>()) {
      neg(d->body);
    } else if (auto o = ty.as<Or>()) {
      pos(o->left);
      pos(o->right);
    } else if (auto p = ty.as<Prod>()) {
      if (mode_ == Mode::dependent) fail(rule::mode, "Σ", print(ty), "product outside propositional mode");
      pos(p->left);
      pos(p->right);
    } else if (auto s = ty.as<Sigma>()) {
      if (mode_ == Mode::propositional) fail(rule::mode, "×", print(ty), "Σ outside dependent mode");
      pos(s->first);
      bound(s->binder, [&] { pos(s->second); });
    }
  }

 private:
  const Sig& sig_;
  Mode mode_;
  NameSet scope_;

  void fail(std::string_view r, std::string expected, std::string found, std::string note) {
    result.ok = false;
    result.diagnostics.push_back(make_diagnostic(r, std::move(expected), std::move(found), std::move(note)));
  }

  template <class F>
  void bound(const Name& x, F&& body) {
    bool fresh_here = scope_.insert(x).second;
    body();
    if (fresh_here) scope_.erase(x);
  }

  void index(const DataVal& d) {
    for (const auto& x : free_names(d)) {
      if (x.is_global() ? sig_.find(x) != nullptr : scope_.count(x) != 0) continue;
      fail(rule::scope, "variable in scope", x.text, "free in type index");
    }
  }
};

}  // namespace detail

inline WellFormed well_formed_neg(const NegType& ty, const Sig& sig, Mode mode, const NameSet& scope = {}) {
  detail::WellFormedness w(sig, mode, scope);
  w.neg(ty);
  return std::move(w.result);
}

inline WellFormed well_formed_pos(const PosType& ty, const Sig& sig, Mode mode, const NameSet& scope = {}) {
  detail::WellFormedness w(sig, mode, scope);
  w.pos(ty);
  return std::move(w.result);
}

}  // namespace seqcore
