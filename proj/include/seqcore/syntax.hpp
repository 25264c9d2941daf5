#pragma once

// Core syntax of the focused calculus: polarized types and the four term
// sorts (terms, patterns, data, spines). Nodes are immutable and shared.

#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "seqcore/name.hpp"

namespace seqcore {

template <class... Alts>
class Node {
 public:
  using Variant = std::variant<Alts...>;

  template <class T>
    requires(std::is_same_v<std::remove_cvref_t<T>, Alts> || ...)
  Node(T&& alt) : ptr_(std::make_shared<const Variant>(std::forward<T>(alt))) {}

  const Variant& get() const { return *ptr_; }

  template <class T>
  const T* as() const {
    return std::get_if<T>(ptr_.get());
  }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(*ptr_);
  }

  std::size_t index() const { return ptr_->index(); }
  bool same_node(const Node& other) const { return ptr_ == other.ptr_; }

 private:
  std::shared_ptr<const Variant> ptr_;
};

// Negative types N, M
struct Atom;
struct Up;
struct Imp;
struct With;
struct Pi;
// Positive types P, Q
struct Down;
struct Or;
struct Prod;
struct Sigma;
// Terms t, u
struct Done;
struct Lam;
struct App;
struct Pair;
struct Split;
struct BindCut;
struct AppCut;
struct Case;
struct Unpair;
// Patterns p, q
struct PVar;
struct PPair;
struct POr;
struct PAt;
struct PWild;
// Data d, e
struct Thunk;
struct DPair;
struct Inl;
struct Inr;
struct DVar;
// Spines k, m
struct Nil;
struct Cons;
struct Proj1;
struct Proj2;
struct Kappa;

class NegType : public Node<Atom, Up, Imp, With, Pi> {
  using Node::Node;
};
class PosType : public Node<Down, Or, Prod, Sigma> {
  using Node::Node;
};
class Term : public Node<Done, Lam, App, Pair, Split, BindCut, AppCut, Case, Unpair> {
  using Node::Node;
};
class Pattern : public Node<PVar, PPair, POr, PAt, PWild> {
  using Node::Node;
};
class DataVal : public Node<Thunk, DPair, Inl, Inr, DVar> {
  using Node::Node;
};
class Spine : public Node<Nil, Cons, Proj1, Proj2, Kappa> {
  using Node::Node;
};

// Atoms may carry data indices in dependent mode (type families).
struct Atom {
  std::string name;
  std::vector<DataVal> args;
};
struct Up {
  PosType body;
};
struct Imp {
  PosType arg;
  NegType res;
};
struct With {
  NegType left, right;
};
struct Pi {
  Name binder;
  PosType arg;
  NegType res;
};

struct Down {
  NegType body;
};
struct Or {
  PosType left, right;
};
struct Prod {
  PosType left, right;
};
struct Sigma {
  Name binder;
  PosType first, second;
};

struct Done {
  DataVal data;
};
struct Lam {
  Pattern pat;
  Term body;
};
struct App {
  Name head;
  Spine spine;
};
struct Pair {
  Term left, right;
};
// Propositional split, resolved by the or-pattern that binds `label`.
struct Split {
  Name label;
  Term left, right;
};
// p : type = data in body
struct BindCut {
  Pattern pat;
  DataVal data;
  PosType type;
  Term body;
};
// (fun : type) spine
struct AppCut {
  Term fun;
  NegType type;
  Spine spine;
};
// Dependent-mode eliminators on variables.
struct Case {
  Name scrutinee;
  Name left_var;
  Term left;
  Name right_var;
  Term right;
};
struct Unpair {
  Name first, second;
  Name scrutinee;
  Term body;
};

struct PVar {
  Name name;
};
struct PPair {
  Pattern left, right;
};
struct POr {
  Name label;
  Pattern left, right;
};
struct PAt {
  Pattern left, right;
};
struct PWild {};

struct Thunk {
  Term body;
};
struct DPair {
  DataVal left, right;
};
struct Inl {
  DataVal body;
};
struct Inr {
  DataVal body;
};
// Only legal inside type indices: a variable of non-shifted positive type.
struct DVar {
  Name name;
};

struct Nil {};
struct Cons {
  DataVal arg;
  Spine rest;
};
struct Proj1 {
  Spine rest;
};
struct Proj2 {
  Spine rest;
};
struct Kappa {
  Pattern pat;
  Term body;
};

// ---- builders ---------------------------------------------------------

inline NegType atom(std::string name, std::vector<DataVal> args = {}) { return Atom{std::move(name), std::move(args)}; }
inline NegType up(PosType p) { return Up{std::move(p)}; }
inline NegType imp(PosType p, NegType n) { return Imp{std::move(p), std::move(n)}; }
inline NegType with(NegType n, NegType m) { return With{std::move(n), std::move(m)}; }
inline NegType pi(Name x, PosType p, NegType n) { return Pi{std::move(x), std::move(p), std::move(n)}; }

inline PosType down(NegType n) { return Down{std::move(n)}; }
inline PosType disj(PosType p, PosType q) { return Or{std::move(p), std::move(q)}; }
inline PosType prod(PosType p, PosType q) { return Prod{std::move(p), std::move(q)}; }
inline PosType sigma(Name x, PosType p, PosType q) { return Sigma{std::move(x), std::move(p), std::move(q)}; }

inline Term done(DataVal d) { return Done{std::move(d)}; }
inline Term lam(Pattern p, Term t) { return Lam{std::move(p), std::move(t)}; }
inline Term app(Name x, Spine k) { return App{std::move(x), std::move(k)}; }
inline Term pair(Term t, Term u) { return Pair{std::move(t), std::move(u)}; }
inline Term split(Name w, Term t, Term u) { return Split{std::move(w), std::move(t), std::move(u)}; }
inline Term bind_cut(Pattern p, DataVal d, PosType ty, Term t) {
  return BindCut{std::move(p), std::move(d), std::move(ty), std::move(t)};
}
inline Term app_cut(Term t, NegType ty, Spine k) { return AppCut{std::move(t), std::move(ty), std::move(k)}; }
inline Term case_of(Name x, Name y, Term t, Name z, Term u) {
  return Case{std::move(x), std::move(y), std::move(t), std::move(z), std::move(u)};
}
inline Term unpair(Name y, Name z, Name x, Term t) { return Unpair{std::move(y), std::move(z), std::move(x), std::move(t)}; }

inline Pattern pvar(Name x) { return PVar{std::move(x)}; }
inline Pattern ppair(Pattern p, Pattern q) { return PPair{std::move(p), std::move(q)}; }
inline Pattern por(Name w, Pattern p, Pattern q) { return POr{std::move(w), std::move(p), std::move(q)}; }
inline Pattern pat_at(Pattern p, Pattern q) { return PAt{std::move(p), std::move(q)}; }
inline Pattern wild() { return PWild{}; }

inline DataVal thunk(Term t) { return Thunk{std::move(t)}; }
inline DataVal dpair(DataVal d, DataVal e) { return DPair{std::move(d), std::move(e)}; }
inline DataVal inl(DataVal d) { return Inl{std::move(d)}; }
inline DataVal inr(DataVal d) { return Inr{std::move(d)}; }
inline DataVal dvar(Name x) { return DVar{std::move(x)}; }

inline Spine nil() { return Nil{}; }
inline Spine cons(DataVal d, Spine k) { return Cons{std::move(d), std::move(k)}; }
inline Spine proj1(Spine k) { return Proj1{std::move(k)}; }
inline Spine proj2(Spine k) { return Proj2{std::move(k)}; }
inline Spine kappa(Pattern p, Term t) { return Kappa{std::move(p), std::move(t)}; }

// x ε, the η-expanded use of a ↓N variable.
inline Term use(const Name& x) { return app(x, nil()); }

// A variable of type P seen as data: ↓N variables become thunk(x ε), other
// positives stay as index variables.
inline DataVal var_as_data(const Name& x, const PosType& type) {
  if (type.is<Down>()) return thunk(use(x));
  return dvar(x);
}

inline Spine spine_of(std::vector<DataVal> args, Spine tail = nil()) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) tail = cons(*it, tail);
  return tail;
}

inline bool is_cut(const Term& t) { return t.is<BindCut>() || t.is<AppCut>(); }

// Names bound by a pattern (variables and or-labels), left to right.
inline void pattern_binders(const Pattern& p, std::vector<Name>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PVar>) {
          out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, PPair> || std::is_same_v<T, PAt>) {
          pattern_binders(n.left, out);
          pattern_binders(n.right, out);
        } else if constexpr (std::is_same_v<T, POr>) {
          out.push_back(n.label);
          pattern_binders(n.left, out);
          pattern_binders(n.right, out);
        }
      },
      p.get());
}

inline std::vector<Name> pattern_binders(const Pattern& p) {
  std::vector<Name> out;
  pattern_binders(p, out);
  return out;
}

// Variables only (no labels), left to right.
inline void pattern_vars(const Pattern& p, std::vector<Name>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PVar>) {
          out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, PPair> || std::is_same_v<T, PAt> || std::is_same_v<T, POr>) {
          pattern_vars(n.left, out);
          pattern_vars(n.right, out);
        }
      },
      p.get());
}

inline std::vector<Name> pattern_vars(const Pattern& p) {
  std::vector<Name> out;
  pattern_vars(p, out);
  return out;
}

inline std::size_t spine_length(const Spine& k) {
  std::size_t n = 0;
  const Spine* cur = &k;
  while (true) {
    if (auto c = cur->as<Cons>()) {
      ++n;
      cur = &c->rest;
    } else if (auto p = cur->as<Proj1>()) {
      ++n;
      cur = &p->rest;
    } else if (auto p2 = cur->as<Proj2>()) {
      ++n;
      cur = &p2->rest;
    } else if (cur->is<Kappa>()) {
      return n + 1;
    } else {
      return n;
    }
  }
}

}  // namespace seqcore
