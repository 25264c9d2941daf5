#pragma once

// Canonical text form of core syntax. Bound names are printed with primes
// when needed so that every binder in one printed object is distinct and no
// binder hides a free name; the reader maps the text back to an
// alpha-equivalent object.

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "seqcore/subst.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore {

inline bool is_core_keyword(const std::string& s) {
  static const std::unordered_set<std::string> kw = {"done", "thunk", "inl",  "inr",   "split", "case",
                                                     "let",  "in",    "kappa", "up",   "down",  "Pi",
                                                     "Sigma", "atom", "postulate", "def", "_"};
  return kw.count(s) != 0;
}

class Printer {
 public:
  // Texts that binders must avoid (free names of everything to be printed).
  void reserve(const NameSet& names) {
    for (const auto& n : names) used_.insert(n.text);
  }

  std::string term(const Term& t) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Done>) {
            return "done " + data(n.data);
          } else if constexpr (std::is_same_v<T, Lam>) {
            std::string p = pattern(n.pat);
            return "\\" + p + ". " + term(n.body);
          } else if constexpr (std::is_same_v<T, App>) {
            return name(n.head) + " " + spine(n.spine);
          } else if constexpr (std::is_same_v<T, Pair>) {
            return "<" + term(n.left) + ", " + term(n.right) + ">";
          } else if constexpr (std::is_same_v<T, Split>) {
            return "split " + name(n.label) + " { inl -> " + term(n.left) + " ; inr -> " + term(n.right) + " }";
          } else if constexpr (std::is_same_v<T, BindCut>) {
            std::string d = data(n.data);
            std::string ty = pos(n.type);
            std::string p = pattern(n.pat);
            return "let " + p + " : " + ty + " = " + d + " in " + term(n.body);
          } else if constexpr (std::is_same_v<T, AppCut>) {
            return "(" + term(n.fun) + " : " + neg(n.type) + ") " + spine(n.spine);
          } else if constexpr (std::is_same_v<T, Case>) {
            std::string x = name(n.scrutinee);
            std::string y = bind(n.left_var);
            std::string l = term(n.left);
            std::string z = bind(n.right_var);
            return "case " + x + " { inl " + y + " -> " + l + " ; inr " + z + " -> " + term(n.right) + " }";
          } else {
            std::string x = name(n.scrutinee);
            std::string y = bind(n.first);
            std::string z = bind(n.second);
            return "let (" + y + ", " + z + ") = " + x + " in " + term(n.body);
          }
        },
        t.get());
  }

  std::string data(const DataVal& d) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Thunk>) {
            return "thunk(" + term(n.body) + ")";
          } else if constexpr (std::is_same_v<T, DPair>) {
            return "(" + data(n.left) + ", " + data(n.right) + ")";
          } else if constexpr (std::is_same_v<T, Inl>) {
            return "inl " + data(n.body);
          } else if constexpr (std::is_same_v<T, Inr>) {
            return "inr " + data(n.body);
          } else {
            return name(n.name);
          }
        },
        d.get());
  }

  std::string spine(const Spine& k) {
    if (k.is<Nil>()) return "[]";
    if (auto p = k.as<Proj1>()) return ".1 " + spine(p->rest);
    if (auto p = k.as<Proj2>()) return ".2 " + spine(p->rest);
    if (auto kp = k.as<Kappa>()) {
      std::string p = pattern(kp->pat);
      return "kappa " + p + ". " + term(kp->body);
    }
    std::string out = "(";
    const Spine* cur = &k;
    while (auto c = cur->as<Cons>()) {
      out += data(c->arg) + " :: ";
      cur = &c->rest;
    }
    return out + spine(*cur) + ")";
  }

  std::string pattern(const Pattern& p) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, PVar>) {
            return bind(n.name);
          } else if constexpr (std::is_same_v<T, PPair>) {
            std::string l = pattern(n.left);
            return "(" + l + ", " + pattern(n.right) + ")";
          } else if constexpr (std::is_same_v<T, POr>) {
            std::string w = bind(n.label);
            std::string l = pattern(n.left);
            std::string r = pattern(n.right);
            return "[" + l + " | " + r + "]_" + w;
          } else if constexpr (std::is_same_v<T, PAt>) {
            std::string l = pattern(n.left);
            if (n.left.template is<PAt>()) l = "(" + l + ")";
            return l + "@" + pattern(n.right);
          } else {
            return "_";
          }
        },
        p.get());
  }

  std::string neg(const NegType& ty) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            if (n.args.empty()) return n.name;
            std::string out = n.name + "{";
            for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? ", " : "") + data(n.args[i]);
            return out + "}";
          } else if constexpr (std::is_same_v<T, Up>) {
            return "↑" + pos_operand(n.body);
          } else if constexpr (std::is_same_v<T, Imp>) {
            std::string l = pos_operand(n.arg);
            return l + " ⊃ " + neg(n.res);
          } else if constexpr (std::is_same_v<T, With>) {
            std::string l = neg_operand(n.left);
            return l + " ∧ " + neg_operand(n.right);
          } else {
            std::string arg = pos(n.arg);
            std::string b = bind(n.binder);
            return "Π(" + b + " : " + arg + "). " + neg(n.res);
          }
        },
        ty.get());
  }

  std::string pos(const PosType& ty) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Down>) {
            return "↓" + neg_operand(n.body);
          } else if constexpr (std::is_same_v<T, Or>) {
            std::string l = pos_operand(n.left);
            return l + " ∨ " + pos_operand(n.right);
          } else if constexpr (std::is_same_v<T, Prod>) {
            std::string l = pos_operand(n.left);
            return l + " × " + pos_operand(n.right);
          } else {
            std::string first = pos(n.first);
            std::string b = bind(n.binder);
            return "Σ(" + b + " : " + first + "). " + pos(n.second);
          }
        },
        ty.get());
  }

  // Display text of a name: bound names use their chosen text, free names
  // print as they are.
  std::string name(const Name& n) const {
    auto it = display_.find(n);
    return it == display_.end() ? n.text : it->second;
  }

  // Each binding occurrence gets its own text, even when one name is bound
  // in several disjoint subtrees.
  std::string bind(const Name& n) {
    std::string base = n.text.empty() ? "x" : n.text;
    std::string candidate = base;
    while (used_.count(candidate) || is_core_keyword(candidate)) candidate += "'";
    used_.insert(candidate);
    display_.insert_or_assign(n, candidate);
    return candidate;
  }

 private:
  std::unordered_map<Name, std::string, NameHash> display_;
  std::unordered_set<std::string> used_;

  std::string neg_operand(const NegType& ty) {
    bool atomic = ty.is<Atom>() || ty.is<Up>();
    return atomic ? neg(ty) : "(" + neg(ty) + ")";
  }
  std::string pos_operand(const PosType& ty) {
    return ty.is<Down>() ? pos(ty) : "(" + pos(ty) + ")";
  }
};

template <class T>
std::string print_with_reserved(const T& x, auto method) {
  Printer p;
  p.reserve(free_names(x));
  return (p.*method)(x);
}

inline std::string print(const Term& t) { return print_with_reserved(t, &Printer::term); }
inline std::string print(const DataVal& d) { return print_with_reserved(d, &Printer::data); }
inline std::string print(const Spine& k) { return print_with_reserved(k, &Printer::spine); }
inline std::string print(const NegType& ty) { return print_with_reserved(ty, &Printer::neg); }
inline std::string print(const PosType& ty) { return print_with_reserved(ty, &Printer::pos); }
inline std::string print(const Pattern& p) {
  Printer pr;
  return pr.pattern(p);
}

}  // namespace seqcore
