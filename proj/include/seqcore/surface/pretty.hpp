#pragma once

// Core terms in the image of the clause compiler back to equations: one
// clause per leaf of the split tree.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "seqcore/print.hpp"
#include "seqcore/surface/polarize.hpp"

namespace seqcore::surface {

namespace detail {

struct NotEquational {};

class EquationPrinter {
 public:
  EquationPrinter(std::string name, const NegType& ty) : name_(std::move(name)), ty_(ty) {}

  std::string run(const Term& t) {
    Term body = t;
    NegType ty = ty_;
    while (auto l = body.as<Lam>()) {
      args_.push_back(l->pat);
      if (auto i = ty.as<Imp>()) {
        ty = i->res;
      } else if (auto p = ty.as<Pi>()) {
        ty = p->res;
      } else {
        throw NotEquational{};
      }
      body = l->body;
    }
    leaves(body, ty, {}, {});
    return out_;
  }

 private:
  std::string name_;
  NegType ty_;
  std::vector<Pattern> args_;
  std::string out_;
  std::unordered_map<Name, std::string, NameHash> text_;
  std::unordered_set<std::string> taken_;

  // label → took inl; var → its refinement by case/unpair.
  using Choices = std::map<Name, bool>;
  struct Shape {
    enum Kind { var, pair, inl, inr } kind;
    Name a, b;
  };
  using Shapes = std::map<Name, Shape>;

  const std::string& text(const Name& n) {
    auto it = text_.find(n);
    if (it != text_.end()) return it->second;
    std::string t = n.text;
    while (taken_.count(t)) t += "'";
    taken_.insert(t);
    return text_.emplace(n, t).first->second;
  }

  void leaves(const Term& t, const NegType& goal, const Choices& ch, const Shapes& sh) {
    if (auto s = t.as<Split>()) {
      Choices l = ch, r = ch;
      l[s->label] = true;
      r[s->label] = false;
      leaves(s->left, goal, l, sh);
      leaves(s->right, goal, r, sh);
      return;
    }
    if (auto c = t.as<Case>()) {
      Shapes l = sh, r = sh;
      l[c->scrutinee] = {Shape::inl, c->left_var, {}};
      r[c->scrutinee] = {Shape::inr, c->right_var, {}};
      leaves(c->left, goal, ch, l);
      leaves(c->right, goal, ch, r);
      return;
    }
    if (auto u = t.as<Unpair>()) {
      Shapes s2 = sh;
      s2[u->scrutinee] = {Shape::pair, u->first, u->second};
      leaves(u->body, goal, ch, s2);
      return;
    }
    std::string line = name_;
    for (const auto& p : args_) line += " " + atomic(pat(p, ch, sh));
    line += " = " + expr(t);
    out_ += line + "\n";
  }

  static std::string atomic(const std::string& s) {
    return s.find(' ') == std::string::npos || s.front() == '(' ? s : "(" + s + ")";
  }

  std::string var(const Name& x, const Shapes& sh) {
    auto it = sh.find(x);
    if (it == sh.end()) return text(x);
    const Shape& s = it->second;
    if (s.kind == Shape::pair) {
      std::string a = var(s.a, sh);
      return "(" + a + ", " + var(s.b, sh) + ")";
    }
    return (s.kind == Shape::inl ? "inl " : "inr ") + atomic(var(s.a, sh));
  }

  std::string pat(const Pattern& p, const Choices& ch, const Shapes& sh) {
    if (auto v = p.as<PVar>()) return var(v->name, sh);
    if (auto pp = p.as<PPair>()) {
      std::string l = pat(pp->left, ch, sh);
      return "(" + l + ", " + pat(pp->right, ch, sh) + ")";
    }
    if (auto po = p.as<POr>()) {
      auto it = ch.find(po->label);
      if (it == ch.end()) throw NotEquational{};
      return it->second ? "inl " + atomic(pat(po->left, ch, sh)) : "inr " + atomic(pat(po->right, ch, sh));
    }
    throw NotEquational{};
  }

  std::string arg(const DataVal& d) {
    std::string s = data(d);
    return atomic(s);
  }

  std::string data(const DataVal& d) {
    if (auto th = d.as<Thunk>()) return expr(th->body);
    if (auto p = d.as<DPair>()) {
      std::string l = data(p->left);
      return "(" + l + ", " + data(p->right) + ")";
    }
    if (auto l = d.as<Inl>()) return "inl " + arg(l->body);
    if (auto r = d.as<Inr>()) return "inr " + arg(r->body);
    return text(d.as<DVar>()->name);
  }

  std::string expr(const Term& t) {
    if (auto d = t.as<Done>()) return data(d->data);
    if (auto p = t.as<Pair>()) {
      std::string l = expr(p->left);
      return "(" + l + ", " + expr(p->right) + ")";
    }
    auto a = t.as<App>();
    if (!a) throw NotEquational{};
    std::string out = a->head.is_global() ? a->head.text : text(a->head);
    for (Spine k = a->spine; !k.is<Nil>();) {
      auto c = k.as<Cons>();
      if (!c) throw NotEquational{};
      out += " " + arg(c->arg);
      k = c->rest;
    }
    return out;
  }
};

}  // namespace detail

inline std::string pretty_equations(const std::string& name, const Term& t, const NegType& ty) {
  try {
    return detail::EquationPrinter(name, ty).run(t);
  } catch (const detail::NotEquational&) {
    return name + " = " + print(t) + "\n";
  }
}

// A whole definition: signature line followed by its equations.
inline std::string pretty_definition(const std::string& name, const Term& t, const NegType& ty) {
  return name + " : " + unpolarize(ty) + "\n" + pretty_equations(name, t, ty);
}

}  // namespace seqcore::surface
