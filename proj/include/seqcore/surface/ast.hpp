#pragma once

// Abstract syntax of the equational surface language.

#include <optional>
#include <string>
#include <vector>

#include "seqcore/diagnostic.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore::surface {

struct TAtom;
struct TArrow;
struct TBin;
struct TBinder;

class Type : public Node<TAtom, TArrow, TBin, TBinder> {
  using Node::Node;
};

struct TAtom {
  std::string name;
};
struct TArrow {
  Type arg, res;
};
struct TBin {
  enum Op { sum, prod, with } op;
  Type left, right;
};
struct TBinder {
  enum Kind { pi, sigma } kind;
  std::string var;
  Type bound, body;
};

struct SVar;
struct SWild;
struct SAs;
struct SPair;
struct SInl;
struct SInr;

class Pat : public Node<SVar, SWild, SAs, SPair, SInl, SInr> {
  using Node::Node;
};

struct SVar {
  std::string name;
};
struct SWild {};
struct SAs {
  std::string name;
  Pat body;
};
struct SPair {
  Pat left, right;
};
struct SInl {
  Pat body;
};
struct SInr {
  Pat body;
};

struct EApp;
struct EPair;
struct EInl;
struct EInr;

class Expr : public Node<EApp, EPair, EInl, EInr> {
  using Node::Node;
};

// A name applied to zero or more arguments.
struct EApp {
  std::string head;
  std::vector<Expr> args;
  Span span;
};
struct EPair {
  Expr left, right;
};
struct EInl {
  Expr body;
};
struct EInr {
  Expr body;
};

struct Clause {
  std::vector<Pat> lhs;
  Expr rhs;
  Span span;
};

struct Decl {
  enum Kind { atom, postulate, definition } kind;
  std::string name;
  std::optional<Type> type;
  std::vector<Clause> clauses;
  Span span;
};

inline Type t_atom(std::string a) { return TAtom{std::move(a)}; }
inline Type t_arrow(Type a, Type b) { return TArrow{std::move(a), std::move(b)}; }
inline Type t_bin(TBin::Op op, Type a, Type b) { return TBin{op, std::move(a), std::move(b)}; }

inline Expr e_var(std::string x) { return EApp{std::move(x), {}, {}}; }

}  // namespace seqcore::surface
