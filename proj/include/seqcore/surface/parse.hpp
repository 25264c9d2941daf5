#pragma once

// Parser for `.seq` files. A token in the first column starts a new
// declaration or clause; anything indented continues the current one.

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "seqcore/lexer.hpp"
#include "seqcore/surface/ast.hpp"

namespace seqcore::surface {

inline bool is_reserved(const std::string& s) {
  static const std::unordered_set<std::string> kw = {"atom", "postulate", "inl", "inr", "Pi", "Sigma"};
  return kw.count(s) != 0;
}

class Parser {
 public:
  Parser(std::string_view src, std::string file) : ts_(tokenize(src, file), std::move(file)) {}

  std::vector<Decl> program() {
    std::vector<Decl> out;
    while (!ts_.at_end()) out.push_back(decl());
    return out;
  }

  Expr whole_expr() {
    item_line_ = 0;
    Expr e = expr();
    if (!ts_.at_end()) ts_.fail("end of expression");
    return e;
  }

  Type whole_type() {
    item_line_ = 0;
    Type t = type();
    if (!ts_.at_end()) ts_.fail("end of type");
    return t;
  }

 private:
  TokenStream ts_;
  int item_line_ = 0;

  // True when the next token belongs to a following item.
  bool boundary() const {
    const Token& t = ts_.peek();
    return t.kind == Token::end || (item_line_ > 0 && t.col == 1 && t.line > item_line_);
  }

  void start_item() {
    if (ts_.peek().col != 1) ts_.fail("declaration at the start of a line");
    item_line_ = ts_.peek().line;
  }

  std::string name(std::string_view what) {
    if (boundary() || !ts_.is_ident() || is_reserved(ts_.peek().text) || ts_.peek().text == "_") ts_.fail(std::string(what));
    return ts_.next().text;
  }

  void expect(std::string_view p) {
    if (boundary()) ts_.fail("'" + std::string(p) + "'");
    ts_.expect(p);
  }

  void end_item(std::string_view what) {
    if (!boundary()) ts_.fail("end of " + std::string(what));
  }

  Decl decl() {
    start_item();
    Decl d;
    d.span = ts_.span();
    if (ts_.accept_keyword("atom")) {
      d.kind = Decl::atom;
      d.name = name("atom name");
      end_item("atom declaration");
      return d;
    }
    if (ts_.accept_keyword("postulate")) {
      d.kind = Decl::postulate;
      d.name = name("postulate name");
      expect(":");
      d.type = type();
      end_item("postulate");
      return d;
    }
    d.kind = Decl::definition;
    d.name = name("declaration");
    expect(":");
    d.type = type();
    end_item("type signature");
    while (!ts_.at_end() && ts_.is_keyword(d.name) && !ts_.is_punct(":", 1)) {
      start_item();
      d.clauses.push_back(clause(d.name));
      if (d.clauses.back().lhs.size() != d.clauses.front().lhs.size())
        throw ParseError(d.clauses.back().span, std::to_string(d.clauses.front().lhs.size()) + " patterns",
                         std::to_string(d.clauses.back().lhs.size()) + " patterns in clause of " + d.name);
    }
    return d;
  }

  Clause clause(const std::string& fn) {
    Clause c{{}, e_var(""), ts_.span()};
    ts_.expect_keyword(fn);
    while (!boundary() && !ts_.is_punct("=")) c.lhs.push_back(pat());
    expect("=");
    c.rhs = expr();
    end_item("clause");
    return c;
  }

  Type type() {
    Type t = type1();
    if (!boundary() && (ts_.accept("->") || ts_.accept("→"))) return t_arrow(t, type());
    return t;
  }

  Type type1() {
    Type t = type2();
    while (!boundary()) {
      if (ts_.accept("+") || ts_.accept("⊎")) {
        t = t_bin(TBin::sum, t, type2());
      } else if (ts_.accept("*") || ts_.accept("×")) {
        t = t_bin(TBin::prod, t, type2());
      } else if (ts_.accept("/\\") || ts_.accept("∧")) {
        t = t_bin(TBin::with, t, type2());
      } else {
        break;
      }
    }
    return t;
  }

  Type type2() {
    if (boundary()) ts_.fail("type");
    if (ts_.accept("(")) {
      Type t = type();
      expect(")");
      return t;
    }
    bool pi = ts_.accept_keyword("Pi") || ts_.accept("Π");
    if (pi || ts_.accept_keyword("Sigma") || ts_.accept("Σ")) {
      expect("(");
      std::string x = name("bound variable");
      expect(":");
      Type a = type();
      expect(")");
      expect(".");
      return TBinder{pi ? TBinder::pi : TBinder::sigma, x, a, type()};
    }
    return t_atom(name("type"));
  }

  Pat pat() {
    if (boundary()) ts_.fail("pattern");
    if (ts_.accept("(")) {
      Pat l = pat();
      if (!boundary() && ts_.accept(",")) {
        Pat r = pat();
        expect(")");
        return SPair{l, r};
      }
      expect(")");
      return l;
    }
    if (ts_.accept_keyword("inl")) return SInl{pat()};
    if (ts_.accept_keyword("inr")) return SInr{pat()};
    if (ts_.accept_keyword("_")) return SWild{};
    std::string x = name("pattern");
    if (!boundary() && ts_.accept("@")) return SAs{x, pat()};
    return SVar{x};
  }

  bool starts_arg() const {
    if (boundary()) return false;
    if (ts_.is_punct("(")) return true;
    return ts_.is_ident() && ts_.peek().text != "_" &&
           (!is_reserved(ts_.peek().text) || ts_.is_keyword("inl") || ts_.is_keyword("inr"));
  }

  Expr expr() {
    if (boundary()) ts_.fail("expression");
    if (ts_.accept_keyword("inl")) return EInl{expr()};
    if (ts_.accept_keyword("inr")) return EInr{expr()};
    if (ts_.is_punct("(")) return paren();
    Span at = ts_.span();
    std::string h = name("expression");
    std::vector<Expr> args;
    while (starts_arg()) args.push_back(arg());
    return EApp{h, std::move(args), at};
  }

  Expr arg() {
    if (ts_.accept_keyword("inl")) return EInl{arg()};
    if (ts_.accept_keyword("inr")) return EInr{arg()};
    if (ts_.is_punct("(")) return paren();
    Span at = ts_.span();
    return EApp{name("argument"), {}, at};
  }

  Expr paren() {
    expect("(");
    Expr l = expr();
    if (!boundary() && ts_.accept(",")) {
      Expr r = expr();
      expect(")");
      return EPair{l, r};
    }
    expect(")");
    return l;
  }
};

inline std::vector<Decl> parse(std::string_view src, std::string file = {}) { return Parser(src, std::move(file)).program(); }

inline Expr parse_expr(std::string_view src) { return Parser(src, "<arg>").whole_expr(); }

inline Type parse_type(std::string_view src) { return Parser(src, "<type>").whole_type(); }

}  // namespace seqcore::surface
