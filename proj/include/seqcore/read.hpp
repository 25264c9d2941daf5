#pragma once

// Reader for the canonical core text form (inverse of print.hpp), plus the
// core program format emitted by `seqcore core`.

#include <cctype>
#include <type_traits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqcore/lexer.hpp"
#include "seqcore/print.hpp"
#include "seqcore/sig.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore {

class CoreReader {
 public:
  explicit CoreReader(std::string_view src, std::string file = {}) : ts_(tokenize(src, file), file) {}

  // Free identifiers matching `names` resolve to them instead of globals.
  void bind(const std::vector<Name>& names) { scope_.insert(scope_.end(), names.begin(), names.end()); }

  TokenStream& tokens() { return ts_; }

  Term term() {
    if (ts_.accept("\\") || ts_.accept("λ")) {
      Pattern p = pattern();
      ts_.expect(".");
      return with_scope(pattern_binders(p), [&] { return lam(p, term()); });
    }
    if (ts_.accept_keyword("done")) return done(data());
    if (ts_.accept("<")) {
      Term l = term();
      ts_.expect(",");
      Term r = term();
      ts_.expect(">");
      return pair(l, r);
    }
    if (ts_.accept_keyword("split")) {
      Name w = resolve(ts_.ident("split label"));
      ts_.expect("{");
      ts_.expect_keyword("inl");
      ts_.expect("->");
      Term l = term();
      ts_.expect(";");
      ts_.expect_keyword("inr");
      ts_.expect("->");
      Term r = term();
      ts_.expect("}");
      return split(w, l, r);
    }
    if (ts_.accept_keyword("case")) {
      Name x = resolve(ts_.ident("case scrutinee"));
      ts_.expect("{");
      ts_.expect_keyword("inl");
      Name y = fresh(ts_.ident());
      ts_.expect("->");
      Term l = with_scope({y}, [&] { return term(); });
      ts_.expect(";");
      ts_.expect_keyword("inr");
      Name z = fresh(ts_.ident());
      ts_.expect("->");
      Term r = with_scope({z}, [&] { return term(); });
      ts_.expect("}");
      return case_of(x, y, l, z, r);
    }
    if (ts_.accept_keyword("let")) {
      Pattern p = pattern();
      if (ts_.accept("=")) {
        auto pp = p.as<PPair>();
        auto y = pp ? pp->left.as<PVar>() : nullptr;
        auto z = pp ? pp->right.as<PVar>() : nullptr;
        if (!y || !z) ts_.fail("':' (only variable pairs may unpack a variable)");
        Name x = resolve(ts_.ident("variable"));
        ts_.expect_keyword("in");
        Name yn = y->name, zn = z->name;
        return with_scope({yn, zn}, [&] { return unpair(yn, zn, x, term()); });
      }
      ts_.expect(":");
      PosType ty = pos();
      ts_.expect("=");
      DataVal d = data();
      ts_.expect_keyword("in");
      return with_scope(pattern_binders(p), [&] { return bind_cut(p, d, ty, term()); });
    }
    if (ts_.accept("(")) {
      Term t = term();
      ts_.expect(":");
      NegType ty = neg();
      ts_.expect(")");
      return app_cut(t, ty, spine());
    }
    if (ts_.is_ident() && !is_core_keyword(ts_.peek().text)) {
      Name x = resolve(ts_.next().text);
      return app(x, spine());
    }
    ts_.fail("term");
  }

  Spine spine() {
    if (ts_.accept("[")) {
      ts_.expect("]");
      return nil();
    }
    if (ts_.accept(".1")) return proj1(spine());
    if (ts_.accept(".2")) return proj2(spine());
    if (ts_.accept_keyword("kappa")) {
      Pattern p = pattern();
      ts_.expect(".");
      return with_scope(pattern_binders(p), [&] { return kappa(p, term()); });
    }
    if (ts_.accept("(")) {
      std::vector<DataVal> args;
      while (!(ts_.is_punct("[") || ts_.is_punct(".1") || ts_.is_punct(".2") || ts_.is_keyword("kappa"))) {
        args.push_back(data());
        ts_.expect("::");
      }
      Spine tail = spine();
      ts_.expect(")");
      return spine_of(std::move(args), tail);
    }
    ts_.fail("spine");
  }

  DataVal data() {
    if (ts_.accept_keyword("thunk")) {
      ts_.expect("(");
      Term t = term();
      ts_.expect(")");
      return thunk(t);
    }
    if (ts_.accept("(")) {
      DataVal l = data();
      ts_.expect(",");
      DataVal r = data();
      ts_.expect(")");
      return dpair(l, r);
    }
    if (ts_.accept_keyword("inl")) return inl(data());
    if (ts_.accept_keyword("inr")) return inr(data());
    if (ts_.is_ident() && !is_core_keyword(ts_.peek().text)) return dvar(resolve(ts_.next().text));
    ts_.fail("data");
  }

  Pattern pattern() {
    Pattern p = pattern_atom();
    if (ts_.accept("@")) return pat_at(p, pattern());
    return p;
  }

  NegType neg() {
    if (ts_.accept("Π") || ts_.accept_keyword("Pi")) {
      auto [x, arg] = binder_head();
      return with_scope({x}, [&] { return pi(x, arg, neg()); });
    }
    std::size_t save = ts_.position();
    std::size_t depth = scope_.size();
    try {
      PosType p = pos_binop();
      if (ts_.accept("⊃") || ts_.accept("->")) return imp(p, neg());
    } catch (const ParseError&) {
    }
    ts_.reset(save);
    scope_.resize(depth);
    NegType n = neg_unary();
    while (ts_.accept("∧") || ts_.accept("/\\")) n = with(n, neg_unary());
    return n;
  }

  PosType pos() {
    if (ts_.accept("Σ") || ts_.accept_keyword("Sigma")) {
      auto [x, first] = binder_head();
      return with_scope({x}, [&] { return sigma(x, first, pos()); });
    }
    return pos_binop();
  }

  // Whole-program form: atom / postulate / def items in order.
  Sig program() {
    Sig sig;
    while (!ts_.at_end()) {
      Span at = ts_.span();
      try {
        if (ts_.accept_keyword("atom")) {
          std::string a = ts_.ident("atom name");
          std::size_t arity = 0;
          if (ts_.is_ident() && is_number(ts_.peek().text)) arity = std::stoul(ts_.next().text);
          sig.declare_atom(a, arity);
        } else if (ts_.accept_keyword("postulate")) {
          std::string x = ts_.ident();
          ts_.expect(":");
          sig.add({global(x), neg(), std::nullopt, at});
        } else if (ts_.accept_keyword("def")) {
          std::string x = ts_.ident();
          ts_.expect(":");
          NegType ty = neg();
          ts_.expect("=");
          sig.add({global(x), ty, term(), at});
        } else {
          ts_.fail("'atom', 'postulate' or 'def'");
        }
      } catch (const std::invalid_argument& e) {
        throw ParseError(at, "fresh declaration name", e.what());
      }
    }
    return sig;
  }

  void expect_end() {
    if (!ts_.at_end()) ts_.fail("end of input");
  }

 private:
  TokenStream ts_;
  std::vector<Name> scope_;

  static bool is_number(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  Name resolve(const std::string& text) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->text == text) return *it;
    return global(text);
  }

  template <class F>
  std::invoke_result_t<F> with_scope(const std::vector<Name>& names, F&& body) {
    std::size_t depth = scope_.size();
    scope_.insert(scope_.end(), names.begin(), names.end());
    auto result = body();
    scope_.resize(depth);
    return result;
  }

  Pattern pattern_atom() {
    if (ts_.accept("(")) {
      Pattern l = pattern();
      if (ts_.accept(",")) {
        Pattern r = pattern();
        ts_.expect(")");
        return ppair(l, r);
      }
      ts_.expect(")");
      return l;
    }
    if (ts_.accept("[")) {
      Pattern l = pattern();
      ts_.expect("|");
      Pattern r = pattern();
      ts_.expect("]");
      if (!ts_.is_ident() || ts_.peek().text.size() < 2 || ts_.peek().text[0] != '_') ts_.fail("'_label'");
      Name w = fresh(ts_.next().text.substr(1));
      return por(w, l, r);
    }
    std::string x = ts_.ident("pattern");
    if (x == "_") return wild();
    if (is_core_keyword(x)) ts_.fail("pattern variable");
    return pvar(fresh(x));
  }

  std::pair<Name, PosType> binder_head() {
    ts_.expect("(");
    Name x = fresh(ts_.ident("binder"));
    ts_.expect(":");
    PosType ty = pos();
    ts_.expect(")");
    ts_.expect(".");
    return {x, ty};
  }

  PosType pos_binop() {
    PosType p = pos_unary();
    while (true) {
      if (ts_.accept("∨") || ts_.accept("+")) {
        p = disj(p, pos_unary());
      } else if (ts_.accept("×") || ts_.accept("*")) {
        p = prod(p, pos_unary());
      } else {
        return p;
      }
    }
  }

  PosType pos_unary() {
    if (ts_.accept("↓") || ts_.accept_keyword("down")) return down(neg_unary());
    if (ts_.accept("(")) {
      PosType p = pos();
      ts_.expect(")");
      return p;
    }
    ts_.fail("positive type");
  }

  NegType neg_unary() {
    if (ts_.accept("↑") || ts_.accept_keyword("up")) return up(pos_unary());
    if (ts_.accept("(")) {
      NegType n = neg();
      ts_.expect(")");
      return n;
    }
    if (ts_.is_ident() && !is_core_keyword(ts_.peek().text)) {
      std::string a = ts_.next().text;
      std::vector<DataVal> args;
      if (ts_.accept("{")) {
        args.push_back(data());
        while (ts_.accept(",")) args.push_back(data());
        ts_.expect("}");
      }
      return atom(a, std::move(args));
    }
    ts_.fail("negative type");
  }
};

namespace detail {
template <class T, class F>
T read_whole(std::string_view src, F method, const std::vector<Name>& scope = {}) {
  CoreReader r(src);
  r.bind(scope);
  T out = (r.*method)();
  r.expect_end();
  return out;
}
}  // namespace detail

inline Term read_term(std::string_view src, const std::vector<Name>& scope = {}) {
  return detail::read_whole<Term>(src, &CoreReader::term, scope);
}
inline DataVal read_data(std::string_view src, const std::vector<Name>& scope = {}) {
  return detail::read_whole<DataVal>(src, &CoreReader::data, scope);
}
inline Spine read_spine(std::string_view src, const std::vector<Name>& scope = {}) {
  return detail::read_whole<Spine>(src, &CoreReader::spine, scope);
}
inline NegType read_neg(std::string_view src, const std::vector<Name>& scope = {}) {
  return detail::read_whole<NegType>(src, &CoreReader::neg, scope);
}
inline PosType read_pos(std::string_view src, const std::vector<Name>& scope = {}) {
  return detail::read_whole<PosType>(src, &CoreReader::pos, scope);
}
inline Sig read_program(std::string_view src, std::string file = {}) {
  CoreReader r(src, std::move(file));
  return r.program();
}

inline std::string print_program(const Sig& sig) {
  std::string out;
  for (const auto& [a, arity] : sig.atoms()) {
    out += "atom " + a;
    if (arity) out += " " + std::to_string(arity);
    out += "\n";
  }
  for (const auto& e : sig.entries()) {
    if (e.body) {
      Printer p;
      p.reserve(free_names(e.type));
      p.reserve(free_names(*e.body));
      std::string ty = p.neg(e.type);
      out += "def " + e.name.text + " : " + ty + " = " + p.term(*e.body) + "\n";
    } else {
      out += "postulate " + e.name.text + " : " + print(e.type) + "\n";
    }
  }
  return out;
}

}  // namespace seqcore
