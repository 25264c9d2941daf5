#pragma once

// Splitting trees for clause sets: first-match semantics, constructor tests
// ordered by the leftmost column in which some clause has a constructor.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqcore/diagnostic.hpp"
#include "seqcore/print.hpp"
#include "seqcore/surface/ast.hpp"

namespace seqcore::surface {

struct CompileError : std::runtime_error {
  Diagnostic diag;
  explicit CompileError(Diagnostic d) : std::runtime_error(d.render()), diag(std::move(d)) {}
};

[[noreturn]] inline void compile_fail(std::string_view rule, std::string expected, std::string found, Span span,
                                      std::string note = {}) {
  Diagnostic d = make_diagnostic(rule, std::move(expected), std::move(found), std::move(note));
  d.span = std::move(span);
  throw CompileError(std::move(d));
}

enum class Step : std::uint8_t { fst, snd, inl, inr };

// A position inside argument `arg`.
struct Occ {
  std::size_t arg = 0;
  std::vector<Step> path;

  Occ operator+(Step s) const {
    Occ o = *this;
    o.path.push_back(s);
    return o;
  }
  friend bool operator==(const Occ&, const Occ&) = default;
  friend auto operator<=>(const Occ&, const Occ&) = default;
};

inline std::optional<PosType> type_at(const std::vector<PosType>& args, const Occ& o) {
  PosType ty = args.at(o.arg);
  for (Step s : o.path) {
    if (s == Step::fst || s == Step::snd) {
      if (auto p = ty.as<Prod>()) {
        ty = s == Step::fst ? p->left : p->right;
      } else if (auto sg = ty.as<Sigma>()) {
        ty = s == Step::fst ? sg->first : sg->second;
      } else {
        return std::nullopt;
      }
    } else {
      auto o2 = ty.as<Or>();
      if (!o2) return std::nullopt;
      ty = s == Step::inl ? o2->left : o2->right;
    }
  }
  return ty;
}

struct CaseTree {
  enum Kind { leaf, split, pair, fail } kind = fail;
  Occ occ;
  std::vector<CaseTree> children;
  std::size_t clause = 0;
  std::vector<std::pair<std::string, Occ>> bindings;

  bool has_fail() const {
    if (kind == fail) return true;
    for (const auto& c : children)
      if (c.has_fail()) return true;
    return false;
  }

  void leaves(std::set<std::size_t>& out) const {
    if (kind == leaf) out.insert(clause);
    for (const auto& c : children) c.leaves(out);
  }
};

// Constructor choices made on the way to a node: occurrence → took inl.
using Decisions = std::map<Occ, bool>;

namespace detail {

inline bool is_product(const PosType& ty) { return ty.is<Prod>() || ty.is<Sigma>(); }

inline std::string render_pat(const Pat& p);

inline std::string render_atomic(const Pat& p) {
  if (p.is<SVar>() || p.is<SWild>() || p.is<SPair>()) return render_pat(p);
  return "(" + render_pat(p) + ")";
}

inline std::string render_pat(const Pat& p) {
  if (auto v = p.as<SVar>()) return v->name;
  if (p.is<SWild>()) return "_";
  if (auto a = p.as<SAs>()) return a->name + "@" + render_atomic(a->body);
  if (auto pr = p.as<SPair>()) return "(" + render_pat(pr->left) + ", " + render_pat(pr->right) + ")";
  if (auto l = p.as<SInl>()) return "inl " + render_atomic(l->body);
  return "inr " + render_atomic(p.as<SInr>()->body);
}

class TreeBuilder {
 public:
  TreeBuilder(std::vector<PosType> args, Span span) : args_(std::move(args)), span_(std::move(span)) {}

  struct Row {
    std::vector<Pat> cols;
    std::vector<std::pair<std::string, Occ>> binds;
    std::size_t clause;
  };

  CaseTree build(std::vector<Occ> cols, std::vector<Row> rows, Decisions dec) {
    for (auto& r : rows) strip(cols, r);
    if (rows.empty()) {
      if (!missing_) missing_ = witness(dec);
      return CaseTree{};
    }
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < cols.size() && !col; ++c)
      for (const auto& r : rows)
        if (!r.cols[c].is<SWild>()) {
          col = c;
          break;
        }
    if (!col) {
      CaseTree t;
      t.kind = CaseTree::leaf;
      t.clause = rows.front().clause;
      t.bindings = rows.front().binds;
      return t;
    }
    std::size_t c = *col;
    Occ occ = cols[c];
    PosType ty = *type_at(args_, occ);
    if (is_product(ty)) {
      std::vector<Occ> ncols = replace(cols, c, {occ + Step::fst, occ + Step::snd});
      for (auto& r : rows) {
        Pat p = r.cols[c];
        auto pr = p.as<SPair>();
        if (!pr && !p.is<SWild>()) mismatch(p, ty);
        std::vector<Pat> parts = pr ? std::vector<Pat>{pr->left, pr->right} : std::vector<Pat>{SWild{}, SWild{}};
        r.cols = replace(r.cols, c, parts);
      }
      CaseTree t;
      t.kind = CaseTree::pair;
      t.occ = occ;
      t.children.push_back(build(std::move(ncols), std::move(rows), std::move(dec)));
      return t;
    }
    if (!ty.is<Or>()) mismatch(first_constructor(rows, c), ty);
    CaseTree t;
    t.kind = CaseTree::split;
    t.occ = occ;
    for (bool left : {true, false}) {
      std::vector<Row> sub;
      for (const auto& r : rows) {
        const Pat& p = r.cols[c];
        std::optional<Pat> inner;
        if (p.is<SWild>()) {
          inner = SWild{};
        } else if (auto l = p.as<SInl>()) {
          if (left) inner = l->body;
        } else if (auto rr = p.as<SInr>()) {
          if (!left) inner = rr->body;
        } else {
          mismatch(p, ty);
        }
        if (!inner) continue;
        Row nr = r;
        nr.cols = replace(r.cols, c, {*inner});
        sub.push_back(std::move(nr));
      }
      Decisions d2 = dec;
      d2[occ] = left;
      t.children.push_back(build(replace(cols, c, {occ + (left ? Step::inl : Step::inr)}), std::move(sub), std::move(d2)));
    }
    return t;
  }

  const std::optional<std::string>& missing() const { return missing_; }

 private:
  std::vector<PosType> args_;
  Span span_;
  std::optional<std::string> missing_;

  // Moves variables and as-patterns into bindings.
  static void strip(const std::vector<Occ>& cols, Row& r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      while (true) {
        if (auto v = r.cols[c].as<SVar>()) {
          r.binds.emplace_back(v->name, cols[c]);
          r.cols[c] = SWild{};
        } else if (auto a = r.cols[c].as<SAs>()) {
          r.binds.emplace_back(a->name, cols[c]);
          Pat body = a->body;
          r.cols[c] = body;
        } else {
          break;
        }
      }
    }
  }

  template <class T>
  static std::vector<T> replace(const std::vector<T>& xs, std::size_t at, const std::vector<T>& with) {
    std::vector<T> out(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(at));
    out.insert(out.end(), with.begin(), with.end());
    out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(at) + 1, xs.end());
    return out;
  }

  static Pat first_constructor(const std::vector<Row>& rows, std::size_t c) {
    for (const auto& r : rows)
      if (!r.cols[c].is<SWild>()) return r.cols[c];
    return SWild{};
  }

  [[noreturn]] void mismatch(const Pat& p, const PosType& ty) const {
    compile_fail(rule::elaborate, "pattern for " + print(ty), render_pat(p), span_, "pattern does not fit the argument type");
  }

  std::string witness_at(const Occ& o, const Decisions& dec) const {
    PosType ty = *type_at(args_, o);
    if (auto it = dec.find(o); it != dec.end()) {
      Occ inner = o + (it->second ? Step::inl : Step::inr);
      std::string sub = witness_at(inner, dec);
      if (sub.find(' ') != std::string::npos) sub = "(" + sub + ")";
      return (it->second ? "inl " : "inr ") + sub;
    }
    if (is_product(ty)) {
      std::string l = witness_at(o + Step::fst, dec), r = witness_at(o + Step::snd, dec);
      if (l != "_" || r != "_") return "(" + l + ", " + r + ")";
    }
    return "_";
  }

  std::string witness(const Decisions& dec) const {
    std::string out;
    for (std::size_t i = 0; i < args_.size(); ++i) {
      std::string w = witness_at(Occ{i, {}}, dec);
      if (args_.size() > 1 && w.find(' ') != std::string::npos && w.front() != '(') w = "(" + w + ")";
      out += (i ? " " : "") + w;
    }
    return out;
  }
};

}  // namespace detail

struct TreeResult {
  CaseTree tree;
  std::optional<std::string> missing;  // witness of a non-covered argument vector
};

inline TreeResult build_case_tree(const std::vector<Clause>& clauses, const std::vector<PosType>& args, Span span) {
  detail::TreeBuilder b(args, span);
  std::vector<Occ> cols;
  for (std::size_t i = 0; i < args.size(); ++i) cols.push_back(Occ{i, {}});
  std::vector<detail::TreeBuilder::Row> rows;
  for (std::size_t i = 0; i < clauses.size(); ++i) rows.push_back({clauses[i].lhs, {}, i});
  TreeResult out{b.build(cols, rows, {}), std::nullopt};
  out.missing = b.missing();
  return out;
}

// Whether some argument vector matches both pattern lists.
inline bool overlaps(const std::vector<Pat>& a, const std::vector<Pat>& b) {
  std::function<bool(const Pat&, const Pat&)> go = [&](const Pat& p, const Pat& q) -> bool {
    if (p.is<SVar>() || p.is<SWild>() || q.is<SVar>() || q.is<SWild>()) return true;
    if (auto s = p.as<SAs>()) return go(s->body, q);
    if (auto s = q.as<SAs>()) return go(p, s->body);
    if (auto x = p.as<SPair>()) {
      auto y = q.as<SPair>();
      return y && go(x->left, y->left) && go(x->right, y->right);
    }
    if (auto x = p.as<SInl>()) {
      auto y = q.as<SInl>();
      return y && go(x->body, y->body);
    }
    auto x = p.as<SInr>();
    auto y = q.as<SInr>();
    return x && y && go(x->body, y->body);
  };
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (!go(a[i], b[i])) return false;
  return true;
}

}  // namespace seqcore::surface
