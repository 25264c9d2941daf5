#pragma once

// Exhaustive enumeration of core syntax by node count. Every Term,
// Pattern, DataVal and Spine constructor counts one; cut annotations are
// drawn from a fixed pool and do not count.

#include <functional>
#include <vector>

#include "seqcore/read.hpp"
#include "seqcore/syntax.hpp"

namespace oracle {

using namespace seqcore;

struct TypePool {
  std::vector<NegType> neg;
  std::vector<PosType> pos;
};

// Types over the single atom `a`.
inline TypePool one_atom_pool() {
  TypePool p;
  for (const char* s : {"a", "↓a ⊃ a", "↑↓a", "a ∧ a", "(↓a ∨ ↓a) ⊃ a", "(↓a × ↓a) ⊃ a", "↑(↓a ∨ ↓a)",
                        "↑(↓a × ↓a)", "↓(↓a ⊃ a) ⊃ a", "↓a ⊃ ↓a ⊃ a"})
    p.neg.push_back(read_neg(s));
  for (const char* s : {"↓a", "↓a × ↓a", "↓a ∨ ↓a", "↓(↓a ⊃ a)"}) p.pos.push_back(read_pos(s));
  return p;
}

class Enumerator {
 public:
  struct Scope {
    std::vector<Name> vars;
    std::vector<Name> labels;
  };
  struct PatternItem {
    Pattern pat;
    std::vector<Name> vars;
    std::vector<Name> labels;
  };

  Enumerator(TypePool pool, bool structural) : pool_(std::move(pool)), structural_(structural) {}

  std::vector<Term> terms(int size, const Scope& sc) {
    std::vector<Term> out;
    if (size < 1) return out;
    // done d
    for (auto& d : data(size - 1, sc)) out.push_back(done(d));
    // x k
    for (const auto& x : sc.vars)
      for (auto& k : spines(size - 1, sc)) out.push_back(app(x, k));
    for (int ps = 1; ps <= size - 2; ++ps) {
      for (auto& p : patterns(ps)) {
        Scope inner = extend(sc, p);
        for (auto& b : terms(size - 1 - ps, inner)) out.push_back(lam(p.pat, b));
      }
    }
    for (int ls = 1; ls <= size - 2; ++ls) {
      auto lefts = terms(ls, sc);
      if (lefts.empty()) continue;
      auto rights = terms(size - 1 - ls, sc);
      for (auto& l : lefts)
        for (auto& r : rights) {
          out.push_back(pair(l, r));
          for (const auto& w : sc.labels) out.push_back(split(w, l, r));
        }
    }
    // let p : P = d in t
    for (int ps = 1; ps <= size - 3; ++ps) {
      for (auto& p : patterns(ps)) {
        Scope inner = extend(sc, p);
        for (int ds = 1; ds <= size - 2 - ps; ++ds) {
          auto ds_list = data(ds, sc);
          if (ds_list.empty()) continue;
          auto bodies = terms(size - 1 - ps - ds, inner);
          for (auto& d : ds_list)
            for (auto& b : bodies)
              for (const auto& ty : pool_.pos) out.push_back(bind_cut(p.pat, d, ty, b));
        }
      }
    }
    // (t : N) k
    for (int ts = 1; ts <= size - 2; ++ts) {
      auto funs = terms(ts, sc);
      if (funs.empty()) continue;
      auto ks = spines(size - 1 - ts, sc);
      for (auto& t : funs)
        for (auto& k : ks)
          for (const auto& ty : pool_.neg) out.push_back(app_cut(t, ty, k));
    }
    return out;
  }

  std::vector<DataVal> data(int size, const Scope& sc) {
    std::vector<DataVal> out;
    if (size < 1) return out;
    for (auto& t : terms(size - 1, sc)) out.push_back(thunk(t));
    for (auto& d : data(size - 1, sc)) {
      out.push_back(inl(d));
      out.push_back(inr(d));
    }
    for (int ls = 1; ls <= size - 2; ++ls) {
      auto lefts = data(ls, sc);
      auto rights = data(size - 1 - ls, sc);
      for (auto& l : lefts)
        for (auto& r : rights) out.push_back(dpair(l, r));
    }
    return out;
  }

  std::vector<Spine> spines(int size, const Scope& sc) {
    std::vector<Spine> out;
    if (size < 1) return out;
    if (size == 1) out.push_back(nil());
    for (auto& k : spines(size - 1, sc)) {
      out.push_back(proj1(k));
      out.push_back(proj2(k));
    }
    for (int ds = 1; ds <= size - 2; ++ds) {
      auto ds_list = data(ds, sc);
      auto rests = spines(size - 1 - ds, sc);
      for (auto& d : ds_list)
        for (auto& k : rests) out.push_back(cons(d, k));
    }
    for (int ps = 1; ps <= size - 2; ++ps) {
      for (auto& p : patterns(ps)) {
        Scope inner = extend(sc, p);
        for (auto& b : terms(size - 1 - ps, inner)) out.push_back(kappa(p.pat, b));
      }
    }
    return out;
  }

  std::vector<PatternItem> patterns(int size) {
    std::vector<PatternItem> out;
    if (size < 1) return out;
    if (size == 1) {
      Name x = fresh("x");
      out.push_back({pvar(x), {x}, {}});
      if (structural_) out.push_back({wild(), {}, {}});
      return out;
    }
    for (int ls = 1; ls <= size - 2; ++ls) {
      for (auto& l : patterns(ls)) {
        for (auto& r : patterns(size - 1 - ls)) {
          PatternItem both{ppair(l.pat, r.pat), l.vars, l.labels};
          both.vars.insert(both.vars.end(), r.vars.begin(), r.vars.end());
          both.labels.insert(both.labels.end(), r.labels.begin(), r.labels.end());
          out.push_back(both);
          Name w = fresh("w");
          PatternItem alt = both;
          alt.pat = por(w, l.pat, r.pat);
          alt.labels.push_back(w);
          out.push_back(alt);
          if (structural_) {
            PatternItem at = both;
            at.pat = pat_at(l.pat, r.pat);
            out.push_back(at);
          }
        }
      }
    }
    return out;
  }

 private:
  TypePool pool_;
  bool structural_;

  static Scope extend(const Scope& sc, const PatternItem& p) {
    Scope inner = sc;
    inner.vars.insert(inner.vars.end(), p.vars.begin(), p.vars.end());
    inner.labels.insert(inner.labels.end(), p.labels.begin(), p.labels.end());
    return inner;
  }
};

}  // namespace oracle
