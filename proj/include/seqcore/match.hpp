#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seqcore/print.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore {

struct MatchResult {
  bool ok = true;
  // Variables of the pattern, left to right.
  std::vector<std::pair<Name, DataVal>> bindings;
  // Or-labels met on the way and whether the left branch was taken.
  std::vector<std::pair<Name, bool>> branches;
  std::string mismatch;
};

namespace detail {

inline bool match_into(const Pattern& p, const DataVal& d, MatchResult& out) {
  if (auto v = p.as<PVar>()) {
    out.bindings.emplace_back(v->name, d);
    return true;
  }
  if (p.is<PWild>()) return true;
  if (auto at = p.as<PAt>()) return match_into(at->left, d, out) && match_into(at->right, d, out);
  if (auto pp = p.as<PPair>()) {
    auto dp = d.as<DPair>();
    if (!dp) {
      out.mismatch = "pair pattern against " + print(d);
      return false;
    }
    return match_into(pp->left, dp->left, out) && match_into(pp->right, dp->right, out);
  }
  auto po = p.as<POr>();
  if (auto l = d.as<Inl>()) {
    out.branches.emplace_back(po->label, true);
    return match_into(po->left, l->body, out);
  }
  if (auto r = d.as<Inr>()) {
    out.branches.emplace_back(po->label, false);
    return match_into(po->right, r->body, out);
  }
  out.mismatch = "or-pattern against " + print(d);
  return false;
}

}  // namespace detail

inline MatchResult match_pattern(const Pattern& p, const DataVal& d) {
  MatchResult out;
  if (!detail::match_into(p, d, out)) {
    out.ok = false;
    out.bindings.clear();
    out.branches.clear();
  }
  return out;
}

}  // namespace seqcore
