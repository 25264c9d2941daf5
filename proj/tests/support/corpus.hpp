#pragma once

// Shared signature and scope for the size-bounded term corpus over the
// single atom `a`.

#include <utility>
#include <vector>

#include "seqcore/read.hpp"
#include "support/enumerate.hpp"

namespace oracle {

inline const std::vector<std::pair<const char*, const char*>>& corpus_postulates() {
  static const std::vector<std::pair<const char*, const char*>> ps = {
      {"c", "a"}, {"f", "↓a ⊃ a"}, {"p", "a ∧ a"}, {"u", "↑↓a"}, {"s", "↑(↓a ∨ ↓a)"}};
  return ps;
}

inline Sig corpus_sig() {
  Sig sig;
  sig.declare_atom("a");
  for (const auto& [n, ty] : corpus_postulates()) sig.add({global(n), read_neg(ty), std::nullopt, {}});
  return sig;
}

inline Enumerator::Scope corpus_scope() {
  Enumerator::Scope sc;
  for (const auto& [n, ty] : corpus_postulates()) sc.vars.push_back(global(n));
  return sc;
}

}  // namespace oracle
