#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "seqcore/read.hpp"
#include "seqcore/sig.hpp"

namespace fixtures {

using namespace seqcore;

// atom ℕ; postulate add : ↓ℕ ⊃ ↓ℕ ⊃ ℕ
inline Sig nat_sig() {
  Sig sig;
  sig.declare_atom("ℕ");
  sig.add({global("add"), read_neg("↓ℕ ⊃ ↓ℕ ⊃ ℕ"), std::nullopt, {}});
  return sig;
}

inline const char* f_type_text = "((↓ℕ × ↓ℕ) ∨ ↓ℕ) ⊃ ℕ";
inline const char* f_term_text =
    "\\[(x, y) | z]_w. split w { inl -> add (thunk(x []) :: thunk(y []) :: []) ; inr -> z [] }";

inline Term f_term() { return read_term(f_term_text); }
inline NegType f_type() { return read_neg(f_type_text); }

inline Sig one_atom_sig(const std::string& a = "a") {
  Sig sig;
  sig.declare_atom(a);
  return sig;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string program_path(const std::string& name) { return std::string(SEQCORE_PROGRAMS_DIR) + "/" + name; }

}  // namespace fixtures
