#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqcore/diagnostic.hpp"
#include "seqcore/syntax.hpp"

namespace seqcore {

enum class Mode { propositional, dependent };

inline constexpr std::size_t default_fuel = 10000;

struct CheckOptions {
  Mode mode = Mode::propositional;
  bool structural_patterns = false;
  std::size_t fuel = default_fuel;
  // Reported on every diagnostic raised while checking.
  Span span;
};

struct SigEntry {
  Name name;
  NegType type;
  std::optional<Term> body;  // absent for postulates
  Span span;
};

// The persistent zone Ψ of global declarations: atoms plus typed names.
class Sig {
 public:
  void declare_atom(const std::string& name, std::size_t arity = 0) {
    if (atoms_.count(name) || index_.count(name)) throw std::invalid_argument("duplicate declaration of " + name);
    atoms_[name] = arity;
  }

  bool has_atom(const std::string& name) const { return atoms_.count(name) != 0; }

  std::optional<std::size_t> atom_arity(const std::string& name) const {
    auto it = atoms_.find(name);
    if (it == atoms_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::string, std::size_t>& atoms() const { return atoms_; }

  void add(SigEntry entry) {
    const auto& text = entry.name.text;
    if (atoms_.count(text) || index_.count(text)) throw std::invalid_argument("duplicate declaration of " + text);
    entry.name.id = 0;
    index_[text] = entries_.size();
    entries_.push_back(std::move(entry));
  }

  const SigEntry* find(const std::string& text) const {
    auto it = index_.find(text);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  const SigEntry* find(const Name& name) const { return name.is_global() ? find(name.text) : nullptr; }

  const std::vector<SigEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, std::size_t> atoms_;
  std::vector<SigEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace seqcore
