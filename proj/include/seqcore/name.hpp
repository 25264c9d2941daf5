#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace seqcore {

// An identifier. Global (signature) names have id 0; every binder gets a
// process-wide fresh id so that substitution can never capture by accident.
struct Name {
  std::string text;
  std::uint64_t id = 0;

  bool is_global() const { return id == 0; }

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;
};

inline std::uint64_t next_name_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

inline Name fresh(std::string text) { return Name{std::move(text), next_name_id()}; }
inline Name fresh_like(const Name& n) { return fresh(n.text); }
inline Name global(std::string text) { return Name{std::move(text), 0}; }

struct NameHash {
  std::size_t operator()(const Name& n) const noexcept {
    return std::hash<std::string>{}(n.text) ^ (std::hash<std::uint64_t>{}(n.id) * 0x9e3779b97f4a7c15ULL);
  }
};

}  // namespace seqcore
