#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqcore {

struct Span {
  std::string file;
  int line = 0;
  int col = 0;
};

// Identifiers of the rules a diagnostic can blame.
namespace rule {
inline constexpr std::string_view axiom = "axiom";
inline constexpr std::string_view done = "done";
inline constexpr std::string_view thunk = "thunk";
inline constexpr std::string_view focus = "focus";
inline constexpr std::string_view store = "store";
inline constexpr std::string_view blur = "blur";
inline constexpr std::string_view imp_right = "⊃-right";
inline constexpr std::string_view imp_left = "⊃-left";
inline constexpr std::string_view with_right = "∧-right";
inline constexpr std::string_view with_left1 = "∧-left-1";
inline constexpr std::string_view with_left2 = "∧-left-2";
inline constexpr std::string_view prod_right = "×-right";
inline constexpr std::string_view prod_left = "×-left";
inline constexpr std::string_view or_right1 = "∨-right-1";
inline constexpr std::string_view or_right2 = "∨-right-2";
inline constexpr std::string_view or_left = "∨-left";
inline constexpr std::string_view pi_right = "Π-right";
inline constexpr std::string_view pi_left = "Π-left";
inline constexpr std::string_view sigma_right = "Σ-right";
inline constexpr std::string_view sigma_left = "Σ-left";
inline constexpr std::string_view bind_cut = "bind-cut";
inline constexpr std::string_view app_cut = "app-cut";
inline constexpr std::string_view contraction = "contraction";
inline constexpr std::string_view weakening = "weakening";
inline constexpr std::string_view structural_disabled = "structural-disabled";
inline constexpr std::string_view conversion = "conversion";
inline constexpr std::string_view conversion_fuel = "conversion-fuel";
inline constexpr std::string_view scope = "scope";
inline constexpr std::string_view mode = "mode";
inline constexpr std::string_view well_formed = "well-formed";
inline constexpr std::string_view parse = "parse";
inline constexpr std::string_view coverage = "coverage";
inline constexpr std::string_view elaborate = "elaborate";
inline constexpr std::string_view declaration = "declaration";
}  // namespace rule

struct Diagnostic {
  std::string rule;
  Span span;
  std::string expected;
  std::string found;
  std::string note;
  // Rules of the enclosing judgments, innermost first.
  std::vector<std::string> chain;

  std::string render() const {
    std::ostringstream out;
    out << "ERROR " << rule << " at " << (span.file.empty() ? "<input>" : span.file) << ':' << span.line << ':'
        << span.col << ": expected " << (expected.empty() ? "-" : expected) << ", found "
        << (found.empty() ? "-" : found);
    if (!note.empty()) out << " (" << note << ')';
    return out.str();
  }
};

inline Diagnostic make_diagnostic(std::string_view rule, std::string expected, std::string found,
                                  std::string note = {}) {
  Diagnostic d;
  d.rule = std::string(rule);
  d.expected = std::move(expected);
  d.found = std::move(found);
  d.note = std::move(note);
  return d;
}

class [[nodiscard]] CheckResult {
 public:
  CheckResult() = default;
  CheckResult(Diagnostic d) : error_(std::move(d)) {}

  static CheckResult success() { return {}; }

  bool ok() const { return !error_.has_value(); }
  explicit operator bool() const { return ok(); }
  const Diagnostic& diagnostic() const { return *error_; }

  // Records an enclosing judgment on the way back to the root.
  CheckResult within(std::string_view rule) && {
    if (error_) error_->chain.emplace_back(rule);
    return std::move(*this);
  }

 private:
  std::optional<Diagnostic> error_;
};

struct Warning {
  std::string kind;
  Span span;
  std::string note;

  std::string render() const {
    std::ostringstream out;
    out << "WARNING " << kind << " at " << (span.file.empty() ? "<input>" : span.file) << ':' << span.line << ':'
        << span.col << ": " << note;
    return out.str();
  }
};

}  // namespace seqcore
