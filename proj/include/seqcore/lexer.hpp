#pragma once

// Tokenizer shared by the core reader and the surface parser.

#include <array>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqcore/diagnostic.hpp"

namespace seqcore {

struct Token {
  enum Kind { ident, punct, end } kind = end;
  std::string text;
  int line = 1;
  int col = 1;
};

struct ParseError : std::runtime_error {
  Span span;
  std::string expected;
  std::string found;

  ParseError(Span s, std::string exp, std::string fnd)
      : std::runtime_error("parse error"), span(std::move(s)), expected(std::move(exp)), found(std::move(fnd)) {}

  Diagnostic diagnostic() const {
    Diagnostic d = make_diagnostic(rule::parse, expected, found);
    d.span = span;
    return d;
  }
};

namespace detail {

inline constexpr std::array<std::string_view, 6> long_punct = {"::", "->", "=>", "/\\", ".1", ".2"};
inline constexpr std::string_view short_punct = "()[]{}<>,;:.\\@=|*+";
inline constexpr std::array<std::string_view, 12> unicode_punct = {"↑", "↓", "⊃", "∧", "∨", "×",
                                                                   "Π", "Σ", "→", "⇒", "⊎", "λ"};

inline std::size_t utf8_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xe) return 3;
  if ((c >> 3) == 0x1e) return 4;
  return 1;
}

inline bool ident_start_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

}  // namespace detail

inline std::vector<Token> tokenize(std::string_view src, const std::string& file = {}) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      unsigned char c = static_cast<unsigned char>(src[i + k]);
      if (c == '\n') {
        ++line;
        col = 1;
      } else if ((c & 0xc0) != 0x80) {
        ++col;
      }
    }
    i += n;
  };
  auto unicode_at = [&](std::size_t pos) -> std::string_view {
    for (auto p : detail::unicode_punct)
      if (src.substr(pos, p.size()) == p) return p;
    return {};
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    bool matched = false;
    for (auto p : detail::long_punct) {
      if (src.substr(i, p.size()) == p) {
        tok.kind = Token::punct;
        tok.text = std::string(p);
        advance(p.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      if (auto u = unicode_at(i); !u.empty()) {
        tok.kind = Token::punct;
        tok.text = std::string(u);
        advance(u.size());
        matched = true;
      } else if (detail::short_punct.find(static_cast<char>(c)) != std::string_view::npos) {
        tok.kind = Token::punct;
        tok.text = std::string(1, static_cast<char>(c));
        advance(1);
        matched = true;
      }
    }
    if (!matched) {
      if (!detail::ident_start_byte(c)) throw ParseError({file, line, col}, "token", std::string(1, static_cast<char>(c)));
      std::size_t j = i;
      while (j < src.size()) {
        unsigned char d = static_cast<unsigned char>(src[j]);
        if (d >= 0x80) {
          if (!unicode_at(j).empty()) break;
          j += detail::utf8_length(d);
        } else if (std::isalnum(d) || d == '_' || d == '\'') {
          ++j;
        } else {
          break;
        }
      }
      tok.kind = Token::ident;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    }
    out.push_back(std::move(tok));
  }
  Token eof;
  eof.kind = Token::end;
  eof.line = line;
  eof.col = col;
  out.push_back(eof);
  return out;
}

// Cursor over a token vector with the usual helpers.
class TokenStream {
 public:
  TokenStream(std::vector<Token> toks, std::string file) : toks_(std::move(toks)), file_(std::move(file)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::end; }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::punct && t.text == p;
  }
  bool is_ident(std::size_t ahead = 0) const { return peek(ahead).kind == Token::ident; }
  bool is_keyword(std::string_view k, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::ident && t.text == k;
  }

  bool accept(std::string_view p) {
    if (is_punct(p)) {
      next();
      return true;
    }
    return false;
  }
  bool accept_keyword(std::string_view k) {
    if (is_keyword(k)) {
      next();
      return true;
    }
    return false;
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail(std::string("'") + std::string(p) + "'");
  }
  void expect_keyword(std::string_view k) {
    if (!accept_keyword(k)) fail(std::string("'") + std::string(k) + "'");
  }
  std::string ident(std::string_view what = "identifier") {
    if (!is_ident()) fail(std::string(what));
    return next().text;
  }

  [[noreturn]] void fail(std::string expected) const {
    const Token& t = peek();
    throw ParseError(span(), std::move(expected), t.kind == Token::end ? "end of input" : "'" + t.text + "'");
  }

  Span span() const { return {file_, peek().line, peek().col}; }
  const std::string& file() const { return file_; }
  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

 private:
  std::vector<Token> toks_;
  std::string file_;
  std::size_t pos_ = 0;
};

}  // namespace seqcore
