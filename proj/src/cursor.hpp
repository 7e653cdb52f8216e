#ifndef TYPERANK_SRC_CURSOR_HPP
#define TYPERANK_SRC_CURSOR_HPP

#include "typerank/type.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace typerank::detail {

// Character cursor shared by the type, ordinal and term parsers.
class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool lookahead(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!lookahead(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_ident_start() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (!peek_ident_start()) fail("expected an identifier");
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_end(const char* what) {
    if (!at_end()) fail(std::string("unexpected input after ") + what);
  }

  std::size_t position() {
    skip_ws();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(position(), message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) { throw ParseError(at, message); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Type grammar entry point reused by the term parser for lambda annotations.
Type parse_type_at(Cursor& cur);

}  // namespace typerank::detail

#endif  // TYPERANK_SRC_CURSOR_HPP
