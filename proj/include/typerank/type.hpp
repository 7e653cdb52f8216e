#ifndef TYPERANK_TYPE_HPP
#define TYPERANK_TYPE_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace typerank {

/// Raised by every textual parser in the library (types, ordinals, terms).
/// `position` is a character offset into the input, at most its length.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at offset " + std::to_string(position) + ": " + message),
        position_(position), message_(message) {}

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

private:
  std::size_t position_;
  std::string message_;
};

/// Raised when an operation is asked for something outside its domain
/// (a retraction against the order, the ordinal 0 as a type rank, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A simple type over the single base type N: N | a -> b | a * b.
///
/// Immutable and cheap to copy (shared structure). Equality and ordering are
/// structural.
class Type {
public:
  enum class Kind { Base, Arrow, Prod };

  static Type nat();
  static Type arrow(Type domain, Type codomain);
  static Type prod(Type left, Type right);

  Kind kind() const;
  bool is_base() const { return kind() == Kind::Base; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  bool is_prod() const { return kind() == Kind::Prod; }

  // Children: domain/codomain for arrows, left/right for products.
  const Type& left() const;
  const Type& right() const;
  const Type& domain() const { return left(); }
  const Type& codomain() const { return right(); }

  /// Number of AST nodes (N counts as one).
  std::size_t size() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind;
  std::size_t size;
  // Empty for Base.
  std::unique_ptr<Type> left, right;
};

inline Type::Kind Type::kind() const { return node_->kind; }
inline std::size_t Type::size() const { return node_->size; }

/// Parses `Type ::= ProdTy ("->" Type)? ; ProdTy ::= Atom ("*" Atom)* ;
/// Atom ::= "N" | "(" Type ")"`. Whitespace between tokens is ignored.
Type parse_type(std::string_view text);

/// Minimal parenthesization; `parse_type(print_type(t)) == t`.
std::string print_type(const Type& t);

/// level(N) = 0, level(a -> b) = max(level(a) + 1, level(b)),
/// level(a * b) = max(level(a), level(b)).
unsigned level(const Type& t);

std::ostream& operator<<(std::ostream& os, const Type& t);

}  // namespace typerank

#endif  // TYPERANK_TYPE_HPP
