#ifndef TYPERANK_TERM_HPP
#define TYPERANK_TERM_HPP

#include "typerank/type.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typerank {

/// Arbitrary-precision natural number, stored as canonical decimal digits.
/// The calculus never does arithmetic on numerals, only compares them.
class Numeral {
public:
  Numeral() : digits_("0") {}
  explicit Numeral(std::uint64_t n) : digits_(std::to_string(n)) {}
  /// Accepts [0-9]+; leading zeros are dropped.
  static Numeral from_digits(std::string_view digits);

  const std::string& str() const { return digits_; }
  /// The value if it fits in 64 bits.
  std::optional<std::uint64_t> to_u64() const;

  friend bool operator==(const Numeral&, const Numeral&) = default;
  friend std::strong_ordering operator<=>(const Numeral& a, const Numeral& b);

private:
  std::string digits_;
};

/// Terms of the simply typed lambda calculus with binary products, numerals and
/// the conditionals if_n (written `if n s a b`, meaning `s == n ? a : b`).
///
/// Locally nameless: bound variables are de Bruijn indices, free variables are
/// names. Binder names are kept only as printing hints, so `==` is
/// alpha-equivalence.
class Term {
public:
  enum class Kind { Bound, Free, Lam, App, Pair, Fst, Snd, Num, IfN };

  static Term bound(std::size_t index);
  static Term var(std::string name);
  /// Abstracts the free variable `name` in `body`.
  static Term lam(const std::string& name, Type annot, const Term& body);
  /// `body` already refers to the new binder as index 0.
  static Term lam_raw(std::string hint, Type annot, Term body);
  static Term app(Term fun, Term arg);
  static Term pair(Term left, Term right);
  static Term fst(Term t);
  static Term snd(Term t);
  static Term num(Numeral n);
  static Term num(std::uint64_t n) { return num(Numeral(n)); }
  static Term if_n(Numeral n, Term scrut, Term then_branch, Term else_branch);

  Kind kind() const { return node_->kind; }
  std::size_t index() const { return node_->index; }
  /// Free-variable name or binder hint.
  const std::string& name() const { return node_->name; }
  const Type& annot() const;
  const Numeral& numeral() const { return node_->numeral; }
  std::span<const Term> children() const { return node_->children; }
  const Term& child(std::size_t i) const { return node_->children.at(i); }

  std::size_t size() const { return node_->size; }

  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    std::string name;
    std::optional<Type> annot;
    Numeral numeral;
    std::vector<Term> children;
    std::size_t size = 1;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);
  std::shared_ptr<const Node> node_;
};

/// Left-nested tuple <<t0, t1>, t2> ...; a single element is returned as is.
Term tuple(std::span<const Term> items);
/// The `count` components of a left-nested tuple term, as projections.
std::vector<Term> components(const Term& t, std::size_t count);
/// f a1 a2 ...
Term apply(Term f, std::initializer_list<Term> args);

/// Shifts free de Bruijn indices >= cutoff by delta.
Term shift(const Term& t, std::ptrdiff_t delta, std::size_t cutoff = 0);
/// Replaces index 0 in `body` by `value` and lowers the other indices.
Term instantiate(const Term& body, const Term& value);

std::vector<std::string> free_variables(const Term& t);
/// All numerals and if-indices occurring in the term.
std::vector<Numeral> numerals(const Term& t);

using Context = std::vector<std::pair<std::string, Type>>;

/// Ill-typed term. `path` is the sequence of child indices from the root.
class TypeError : public std::runtime_error {
public:
  TypeError(std::vector<std::size_t> path, std::optional<Type> expected, std::optional<Type> actual,
            const std::string& message);

  const std::vector<std::size_t>& path() const { return path_; }
  const std::optional<Type>& expected() const { return expected_; }
  const std::optional<Type>& actual() const { return actual_; }

private:
  std::vector<std::size_t> path_;
  std::optional<Type> expected_, actual_;
};

/// Simple type of `t` in `context` (later entries shadow earlier ones).
/// Children are checked left to right before the node itself.
Type typecheck(const Context& context, const Term& t);
Type typecheck(const Term& t);

/// eta-long beta-normal form of a term of the given type: no redexes, every
/// arrow-typed subterm is a lambda and every product-typed subterm a pair,
/// except inside neutral heads. Typechecks first (TypeError).
Term normalize(const Term& t, const Type& type, const Context& context = {});

/// beta-eta equality with surjective pairing and the if_n rules.
bool equal_terms(const Term& a, const Term& b, const Type& type, const Context& context = {});

/// Removes eta-redexes (\x. f x with x not free in f, <fst t, snd t>).
Term eta_contract(const Term& t);

/// The short normal form used for display: eta_contract(normalize(t)).
Term normalize_compact(const Term& t, const Type& type, const Context& context = {});

enum class Strategy { NormalOrder, Innermost };

/// Plain small-step beta/projection/if reduction without eta, leftmost-outermost
/// or leftmost-innermost. Throws std::runtime_error when `max_steps` is exceeded.
Term reduce(const Term& t, Strategy strategy, std::size_t max_steps = 1'000'000);

/// Grammar: Term ::= "\" Ident ":" Type "." Term | App ; App ::= App Prim | Prim ;
/// Prim ::= Ident | Nat | "<" Term "," Term ">" | "fst" Prim | "snd" Prim
///        | "if" Nat Prim Prim Prim | "(" Term ")".
Term parse_term(std::string_view text);
std::string print_term(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace typerank

#endif  // TYPERANK_TERM_HPP
