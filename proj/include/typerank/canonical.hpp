#ifndef TYPERANK_CANONICAL_HPP
#define TYPERANK_CANONICAL_HPP

#include "typerank/ordinal.hpp"
#include "typerank/term.hpp"
#include "typerank/type.hpp"

namespace typerank {

/// A type in uncurried form,
///
///   rho   ::= N | theta -> N
///   theta ::= rho | theta * rho      (left-nested)
///
/// whose product factors are sorted by non-increasing rank. Each class of
/// trivially isomorphic types has exactly one canonical representative, and
/// the canonical types are in bijection with the nonzero ordinals below
/// epsilon_0.
class CanonicalType {
public:
  const Type& type() const { return type_; }

  friend bool operator==(const CanonicalType&, const CanonicalType&) = default;

private:
  explicit CanonicalType(Type t) : type_(std::move(t)) {}
  friend CanonicalType canonicalize(const Type& t);
  friend CanonicalType type_of_ordinal(const Ordinal& a);
  Type type_;
};

/// True if `t` is literally in canonical form.
bool is_canonical(const Type& t);

/// The canonical representative of the trivial-isomorphism class of `t`.
CanonicalType canonicalize(const Type& t);

/// Rank of `t`: computed on its canonical form as N |-> 1, theta -> N |-> w^R(theta),
/// and the sum over product factors. Always >= 1.
Ordinal rank(const Type& t);

/// The unique canonical type of rank `a`. Throws DomainError for a = 0.
CanonicalType type_of_ordinal(const Ordinal& a);

/// The encodability preorder: compares the ranks.
Order compare_types(const Type& s, const Type& t);

bool trivially_isomorphic(const Type& s, const Type& t);

/// Mutually inverse coercions between two trivially isomorphic types. Both
/// terms are closed and use neither numerals nor conditionals.
struct IsoWitness {
  Type source, target;
  Term fwd;  // source -> target
  Term bwd;  // target -> source
};

/// Throws DomainError when the types are not trivially isomorphic.
IsoWitness iso_witness(const Type& s, const Type& t);

}  // namespace typerank

#endif  // TYPERANK_CANONICAL_HPP
