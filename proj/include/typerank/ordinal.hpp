#ifndef TYPERANK_ORDINAL_HPP
#define TYPERANK_ORDINAL_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace typerank {

enum class Order { Less, Equal, Greater };

/// An ordinal below epsilon_0 in Cantor normal form: the sum of omega^e over a
/// non-increasing sequence of exponents e, themselves ordinals. The empty
/// sequence is 0. The constructor enforces the CNF condition, so structural
/// equality coincides with equality of the denoted ordinals.
class Ordinal {
public:
  Ordinal() = default;  // zero

  /// Throws std::invalid_argument if the exponents are not non-increasing.
  explicit Ordinal(std::vector<Ordinal> exponents);

  static Ordinal zero() { return Ordinal(); }
  static Ordinal one();
  static Ordinal omega();
  static Ordinal finite(std::size_t n);

  std::span<const Ordinal> exponents() const;
  std::size_t term_count() const { return terms_ ? terms_->size() : 0; }
  bool is_zero() const { return term_count() == 0; }
  /// Zero or a successor of something smaller: the last exponent is 0.
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
  bool is_finite() const;
  /// Number of terms when finite; meaningless otherwise.
  std::size_t finite_value() const { return term_count(); }

  const Ordinal& leading_exponent() const;
  const Ordinal& last_exponent() const;

  /// Everything except the final CNF term.
  Ordinal without_last_term() const;
  /// For a successor a+1, returns a.
  Ordinal predecessor() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend Order compare_ordinals(const Ordinal& a, const Ordinal& b);

private:
  std::shared_ptr<const std::vector<Ordinal>> terms_;
};

Order compare_ordinals(const Ordinal& a, const Ordinal& b);

/// Ordinal sum, normalized: trailing terms of `a` smaller than the leading term of
/// `b` are absorbed.
Ordinal cantor_add(const Ordinal& a, const Ordinal& b);

/// omega^a as a single CNF term.
Ordinal omega_pow(const Ordinal& a);

/// omega^a . k (k copies of the term omega^a).
Ordinal omega_pow_times(const Ordinal& a, std::size_t k);

/// True iff the CNF of `a` may be appended to that of `g` unchanged, i.e. the
/// leading exponent of `a` is at most the last exponent of `g`.
bool is_cantor_sum(const Ordinal& g, const Ordinal& a);

/// Grammar: Ord ::= Term ("+" Term)* ; Term ::= Nat | "w" ("^" Factor)? ("*" Nat)? ;
/// Factor ::= "w" | Nat | "(" Ord ")". "0" is accepted only as the whole input.
Ordinal parse_ordinal(std::string_view text);

/// CNF with run-length sugar, e.g. "w^2*3 + w + 1".
std::string print_ordinal(const Ordinal& a);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace typerank

#endif  // TYPERANK_ORDINAL_HPP
