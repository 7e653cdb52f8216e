#ifndef TYPERANK_DERIVATION_HPP
#define TYPERANK_DERIVATION_HPP

#include "typerank/ordinal.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace typerank {

/// A proof tree for lhs <= rhs built from six clauses:
///
///   refl        a <= a
///   trans       a <= b, b <= c  gives  a <= c
///   succ        a <= a + 1
///   omega-step  w^a * k <= w^(a+1)
///   sum-mono    a <= b  gives  g + a <= g + b   (both Cantor sums, g > 0)
///   exp-mono    a <= b  gives  w^a <= w^b
///
/// Every node stores the endpoints it claims. The builders compute them;
/// `claimed` records arbitrary endpoints so that bogus trees can be checked.
class LeDerivation {
public:
  enum class Clause { Refl, Trans, Succ, OmegaStep, SumMono, ExpMono };

  static LeDerivation refl(Ordinal a);
  static LeDerivation trans(LeDerivation first, LeDerivation second);
  static LeDerivation succ(Ordinal a);
  static LeDerivation omega_step(Ordinal a, std::size_t k);
  static LeDerivation sum_mono(Ordinal g, LeDerivation inner);
  static LeDerivation exp_mono(LeDerivation inner);

  /// Node with caller-supplied endpoints; `param` is a for refl/succ/omega-step
  /// and g for sum-mono, unused otherwise.
  static LeDerivation claimed(Clause clause, Ordinal param, std::size_t k, std::vector<LeDerivation> children,
                              Ordinal lhs, Ordinal rhs);

  Clause clause() const { return node_->clause; }
  const Ordinal& lhs() const { return node_->lhs; }
  const Ordinal& rhs() const { return node_->rhs; }
  const Ordinal& param() const { return node_->param; }
  std::size_t k() const { return node_->k; }
  const std::vector<LeDerivation>& children() const { return node_->children; }

  std::size_t node_count() const;

private:
  struct Node {
    Clause clause;
    Ordinal param;
    std::size_t k = 0;
    std::vector<LeDerivation> children;
    Ordinal lhs, rhs;
  };
  explicit LeDerivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

const char* clause_name(LeDerivation::Clause clause);

struct DerivationCheck {
  bool ok = true;
  /// Child indices from the root to the first offending node.
  std::vector<std::size_t> path;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Validates every side condition and endpoint equation; never throws.
DerivationCheck check_derivation(const LeDerivation& d);

/// Builds a derivation of a <= b by complete induction on b. When a >= 1 no
/// endpoint in the result is 0. Throws DomainError when a > b.
LeDerivation derive_le(const Ordinal& a, const Ordinal& b);

/// The k-th element (k >= 1) of the standard fundamental sequence of a limit
/// ordinal: head + w^z * k for a last term w^(z+1), and head + w^(delta_k) for a
/// last term w^delta with delta a limit.
Ordinal fundamental_sequence(const Ordinal& limit, std::size_t k);

/// Largest k over omega-step nodes, 0 if there are none.
std::size_t max_omega_step(const LeDerivation& d);

/// True if some node has 0 as an endpoint.
bool mentions_zero(const LeDerivation& d);

}  // namespace typerank

#endif  // TYPERANK_DERIVATION_HPP
