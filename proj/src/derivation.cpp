#include "typerank/derivation.hpp"

#include "typerank/type.hpp"

#include <algorithm>
#include <stdexcept>

namespace typerank {

namespace {

Ordinal successor(const Ordinal& a) { return cantor_add(a, Ordinal::one()); }

}  // namespace

LeDerivation LeDerivation::refl(Ordinal a) {
  Ordinal lhs = a, rhs = a;
  return LeDerivation(std::make_shared<const Node>(Node{Clause::Refl, std::move(a), 0, {}, lhs, rhs}));
}

LeDerivation LeDerivation::trans(LeDerivation first, LeDerivation second) {
  Ordinal lhs = first.lhs(), rhs = second.rhs();
  return LeDerivation(std::make_shared<const Node>(
      Node{Clause::Trans, Ordinal(), 0, {std::move(first), std::move(second)}, std::move(lhs), std::move(rhs)}));
}

LeDerivation LeDerivation::succ(Ordinal a) {
  Ordinal rhs = successor(a);
  Ordinal lhs = a;
  return LeDerivation(
      std::make_shared<const Node>(Node{Clause::Succ, std::move(a), 0, {}, std::move(lhs), std::move(rhs)}));
}

LeDerivation LeDerivation::omega_step(Ordinal a, std::size_t k) {
  Ordinal lhs = omega_pow_times(a, k);
  Ordinal rhs = omega_pow(successor(a));
  return LeDerivation(
      std::make_shared<const Node>(Node{Clause::OmegaStep, std::move(a), k, {}, std::move(lhs), std::move(rhs)}));
}

LeDerivation LeDerivation::sum_mono(Ordinal g, LeDerivation inner) {
  Ordinal lhs = cantor_add(g, inner.lhs());
  Ordinal rhs = cantor_add(g, inner.rhs());
  return LeDerivation(std::make_shared<const Node>(
      Node{Clause::SumMono, std::move(g), 0, {std::move(inner)}, std::move(lhs), std::move(rhs)}));
}

LeDerivation LeDerivation::exp_mono(LeDerivation inner) {
  Ordinal lhs = omega_pow(inner.lhs());
  Ordinal rhs = omega_pow(inner.rhs());
  return LeDerivation(std::make_shared<const Node>(
      Node{Clause::ExpMono, Ordinal(), 0, {std::move(inner)}, std::move(lhs), std::move(rhs)}));
}

LeDerivation LeDerivation::claimed(Clause clause, Ordinal param, std::size_t k, std::vector<LeDerivation> children,
                                   Ordinal lhs, Ordinal rhs) {
  return LeDerivation(std::make_shared<const Node>(
      Node{clause, std::move(param), k, std::move(children), std::move(lhs), std::move(rhs)}));
}

std::size_t LeDerivation::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.node_count();
  return n;
}

const char* clause_name(LeDerivation::Clause clause) {
  switch (clause) {
    case LeDerivation::Clause::Refl:
      return "refl";
    case LeDerivation::Clause::Trans:
      return "trans";
    case LeDerivation::Clause::Succ:
      return "succ";
    case LeDerivation::Clause::OmegaStep:
      return "omega-step";
    case LeDerivation::Clause::SumMono:
      return "sum-mono";
    case LeDerivation::Clause::ExpMono:
      return "exp-mono";
  }
  return "?";
}

namespace {

std::size_t expected_arity(LeDerivation::Clause clause) {
  switch (clause) {
    case LeDerivation::Clause::Trans:
      return 2;
    case LeDerivation::Clause::SumMono:
    case LeDerivation::Clause::ExpMono:
      return 1;
    default:
      return 0;
  }
}

std::string endpoints(const Ordinal& lhs, const Ordinal& rhs) {
  return print_ordinal(lhs) + " <= " + print_ordinal(rhs);
}

// Side conditions of a single node, children assumed valid.
std::string local_violation(const LeDerivation& d) {
  using Clause = LeDerivation::Clause;
  const auto& kids = d.children();
  if (kids.size() != expected_arity(d.clause())) return "wrong number of premises";
  auto claims = [&](const Ordinal& lhs, const Ordinal& rhs) -> std::string {
    if (d.lhs() == lhs && d.rhs() == rhs) return {};
    return "claimed " + endpoints(d.lhs(), d.rhs()) + " but the clause yields " + endpoints(lhs, rhs);
  };
  switch (d.clause()) {
    case Clause::Refl:
      return claims(d.param(), d.param());
    case Clause::Trans:
      if (kids[0].rhs() != kids[1].lhs()) {
        return "premises do not chain: " + print_ordinal(kids[0].rhs()) + " vs " + print_ordinal(kids[1].lhs());
      }
      return claims(kids[0].lhs(), kids[1].rhs());
    case Clause::Succ:
      return claims(d.param(), successor(d.param()));
    case Clause::OmegaStep:
      return claims(omega_pow_times(d.param(), d.k()), omega_pow(successor(d.param())));
    case Clause::SumMono:
      if (d.param().is_zero()) return "sum-mono requires a nonzero prefix";
      if (!is_cantor_sum(d.param(), kids[0].lhs()) || !is_cantor_sum(d.param(), kids[0].rhs())) {
        return "not a Cantor sum";
      }
      return claims(cantor_add(d.param(), kids[0].lhs()), cantor_add(d.param(), kids[0].rhs()));
    case Clause::ExpMono:
      return claims(omega_pow(kids[0].lhs()), omega_pow(kids[0].rhs()));
  }
  return "unknown clause";
}

void check_into(const LeDerivation& d, std::vector<std::size_t>& path, DerivationCheck& out) {
  if (d.children().size() == expected_arity(d.clause())) {
    for (std::size_t i = 0; i < d.children().size(); ++i) {
      path.push_back(i);
      check_into(d.children()[i], path, out);
      if (!out.ok) return;
      path.pop_back();
    }
  }
  std::string violation = local_violation(d);
  if (violation.empty() && d.rhs() < d.lhs()) violation = "endpoints out of order";
  if (!violation.empty()) {
    out.ok = false;
    out.path = path;
    out.message = std::string(clause_name(d.clause())) + ": " + violation;
  }
}

}  // namespace

DerivationCheck check_derivation(const LeDerivation& d) {
  DerivationCheck out;
  std::vector<std::size_t> path;
  check_into(d, path, out);
  return out;
}

Ordinal fundamental_sequence(const Ordinal& limit, std::size_t k) {
  if (!limit.is_limit()) throw std::logic_error("fundamental_sequence of a non-limit");
  if (k == 0) throw std::logic_error("fundamental sequences are indexed from 1");
  Ordinal head = limit.without_last_term();
  const Ordinal& top = limit.last_exponent();
  if (top.is_successor()) return cantor_add(head, omega_pow_times(top.predecessor(), k));
  return cantor_add(head, omega_pow(fundamental_sequence(top, k)));
}

namespace {

constexpr std::size_t kSearchLimit = 1'000'000;

// Prepends the sum-mono wrapper unless the prefix is empty.
LeDerivation lift(const Ordinal& prefix, LeDerivation inner) {
  if (prefix.is_zero()) return inner;
  return LeDerivation::sum_mono(prefix, std::move(inner));
}

// Transitivity, dropping a reflexive first premise.
LeDerivation chain(LeDerivation first, LeDerivation second) {
  if (first.clause() == LeDerivation::Clause::Refl) return second;
  return LeDerivation::trans(std::move(first), std::move(second));
}

LeDerivation derive(const Ordinal& a, const Ordinal& b) {
  if (a == b) return LeDerivation::refl(b);
  // Here a < b, so b > 0.
  if (b.is_successor()) {
    Ordinal pred = b.predecessor();
    return chain(derive(a, pred), LeDerivation::succ(pred));
  }
  Ordinal prefix = b.without_last_term();
  const Ordinal& delta = b.last_exponent();
  if (delta.is_successor()) {
    Ordinal zeta = delta.predecessor();
    for (std::size_t k = 1; k < kSearchLimit; ++k) {
      Ordinal mid = cantor_add(prefix, omega_pow_times(zeta, k));
      if (a <= mid) return chain(derive(a, mid), lift(prefix, LeDerivation::omega_step(zeta, k)));
    }
  } else {
    for (std::size_t k = 1; k < kSearchLimit; ++k) {
      Ordinal delta_k = fundamental_sequence(delta, k);
      Ordinal mid = cantor_add(prefix, omega_pow(delta_k));
      if (a <= mid) {
        return chain(derive(a, mid), lift(prefix, LeDerivation::exp_mono(derive(delta_k, delta))));
      }
    }
  }
  throw std::logic_error("derive_le: search bound exceeded");
}

}  // namespace

LeDerivation derive_le(const Ordinal& a, const Ordinal& b) {
  if (b < a) throw DomainError("derive_le: " + print_ordinal(a) + " > " + print_ordinal(b));
  return derive(a, b);
}

std::size_t max_omega_step(const LeDerivation& d) {
  std::size_t best = d.clause() == LeDerivation::Clause::OmegaStep ? d.k() : 0;
  for (const auto& c : d.children()) best = std::max(best, max_omega_step(c));
  return best;
}

bool mentions_zero(const LeDerivation& d) {
  if (d.lhs().is_zero() || d.rhs().is_zero()) return true;
  return std::any_of(d.children().begin(), d.children().end(), [](const auto& c) { return mentions_zero(c); });
}

}  // namespace typerank
