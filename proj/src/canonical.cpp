#include "typerank/canonical.hpp"

#include <memory>
#include <stdexcept>

namespace typerank {

namespace {

// One factor of a canonical product: N (empty domain, exponent 0) or
// theta -> N with theta the sorted product of `domain`, exponent R(theta).
struct Factor {
  Ordinal exponent;
  std::vector<Factor> domain;
  Type type;
};

Type tuple_type(const std::vector<Factor>& factors) {
  Type acc = factors.at(0).type;
  for (std::size_t i = 1; i < factors.size(); ++i) acc = Type::prod(acc, factors[i].type);
  return acc;
}

Ordinal rank_of(const std::vector<Factor>& factors) {
  std::vector<Ordinal> exponents;
  exponents.reserve(factors.size());
  for (const auto& f : factors) exponents.push_back(f.exponent);
  return Ordinal(std::move(exponents));
}

Factor base_factor() { return Factor{Ordinal::zero(), {}, Type::nat()}; }

Factor arrow_factor(std::vector<Factor> domain) {
  Ordinal exponent = rank_of(domain);
  Type type = Type::arrow(tuple_type(domain), Type::nat());
  return Factor{std::move(exponent), std::move(domain), std::move(type)};
}

// Position of a merged factor in one of the two merged lists.
struct Origin {
  int side;
  std::size_t index;
};

// Stable merge of two lists sorted by non-increasing exponent; ties keep the
// left list first.
std::pair<std::vector<Factor>, std::vector<Origin>> merge(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> out;
  std::vector<Origin> order;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    bool take_left = j == b.size() || (i < a.size() && a[i].exponent >= b[j].exponent);
    if (take_left) {
      out.push_back(a[i]);
      order.push_back({0, i++});
    } else {
      out.push_back(b[j]);
      order.push_back({1, j++});
    }
  }
  return {std::move(out), std::move(order)};
}

// The canonicalization of a type, recorded per AST node so that coercion terms
// can follow the same rewriting.
struct Shape {
  Type type;
  std::vector<Factor> factors;
  std::unique_ptr<Shape> left, right;
  std::vector<Origin> order;                       // products
  std::vector<std::vector<Origin>> domain_orders;  // arrows, one per codomain factor
};

std::unique_ptr<Shape> build_shape(const Type& t) {
  auto shape = std::make_unique<Shape>(Shape{t, {}, nullptr, nullptr, {}, {}});
  switch (t.kind()) {
    case Type::Kind::Base:
      shape->factors = {base_factor()};
      break;
    case Type::Kind::Prod: {
      shape->left = build_shape(t.left());
      shape->right = build_shape(t.right());
      auto [factors, order] = merge(shape->left->factors, shape->right->factors);
      shape->factors = std::move(factors);
      shape->order = std::move(order);
      break;
    }
    case Type::Kind::Arrow: {
      // a -> (rho_1 * ... * rho_n) splits into n factors a * theta_j -> N.
      shape->left = build_shape(t.domain());
      shape->right = build_shape(t.codomain());
      for (const Factor& f : shape->right->factors) {
        auto [domain, order] = merge(shape->left->factors, f.domain);
        shape->factors.push_back(arrow_factor(std::move(domain)));
        shape->domain_orders.push_back(std::move(order));
      }
      // Merging is the natural sum, which is monotone, so the split factors
      // inherit the codomain's order.
      for (std::size_t i = 1; i < shape->factors.size(); ++i) {
        if (shape->factors[i - 1].exponent < shape->factors[i].exponent) {
          throw std::logic_error("canonicalize: arrow factors out of order");
        }
      }
      break;
    }
  }
  return shape;
}

class NameSupply {
public:
  std::string fresh(const char* hint) { return std::string(hint) + "_" + std::to_string(next_++); }

private:
  std::size_t next_ = 0;
};

std::vector<Term> to_factors(const Shape& shape, const Term& x, NameSupply& names);
Term from_factors(const Shape& shape, const std::vector<Term>& comps, NameSupply& names);

// Splits merged components back into the two source lists.
std::pair<std::vector<Term>, std::vector<Term>> unmerge(const std::vector<Term>& merged,
                                                        const std::vector<Origin>& order, std::size_t left_size,
                                                        std::size_t right_size) {
  std::vector<Term> left(left_size, merged.at(0)), right(right_size, merged.at(0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    (order[i].side == 0 ? left : right)[order[i].index] = merged[i];
  }
  return {std::move(left), std::move(right)};
}

std::vector<Term> remerge(const std::vector<Term>& left, const std::vector<Term>& right,
                          const std::vector<Origin>& order) {
  std::vector<Term> out;
  out.reserve(order.size());
  for (const Origin& o : order) out.push_back(o.side == 0 ? left[o.index] : right[o.index]);
  return out;
}

std::vector<Term> to_factors(const Shape& shape, const Term& x, NameSupply& names) {
  switch (shape.type.kind()) {
    case Type::Kind::Base:
      return {x};
    case Type::Kind::Prod:
      return remerge(to_factors(*shape.left, Term::fst(x), names), to_factors(*shape.right, Term::snd(x), names),
                     shape.order);
    case Type::Kind::Arrow: {
      std::vector<Term> out;
      const auto& codomain_factors = shape.right->factors;
      for (std::size_t j = 0; j < shape.factors.size(); ++j) {
        const Factor& target = shape.factors[j];
        std::string y = names.fresh("y");
        auto parts = unmerge(components(Term::var(y), target.domain.size()), shape.domain_orders[j],
                             shape.left->factors.size(), codomain_factors[j].domain.size());
        Term argument = from_factors(*shape.left, parts.first, names);
        Term result = to_factors(*shape.right, Term::app(x, argument), names).at(j);
        if (!parts.second.empty()) result = Term::app(result, tuple(parts.second));
        out.push_back(Term::lam(y, tuple_type(target.domain), result));
      }
      return out;
    }
  }
  throw std::logic_error("to_factors: unknown type");
}

Term from_factors(const Shape& shape, const std::vector<Term>& comps, NameSupply& names) {
  switch (shape.type.kind()) {
    case Type::Kind::Base:
      return comps.at(0);
    case Type::Kind::Prod: {
      auto parts = unmerge(comps, shape.order, shape.left->factors.size(), shape.right->factors.size());
      return Term::pair(from_factors(*shape.left, parts.first, names), from_factors(*shape.right, parts.second, names));
    }
    case Type::Kind::Arrow: {
      std::string z = names.fresh("z");
      std::vector<Term> z_parts = to_factors(*shape.left, Term::var(z), names);
      const auto& codomain_factors = shape.right->factors;
      std::vector<Term> codomain_parts;
      for (std::size_t j = 0; j < codomain_factors.size(); ++j) {
        const Factor& f = codomain_factors[j];
        if (f.domain.empty()) {
          codomain_parts.push_back(Term::app(comps[j], tuple(z_parts)));
          continue;
        }
        std::string w = names.fresh("w");
        std::vector<Term> w_parts = components(Term::var(w), f.domain.size());
        Term body = Term::app(comps[j], tuple(remerge(z_parts, w_parts, shape.domain_orders[j])));
        codomain_parts.push_back(Term::lam(w, tuple_type(f.domain), body));
      }
      return Term::lam(z, shape.type.domain(), from_factors(*shape.right, codomain_parts, names));
    }
  }
  throw std::logic_error("from_factors: unknown type");
}

std::vector<Factor> factors_of_ordinal(const Ordinal& a) {
  std::vector<Factor> out;
  for (const Ordinal& e : a.exponents()) {
    out.push_back(e.is_zero() ? base_factor() : arrow_factor(factors_of_ordinal(e)));
  }
  return out;
}

}  // namespace

CanonicalType canonicalize(const Type& t) { return CanonicalType(tuple_type(build_shape(t)->factors)); }

bool is_canonical(const Type& t) { return canonicalize(t).type() == t; }

Ordinal rank(const Type& t) { return rank_of(build_shape(t)->factors); }

CanonicalType type_of_ordinal(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("type_of_ordinal: no type has rank 0");
  return CanonicalType(tuple_type(factors_of_ordinal(a)));
}

Order compare_types(const Type& s, const Type& t) { return compare_ordinals(rank(s), rank(t)); }

bool trivially_isomorphic(const Type& s, const Type& t) { return canonicalize(s) == canonicalize(t); }

IsoWitness iso_witness(const Type& s, const Type& t) {
  auto source = build_shape(s);
  auto target = build_shape(t);
  if (tuple_type(source->factors) != tuple_type(target->factors)) {
    throw DomainError("iso_witness: " + print_type(s) + " and " + print_type(t) + " are not trivially isomorphic");
  }
  NameSupply names;
  std::string x = names.fresh("x");
  Term fwd = Term::lam(x, s, from_factors(*target, to_factors(*source, Term::var(x), names), names));
  std::string y = names.fresh("x");
  Term bwd = Term::lam(y, t, from_factors(*source, to_factors(*target, Term::var(y), names), names));
  return IsoWitness{s, t, normalize_compact(fwd, Type::arrow(s, t)), normalize_compact(bwd, Type::arrow(t, s))};
}

}  // namespace typerank
