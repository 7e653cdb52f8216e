#ifndef TYPERANK_TEST_SUPPORT_HPP
#define TYPERANK_TEST_SUPPORT_HPP

#include "typerank/canonical.hpp"
#include "typerank/ordinal.hpp"
#include "typerank/synthesis.hpp"
#include "typerank/term.hpp"
#include "typerank/type.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace typerank::support {

inline const Type N = Type::nat();
inline Type arr(const Type& a, const Type& b) { return Type::arrow(a, b); }
inline Type prd(const Type& a, const Type& b) { return Type::prod(a, b); }
inline Type ty(const char* text) { return parse_type(text); }
inline Ordinal ord(const char* text) { return parse_ordinal(text); }

// All types with exactly `nodes` AST nodes (odd sizes only are inhabited).
inline const std::vector<Type>& types_of_size(std::size_t nodes) {
  static std::map<std::size_t, std::vector<Type>> memo;
  if (auto it = memo.find(nodes); it != memo.end()) return it->second;
  std::vector<Type> out;
  if (nodes == 1) {
    out.push_back(N);
  } else if (nodes >= 3) {
    for (std::size_t l = 1; l + 2 <= nodes; ++l) {
      std::size_t r = nodes - 1 - l;
      for (const Type& a : types_of_size(l)) {
        for (const Type& b : types_of_size(r)) {
          out.push_back(arr(a, b));
          out.push_back(prd(a, b));
        }
      }
    }
  }
  return memo[nodes] = std::move(out);
}

inline std::vector<Type> types_up_to(std::size_t max_nodes) {
  std::vector<Type> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    const auto& level = types_of_size(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// All types of depth at most d (N alone has depth 0).
inline std::vector<Type> types_of_depth(unsigned d) {
  std::vector<Type> out{N};
  for (unsigned i = 0; i < d; ++i) {
    std::vector<Type> next{N};
    for (const Type& a : out) {
      for (const Type& b : out) {
        next.push_back(arr(a, b));
        next.push_back(prd(a, b));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Type random_type(std::mt19937_64& rng, unsigned depth) {
  if (depth == 0 || rng() % 3 == 0) return N;
  Type a = random_type(rng, depth - 1), b = random_type(rng, depth - 1);
  return rng() % 2 ? arr(a, b) : prd(a, b);
}

// Reference parser for the type grammar, written as an operator-precedence
// (shunting-yard) pass over a token list so that it shares nothing with the
// recursive-descent parser under test.
inline std::optional<Type> reference_parse_type(const std::string& text) {
  enum Tok { TN, TArrow, TStar, TOpen, TClose };
  std::vector<Tok> toks;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == 'N') {
      toks.push_back(TN), ++i;
    } else if (c == '*') {
      toks.push_back(TStar), ++i;
    } else if (c == '(') {
      toks.push_back(TOpen), ++i;
    } else if (c == ')') {
      toks.push_back(TClose), ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      toks.push_back(TArrow), i += 2;
    } else {
      return std::nullopt;
    }
  }
  std::vector<Type> operands;
  std::vector<Tok> ops;
  auto reduce_top = [&]() {
    if (operands.size() < 2) return false;
    Type b = operands.back();
    operands.pop_back();
    Type a = operands.back();
    operands.pop_back();
    operands.push_back(ops.back() == TStar ? prd(a, b) : arr(a, b));
    ops.pop_back();
    return true;
  };
  bool expect_operand = true;
  for (Tok t : toks) {
    if (expect_operand) {
      if (t == TN) {
        operands.push_back(N);
        expect_operand = false;
      } else if (t == TOpen) {
        ops.push_back(TOpen);
      } else {
        return std::nullopt;
      }
      continue;
    }
    if (t == TStar) {
      while (!ops.empty() && ops.back() == TStar) reduce_top();
      ops.push_back(TStar);
      expect_operand = true;
    } else if (t == TArrow) {
      // Right associative and looser than '*'.
      while (!ops.empty() && ops.back() == TStar) reduce_top();
      ops.push_back(TArrow);
      expect_operand = true;
    } else if (t == TClose) {
      while (!ops.empty() && ops.back() != TOpen) reduce_top();
      if (ops.empty()) return std::nullopt;
      ops.pop_back();
    } else {
      return std::nullopt;
    }
  }
  if (expect_operand) return std::nullopt;
  while (!ops.empty()) {
    if (ops.back() == TOpen) return std::nullopt;
    reduce_top();
  }
  if (operands.size() != 1) return std::nullopt;
  return operands.front();
}

// The ordinal w^2*a + w*b + c, built directly from exponents.
inline Ordinal poly(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Ordinal> e;
  e.insert(e.end(), a, Ordinal::finite(2));
  e.insert(e.end(), b, Ordinal::one());
  e.insert(e.end(), c, Ordinal::zero());
  return Ordinal(std::move(e));
}

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

// Ordinal addition on coefficient triples: the right operand's leading
// nonzero coefficient absorbs everything smaller on the left.
inline Triple poly_add(Triple x, Triple y) {
  auto [a1, b1, c1] = x;
  auto [a2, b2, c2] = y;
  if (a2 > 0) return {a1 + a2, b2, c2};
  if (b2 > 0) return {a1, b1 + b2, c2};
  return {a1, b1, c1 + c2};
}

// Every ordinal w^2*a + w*b + c with coefficients up to `max`.
inline std::vector<std::pair<Triple, Ordinal>> poly_range(std::size_t max = 5) {
  std::vector<std::pair<Triple, Ordinal>> out;
  for (std::size_t a = 0; a <= max; ++a) {
    for (std::size_t b = 0; b <= max; ++b) {
      for (std::size_t c = 0; c <= max; ++c) out.push_back({{a, b, c}, poly(a, b, c)});
    }
  }
  return out;
}

inline Term identity(const Type& t) { return Term::lam("x", t, Term::var("x")); }

// \x. g (f x)
inline Term compose(const Type& source, const Term& f, const Term& g) {
  return Term::lam("x_", source, Term::app(g, Term::app(f, Term::var("x_"))));
}

// Two retractions chained end to end.
inline Retraction chain(const Retraction& first, const Retraction& second) {
  return {first.source, second.target, compose(first.source, first.enc, second.enc),
          compose(second.target, second.dec, first.dec), Composite{{first, second}}};
}

// Closed well-typed terms dense in beta, projection and if redexes.
class RedexGenerator {
public:
  explicit RedexGenerator(std::uint64_t seed) : rng_(seed) {}

  Term closed(const Type& type, unsigned budget) {
    scope_.clear();
    next_ = 0;
    return gen(type, budget);
  }

private:
  bool coin(unsigned out_of) { return rng_() % out_of == 0; }

  Term gen(const Type& type, unsigned budget) {
    if (budget == 0) return intro(type, 0);
    switch (rng_() % 6) {
      case 0: {
        // (\y:A. M) P
        Type a = small_type();
        std::string name = fresh();
        scope_.push_back({name, a});
        Term body = gen(type, budget - 1);
        scope_.pop_back();
        return Term::app(Term::lam(name, a, body), gen(a, budget - 1));
      }
      case 1:
        return Term::fst(Term::pair(gen(type, budget - 1), gen(small_type(), budget / 2)));
      case 2:
        return Term::snd(Term::pair(gen(small_type(), budget / 2), gen(type, budget - 1)));
      case 3:
        if (auto v = use_variable(type, budget)) return *v;
        return intro(type, budget);
      case 4:
        if (type.is_base()) {
          Term scrut = coin(2) ? Term::num(rng_() % 3) : gen(N, budget - 1);
          return Term::if_n(Numeral(rng_() % 3), scrut, gen(N, budget - 1), gen(N, budget - 1));
        }
        return intro(type, budget);
      default:
        return intro(type, budget);
    }
  }

  // Introduction form at the head, recursing with redexes inside.
  Term intro(const Type& type, unsigned budget) {
    unsigned sub = budget == 0 ? 0 : budget - 1;
    switch (type.kind()) {
      case Type::Kind::Base:
        if (budget > 0 || coin(2)) {
          if (auto v = use_variable(type, budget)) return *v;
        }
        return Term::num(rng_() % 4);
      case Type::Kind::Arrow: {
        std::string name = fresh();
        scope_.push_back({name, type.domain()});
        Term body = gen(type.codomain(), sub);
        scope_.pop_back();
        return Term::lam(name, type.domain(), body);
      }
      case Type::Kind::Prod:
        return Term::pair(gen(type.left(), sub), gen(type.right(), sub));
    }
    return Term::num(0);
  }

  // A scoped variable eliminated down to `type`, if one can reach it.
  std::optional<Term> use_variable(const Type& type, unsigned budget) {
    std::vector<std::pair<Term, Type>> candidates;
    for (const auto& [name, t] : scope_) collect(Term::var(name), t, type, candidates);
    if (candidates.empty()) return std::nullopt;
    auto [head, head_type] = candidates[rng_() % candidates.size()];
    return eliminate(head, head_type, type, budget == 0 ? 0 : budget - 1);
  }

  static bool reaches(const Type& from, const Type& to) {
    if (from == to) return true;
    if (from.is_arrow()) return reaches(from.codomain(), to);
    if (from.is_prod()) return reaches(from.left(), to) || reaches(from.right(), to);
    return false;
  }

  static void collect(const Term& head, const Type& t, const Type& goal, std::vector<std::pair<Term, Type>>& out) {
    if (reaches(t, goal)) out.push_back({head, t});
  }

  Term eliminate(Term head, Type t, const Type& goal, unsigned budget) {
    while (!(t == goal)) {
      if (t.is_arrow()) {
        head = Term::app(head, gen(t.domain(), budget / 2));
        t = t.codomain();
      } else if (reaches(t.left(), goal) && (!reaches(t.right(), goal) || coin(2))) {
        head = Term::fst(head);
        t = t.left();
      } else {
        head = Term::snd(head);
        t = t.right();
      }
    }
    return head;
  }

  Type small_type() {
    static const std::vector<Type> pool{N, N, arr(N, N), prd(N, N), arr(prd(N, N), N), arr(arr(N, N), N),
                                        arr(N, prd(N, N))};
    return pool[rng_() % pool.size()];
  }

  std::string fresh() { return "v" + std::to_string(next_++); }

  std::mt19937_64 rng_;
  std::vector<std::pair<std::string, Type>> scope_;
  std::size_t next_ = 0;
};

}  // namespace typerank::support

#endif  // TYPERANK_TEST_SUPPORT_HPP
