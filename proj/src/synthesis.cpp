#include "typerank/synthesis.hpp"

namespace typerank {

namespace {

Type sigma(const Ordinal& a) { return type_of_ordinal(a).type(); }

// The product factor of sigma(alpha) contributed by a CNF term w^e.
Type factor_type(const Ordinal& e) { return e.is_zero() ? Type::nat() : Type::arrow(sigma(e), Type::nat()); }

Type tuple_of(const Type& t, std::size_t copies) {
  Type acc = t;
  for (std::size_t i = 1; i < copies; ++i) acc = Type::prod(acc, t);
  return acc;
}

struct Pair {
  Term enc, dec;
};

class ClauseCompiler {
public:
  Pair compile(const LeDerivation& d) {
    using Clause = LeDerivation::Clause;
    switch (d.clause()) {
      case Clause::Refl: {
        std::string x = fresh();
        Term id = Term::lam(x, sigma(d.lhs()), Term::var(x));
        return {id, id};
      }
      case Clause::Trans: {
        Pair first = compile(d.children()[0]);
        Pair second = compile(d.children()[1]);
        std::string x = fresh(), y = fresh();
        return {Term::lam(x, sigma(d.lhs()), Term::app(second.enc, Term::app(first.enc, Term::var(x)))),
                Term::lam(y, sigma(d.rhs()), Term::app(first.dec, Term::app(second.dec, Term::var(y))))};
      }
      case Clause::Succ: {
        // sigma(a + 1) = sigma(a) * N
        std::string x = fresh(), p = fresh();
        return {Term::lam(x, sigma(d.lhs()), Term::pair(Term::var(x), Term::num(0))),
                Term::lam(p, sigma(d.rhs()), Term::fst(Term::var(p)))};
      }
      case Clause::OmegaStep:
        return omega_step(d.param(), d.k());
      case Clause::SumMono:
        return sum_mono(d);
      case Clause::ExpMono: {
        const LeDerivation& inner = d.children()[0];
        Pair lifted = compile(inner);
        Type small = sigma(inner.lhs()), large = sigma(inner.rhs());
        std::string f = fresh(), y = fresh(), g = fresh(), x = fresh();
        // Contravariant lifting along the inner retraction.
        Term enc = Term::lam(f, Type::arrow(small, Type::nat()),
                             Term::lam(y, large, Term::app(Term::var(f), Term::app(lifted.dec, Term::var(y)))));
        Term dec = Term::lam(g, Type::arrow(large, Type::nat()),
                             Term::lam(x, small, Term::app(Term::var(g), Term::app(lifted.enc, Term::var(x)))));
        return {enc, dec};
      }
    }
    throw std::logic_error("synth_clause: unknown clause");
  }

private:
  // (sigma(a) -> N)^k  <|  sigma(a + 1) -> N, dispatching on the trailing N
  // component of the argument. For a = 0 the factor is N itself and the
  // argument is just that component.
  Pair omega_step(const Ordinal& a, std::size_t k) {
    Type factor = factor_type(a);
    Type source = tuple_of(factor, k);
    Type point = a.is_zero() ? Type::nat() : Type::prod(sigma(a), Type::nat());

    std::string fs = fresh(), arg = fresh();
    std::vector<Term> fns = components(Term::var(fs), k);
    Term tag = a.is_zero() ? Term::var(arg) : Term::snd(Term::var(arg));
    auto sample = [&](const Term& f) {
      return a.is_zero() ? f : Term::app(f, Term::fst(Term::var(arg)));
    };
    Term body = Term::num(0);
    for (std::size_t i = k; i-- > 0;) body = Term::if_n(Numeral(i), tag, sample(fns[i]), body);
    Term enc = Term::lam(fs, source, Term::lam(arg, point, body));

    std::string g = fresh();
    std::vector<Term> projections;
    for (std::size_t i = 0; i < k; ++i) {
      if (a.is_zero()) {
        projections.push_back(Term::app(Term::var(g), Term::num(i)));
      } else {
        std::string x = fresh();
        projections.push_back(
            Term::lam(x, sigma(a), Term::app(Term::var(g), Term::pair(Term::var(x), Term::num(i)))));
      }
    }
    Term dec = Term::lam(g, Type::arrow(point, Type::nat()), tuple(projections));
    return {enc, dec};
  }

  // The prefix factors pass through; the suffix block goes through the inner
  // retraction. Factors live in one left-nested tuple, so blocks are split and
  // re-tupled explicitly.
  Pair sum_mono(const LeDerivation& d) {
    const Ordinal& prefix = d.param();
    const LeDerivation& inner = d.children()[0];
    Pair lifted = compile(inner);
    return {lift_block(prefix, inner.lhs(), inner.rhs(), lifted.enc),
            lift_block(prefix, inner.rhs(), inner.lhs(), lifted.dec)};
  }

  Term lift_block(const Ordinal& prefix, const Ordinal& from, const Ordinal& to, const Term& map) {
    std::size_t m = prefix.term_count();
    std::string p = fresh(), q = fresh();
    std::vector<Term> parts = components(Term::var(p), m + from.term_count());
    std::vector<Term> head(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<Term> tail(parts.begin() + static_cast<std::ptrdiff_t>(m), parts.end());
    std::vector<Term> out = head;
    for (Term& c : components(Term::var(q), to.term_count())) out.push_back(std::move(c));
    Term rebuild = Term::lam(q, sigma(to), tuple(out));
    return Term::lam(p, sigma(cantor_add(prefix, from)), Term::app(rebuild, Term::app(map, tuple(tail))));
  }

  std::string fresh() { return "v_" + std::to_string(next_++); }

  std::size_t next_ = 0;
};

Term compose(const Type& source, std::initializer_list<Term> maps) {
  Term body = Term::var("x_");
  for (const Term& m : maps) body = Term::app(m, body);
  return Term::lam("x_", source, body);
}

Retraction iso_retraction(const IsoWitness& w) { return {w.source, w.target, w.fwd, w.bwd, FromIso{w}}; }

}  // namespace

bool retraction_holds(const Retraction& r) {
  try {
    if (typecheck(r.enc) != Type::arrow(r.source, r.target)) return false;
    if (typecheck(r.dec) != Type::arrow(r.target, r.source)) return false;
    Term roundtrip = Term::lam("x_", r.source, Term::app(r.dec, Term::app(r.enc, Term::var("x_"))));
    Term identity = Term::lam("x_", r.source, Term::var("x_"));
    return equal_terms(roundtrip, identity, Type::arrow(r.source, r.source));
  } catch (const TypeError&) {
    return false;
  }
}

Retraction synth_clause(const LeDerivation& d) {
  if (auto check = check_derivation(d); !check) throw DomainError("synth_clause: invalid derivation: " + check.message);
  if (mentions_zero(d)) throw DomainError("synth_clause: derivation mentions the ordinal 0");
  Pair terms = ClauseCompiler().compile(d);
  Type source = sigma(d.lhs()), target = sigma(d.rhs());
  return {source, target, normalize_compact(terms.enc, Type::arrow(source, target)),
          normalize_compact(terms.dec, Type::arrow(target, source)), FromDerivation{d}};
}

Retraction synth_retraction(const Type& s, const Type& t, const SynthOptions& options) {
  Ordinal rs = rank(s), rt = rank(t);
  if (rt < rs) {
    throw DomainError("no retraction of " + print_type(s) + " into " + print_type(t) + ": rank " + print_ordinal(rs) +
                      " > " + print_ordinal(rt));
  }
  auto build = [&]() -> Retraction {
    if (rs == rt) return iso_retraction(iso_witness(s, t));
    Retraction into = iso_retraction(iso_witness(s, sigma(rs)));
    Retraction core = synth_clause(derive_le(rs, rt));
    Retraction out = iso_retraction(iso_witness(sigma(rt), t));
    Term enc = compose(s, {into.enc, core.enc, out.enc});
    Term dec = compose(t, {out.dec, core.dec, into.dec});
    return {s, t, normalize_compact(enc, Type::arrow(s, t)), normalize_compact(dec, Type::arrow(t, s)),
            Composite{{into, core, out}}};
  };
  Retraction result = build();
  if (options.verify && !retraction_holds(result)) {
    throw VerificationError("synthesized retraction " + print_type(s) + " <| " + print_type(t) +
                            " failed its identity check");
  }
  return result;
}

}  // namespace typerank
