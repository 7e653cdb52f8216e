#include "typerank/verify.hpp"

#include <random>
#include <variant>

namespace typerank {

bool verify_symbolic(const Retraction& r) { return retraction_holds(r); }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Random {
public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, n]; modulo bias is irrelevant at these ranges.
  std::uint64_t upto(std::uint64_t n) { return engine_() % (n + 1); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

class Generator {
public:
  Generator(std::uint64_t seed, std::size_t fuel, const GeneratorOptions& options)
      : rng_(seed), fuel_(fuel), options_(options) {}

  Term term(const Type& type, unsigned depth) {
    switch (type.kind()) {
      case Type::Kind::Base:
        return ground(depth);
      case Type::Kind::Arrow: {
        scope_.push_back(type.domain());
        Term body = term(type.codomain(), depth);
        scope_.pop_back();
        return Term::lam_raw("x", type.domain(), std::move(body));
      }
      case Type::Kind::Prod: {
        Term left = term(type.left(), depth);
        Term right = term(type.right(), depth);
        return Term::pair(std::move(left), std::move(right));
      }
    }
    throw std::logic_error("generate_inhabitant: unknown type");
  }

private:
  Term numeral() { return Term::num(rng_.upto(fuel_)); }

  Term ground(unsigned depth) {
    if (scope_.empty() || depth == 0 || !rng_.chance(options_.variable_bias)) return numeral();
    std::size_t level = rng_.upto(scope_.size() - 1);
    Term use = drive(Term::bound(scope_.size() - 1 - level), scope_[level], depth - 1);
    if (rng_.chance(0.5)) return use;
    Numeral index(rng_.upto(fuel_));
    Term then_branch = ground(depth - 1);
    Term else_branch = ground(depth - 1);
    return Term::if_n(std::move(index), std::move(use), std::move(then_branch), std::move(else_branch));
  }

  // Eliminates `head` down to type N with generated arguments.
  Term drive(Term head, Type type, unsigned depth) {
    while (!type.is_base()) {
      if (type.is_arrow()) {
        head = Term::app(std::move(head), term(type.domain(), depth));
        type = type.codomain();
      } else if (rng_.chance(0.5)) {
        head = Term::fst(std::move(head));
        type = type.left();
      } else {
        head = Term::snd(std::move(head));
        type = type.right();
      }
    }
    return head;
  }

  Random rng_;
  std::size_t fuel_;
  GeneratorOptions options_;
  std::vector<Type> scope_;
};

// Call-by-value evaluation of closed terms, independent of the normalizer.
struct EvalValue;
using EvalPtr = std::shared_ptr<const EvalValue>;

struct EvalEnv {
  EvalPtr head;
  std::shared_ptr<const EvalEnv> tail;
};

struct EvalClosure {
  std::shared_ptr<const EvalEnv> env;
  Term body;
};
struct EvalPair {
  EvalPtr left, right;
};

struct EvalValue {
  std::variant<EvalClosure, EvalPair, Numeral> data;
};

EvalPtr eval(const Term& t, const std::shared_ptr<const EvalEnv>& env) {
  auto make = [](auto v) { return std::make_shared<const EvalValue>(EvalValue{std::move(v)}); };
  switch (t.kind()) {
    case Term::Kind::Bound: {
      const EvalEnv* e = env.get();
      for (std::size_t i = 0; i < t.index(); ++i) {
        if (!e) throw std::invalid_argument("evaluate_ground: dangling index");
        e = e->tail.get();
      }
      if (!e) throw std::invalid_argument("evaluate_ground: dangling index");
      return e->head;
    }
    case Term::Kind::Free:
      throw std::invalid_argument("evaluate_ground: free variable '" + t.name() + "'");
    case Term::Kind::Lam:
      return make(EvalClosure{env, t.child(0)});
    case Term::Kind::App: {
      EvalPtr f = eval(t.child(0), env);
      EvalPtr x = eval(t.child(1), env);
      const auto& c = std::get<EvalClosure>(f->data);
      return eval(c.body, std::make_shared<const EvalEnv>(EvalEnv{x, c.env}));
    }
    case Term::Kind::Pair:
      return make(EvalPair{eval(t.child(0), env), eval(t.child(1), env)});
    case Term::Kind::Fst:
      return std::get<EvalPair>(eval(t.child(0), env)->data).left;
    case Term::Kind::Snd:
      return std::get<EvalPair>(eval(t.child(0), env)->data).right;
    case Term::Kind::Num:
      return make(t.numeral());
    case Term::Kind::IfN: {
      const auto& scrut = std::get<Numeral>(eval(t.child(0), env)->data);
      return eval(t.child(scrut == t.numeral() ? 1 : 2), env);
    }
  }
  throw std::logic_error("evaluate_ground: unknown term");
}

constexpr std::size_t kSampleFuel = 6;

Term observe(Term t, const std::vector<ObservationStep>& steps) {
  for (const auto& s : steps) {
    switch (s.kind) {
      case ObservationStep::Kind::Apply:
        t = Term::app(std::move(t), *s.argument);
        break;
      case ObservationStep::Kind::First:
        t = Term::fst(std::move(t));
        break;
      case ObservationStep::Kind::Second:
        t = Term::snd(std::move(t));
        break;
    }
  }
  return t;
}

}  // namespace

Term generate_inhabitant(const Type& type, std::uint64_t seed, std::size_t fuel, const GeneratorOptions& options) {
  return Generator(seed, fuel, options).term(type, options.depth);
}

Numeral evaluate_ground(const Term& t) {
  try {
    return std::get<Numeral>(eval(t, nullptr)->data);
  } catch (const std::bad_variant_access&) {
    throw std::invalid_argument("evaluate_ground: term is not of ground type");
  }
}

VerifyReport verify_semantic(const Retraction& r, std::size_t samples, std::uint64_t seed) {
  VerifyReport report;
  report.seed = seed;
  report.symbolic_ok = verify_symbolic(r);
  report.semantic_samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    std::uint64_t sample_seed = splitmix64(seed ^ splitmix64(i));
    Random rng(sample_seed);
    Term inhabitant = generate_inhabitant(r.source, rng.next(), kSampleFuel);
    std::vector<ObservationStep> steps;
    Type type = r.source;
    while (!type.is_base()) {
      if (type.is_arrow()) {
        steps.push_back({ObservationStep::Kind::Apply, generate_inhabitant(type.domain(), rng.next(), kSampleFuel)});
        type = type.codomain();
      } else if (rng.chance(0.5)) {
        steps.push_back({ObservationStep::Kind::First, std::nullopt});
        type = type.left();
      } else {
        steps.push_back({ObservationStep::Kind::Second, std::nullopt});
        type = type.right();
      }
    }
    Term roundtrip = Term::app(r.dec, Term::app(r.enc, inhabitant));
    Numeral expected = evaluate_ground(observe(inhabitant, steps));
    Numeral got = evaluate_ground(observe(roundtrip, steps));
    if (expected != got) report.semantic_failures.push_back({inhabitant, steps, expected, got});
  }
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.semantic_failures) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : f.observation) {
      switch (s.kind) {
        case ObservationStep::Kind::Apply:
          steps.push_back({{"apply", print_term(*s.argument)}});
          break;
        case ObservationStep::Kind::First:
          steps.push_back("fst");
          break;
        case ObservationStep::Kind::Second:
          steps.push_back("snd");
          break;
      }
    }
    failures.push_back({{"inhabitant", print_term(f.inhabitant)},
                        {"observation", steps},
                        {"expected", f.expected.str()},
                        {"got", f.got.str()}});
  }
  return {{"symbolic_ok", report.symbolic_ok},
          {"semantic_samples", report.semantic_samples},
          {"semantic_failures", failures},
          {"seed", report.seed}};
}

}  // namespace typerank
