// Normalization by evaluation into eta-long beta-normal forms.

#include "typerank/term.hpp"

#include <map>
#include <variant>

namespace typerank {

namespace {

struct Value;
struct Neutral;
using ValuePtr = std::shared_ptr<const Value>;
using NeutralPtr = std::shared_ptr<const Neutral>;

struct EnvNode {
  ValuePtr head;
  std::shared_ptr<const EnvNode> tail;
};
using Env = std::shared_ptr<const EnvNode>;

Env extend(Env env, ValuePtr v) { return std::make_shared<const EnvNode>(EnvNode{std::move(v), std::move(env)}); }

const ValuePtr& lookup(const Env& env, std::size_t index) {
  const EnvNode* node = env.get();
  for (std::size_t i = 0; i < index; ++i) node = node->tail.get();
  return node->head;
}

struct Closure {
  Env env;
  Term body;
};
struct PairValue {
  ValuePtr left, right;
};
struct NumValue {
  Numeral n;
};
struct NeutralValue {
  NeutralPtr neutral;
};

struct Value {
  std::variant<Closure, PairValue, NumValue, NeutralValue> data;
};

// Variables are tagged by binder level during read-back, or by name if free.
struct LevelVar {
  std::size_t level;
  Type type;
};
struct FreeVar {
  std::string name;
  Type type;
};
struct AppNeutral {
  NeutralPtr fun;
  ValuePtr arg;
};
struct FstNeutral {
  NeutralPtr inner;
};
struct SndNeutral {
  NeutralPtr inner;
};
struct IfNeutral {
  Numeral n;
  NeutralPtr scrut;
  ValuePtr then_branch, else_branch;
};

struct Neutral {
  std::variant<LevelVar, FreeVar, AppNeutral, FstNeutral, SndNeutral, IfNeutral> data;
};

ValuePtr make_value(auto data) { return std::make_shared<const Value>(Value{std::move(data)}); }
ValuePtr make_neutral(auto data) {
  return make_value(NeutralValue{std::make_shared<const Neutral>(Neutral{std::move(data)})});
}

class Evaluator {
public:
  explicit Evaluator(const Context& context) {
    for (const auto& [name, type] : context) free_types_.insert_or_assign(name, type);
  }

  ValuePtr eval(const Term& t, const Env& env) {
    switch (t.kind()) {
      case Term::Kind::Bound:
        return lookup(env, t.index());
      case Term::Kind::Free:
        return make_neutral(FreeVar{t.name(), free_types_.at(t.name())});
      case Term::Kind::Lam:
        return make_value(Closure{env, t.child(0)});
      case Term::Kind::App:
        return apply(eval(t.child(0), env), eval(t.child(1), env));
      case Term::Kind::Pair:
        return make_value(PairValue{eval(t.child(0), env), eval(t.child(1), env)});
      case Term::Kind::Fst:
        return first(eval(t.child(0), env));
      case Term::Kind::Snd:
        return second(eval(t.child(0), env));
      case Term::Kind::Num:
        return make_value(NumValue{t.numeral()});
      case Term::Kind::IfN: {
        ValuePtr scrut = eval(t.child(0), env);
        if (const auto* num = std::get_if<NumValue>(&scrut->data)) {
          return eval(t.child(num->n == t.numeral() ? 1 : 2), env);
        }
        const auto& neutral = std::get<NeutralValue>(scrut->data).neutral;
        return make_neutral(IfNeutral{t.numeral(), neutral, eval(t.child(1), env), eval(t.child(2), env)});
      }
    }
    throw std::logic_error("eval: unknown term");
  }

  ValuePtr apply(const ValuePtr& f, ValuePtr arg) {
    if (const auto* c = std::get_if<Closure>(&f->data)) return eval(c->body, extend(c->env, std::move(arg)));
    return make_neutral(AppNeutral{std::get<NeutralValue>(f->data).neutral, std::move(arg)});
  }

  ValuePtr first(const ValuePtr& v) {
    if (const auto* p = std::get_if<PairValue>(&v->data)) return p->left;
    return make_neutral(FstNeutral{std::get<NeutralValue>(v->data).neutral});
  }

  ValuePtr second(const ValuePtr& v) {
    if (const auto* p = std::get_if<PairValue>(&v->data)) return p->right;
    return make_neutral(SndNeutral{std::get<NeutralValue>(v->data).neutral});
  }

  // Type-directed read-back; `depth` is the number of binders above.
  Term reify(const Type& type, const ValuePtr& v, std::size_t depth) {
    switch (type.kind()) {
      case Type::Kind::Base:
        if (const auto* num = std::get_if<NumValue>(&v->data)) return Term::num(num->n);
        return reify_neutral(*std::get<NeutralValue>(v->data).neutral, depth).first;
      case Type::Kind::Arrow: {
        ValuePtr x = make_neutral(LevelVar{depth, type.domain()});
        Term body = reify(type.codomain(), apply(v, x), depth + 1);
        return Term::lam_raw(hint_for(type.domain()), type.domain(), std::move(body));
      }
      case Type::Kind::Prod:
        return Term::pair(reify(type.left(), first(v), depth), reify(type.right(), second(v), depth));
    }
    throw std::logic_error("reify: unknown type");
  }

private:
  static std::string hint_for(const Type& t) {
    switch (t.kind()) {
      case Type::Kind::Base:
        return "x";
      case Type::Kind::Arrow:
        return "f";
      case Type::Kind::Prod:
        return "p";
    }
    return "x";
  }

  std::pair<Term, Type> reify_neutral(const Neutral& n, std::size_t depth) {
    return std::visit(
        [&](const auto& node) -> std::pair<Term, Type> {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LevelVar>) {
            return {Term::bound(depth - 1 - node.level), node.type};
          } else if constexpr (std::is_same_v<T, FreeVar>) {
            return {Term::var(node.name), node.type};
          } else if constexpr (std::is_same_v<T, AppNeutral>) {
            auto [fun, type] = reify_neutral(*node.fun, depth);
            Term arg = reify(type.domain(), node.arg, depth);
            return {Term::app(std::move(fun), std::move(arg)), type.codomain()};
          } else if constexpr (std::is_same_v<T, FstNeutral>) {
            auto [inner, type] = reify_neutral(*node.inner, depth);
            return {Term::fst(std::move(inner)), type.left()};
          } else if constexpr (std::is_same_v<T, SndNeutral>) {
            auto [inner, type] = reify_neutral(*node.inner, depth);
            return {Term::snd(std::move(inner)), type.right()};
          } else {
            Term scrut = reify_neutral(*node.scrut, depth).first;
            return {Term::if_n(node.n, std::move(scrut), reify(Type::nat(), node.then_branch, depth),
                               reify(Type::nat(), node.else_branch, depth)),
                    Type::nat()};
          }
        },
        n.data);
  }

  std::map<std::string, Type> free_types_;
};

}  // namespace

Term normalize(const Term& t, const Type& type, const Context& context) {
  Type actual = typecheck(context, t);
  if (actual != type) {
    throw TypeError({}, type, actual,
                    "type error: term has type " + print_type(actual) + ", expected " + print_type(type));
  }
  Evaluator ev(context);
  return ev.reify(type, ev.eval(t, nullptr), 0);
}

bool equal_terms(const Term& a, const Term& b, const Type& type, const Context& context) {
  return normalize(a, type, context) == normalize(b, type, context);
}

}  // namespace typerank
