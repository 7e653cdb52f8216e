#include "typerank/term.hpp"

namespace typerank {

namespace {

class Checker {
public:
  explicit Checker(const Context& context) : context_(context) {}

  Type check(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Bound: {
        if (t.index() >= binders_.size()) fail(std::nullopt, std::nullopt, "dangling de Bruijn index");
        return binders_[binders_.size() - 1 - t.index()];
      }
      case Term::Kind::Free: {
        for (auto it = context_.rbegin(); it != context_.rend(); ++it) {
          if (it->first == t.name()) return it->second;
        }
        fail(std::nullopt, std::nullopt, "unbound variable '" + t.name() + "'");
      }
      case Term::Kind::Num:
        return Type::nat();
      case Term::Kind::Lam: {
        binders_.push_back(t.annot());
        Type body = child(t, 0);
        binders_.pop_back();
        return Type::arrow(t.annot(), body);
      }
      case Term::Kind::App: {
        Type fun = child(t, 0);
        Type arg = child(t, 1);
        if (!fun.is_arrow()) fail(std::nullopt, fun, "applying a term that is not a function");
        if (fun.domain() != arg) {
          path_.push_back(1);
          fail(fun.domain(), arg, "argument type mismatch");
        }
        return fun.codomain();
      }
      case Term::Kind::Pair: {
        Type left = child(t, 0);
        Type right = child(t, 1);
        return Type::prod(left, right);
      }
      case Term::Kind::Fst:
      case Term::Kind::Snd: {
        Type inner = child(t, 0);
        if (!inner.is_prod()) fail(std::nullopt, inner, "projection from a term that is not a pair");
        return t.kind() == Term::Kind::Fst ? inner.left() : inner.right();
      }
      case Term::Kind::IfN: {
        for (std::size_t i = 0; i < 3; ++i) {
          Type ty = child(t, i);
          if (!ty.is_base()) {
            path_.push_back(i);
            fail(Type::nat(), ty, "if operands must have type N");
          }
        }
        return Type::nat();
      }
    }
    fail(std::nullopt, std::nullopt, "unknown term");
  }

private:
  Type child(const Term& t, std::size_t i) {
    path_.push_back(i);
    Type ty = check(t.child(i));
    path_.pop_back();
    return ty;
  }

  [[noreturn]] void fail(std::optional<Type> expected, std::optional<Type> actual, const std::string& message) {
    std::string text = "type error";
    if (!path_.empty()) {
      text += " at [";
      for (std::size_t i = 0; i < path_.size(); ++i) text += (i ? "," : "") + std::to_string(path_[i]);
      text += "]";
    }
    text += ": " + message;
    if (expected) text += "; expected " + print_type(*expected);
    if (actual) text += "; got " + print_type(*actual);
    throw TypeError(path_, std::move(expected), std::move(actual), text);
  }

  const Context& context_;
  std::vector<Type> binders_;
  std::vector<std::size_t> path_;
};

}  // namespace

Type typecheck(const Context& context, const Term& t) { return Checker(context).check(t); }

Type typecheck(const Term& t) { return typecheck(Context{}, t); }

}  // namespace typerank
