#include "typerank/term.hpp"

namespace typerank {

namespace {

std::optional<Term> contract(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::App:
      if (t.child(0).kind() == Term::Kind::Lam) return instantiate(t.child(0).child(0), t.child(1));
      return std::nullopt;
    case Term::Kind::Fst:
      if (t.child(0).kind() == Term::Kind::Pair) return t.child(0).child(0);
      return std::nullopt;
    case Term::Kind::Snd:
      if (t.child(0).kind() == Term::Kind::Pair) return t.child(0).child(1);
      return std::nullopt;
    case Term::Kind::IfN:
      if (t.child(0).kind() == Term::Kind::Num) return t.child(t.child(0).numeral() == t.numeral() ? 1 : 2);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Term with_child(const Term& t, std::size_t i, Term replacement) {
  auto kids = t.children();
  auto pick = [&](std::size_t j) { return j == i ? replacement : kids[j]; };
  switch (t.kind()) {
    case Term::Kind::Lam:
      return Term::lam_raw(t.name(), t.annot(), pick(0));
    case Term::Kind::App:
      return Term::app(pick(0), pick(1));
    case Term::Kind::Pair:
      return Term::pair(pick(0), pick(1));
    case Term::Kind::Fst:
      return Term::fst(pick(0));
    case Term::Kind::Snd:
      return Term::snd(pick(0));
    case Term::Kind::IfN:
      return Term::if_n(t.numeral(), pick(0), pick(1), pick(2));
    default:
      return t;
  }
}

std::optional<Term> step(const Term& t, Strategy strategy) {
  if (strategy == Strategy::NormalOrder) {
    if (auto r = contract(t)) return r;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (auto r = step(t.child(i), strategy)) return with_child(t, i, std::move(*r));
  }
  if (strategy == Strategy::Innermost) return contract(t);
  return std::nullopt;
}

}  // namespace

Term reduce(const Term& t, Strategy strategy, std::size_t max_steps) {
  Term cur = t;
  for (std::size_t n = 0; n < max_steps; ++n) {
    auto next = step(cur, strategy);
    if (!next) return cur;
    cur = std::move(*next);
  }
  throw std::runtime_error("reduce: step limit exceeded");
}

}  // namespace typerank
