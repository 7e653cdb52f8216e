#include "typerank/term.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>

namespace typerank {

Numeral Numeral::from_digits(std::string_view digits) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("numeral must be a non-empty digit string");
  }
  std::size_t first = digits.find_first_not_of('0');
  Numeral n;
  n.digits_ = first == std::string_view::npos ? "0" : std::string(digits.substr(first));
  return n;
}

std::optional<std::uint64_t> Numeral::to_u64() const {
  if (digits_.size() > 20) return std::nullopt;
  std::uint64_t value = 0;
  for (char c : digits_) {
    std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - digit) / 10) return std::nullopt;
    value = value * 10 + digit;
  }
  return value;
}

std::strong_ordering operator<=>(const Numeral& a, const Numeral& b) {
  if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
  return a.digits_ <=> b.digits_;
}

Term Term::make(Node node) {
  std::size_t size = 1;
  for (const auto& c : node.children) size += c.size();
  node.size = size;
  return Term(std::make_shared<const Node>(std::move(node)));
}

Term Term::bound(std::size_t index) {
  Node n{};
  n.kind = Kind::Bound;
  n.index = index;
  return make(std::move(n));
}

Term Term::var(std::string name) {
  Node n{};
  n.kind = Kind::Free;
  n.name = std::move(name);
  return make(std::move(n));
}

namespace {

Term abstract(const Term& t, const std::string& name, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name ? Term::bound(depth) : t;
    case Term::Kind::Bound:
    case Term::Kind::Num:
      return t;
    case Term::Kind::Lam:
      return Term::lam_raw(t.name(), t.annot(), abstract(t.child(0), name, depth + 1));
    case Term::Kind::App:
      return Term::app(abstract(t.child(0), name, depth), abstract(t.child(1), name, depth));
    case Term::Kind::Pair:
      return Term::pair(abstract(t.child(0), name, depth), abstract(t.child(1), name, depth));
    case Term::Kind::Fst:
      return Term::fst(abstract(t.child(0), name, depth));
    case Term::Kind::Snd:
      return Term::snd(abstract(t.child(0), name, depth));
    case Term::Kind::IfN:
      return Term::if_n(t.numeral(), abstract(t.child(0), name, depth), abstract(t.child(1), name, depth),
                        abstract(t.child(2), name, depth));
  }
  return t;
}

}  // namespace

Term Term::lam(const std::string& name, Type annot, const Term& body) {
  return lam_raw(name, std::move(annot), abstract(body, name, 0));
}

Term Term::lam_raw(std::string hint, Type annot, Term body) {
  Node n{};
  n.kind = Kind::Lam;
  n.name = std::move(hint);
  n.annot = std::move(annot);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  Node n{};
  n.kind = Kind::App;
  n.children = {std::move(fun), std::move(arg)};
  return make(std::move(n));
}

Term Term::pair(Term left, Term right) {
  Node n{};
  n.kind = Kind::Pair;
  n.children = {std::move(left), std::move(right)};
  return make(std::move(n));
}

Term Term::fst(Term t) {
  Node n{};
  n.kind = Kind::Fst;
  n.children = {std::move(t)};
  return make(std::move(n));
}

Term Term::snd(Term t) {
  Node n{};
  n.kind = Kind::Snd;
  n.children = {std::move(t)};
  return make(std::move(n));
}

Term Term::num(Numeral value) {
  Node n{};
  n.kind = Kind::Num;
  n.numeral = std::move(value);
  return make(std::move(n));
}

Term Term::if_n(Numeral index, Term scrut, Term then_branch, Term else_branch) {
  Node n{};
  n.kind = Kind::IfN;
  n.numeral = std::move(index);
  n.children = {std::move(scrut), std::move(then_branch), std::move(else_branch)};
  return make(std::move(n));
}

const Type& Term::annot() const {
  if (!node_->annot) throw std::logic_error("Term::annot on a non-lambda");
  return *node_->annot;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Free:
      return a.name() == b.name();
    case Term::Kind::Num:
      return a.numeral() == b.numeral();
    case Term::Kind::Lam:
      if (a.annot() != b.annot()) return false;
      break;
    case Term::Kind::IfN:
      if (a.numeral() != b.numeral()) return false;
      break;
    default:
      break;
  }
  auto xs = a.children();
  auto ys = b.children();
  return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end());
}

Term tuple(std::span<const Term> items) {
  if (items.empty()) throw std::logic_error("tuple of no items");
  Term acc = items[0];
  for (std::size_t i = 1; i < items.size(); ++i) acc = Term::pair(std::move(acc), items[i]);
  return acc;
}

std::vector<Term> components(const Term& t, std::size_t count) {
  if (count == 0) throw std::logic_error("components of an empty tuple");
  std::vector<Term> out(count, t);
  Term cur = t;
  for (std::size_t i = count - 1; i > 0; --i) {
    out[i] = Term::snd(cur);
    cur = Term::fst(cur);
  }
  out[0] = cur;
  return out;
}

Term apply(Term f, std::initializer_list<Term> args) {
  for (const Term& a : args) f = Term::app(std::move(f), a);
  return f;
}

namespace {

// Generic structural map over subterms; `on_var` sees Bound nodes with the
// current binder depth.
Term map_bound(const Term& t, std::size_t depth, const std::function<Term(const Term&, std::size_t)>& on_var) {
  switch (t.kind()) {
    case Term::Kind::Bound:
      return on_var(t, depth);
    case Term::Kind::Free:
    case Term::Kind::Num:
      return t;
    case Term::Kind::Lam:
      return Term::lam_raw(t.name(), t.annot(), map_bound(t.child(0), depth + 1, on_var));
    case Term::Kind::App:
      return Term::app(map_bound(t.child(0), depth, on_var), map_bound(t.child(1), depth, on_var));
    case Term::Kind::Pair:
      return Term::pair(map_bound(t.child(0), depth, on_var), map_bound(t.child(1), depth, on_var));
    case Term::Kind::Fst:
      return Term::fst(map_bound(t.child(0), depth, on_var));
    case Term::Kind::Snd:
      return Term::snd(map_bound(t.child(0), depth, on_var));
    case Term::Kind::IfN:
      return Term::if_n(t.numeral(), map_bound(t.child(0), depth, on_var), map_bound(t.child(1), depth, on_var),
                        map_bound(t.child(2), depth, on_var));
  }
  return t;
}

bool has_loose_bound(const Term& t, std::size_t index, std::size_t depth = 0) {
  switch (t.kind()) {
    case Term::Kind::Bound:
      return t.index() == index + depth;
    case Term::Kind::Lam:
      return has_loose_bound(t.child(0), index, depth + 1);
    default:
      for (const Term& c : t.children()) {
        if (has_loose_bound(c, index, depth)) return true;
      }
      return false;
  }
}

}  // namespace

Term shift(const Term& t, std::ptrdiff_t delta, std::size_t cutoff) {
  if (delta == 0) return t;
  return map_bound(t, cutoff, [delta](const Term& v, std::size_t depth) {
    if (v.index() < depth) return v;
    auto shifted = static_cast<std::ptrdiff_t>(v.index()) + delta;
    if (shifted < static_cast<std::ptrdiff_t>(depth)) throw std::logic_error("shift below binder");
    return Term::bound(static_cast<std::size_t>(shifted));
  });
}

Term instantiate(const Term& body, const Term& value) {
  return map_bound(body, 0, [&value](const Term& v, std::size_t depth) {
    if (v.index() < depth) return v;
    if (v.index() == depth) return shift(value, static_cast<std::ptrdiff_t>(depth));
    return Term::bound(v.index() - 1);
  });
}

std::vector<std::string> free_variables(const Term& t) {
  std::set<std::string> names;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.kind() == Term::Kind::Free) names.insert(u.name());
    for (const Term& c : u.children()) walk(c);
  };
  walk(t);
  return {names.begin(), names.end()};
}

std::vector<Numeral> numerals(const Term& t) {
  std::vector<Numeral> out;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.kind() == Term::Kind::Num || u.kind() == Term::Kind::IfN) out.push_back(u.numeral());
    for (const Term& c : u.children()) walk(c);
  };
  walk(t);
  return out;
}

Term eta_contract(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Bound:
    case Term::Kind::Free:
    case Term::Kind::Num:
      return t;
    case Term::Kind::Lam: {
      Term body = eta_contract(t.child(0));
      if (body.kind() == Term::Kind::App && body.child(1) == Term::bound(0) &&
          !has_loose_bound(body.child(0), 0)) {
        return shift(body.child(0), -1);
      }
      return Term::lam_raw(t.name(), t.annot(), std::move(body));
    }
    case Term::Kind::Pair: {
      Term left = eta_contract(t.child(0));
      Term right = eta_contract(t.child(1));
      if (left.kind() == Term::Kind::Fst && right.kind() == Term::Kind::Snd && left.child(0) == right.child(0)) {
        return left.child(0);
      }
      return Term::pair(std::move(left), std::move(right));
    }
    case Term::Kind::App:
      return Term::app(eta_contract(t.child(0)), eta_contract(t.child(1)));
    case Term::Kind::Fst:
      return Term::fst(eta_contract(t.child(0)));
    case Term::Kind::Snd:
      return Term::snd(eta_contract(t.child(0)));
    case Term::Kind::IfN:
      return Term::if_n(t.numeral(), eta_contract(t.child(0)), eta_contract(t.child(1)), eta_contract(t.child(2)));
  }
  return t;
}

Term normalize_compact(const Term& t, const Type& type, const Context& context) {
  return eta_contract(normalize(t, type, context));
}

TypeError::TypeError(std::vector<std::size_t> path, std::optional<Type> expected, std::optional<Type> actual,
                     const std::string& message)
    : std::runtime_error(message), path_(std::move(path)), expected_(std::move(expected)), actual_(std::move(actual)) {}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print_term(t); }

}  // namespace typerank
