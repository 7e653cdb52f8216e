#include "typerank/type.hpp"

#include "cursor.hpp"

#include <algorithm>
#include <ostream>

namespace typerank {

Type Type::nat() {
  static const Type base(std::make_shared<const Node>(Node{Kind::Base, 1, nullptr, nullptr}));
  return base;
}

Type Type::arrow(Type domain, Type codomain) {
  std::size_t size = 1 + domain.size() + codomain.size();
  return Type(std::make_shared<const Node>(Node{Kind::Arrow, size, std::make_unique<Type>(std::move(domain)),
                                               std::make_unique<Type>(std::move(codomain))}));
}

Type Type::prod(Type left, Type right) {
  std::size_t size = 1 + left.size() + right.size();
  return Type(std::make_shared<const Node>(
      Node{Kind::Prod, size, std::make_unique<Type>(std::move(left)), std::make_unique<Type>(std::move(right))}));
}

const Type& Type::left() const {
  if (is_base()) throw std::logic_error("Type::left on base type");
  return *node_->left;
}

const Type& Type::right() const {
  if (is_base()) throw std::logic_error("Type::right on base type");
  return *node_->right;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.is_base()) return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_base()) return std::strong_ordering::equal;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

namespace detail {

namespace {

Type parse_atom(Cursor& cur) {
  if (cur.accept("(")) {
    Type inner = parse_type_at(cur);
    cur.expect(")");
    return inner;
  }
  if (cur.peek() == 'N') {
    cur.accept("N");
    return Type::nat();
  }
  cur.fail("expected 'N' or '('");
}

Type parse_prod(Cursor& cur) {
  Type acc = parse_atom(cur);
  while (cur.accept("*")) acc = Type::prod(std::move(acc), parse_atom(cur));
  return acc;
}

}  // namespace

Type parse_type_at(Cursor& cur) {
  Type head = parse_prod(cur);
  if (cur.accept("->")) return Type::arrow(std::move(head), parse_type_at(cur));
  return head;
}

}  // namespace detail

Type parse_type(std::string_view text) {
  detail::Cursor cur(text);
  Type t = detail::parse_type_at(cur);
  cur.expect_end("type");
  return t;
}

namespace {

void print_into(const Type& t, std::string& out) {
  switch (t.kind()) {
    case Type::Kind::Base:
      out += 'N';
      return;
    case Type::Kind::Arrow:
      if (t.domain().is_arrow()) {
        out += '(';
        print_into(t.domain(), out);
        out += ')';
      } else {
        print_into(t.domain(), out);
      }
      out += "->";
      print_into(t.codomain(), out);
      return;
    case Type::Kind::Prod:
      // Left-associative: a product on the left needs no parentheses.
      if (t.left().is_arrow()) {
        out += '(';
        print_into(t.left(), out);
        out += ')';
      } else {
        print_into(t.left(), out);
      }
      out += '*';
      if (t.right().is_base()) {
        out += 'N';
      } else {
        out += '(';
        print_into(t.right(), out);
        out += ')';
      }
      return;
  }
}

}  // namespace

std::string print_type(const Type& t) {
  std::string out;
  print_into(t, out);
  return out;
}

unsigned level(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Base:
      return 0;
    case Type::Kind::Arrow:
      return std::max(level(t.domain()) + 1, level(t.codomain()));
    case Type::Kind::Prod:
      return std::max(level(t.left()), level(t.right()));
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Type& t) { return os << print_type(t); }

}  // namespace typerank
