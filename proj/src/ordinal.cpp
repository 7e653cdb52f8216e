#include "typerank/ordinal.hpp"

#include "cursor.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace typerank {

Ordinal::Ordinal(std::vector<Ordinal> exponents) {
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i - 1] < exponents[i]) throw std::invalid_argument("ordinal exponents must be non-increasing");
  }
  if (!exponents.empty()) terms_ = std::make_shared<const std::vector<Ordinal>>(std::move(exponents));
}

Ordinal Ordinal::one() {
  static const Ordinal value(std::vector<Ordinal>{Ordinal()});
  return value;
}

Ordinal Ordinal::omega() {
  static const Ordinal value(std::vector<Ordinal>{Ordinal::one()});
  return value;
}

Ordinal Ordinal::finite(std::size_t n) { return Ordinal(std::vector<Ordinal>(n, Ordinal())); }

std::span<const Ordinal> Ordinal::exponents() const {
  if (!terms_) return {};
  return {terms_->data(), terms_->size()};
}

bool Ordinal::is_successor() const { return !is_zero() && last_exponent().is_zero(); }

bool Ordinal::is_finite() const { return is_zero() || leading_exponent().is_zero(); }

const Ordinal& Ordinal::leading_exponent() const {
  if (is_zero()) throw std::logic_error("leading_exponent of 0");
  return terms_->front();
}

const Ordinal& Ordinal::last_exponent() const {
  if (is_zero()) throw std::logic_error("last_exponent of 0");
  return terms_->back();
}

Ordinal Ordinal::without_last_term() const {
  if (is_zero()) throw std::logic_error("without_last_term of 0");
  return Ordinal(std::vector<Ordinal>(terms_->begin(), terms_->end() - 1));
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw std::logic_error("predecessor of a non-successor");
  return without_last_term();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return compare_ordinals(a, b) == Order::Equal; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  switch (compare_ordinals(a, b)) {
    case Order::Less:
      return std::strong_ordering::less;
    case Order::Equal:
      return std::strong_ordering::equal;
    case Order::Greater:
      break;
  }
  return std::strong_ordering::greater;
}

Order compare_ordinals(const Ordinal& a, const Ordinal& b) {
  if (a.terms_ == b.terms_) return Order::Equal;
  auto xs = a.exponents();
  auto ys = b.exponents();
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    Order c = compare_ordinals(xs[i], ys[i]);
    if (c != Order::Equal) return c;
  }
  if (xs.size() == ys.size()) return Order::Equal;
  return xs.size() < ys.size() ? Order::Less : Order::Greater;
}

Ordinal cantor_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  auto xs = a.exponents();
  std::vector<Ordinal> out;
  out.reserve(xs.size() + b.term_count());
  for (const Ordinal& e : xs) {
    if (e < lead) break;
    out.push_back(e);
  }
  for (const Ordinal& e : b.exponents()) out.push_back(e);
  return Ordinal(std::move(out));
}

Ordinal omega_pow(const Ordinal& a) { return Ordinal(std::vector<Ordinal>{a}); }

Ordinal omega_pow_times(const Ordinal& a, std::size_t k) { return Ordinal(std::vector<Ordinal>(k, a)); }

bool is_cantor_sum(const Ordinal& g, const Ordinal& a) {
  if (g.is_zero() || a.is_zero()) return true;
  return a.leading_exponent() <= g.last_exponent();
}

namespace {

constexpr std::size_t kMaxCoefficient = 1'000'000;

std::size_t parse_positive(detail::Cursor& cur) {
  std::size_t at = cur.position();
  std::string text = cur.digits();
  std::size_t value = 0;
  for (char c : text) {
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > kMaxCoefficient) cur.fail_at(at, "natural number too large");
  }
  if (value == 0) cur.fail_at(at, "0 is only allowed as the whole ordinal");
  return value;
}

Ordinal parse_sum(detail::Cursor& cur);

Ordinal parse_factor(detail::Cursor& cur) {
  if (cur.accept("(")) {
    Ordinal inner = parse_sum(cur);
    cur.expect(")");
    return inner;
  }
  if (cur.accept("w")) return Ordinal::omega();
  if (cur.peek_digit()) return Ordinal::finite(parse_positive(cur));
  cur.fail("expected 'w', a natural number or '('");
}

Ordinal parse_term(detail::Cursor& cur) {
  if (cur.peek_digit()) return Ordinal::finite(parse_positive(cur));
  if (!cur.accept("w")) cur.fail("expected 'w' or a natural number");
  Ordinal exponent = Ordinal::one();
  if (cur.accept("^")) exponent = parse_factor(cur);
  std::size_t copies = 1;
  if (cur.accept("*")) copies = parse_positive(cur);
  return omega_pow_times(exponent, copies);
}

Ordinal parse_sum(detail::Cursor& cur) {
  Ordinal acc = parse_term(cur);
  while (cur.accept("+")) acc = cantor_add(acc, parse_term(cur));
  return acc;
}

void print_into(const Ordinal& a, std::string& out);

void print_exponent(const Ordinal& e, std::string& out) {
  if (e.is_finite()) {
    out += std::to_string(e.finite_value());
  } else if (e == Ordinal::omega()) {
    out += 'w';
  } else {
    out += '(';
    print_into(e, out);
    out += ')';
  }
}

void print_into(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  auto xs = a.exponents();
  std::size_t i = 0;
  bool first = true;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    std::size_t run = j - i;
    if (!first) out += " + ";
    first = false;
    const Ordinal& e = xs[i];
    if (e.is_zero()) {
      out += std::to_string(run);
    } else {
      out += 'w';
      if (e != Ordinal::one()) {
        out += '^';
        print_exponent(e, out);
      }
      if (run > 1) {
        out += '*';
        out += std::to_string(run);
      }
    }
    i = j;
  }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  detail::Cursor cur(text);
  if (cur.peek_digit()) {
    std::string digits = cur.digits();
    if (cur.at_end() && std::all_of(digits.begin(), digits.end(), [](char c) { return c == '0'; })) {
      return Ordinal::zero();
    }
    cur = detail::Cursor(text);
  }
  Ordinal result = parse_sum(cur);
  cur.expect_end("ordinal");
  return result;
}

std::string print_ordinal(const Ordinal& a) {
  std::string out;
  print_into(a, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << print_ordinal(a); }

}  // namespace typerank
