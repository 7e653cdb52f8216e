#include "typerank/term.hpp"

#include "cursor.hpp"

#include <algorithm>
#include <set>

namespace typerank {

namespace {

bool is_keyword(const std::string& s) { return s == "fst" || s == "snd" || s == "if"; }

class TermParser {
public:
  explicit TermParser(std::string_view text) : cur_(text) {}

  Term parse() {
    Term t = term();
    cur_.expect_end("term");
    return t;
  }

private:
  Term term() {
    if (cur_.accept("\\")) {
      std::size_t at = cur_.position();
      std::string name = cur_.identifier();
      if (is_keyword(name)) cur_.fail_at(at, "keyword '" + name + "' cannot be bound");
      cur_.expect(":");
      Type annot = detail::parse_type_at(cur_);
      cur_.expect(".");
      Term body = term();
      return Term::lam(name, std::move(annot), body);
    }
    Term acc = prim();
    while (starts_prim()) acc = Term::app(std::move(acc), prim());
    return acc;
  }

  bool starts_prim() {
    char c = cur_.peek();
    return cur_.peek_ident_start() || cur_.peek_digit() || c == '<' || c == '(';
  }

  Term prim() {
    if (cur_.accept("(")) {
      Term inner = term();
      cur_.expect(")");
      return inner;
    }
    if (cur_.accept("<")) {
      Term left = term();
      cur_.expect(",");
      Term right = term();
      cur_.expect(">");
      return Term::pair(std::move(left), std::move(right));
    }
    if (cur_.peek_digit()) return Term::num(Numeral::from_digits(cur_.digits()));
    if (!cur_.peek_ident_start()) cur_.fail("expected a term");
    std::string word = cur_.identifier();
    if (word == "fst") return Term::fst(prim());
    if (word == "snd") return Term::snd(prim());
    if (word == "if") {
      if (!cur_.peek_digit()) cur_.fail("expected the index of 'if'");
      Numeral n = Numeral::from_digits(cur_.digits());
      Term scrut = prim();
      Term then_branch = prim();
      Term else_branch = prim();
      return Term::if_n(std::move(n), std::move(scrut), std::move(then_branch), std::move(else_branch));
    }
    return Term::var(std::move(word));
  }

  detail::Cursor cur_;
};

class Printer {
public:
  explicit Printer(const Term& root) {
    for (auto& name : free_variables(root)) reserved_.insert(name);
  }

  void term(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::Lam: {
        std::string name = fresh(t.name());
        out += '\\';
        out += name;
        out += ':';
        out += print_type(t.annot());
        out += ". ";
        scope_.push_back(name);
        term(t.child(0), out);
        scope_.pop_back();
        return;
      }
      case Term::Kind::App:
        head(t.child(0), out);
        out += ' ';
        arg(t.child(1), out);
        return;
      case Term::Kind::Fst:
      case Term::Kind::Snd:
        out += t.kind() == Term::Kind::Fst ? "fst " : "snd ";
        arg(t.child(0), out);
        return;
      case Term::Kind::IfN:
        out += "if ";
        out += t.numeral().str();
        for (std::size_t i = 0; i < 3; ++i) {
          out += ' ';
          arg(t.child(i), out);
        }
        return;
      default:
        atom(t, out);
        return;
    }
  }

private:
  void atom(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::Bound:
        if (t.index() >= scope_.size()) {
          out += "#" + std::to_string(t.index());
        } else {
          out += scope_[scope_.size() - 1 - t.index()];
        }
        return;
      case Term::Kind::Free:
        out += t.name();
        return;
      case Term::Kind::Num:
        out += t.numeral().str();
        return;
      case Term::Kind::Pair:
        out += '<';
        term(t.child(0), out);
        out += ", ";
        term(t.child(1), out);
        out += '>';
        return;
      default:
        out += '(';
        term(t, out);
        out += ')';
        return;
    }
  }

  // Function position of an application: applications and projections chain.
  void head(const Term& t, std::string& out) {
    if (t.kind() == Term::Kind::App || t.kind() == Term::Kind::Fst || t.kind() == Term::Kind::Snd) {
      term(t, out);
    } else {
      atom(t, out);
    }
  }

  void arg(const Term& t, std::string& out) { atom(t, out); }

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || is_keyword(hint) ? "x" : hint;
    auto taken = [&](const std::string& s) {
      return reserved_.count(s) > 0 || std::find(scope_.begin(), scope_.end(), s) != scope_.end();
    };
    if (!taken(base)) return base;
    while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
    if (base.empty()) base = "x";
    for (std::size_t i = 1;; ++i) {
      std::string candidate = base + std::to_string(i);
      if (!taken(candidate)) return candidate;
    }
  }

  std::set<std::string> reserved_;
  std::vector<std::string> scope_;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string print_term(const Term& t) {
  std::string out;
  Printer(t).term(t, out);
  return out;
}

}  // namespace typerank
