#include "magmoid/comb/term.hpp"

#include <cctype>

namespace magmoid::comb {

bool is_constant_letter(char c) {
  return c == 'S' || c == 'K' || c == 'I' || c == 'B' || c == 'C' || c == 'W';
}

TermPtr Term::constant(char c) {
  if (!is_constant_letter(c))
    throw SyntaxError(std::string("unknown constant '") + c + "'");
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::constant;
  t->constant_ = c;
  return t;
}

TermPtr Term::atom(std::string name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    throw SyntaxError("atom names are lowercase identifiers; got '" + name + "'");
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::atom;
  t->atom_ = std::move(name);
  return t;
}

TermPtr Term::app(TermPtr fn, TermPtr arg) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::app;
  t->size_ = 1 + fn->size() + arg->size();
  t->fn_ = std::move(fn);
  t->arg_ = std::move(arg);
  return t;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind() || a->size() != b->size()) return false;
  switch (a->kind()) {
    case Term::Kind::constant: return a->constant_name() == b->constant_name();
    case Term::Kind::atom: return a->atom_name() == b->atom_name();
    case Term::Kind::app: return equal(a->fn(), b->fn()) && equal(a->arg(), b->arg());
  }
  return false;
}

namespace {

void print_into(const TermPtr& t, std::string& out, bool parenthesize_app) {
  switch (t->kind()) {
    case Term::Kind::constant: out += t->constant_name(); return;
    case Term::Kind::atom: out += t->atom_name(); return;
    case Term::Kind::app:
      if (parenthesize_app) out += '(';
      print_into(t->fn(), out, false);
      out += ' ';
      print_into(t->arg(), out, true);
      if (parenthesize_app) out += ')';
      return;
  }
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at position " + std::to_string(pos));
  }

  TermPtr parse_factor() {
    char c = text[pos];
    if (c == '(') {
      ++pos;
      TermPtr t = parse_term();
      skip_spaces();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (!is_constant_letter(c)) fail(std::string("unknown constant '") + c + "'");
      ++pos;
      return Term::constant(c);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::islower(static_cast<unsigned char>(text[pos])) ||
              std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return Term::atom(std::string(text.substr(start, pos - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  TermPtr parse_term() {
    skip_spaces();
    if (pos >= text.size()) fail("expected a term");
    TermPtr t = parse_factor();
    while (true) {
      skip_spaces();
      if (pos >= text.size() || text[pos] == ')') return t;
      t = Term::app(t, parse_factor());
    }
  }
};

} // namespace

std::string print(const TermPtr& t) {
  std::string out;
  print_into(t, out, false);
  return out;
}

TermPtr parse(std::string_view text) {
  Parser p{text};
  TermPtr t = p.parse_term();
  p.skip_spaces();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

std::set<char> constants_of(const TermPtr& t) {
  std::set<char> out;
  switch (t->kind()) {
    case Term::Kind::constant: out.insert(t->constant_name()); break;
    case Term::Kind::atom: break;
    case Term::Kind::app: {
      out = constants_of(t->fn());
      for (char c : constants_of(t->arg())) out.insert(c);
      break;
    }
  }
  return out;
}

bool contains_atom(const TermPtr& t, std::string_view name) {
  switch (t->kind()) {
    case Term::Kind::constant: return false;
    case Term::Kind::atom: return t->atom_name() == name;
    case Term::Kind::app:
      return contains_atom(t->fn(), name) || contains_atom(t->arg(), name);
  }
  return false;
}

BasisInfo basis_of(const TermPtr& t) {
  BasisInfo info;
  info.constants = constants_of(t);
  auto subset_of = [&](std::string_view basis) {
    for (char c : info.constants)
      if (basis.find(c) == std::string_view::npos) return false;
    return true;
  };
  if (subset_of("BI")) info.logic = "ordered";
  else if (subset_of("BCI")) info.logic = "linear";
  else if (subset_of("BW")) info.logic = "FL_c / ordered logic with contraction";
  else if (subset_of("BCWI")) info.logic = "relevance";
  else info.logic = "unclassified";
  return info;
}

TermPtr statman() {
  auto B = Term::constant('B');
  auto W = Term::constant('W');
  // (B(WW))((BW)((BB)B))
  return Term::app(Term::app(B, Term::app(W, W)),
                   Term::app(Term::app(B, W), Term::app(Term::app(B, B), B)));
}

} // namespace magmoid::comb
