#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "magmoid/error.hpp"

namespace magmoid::comb {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Binary application trees over the constants S K I B C W and lowercase
// atoms. Immutable; subterms are shared freely.
class Term {
public:
  enum class Kind { constant, atom, app };

  static TermPtr constant(char c);
  static TermPtr atom(std::string name);
  static TermPtr app(TermPtr fn, TermPtr arg);

  Kind kind() const { return kind_; }
  char constant_name() const { return constant_; }
  const std::string& atom_name() const { return atom_; }
  const TermPtr& fn() const { return fn_; }
  const TermPtr& arg() const { return arg_; }
  std::size_t size() const { return size_; } // node count

private:
  Term() = default;
  Kind kind_ = Kind::constant;
  char constant_ = 0;
  std::string atom_;
  TermPtr fn_, arg_;
  std::size_t size_ = 1;
};

bool is_constant_letter(char c);
bool equal(const TermPtr& a, const TermPtr& b);

// Minimal-parenthesis printing; application is left-associative, so only
// right operands that are themselves applications get parentheses.
std::string print(const TermPtr& t);

// term = factor+ ; factor = constant | atom | "(" term ")" ;
// constants are the six uppercase letters, atoms lowercase identifiers.
TermPtr parse(std::string_view text);

std::set<char> constants_of(const TermPtr& t);
bool contains_atom(const TermPtr& t, std::string_view name);

struct BasisInfo {
  std::set<char> constants;
  std::string logic;
};

// Syntactic basis plus the substructural logic it lives in: subsets of BI
// are "ordered", of BCI "linear", of BW "FL_c / ordered logic with
// contraction", of BCWI "relevance"; anything with S or K is unclassified.
BasisInfo basis_of(const TermPtr& t);

// Statman's fixed-point combinator (B(WW))((BW)((BB)B)).
TermPtr statman();

} // namespace magmoid::comb
