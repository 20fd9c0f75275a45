#pragma once

#include <optional>
#include <vector>

#include "magmoid/comb/term.hpp"

namespace magmoid::comb {

// One contraction: the redex position as a root path of L/R steps into the
// application tree, the constant whose rule fired, and the whole resulting
// term.
struct Step {
  std::string pos;
  char rule = 0;
  TermPtr result;
};

// Contracts the leftmost-outermost redex; nullopt on a normal form. Rules
// fire only at exact arity:
//   I x -> x          K x y -> x         W x y -> x y y
//   B x y z -> x (y z)   C x y z -> x z y   S x y z -> x z (y z)
std::optional<Step> step(const TermPtr& t);

// Contracts the rightmost-innermost redex instead; used as the second
// strategy in confluence spot-checks.
std::optional<Step> step_rightmost_innermost(const TermPtr& t);

// Every single-step reduct, one per redex position, in preorder.
std::vector<Step> all_steps(const TermPtr& t);

struct ReductionTrace {
  TermPtr start;
  std::vector<Step> steps;
  bool normal_form = false; // false means the fuel ran out
};

ReductionTrace normalize(const TermPtr& t, int fuel);
ReductionTrace normalize_rightmost_innermost(const TermPtr& t, int fuel);

std::string format_trace(const ReductionTrace& trace);

} // namespace magmoid::comb
