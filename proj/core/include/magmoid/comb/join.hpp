#pragma once

#include "magmoid/budget.hpp"
#include "magmoid/comb/reduce.hpp"

namespace magmoid::comb {

// Bounded joinability: conversion is semi-decided by searching the reducts
// of both terms for a common one. A negative outcome is always the explicit
// verdict NotWithinBudget, never a claim of non-equality.
struct JoinResult {
  bool joinable = false;
  TermPtr common;
  std::vector<TermPtr> path_a, path_b; // start ... common, inclusive
  std::uint64_t explored = 0;          // distinct terms visited on both sides
};

// Seeds both sides with their leftmost reduction chains, then runs a
// level-synchronised breadth-first search over all one-step reducts with the
// frontier capped at `width`, depth capped at `fuel`, and generated terms
// capped at `term_cap` nodes.
JoinResult joinable(const TermPtr& a, const TermPtr& b, int fuel, std::size_t width,
                    std::size_t term_cap = 100'000);

enum class FpcVerdict { verified, not_within_budget };

struct FpcResult {
  FpcVerdict verdict = FpcVerdict::not_within_budget;
  std::string fresh_atom;
  JoinResult join;
};

// f is a fixed-point combinator when f x converts to x (f x) for a fresh
// atom x; verified by bounded joinability of the two sides.
FpcResult check_fpc(const TermPtr& f, int fuel = Budget{}.fuel,
                    std::size_t width = Budget{}.width);

} // namespace magmoid::comb
