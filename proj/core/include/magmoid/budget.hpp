#pragma once

#include <cstddef>
#include <cstdint>

namespace magmoid {

// Resource caps shared by all enumerating operations. Everything in the
// library is exact and finite; budgets only bound how much of the finite
// space a single call is allowed to walk.
struct Budget {
  // cap on |cod|^|dom| when enumerating all functions between two carriers
  std::uint64_t enumeration = 1'000'000;
  // cap on the number of equations an axiom sweep may test
  std::uint64_t checks = 10'000'000;
  // combinator engine: reduction step budget
  int fuel = 100;
  // combinator engine: breadth-first frontier cap per side
  std::size_t width = 10'000;
  // combinator engine: node-count guard for terms produced during search
  std::size_t term_nodes = 100'000;
};

} // namespace magmoid
