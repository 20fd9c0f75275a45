#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magmoid/category.hpp"

namespace magmoid {

struct Violation {
  std::string law;    // which equation failed
  std::string detail; // the witnessing morphisms / elements
};

struct CheckReport {
  std::string check;
  std::uint64_t cases = 0;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

std::string format_report(const CheckReport& r);

// id_X # id_Y = id_{X#Y} and (f o f') # (g o g') = (f # g) o (f' # g'),
// swept over the declared hom-sets; budget.checks bounds the sweep size.
CheckReport check_bifunctoriality(const Category& cat, const Budget& budget = {});

// (f # f) o d_X = d_Y o f for every declared f : X -> Y.
// Throws MissingDiagonal when the diagonal is undefined on a declared object.
CheckReport check_diagonal_naturality(const Category& cat, const Budget& budget = {});

// Same equation restricted to morphisms t -> A: the only instances of
// naturality the fixed-point and diagonal proofs consume.
CheckReport check_diagonal_naturality_at(const Category& cat, const Obj& A,
                                         const Budget& budget = {});

struct TFreeResult {
  bool t_free = false;
  std::optional<Mor> fixed_point; // witness when not t-free
  bool vacuous = false;           // no t-points at all
};

// sigma o c != c for every t-point c of sigma's object.
TFreeResult is_t_free(const Category& cat, const Mor& sigma, const Budget& budget = {});

// Observational equality relative to t: f o x = g o x for every x : t -> dom.
bool point_equal(const Category& cat, const Mor& f, const Mor& g, const Budget& budget = {});

} // namespace magmoid
