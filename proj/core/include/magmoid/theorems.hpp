#pragma once

#include "magmoid/checks.hpp"

namespace magmoid {

// One t-point's worth of evidence that F misses f: the two composites that
// must differ, and do when verified.
struct DiagonalWitness {
  Mor a;   // t -> A
  Mor b;   // t -> B (equals a, or s o a in the section form)
  Mor lhs; // f o b
  Mor rhs; // F o (a # b) o d_t
};

struct DiagonalReport {
  std::string theorem;
  Mor f; // the constructed morphism every row of F misses
  std::vector<DiagonalWitness> witnesses;
  bool verified = false; // all witnesses exhibit an inequality
};

struct FixedPointReport {
  std::string theorem;
  Mor a0;                  // index point used
  std::optional<Mor> lift; // b_a in the point-surjective form
  Mor c;                   // constructed point of C
  bool hypothesis_ok = false;
  bool conclusion_ok = false; // sigma o c = c
  std::vector<std::string> naturality_used;
};

std::string format_report(const DiagonalReport& r);
std::string format_report(const FixedPointReport& r);

// Every F : A#A -> C is an incomplete parametrisation when sigma is t-free:
// f := sigma o F o d_A differs from every row of F on the diagonal point.
// Throws NotTFree (with the fixed point in the message), MissingDiagonal,
// NotNatural (a t-point of A fails to be a comagma map).
DiagonalReport diagonal_argument(const Category& cat, const Obj& A, const Obj& Cobj,
                                 const Mor& F, const Mor& sigma, const Budget& budget = {});

// Variant through a split pair p : B -> A, s : A -> B with p o s = id;
// f := sigma o F o (p # id) o d_B, witnessed at b = s o a.
DiagonalReport diagonal_argument_section(const Category& cat, const Mor& p, const Mor& s,
                                         const Mor& F, const Mor& sigma,
                                         const Budget& budget = {});

// If sigma o F o d_A o a = F o (a0 # a) o d_t for every a : t -> A, then
// c := F o d_A o a0 satisfies sigma o c = c. Throws HypothesisFailed with
// the violating a.
FixedPointReport fixed_point(const Category& cat, const Obj& A, const Obj& Cobj,
                             const Mor& F, const Mor& sigma, const Mor& a0,
                             const Budget& budget = {});

// First a0 (in enumeration order) passing the hypothesis, or nullopt.
std::optional<FixedPointReport> fixed_point_search(const Category& cat, const Obj& A,
                                                   const Obj& Cobj, const Mor& F,
                                                   const Mor& sigma,
                                                   const Budget& budget = {});

// Point-surjective variant: p : B -> A surjective on t-points, F : A#B -> C,
// hypothesis quantified over b : t -> B; c := F o (p # id) o d_B o b_a for
// the first lift b_a of a.
FixedPointReport fixed_point_section(const Category& cat, const Mor& p, const Mor& F,
                                     const Mor& sigma, const Mor& a,
                                     const Budget& budget = {});

// pr2 o d = id and naturality of pr2 in both arguments, over declared objects.
// Throws MissingProjection when the instance has no pr2 tables.
CheckReport check_right_projection(const Category& cat, const Budget& budget = {});

// Internal-logic form: uses only the diagonal and the right projection.
// Requires t' -> 1 to be a regular epi (concretely: t' nonempty) and the
// rectangle F o (a0 # id_A) = sigma o F o d_A o pr2 on t'#A; then
// c := sigma o F o d_A o a0 satisfies sigma o c = c. Never touches pr1.
FixedPointReport fixed_point_regular(const Category& cat, const Obj& A, const Obj& Cobj,
                                     const Mor& F, const Mor& sigma, const Obj& tprime,
                                     const Mor& a0, const Budget& budget = {});

} // namespace magmoid
