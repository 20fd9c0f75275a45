#pragma once

#include "magmoid/category.hpp"

namespace magmoid {

struct ProbeCheck {
  Obj probe;
  std::uint64_t maps_in = 0;  // |Hom(W, Y^X)|
  std::uint64_t maps_out = 0; // |Hom(W#X, Y)|
  bool bijective = false;
};

// A candidate internal hom object together with a brute-force certificate:
// for every probe W, f |-> ev o (f # id_X) is a bijection
// Hom(W, Y^X) -> Hom(W#X, Y).
struct InternalHomWitness {
  Obj X, Y, hom_obj;
  Mor ev; // Y^X # X -> Y
  std::vector<ProbeCheck> certificate;
  bool certified_at(const Obj& probe) const;
};

// Verifies the candidate against every probe; throws NotRepresentable with
// the colliding or missing morphism.
InternalHomWitness check_internal_hom(const Category& cat, const Obj& X, const Obj& Y,
                                      const Obj& hom_obj, const Mor& ev,
                                      const std::vector<Obj>& probes,
                                      const Budget& budget = {});

// The built-in hom recipe for the closed variants (finset, pointed_bot,
// slice); nullopt elsewhere.
std::optional<std::pair<Obj, Mor>> internal_hom_candidate(const Category& cat,
                                                          const Obj& X, const Obj& Y);

// Convenience: build the candidate and certify it against the declared
// objects (or the given probes).
InternalHomWitness certified_hom(const Category& cat, const Obj& X, const Obj& Y,
                                 const Budget& budget = {});

// The unique f : W -> Y^X with ev o (f # id_X) = g, found by search over
// Hom(W, Y^X) and re-verified. Certifies W on demand if it was not among the
// witness probes. Throws NoSolution / MultipleSolutions.
Mor curry(const Category& cat, const InternalHomWitness& hom, const Mor& g, const Obj& W,
          const Budget& budget = {});

// ev o (f # id_X)
Mor uncurry(const Category& cat, const InternalHomWitness& hom, const Mor& f);

} // namespace magmoid
