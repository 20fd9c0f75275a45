#pragma once

#include <functional>

#include "magmoid/category.hpp"

namespace magmoid {

// A pointed endofunctor: object/morphism maps plus the family
// iota_X : X -> T(X).
struct PointedEndofunctor {
  std::string name;
  std::function<Obj(const Obj&)> on_obj;
  std::function<Mor(const Mor&)> on_mor;
  std::function<Mor(const Obj&)> point;
};

enum class TwistSide { left, right };

// New magmoidal product from a pointed endofunctor:
//   left:  A # B := T(A) x B,  d^T = (iota # id) o d
//   right: A # B := A x T(B),  d^T = (id # iota) o d
// Functoriality of T and naturality of the induced diagonal are validated
// over the declared hom-sets; NotNatural names the offending morphism.
// Raw naturality of iota is also tested but only recorded as a note when it
// fails while the induced diagonal is still natural (the pointed-set bottom
// twist is exactly such a case).
CategoryPtr twist_by_endofunctor(CategoryPtr base, PointedEndofunctor T,
                                 TwistSide side, const Budget& budget = {});

// T = Id with iota = id; twisting by it returns an instance equal to the base.
PointedEndofunctor identity_endofunctor();

// Pointed sets: freely adjoin a new basepoint "bot"; the old basepoint
// becomes a regular element and iota renames it. Right-twisting the smash
// instance by this gives the pointed_bot product.
PointedEndofunctor add_bottom_endofunctor();

// Plain finite sets: freely adjoin one fresh element, iota the inclusion.
PointedEndofunctor add_fresh_point_endofunctor();

// Cartesian slice over `base`: T(A -> X) = (A x X -> X) with iota the graph
// map a |-> (a, leg(a)). Left-twisting the cartesian slice by this yields a
// category isomorphic to the `slice` variant.
PointedEndofunctor times_base_endofunctor(FiniteSet base);

} // namespace magmoid
