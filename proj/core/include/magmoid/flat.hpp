#pragma once

#include <functional>
#include <map>

#include "magmoid/category.hpp"
#include "magmoid/checks.hpp"

namespace magmoid {

// A copointed endofunctor: flat with counit e_X : flat(X) -> X, optionally
// with comultiplication m_X : flat(X) -> flat(flat(X)) making it an
// idempotent comonad.
struct FlatFunctor {
  std::string name;
  std::function<Obj(const Obj&)> on_obj;
  std::function<Mor(const Mor&)> on_mor;
  std::function<Mor(const Obj&)> counit;
  std::function<Mor(const Obj&)> comul; // may be empty
  bool has_comul() const { return static_cast<bool>(comul); }
};

// flat = Id, e = id, m = id
FlatFunctor make_flat_identity();

// Pointed instances: flat(X, x0) = ({x0}, x0), e the inclusion, m the
// canonical isomorphism. Crisp maps flat(A) -> B pick out single points.
FlatFunctor make_flat_trivializing();

// Table overrides on named objects, for exercising the checkers against
// corrupted data. The override applies wherever flat(X) has X's name.
FlatFunctor with_counit_override(FlatFunctor base, std::string obj_name, FiniteFunction table);
FlatFunctor with_comul_override(FlatFunctor base, std::string obj_name, FiniteFunction table);

// Verifies functoriality of flat and naturality of the counit over the
// declared hom-sets.
CheckReport check_copointed(const Category& cat, const FlatFunctor& flat,
                            const Budget& budget = {});

// Verifies (CA) m_{flat X} o m_X = flat(m_X) o m_X and
// (CU) e_{flat X} o m_X = flat(e_X) o m_X = id, plus invertibility of m_X.
// Throws MissingComultiplication when the functor has no m.
CheckReport check_idempotent_comonad(const Category& cat, const FlatFunctor& flat,
                                     const Budget& budget = {});

} // namespace magmoid
