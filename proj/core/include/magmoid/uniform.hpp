#pragma once

#include "magmoid/flat.hpp"
#include "magmoid/hom.hpp"

namespace magmoid {

enum class CrispVariant { plain, crisp_section, crisp_index };
std::string_view crisp_variant_name(CrispVariant v);

struct UniformFixReport {
  std::string theorem;
  CrispVariant variant = CrispVariant::plain;
  Mor idx; // the index morphism supplied (crisp or plain)
  Mor fix; // the constructed fixed-point morphism flat(C^C) -> C
  bool hypothesis_ok = false;
  bool conclusion_ok = false; // ev o (e # fix) o d = fix
};

std::string format_report(const UniformFixReport& r);

// Higher-order fixed point: given an epi p : B -> A with section s,
// F : A#B -> C and a crisp index idx : flat(C^C) -> A satisfying
//   F o (idx # id_B) = ev o (id # F) o (e # ((p # id) o d_B)),
// the composite fix := F o (id # s) o d_A o idx satisfies
//   ev o (e # fix) o d_{flat(C^C)} = fix.
UniformFixReport uniform_fix(const Category& cat, const FlatFunctor& flat,
                             const InternalHomWitness& E_hom, const Mor& p, const Mor& s,
                             const Mor& F, const Mor& idx, const Budget& budget = {});

// The comonadic variants: a crisp section s_crisp : flat(A) -> B with
// p o s_crisp = e_A. crisp_section keeps idx : flat(C^C) -> A and routes it
// through m; crisp_index takes a plain idx : C^C -> A and needs no m.
UniformFixReport uniform_fix_crisp(const Category& cat, const FlatFunctor& flat,
                                   const InternalHomWitness& E_hom, const Mor& p,
                                   const Mor& s_crisp, const Mor& F, const Mor& idx,
                                   CrispVariant variant, const Budget& budget = {});

struct SplitEpiReport {
  std::string theorem;
  Mor F;   // ev_A o (alpha # id) : A#A -> C
  Mor idx; // ell o curry(ev o (id#F) o (id#d_A)) : C^C -> A
  Mor fix; // (F o d_A) o idx : C^C -> C
  bool curry_square_ok = false;
  bool insertion_square_ok = false;
  bool rectangle_ok = false;   // the uniform-fix hypothesis with B=A, p=s=id
  bool fixed_point_ok = false; // ev o (id # fix) o d = fix
  bool ok() const {
    return curry_square_ok && insertion_square_ok && rectangle_ok && fixed_point_ok;
  }
};

std::string format_report(const SplitEpiReport& r);

// From a split epi alpha : A -> C^A (section ell) construct
// fix : C^C -> C^A -> A -> C and verify all intermediate squares.
SplitEpiReport fix_from_split_epi(const Category& cat, const Obj& A, const Obj& Cobj,
                                  const InternalHomWitness& CA_hom,
                                  const InternalHomWitness& CC_hom, const Mor& alpha,
                                  const Mor& ell, const Budget& budget = {});

// Reflexive object: app : C -> C^C epi with section lam; specialises the
// split-epi construction with A = C.
SplitEpiReport fix_reflexive(const Category& cat, const Obj& Cobj,
                             const InternalHomWitness& CC_hom, const Mor& app,
                             const Mor& lam, const Budget& budget = {});

} // namespace magmoid
