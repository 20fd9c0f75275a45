#include "magmoid/uniform.hpp"

#include <sstream>

namespace magmoid {

std::string_view crisp_variant_name(CrispVariant v) {
  switch (v) {
    case CrispVariant::plain: return "plain";
    case CrispVariant::crisp_section: return "crisp_section";
    case CrispVariant::crisp_index: return "crisp_index";
  }
  return "?";
}

std::string format_report(const UniformFixReport& r) {
  std::ostringstream os;
  os << "theorem: " << r.theorem << " [" << crisp_variant_name(r.variant) << "]\n";
  os << "idx: " << describe(r.idx) << "\n";
  os << "fix: " << describe(r.fix) << "\n";
  os << "hypothesis: " << (r.hypothesis_ok ? "ok" : "FAILED")
     << "  fixed-point square: " << (r.conclusion_ok ? "ok" : "FAILED");
  return os.str();
}

std::string format_report(const SplitEpiReport& r) {
  std::ostringstream os;
  os << "theorem: " << r.theorem << "\n";
  os << "F: " << describe(r.F) << "\n";
  os << "idx: " << describe(r.idx) << "\n";
  os << "fix: " << describe(r.fix) << "\n";
  os << "curry square: " << (r.curry_square_ok ? "ok" : "FAILED")
     << "  insertion: " << (r.insertion_square_ok ? "ok" : "FAILED")
     << "  rectangle: " << (r.rectangle_ok ? "ok" : "FAILED")
     << "  fixed point: " << (r.fixed_point_ok ? "ok" : "FAILED");
  return os.str();
}

namespace {

Mor require_diagonal(const Category& cat, const Obj& x) {
  auto d = cat.diagonal(x);
  if (!d) throw MissingDiagonal("diagonal undefined on '" + x.name + "'");
  return *d;
}

// the hypothesis rectangle of the uniform theorem, as morphisms
// flat(E) # B -> C:  F o (idx # id_B)  =  ev o (id # F) o (e # ((p#id) o d_B))
bool rectangle_holds(const Category& cat, const InternalHomWitness& E_hom, const Mor& e_E,
                     const Mor& p, const Mor& F, const Mor& idx, std::string* where) {
  const Obj& B = p.dom;
  Mor d_B = require_diagonal(cat, B);
  Mor right_leg = cat.compose(cat.tensor_mor(p, cat.identity(B)), d_B); // B -> A#B
  Mor lhs = cat.compose(F, cat.tensor_mor(idx, cat.identity(B)));
  Mor rhs = cat.compose(
      E_hom.ev,
      cat.compose(cat.tensor_mor(cat.identity(E_hom.hom_obj), F),
                  cat.tensor_mor(e_E, right_leg)));
  if (lhs == rhs) return true;
  if (where) {
    for (std::size_t i = 0; i < lhs.dom.carrier.size(); ++i)
      if (lhs.fn.apply_index(i) != rhs.fn.apply_index(i)) {
        *where = lhs.dom.carrier.element(i);
        break;
      }
  }
  return false;
}

// the conclusion square: ev o (e # fix) o d_{flat E} = fix
bool fixed_point_square(const Category& cat, const InternalHomWitness& E_hom,
                        const Mor& e_E, const Mor& fix) {
  Mor d = require_diagonal(cat, fix.dom);
  Mor lhs = cat.compose(E_hom.ev, cat.compose(cat.tensor_mor(e_E, fix), d));
  return lhs == fix;
}

void require_section(const Category& cat, const Mor& p, const Mor& s, const Mor& expected) {
  if (!(cat.compose(p, s) == expected))
    throw NotASection("p o s differs from " + describe(expected.fn));
  if (!p.fn.is_surjective())
    throw NotASection("p is not surjective on carriers");
}

} // namespace

UniformFixReport uniform_fix(const Category& cat, const FlatFunctor& flat,
                             const InternalHomWitness& E_hom, const Mor& p, const Mor& s,
                             const Mor& F, const Mor& idx, const Budget& budget) {
  (void)budget;
  const Obj& B = p.dom;
  const Obj& A = p.cod;
  const Obj E = E_hom.hom_obj;
  Obj flatE = flat.on_obj(E);
  if (!(idx.dom == flatE) || !(idx.cod == A))
    throw CompositionMismatch("idx must be flat(" + E.name + ") -> " + A.name);
  if (!(F.dom == cat.tensor_obj(A, B)))
    throw CompositionMismatch("F must start at " + A.name + "#" + B.name);
  require_section(cat, p, s, cat.identity(A));

  Mor e_E = flat.counit(E);
  UniformFixReport report;
  report.theorem = "uniform fixed point";
  report.variant = CrispVariant::plain;
  report.idx = idx;

  std::string where;
  if (!rectangle_holds(cat, E_hom, e_E, p, F, idx, &where))
    throw HypothesisFailed("uniform-fix rectangle fails at element '" + where + "'");
  report.hypothesis_ok = true;

  Mor d_A = require_diagonal(cat, A);
  report.fix = cat.compose(
      F, cat.compose(cat.tensor_mor(cat.identity(A), s), cat.compose(d_A, idx)));
  report.conclusion_ok = fixed_point_square(cat, E_hom, e_E, report.fix);
  return report;
}

UniformFixReport uniform_fix_crisp(const Category& cat, const FlatFunctor& flat,
                                   const InternalHomWitness& E_hom, const Mor& p,
                                   const Mor& s_crisp, const Mor& F, const Mor& idx,
                                   CrispVariant variant, const Budget& budget) {
  if (variant == CrispVariant::plain)
    throw InvalidSpec("use uniform_fix for the plain variant");
  const Obj& A = p.cod;
  const Obj E = E_hom.hom_obj;
  Obj flatA = flat.on_obj(A);
  Obj flatE = flat.on_obj(E);
  Mor e_A = flat.counit(A);
  Mor e_E = flat.counit(E);

  if (!(s_crisp.dom == flatA) || !(s_crisp.cod == p.dom))
    throw CompositionMismatch("crisp section must be flat(" + A.name + ") -> " + p.dom.name);
  // p o s_crisp = e_A
  if (!(cat.compose(p, s_crisp) == e_A))
    throw NotASection("p o s_crisp differs from the counit at " + A.name);

  // crisp index: the rectangle is stated for a crisp flat(E) -> A; the plain
  // variant enters it through the counit.
  Mor crisp_idx = idx;
  if (variant == CrispVariant::crisp_index) {
    if (!(idx.dom == E) || !(idx.cod == A))
      throw CompositionMismatch("plain idx must be " + E.name + " -> " + A.name);
    crisp_idx = cat.compose(idx, e_E);
  } else {
    if (!(idx.dom == flatE) || !(idx.cod == A))
      throw CompositionMismatch("crisp idx must be flat(" + E.name + ") -> " + A.name);
  }

  UniformFixReport report;
  report.theorem = "uniform fixed point";
  report.variant = variant;
  report.idx = idx;

  std::string where;
  if (!rectangle_holds(cat, E_hom, e_E, p, F, crisp_idx, &where))
    throw HypothesisFailed("uniform-fix rectangle fails at element '" + where + "'");
  report.hypothesis_ok = true;

  Mor d_flatA = require_diagonal(cat, flatA);
  Mor tail = cat.compose(F, cat.compose(cat.tensor_mor(e_A, s_crisp), d_flatA)); // flat(A) -> C

  if (variant == CrispVariant::crisp_section) {
    if (!flat.has_comul())
      throw MissingComultiplication("crisp_section needs the comonad structure m");
    CheckReport comonad = check_idempotent_comonad(cat, flat, budget);
    if (!comonad.passed())
      throw MissingComultiplication("comonad laws fail: " + comonad.violations.front().law);
    Mor m_E = flat.comul(E);
    // (CU) at the endomorphism object itself, which the proof consumes
    if (!(cat.compose(flat.counit(flatE), m_E) == cat.identity(flatE)))
      throw MissingComultiplication("(CU) fails at " + E.name);
    // flat(E) -> m -> flat(flat(E)) -> flat(idx) -> flat(A) -> tail -> C
    report.fix = cat.compose(tail, cat.compose(flat.on_mor(idx), m_E));
  } else {
    // flat(E) -> flat(idx) -> flat(A) -> tail -> C
    report.fix = cat.compose(tail, flat.on_mor(idx));
  }
  report.conclusion_ok = fixed_point_square(cat, E_hom, e_E, report.fix);
  return report;
}

SplitEpiReport fix_from_split_epi(const Category& cat, const Obj& A, const Obj& Cobj,
                                  const InternalHomWitness& CA_hom,
                                  const InternalHomWitness& CC_hom, const Mor& alpha,
                                  const Mor& ell, const Budget& budget) {
  const Obj& CA = CA_hom.hom_obj;
  const Obj& CC = CC_hom.hom_obj;
  if (!(CA_hom.X == A) || !(CA_hom.Y == Cobj) || !(CC_hom.X == Cobj) || !(CC_hom.Y == Cobj))
    throw CompositionMismatch("hom witnesses do not match A and C");
  if (!(alpha.dom == A) || !(alpha.cod == CA))
    throw CompositionMismatch("alpha must be " + A.name + " -> " + CA.name);
  if (!(ell.dom == CA) || !(ell.cod == A))
    throw CompositionMismatch("ell must be " + CA.name + " -> " + A.name);
  require_section(cat, alpha, ell, cat.identity(CA));

  SplitEpiReport report;
  report.theorem = "fixed point from a split epi onto C^A";

  Mor d_A = require_diagonal(cat, A);
  report.F = cat.compose(CA_hom.ev, cat.tensor_mor(alpha, cat.identity(A)));

  // g := ev o (id # F) o (id # d_A) : C^C # A -> C
  Mor id_cc = cat.identity(CC);
  Mor g = cat.compose(
      CC_hom.ev, cat.compose(cat.tensor_mor(id_cc, report.F),
                             cat.tensor_mor(id_cc, d_A)));
  Mor curried = curry(cat, CA_hom, g, CC, budget);
  report.curry_square_ok =
      cat.compose(CA_hom.ev, cat.tensor_mor(curried, cat.identity(A))) == g;

  // inserting alpha o ell = id into the curry square
  Mor insertion = cat.compose(
      CA_hom.ev, cat.tensor_mor(cat.compose(alpha, ell), cat.identity(A)));
  report.insertion_square_ok = insertion == CA_hom.ev;

  report.idx = cat.compose(ell, curried);
  // the uniform-theorem rectangle with B = A, p = s = id, flat = Id
  report.rectangle_ok =
      cat.compose(report.F, cat.tensor_mor(report.idx, cat.identity(A))) == g;

  Mor f_diag = cat.compose(report.F, d_A); // A -> C
  report.fix = cat.compose(f_diag, report.idx);

  Mor d_cc = require_diagonal(cat, CC);
  Mor lhs = cat.compose(CC_hom.ev,
                        cat.compose(cat.tensor_mor(id_cc, report.fix), d_cc));
  report.fixed_point_ok = lhs == report.fix;
  return report;
}

SplitEpiReport fix_reflexive(const Category& cat, const Obj& Cobj,
                             const InternalHomWitness& CC_hom, const Mor& app,
                             const Mor& lam, const Budget& budget) {
  SplitEpiReport report =
      fix_from_split_epi(cat, Cobj, Cobj, CC_hom, CC_hom, app, lam, budget);
  report.theorem = "fixed point from a reflexive object";
  return report;
}

} // namespace magmoid
