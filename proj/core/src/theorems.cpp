#include "magmoid/theorems.hpp"

#include <sstream>
#include <variant>

namespace magmoid {

std::string format_report(const DiagonalReport& r) {
  std::ostringstream os;
  os << "theorem: " << r.theorem << "\n";
  os << "f: " << describe(r.f) << "\n";
  for (const auto& w : r.witnesses)
    os << "  a=" << describe(w.a.fn) << " b=" << describe(w.b.fn)
       << "  f.b=" << describe(w.lhs.fn) << " != F.(a#b).d_t=" << describe(w.rhs.fn) << "\n";
  os << "verified: " << (r.verified ? "yes" : "NO");
  return os.str();
}

std::string format_report(const FixedPointReport& r) {
  std::ostringstream os;
  os << "theorem: " << r.theorem << "\n";
  os << "a0: " << describe(r.a0) << "\n";
  if (r.lift) os << "lift: " << describe(*r.lift) << "\n";
  os << "c: " << describe(r.c) << "\n";
  for (const auto& n : r.naturality_used) os << "  used: " << n << "\n";
  os << "hypothesis: " << (r.hypothesis_ok ? "ok" : "FAILED")
     << "  conclusion sigma.c=c: " << (r.conclusion_ok ? "ok" : "FAILED");
  return os.str();
}

namespace {

Mor require_diagonal(const Category& cat, const Obj& x) {
  auto d = cat.diagonal(x);
  if (!d) throw MissingDiagonal("diagonal undefined on '" + x.name + "'");
  return *d;
}

void require_t_free(const Category& cat, const Mor& sigma, const Budget& budget) {
  TFreeResult tf = is_t_free(cat, sigma, budget);
  if (!tf.t_free)
    throw NotTFree("sigma is not t-free; fixed point " + describe(tf.fixed_point->fn));
}

// every t-point of A must be a comagma map: d_A o a = (a # a) o d_t
void require_points_comagma(const Category& cat, const Obj& A, const Mor& d_t,
                            const Mor& d_A, const Budget& budget) {
  for (const Mor& a : cat.t_points(A, budget))
    if (!(cat.compose(d_A, a) == cat.compose(cat.tensor_mor(a, a), d_t)))
      throw NotNatural("t-point " + describe(a.fn) + " of '" + A.name +
                       "' is not a comagma map");
}

void check_mor_shape(const Mor& m, const Obj& dom, const Obj& cod, const std::string& who) {
  if (!(m.dom == dom) || !(m.cod == cod))
    throw CompositionMismatch(who + " has the wrong shape: " + describe(m));
}

} // namespace

DiagonalReport diagonal_argument(const Category& cat, const Obj& A, const Obj& Cobj,
                                 const Mor& F, const Mor& sigma, const Budget& budget) {
  check_mor_shape(F, cat.tensor_obj(A, A), Cobj, "F");
  check_mor_shape(sigma, Cobj, Cobj, "sigma");
  require_t_free(cat, sigma, budget);
  Mor d_t = require_diagonal(cat, cat.t());
  Mor d_A = require_diagonal(cat, A);
  require_points_comagma(cat, A, d_t, d_A, budget);

  DiagonalReport report;
  report.theorem = "diagonal argument (magmoidal)";
  report.f = cat.compose(sigma, cat.compose(F, d_A));
  report.verified = true;
  for (const Mor& a : cat.t_points(A, budget)) {
    DiagonalWitness w;
    w.a = a;
    w.b = a;
    w.lhs = cat.compose(report.f, a);
    w.rhs = cat.compose(F, cat.compose(cat.tensor_mor(a, a), d_t));
    if (w.lhs == w.rhs) report.verified = false;
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

DiagonalReport diagonal_argument_section(const Category& cat, const Mor& p, const Mor& s,
                                         const Mor& F, const Mor& sigma,
                                         const Budget& budget) {
  const Obj& B = p.dom;
  const Obj& A = p.cod;
  check_mor_shape(s, A, B, "s");
  check_mor_shape(F, cat.tensor_obj(A, B), sigma.dom, "F");
  if (!(cat.compose(p, s) == cat.identity(A)))
    throw NotASection("p o s is not the identity of '" + A.name + "'");
  require_t_free(cat, sigma, budget);
  Mor d_t = require_diagonal(cat, cat.t());
  Mor d_A = require_diagonal(cat, A);
  Mor d_B = require_diagonal(cat, B);
  require_points_comagma(cat, A, d_t, d_A, budget);
  // naturality of the diagonal with respect to s
  if (!(cat.compose(d_B, s) == cat.compose(cat.tensor_mor(s, s), d_A)))
    throw NotNatural("diagonal is not natural with respect to s");

  DiagonalReport report;
  report.theorem = "diagonal argument (section variant)";
  report.f = cat.compose(sigma, cat.compose(F, cat.compose(cat.tensor_mor(p, cat.identity(B)), d_B)));
  report.verified = true;
  for (const Mor& a : cat.t_points(A, budget)) {
    DiagonalWitness w;
    w.a = a;
    w.b = cat.compose(s, a);
    w.lhs = cat.compose(report.f, w.b);
    w.rhs = cat.compose(F, cat.compose(cat.tensor_mor(a, w.b), d_t));
    if (w.lhs == w.rhs) report.verified = false;
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

namespace {

// Core of the index-point theorem; returns the violating point instead of
// throwing so the search variant can keep scanning.
std::variant<FixedPointReport, Mor> try_fixed_point(const Category& cat, const Obj& A,
                                                    const Mor& F, const Mor& sigma,
                                                    const Mor& a0, const Budget& budget) {
  Mor d_t = require_diagonal(cat, cat.t());
  Mor d_A = require_diagonal(cat, A);
  Mor f_diag = cat.compose(sigma, cat.compose(F, d_A)); // sigma o F o d_A : A -> C
  for (const Mor& a : cat.t_points(A, budget)) {
    Mor lhs = cat.compose(f_diag, a);
    Mor rhs = cat.compose(F, cat.compose(cat.tensor_mor(a0, a), d_t));
    if (!(lhs == rhs)) return a;
  }
  FixedPointReport report;
  report.theorem = "fixed point (magmoidal, index point)";
  report.a0 = a0;
  report.c = cat.compose(F, cat.compose(d_A, a0));
  report.hypothesis_ok = true;
  report.conclusion_ok = cat.compose(sigma, report.c) == report.c;
  report.naturality_used = {"diagonal naturality with respect to a0"};
  return report;
}

} // namespace

FixedPointReport fixed_point(const Category& cat, const Obj& A, const Obj& Cobj,
                             const Mor& F, const Mor& sigma, const Mor& a0,
                             const Budget& budget) {
  check_mor_shape(F, cat.tensor_obj(A, A), Cobj, "F");
  check_mor_shape(sigma, Cobj, Cobj, "sigma");
  check_mor_shape(a0, cat.t(), A, "a0");
  auto result = try_fixed_point(cat, A, F, sigma, a0, budget);
  if (auto* violating = std::get_if<Mor>(&result))
    throw HypothesisFailed("hypothesis fails at a = " + describe(violating->fn));
  return std::get<FixedPointReport>(result);
}

std::optional<FixedPointReport> fixed_point_search(const Category& cat, const Obj& A,
                                                   const Obj& Cobj, const Mor& F,
                                                   const Mor& sigma, const Budget& budget) {
  check_mor_shape(F, cat.tensor_obj(A, A), Cobj, "F");
  check_mor_shape(sigma, Cobj, Cobj, "sigma");
  for (const Mor& a0 : cat.t_points(A, budget)) {
    auto result = try_fixed_point(cat, A, F, sigma, a0, budget);
    if (auto* report = std::get_if<FixedPointReport>(&result)) {
      report->theorem = "fixed point (magmoidal, searched index point)";
      return *report;
    }
  }
  return std::nullopt;
}

FixedPointReport fixed_point_section(const Category& cat, const Mor& p, const Mor& F,
                                     const Mor& sigma, const Mor& a, const Budget& budget) {
  const Obj& B = p.dom;
  const Obj& A = p.cod;
  const Obj& Cobj = sigma.dom;
  check_mor_shape(F, cat.tensor_obj(A, B), Cobj, "F");
  check_mor_shape(sigma, Cobj, Cobj, "sigma");
  check_mor_shape(a, cat.t(), A, "a");

  // p surjective on t-points, collecting the lift of a along the way
  std::optional<Mor> lift;
  auto b_points = cat.t_points(B, budget);
  for (const Mor& ap : cat.t_points(A, budget)) {
    bool lifted = false;
    for (const Mor& b : b_points)
      if (cat.compose(p, b) == ap) {
        if (ap == a && !lift) lift = b;
        lifted = true;
        break;
      }
    if (!lifted)
      throw NotPointSurjective("t-point " + describe(ap.fn) + " of '" + A.name +
                               "' does not lift through p");
  }

  Mor d_t = require_diagonal(cat, cat.t());
  Mor d_B = require_diagonal(cat, B);
  Mor p_tensor_id = cat.tensor_mor(p, cat.identity(B));
  Mor g = cat.compose(F, cat.compose(p_tensor_id, d_B)); // F o (p#id) o d_B : B -> C

  // naturality of the diagonal with respect to the lift actually used
  if (!(cat.compose(d_B, *lift) == cat.compose(cat.tensor_mor(*lift, *lift), d_t)))
    throw NotNatural("diagonal is not natural with respect to the lift b_a");

  for (const Mor& b : b_points) {
    Mor lhs = cat.compose(sigma, cat.compose(g, b));
    Mor rhs = cat.compose(F, cat.compose(cat.tensor_mor(a, b), d_t));
    if (!(lhs == rhs))
      throw HypothesisFailed("hypothesis fails at b = " + describe(b.fn));
  }

  FixedPointReport report;
  report.theorem = "fixed point (point-surjective variant)";
  report.a0 = a;
  report.lift = lift;
  report.c = cat.compose(g, *lift);
  report.hypothesis_ok = true;
  report.conclusion_ok = cat.compose(sigma, report.c) == report.c;
  report.naturality_used = {"diagonal naturality with respect to b_a"};
  return report;
}

CheckReport check_right_projection(const Category& cat, const Budget& budget) {
  CheckReport report{"right projection", 0, {}};
  // pr2 o d = id
  for (const Obj& x : cat.objects()) {
    auto pr = cat.proj2(x, x);
    if (!pr) throw MissingProjection("no pr2 at (" + x.name + "," + x.name + ")");
    auto d = cat.diagonal(x);
    if (!d) throw MissingDiagonal("diagonal undefined on '" + x.name + "'");
    ++report.cases;
    if (!(cat.compose(*pr, *d) == cat.identity(x)))
      report.violations.push_back({"pr2 o d = id", "object " + x.name});
  }
  // naturality in both arguments: pr2 o (f # g) = g o pr2
  for (const Obj& x : cat.objects())
    for (const Obj& y : cat.objects()) {
      auto pr = cat.proj2(x, y);
      if (!pr) throw MissingProjection("no pr2 at (" + x.name + "," + y.name + ")");
      for (const Obj& x2 : cat.objects())
        for (const Obj& y2 : cat.objects()) {
          auto pr2t = cat.proj2(x2, y2);
          if (!pr2t) throw MissingProjection("no pr2 at (" + x2.name + "," + y2.name + ")");
          for (const Mor& f : cat.hom(x, x2, budget))
            for (const Mor& g : cat.hom(y, y2, budget)) {
              ++report.cases;
              if (report.cases > budget.checks)
                throw SizeLimitExceeded("right projection sweep over budget");
              if (!(cat.compose(*pr2t, cat.tensor_mor(f, g)) == cat.compose(g, *pr)))
                report.violations.push_back(
                    {"pr2 naturality", "f=" + describe(f) + " g=" + describe(g)});
            }
        }
    }
  return report;
}

FixedPointReport fixed_point_regular(const Category& cat, const Obj& A, const Obj& Cobj,
                                     const Mor& F, const Mor& sigma, const Obj& tprime,
                                     const Mor& a0, const Budget& budget) {
  check_mor_shape(F, cat.tensor_obj(A, A), Cobj, "F");
  check_mor_shape(sigma, Cobj, Cobj, "sigma");
  check_mor_shape(a0, tprime, A, "a0");
  if (tprime.carrier.empty())
    throw NotRegularEpi("t' = '" + tprime.name + "' is empty, so t' -> 1 is not a regular epi");

  Mor d_A = require_diagonal(cat, A);
  auto pr = cat.proj2(tprime, A);
  if (!pr) throw MissingProjection("no pr2 at (" + tprime.name + "," + A.name + ")");

  // the rectangle F o (a0 # id_A) = sigma o F o d_A o pr2 on t' # A
  Mor lhs = cat.compose(F, cat.tensor_mor(a0, cat.identity(A)));
  Mor rhs = cat.compose(sigma, cat.compose(F, cat.compose(d_A, *pr)));
  if (!(lhs == rhs)) {
    for (std::size_t i = 0; i < lhs.dom.carrier.size(); ++i)
      if (lhs.fn.apply_index(i) != rhs.fn.apply_index(i))
        throw HypothesisFailed("rectangle fails at element '" +
                               lhs.dom.carrier.element(i) + "' of " + lhs.dom.name);
    throw HypothesisFailed("rectangle fails");
  }

  FixedPointReport report;
  report.theorem = "fixed point (regular form, right projections only)";
  report.a0 = a0;
  report.c = cat.compose(sigma, cat.compose(F, cat.compose(d_A, a0)));
  report.hypothesis_ok = true;
  report.conclusion_ok = cat.compose(sigma, report.c) == report.c;

  // the naturality facts the proof consumes, verified here
  auto d_tp = require_diagonal(cat, tprime);
  bool d_nat = cat.compose(d_A, a0) == cat.compose(cat.tensor_mor(a0, a0), d_tp);
  report.naturality_used.push_back(std::string("diagonal naturality wrt a0: ") +
                                   (d_nat ? "holds" : "FAILS"));
  auto pr_tt = cat.proj2(tprime, tprime);
  bool pr_nat = pr_tt && cat.compose(a0, *pr_tt) ==
                             cat.compose(*pr, cat.tensor_mor(cat.identity(tprime), a0));
  report.naturality_used.push_back(std::string("pr2 naturality wrt a0: ") +
                                   (pr_nat ? "holds" : "FAILS"));
  bool pr_diag = pr_tt && cat.compose(*pr_tt, d_tp) == cat.identity(tprime);
  report.naturality_used.push_back(std::string("pr2 o d = id at t': ") +
                                   (pr_diag ? "holds" : "FAILS"));
  if (!d_nat || !pr_nat || !pr_diag) report.hypothesis_ok = false;
  return report;
}

} // namespace magmoid
