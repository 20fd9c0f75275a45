#include "magmoid/checks.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace magmoid {

std::string format_report(const CheckReport& r) {
  std::ostringstream os;
  os << r.check << ": " << (r.passed() ? "PASS" : "FAIL") << " (cases=" << r.cases << ")";
  for (const auto& v : r.violations) os << "\n  " << v.law << ": " << v.detail;
  return os.str();
}

namespace {

// key identifying a morphism between declared objects
using MorKey = std::tuple<std::string, std::string, std::vector<std::uint32_t>>;
MorKey key_of(const Mor& m) { return {m.dom.name, m.cod.name, m.fn.table()}; }

} // namespace

CheckReport check_bifunctoriality(const Category& cat, const Budget& budget) {
  CheckReport report{"bifunctoriality", 0, {}};
  const auto& objs = cat.objects();

  // identity part: id_X # id_Y = id_{X#Y}
  for (const Obj& x : objs)
    for (const Obj& y : objs) {
      Mor lhs = cat.tensor_mor(cat.identity(x), cat.identity(y));
      Mor rhs = cat.identity(cat.tensor_obj(x, y));
      ++report.cases;
      if (!(lhs == rhs))
        report.violations.push_back(
            {"id#id=id", "objects " + x.name + ", " + y.name + ": got " + describe(lhs)});
    }

  // all morphisms between declared objects, with ids for table lookups
  std::vector<Mor> mors;
  std::map<MorKey, std::size_t> ids;
  for (const Obj& x : objs)
    for (const Obj& y : objs)
      for (Mor& m : cat.hom(x, y, budget)) {
        ids.emplace(key_of(m), mors.size());
        mors.push_back(std::move(m));
      }

  // composable pairs, each with the id of its composite
  struct Pair { std::size_t outer, inner, composite; };
  std::vector<Pair> composable;
  bool closure_reported = false;
  for (std::size_t i = 0; i < mors.size(); ++i)
    for (std::size_t o = 0; o < mors.size(); ++o) {
      if (!(mors[i].cod == mors[o].dom)) continue;
      Mor comp = cat.compose(mors[o], mors[i]);
      auto it = ids.find(key_of(comp));
      if (it == ids.end()) {
        if (!closure_reported) {
          report.violations.push_back(
              {"closure", "composite of " + describe(mors[i]) + " and " +
                              describe(mors[o]) + " is rejected by the hom predicate"});
          closure_reported = true;
        }
        continue;
      }
      composable.push_back({o, i, it->second});
    }

  std::uint64_t quads = static_cast<std::uint64_t>(composable.size()) * composable.size();
  if (report.cases + quads > budget.checks)
    throw SizeLimitExceeded("bifunctoriality sweep needs " + std::to_string(quads) +
                            " cases, over the budget of " + std::to_string(budget.checks));

  // precompute every f # g once; the quadruple sweep then only reads tables
  std::vector<std::vector<Mor>> tensor(mors.size());
  for (std::size_t i = 0; i < mors.size(); ++i) {
    tensor[i].reserve(mors.size());
    for (std::size_t j = 0; j < mors.size(); ++j)
      tensor[i].push_back(cat.tensor_mor(mors[i], mors[j]));
  }

  for (const Pair& p : composable) {
    for (const Pair& q : composable) {
      const auto& lhs = tensor[p.composite][q.composite].fn.table();
      const auto& outer = tensor[p.outer][q.outer].fn.table();
      const auto& inner = tensor[p.inner][q.inner].fn.table();
      ++report.cases;
      bool equal = lhs.size() == inner.size();
      for (std::size_t i = 0; equal && i < lhs.size(); ++i)
        equal = lhs[i] == outer[inner[i]];
      if (!equal) {
        report.violations.push_back(
            {"interchange",
             "f=" + describe(mors[p.outer]) + " f'=" + describe(mors[p.inner]) +
                 " g=" + describe(mors[q.outer]) + " g'=" + describe(mors[q.inner])});
        if (report.violations.size() >= 5) return report;
      }
    }
  }
  return report;
}

namespace {

void naturality_case(const Category& cat, const Mor& f, CheckReport& report) {
  auto dx = cat.diagonal(f.dom);
  auto dy = cat.diagonal(f.cod);
  if (!dx)
    throw MissingDiagonal("diagonal undefined on '" + f.dom.name + "'");
  if (!dy)
    throw MissingDiagonal("diagonal undefined on '" + f.cod.name + "'");
  Mor lhs = cat.compose(cat.tensor_mor(f, f), *dx);
  Mor rhs = cat.compose(*dy, f);
  ++report.cases;
  if (!(lhs == rhs))
    report.violations.push_back({"naturality", describe(f)});
}

} // namespace

CheckReport check_diagonal_naturality(const Category& cat, const Budget& budget) {
  CheckReport report{"diagonal naturality (all objects)", 0, {}};
  for (const Obj& x : cat.objects())
    for (const Obj& y : cat.objects())
      for (const Mor& f : cat.hom(x, y, budget)) {
        if (report.cases >= budget.checks)
          throw SizeLimitExceeded("diagonal naturality sweep over budget");
        naturality_case(cat, f, report);
      }
  return report;
}

CheckReport check_diagonal_naturality_at(const Category& cat, const Obj& A,
                                         const Budget& budget) {
  CheckReport report{"diagonal naturality (t-points of " + A.name + ")", 0, {}};
  for (const Mor& a : cat.t_points(A, budget)) naturality_case(cat, a, report);
  return report;
}

TFreeResult is_t_free(const Category& cat, const Mor& sigma, const Budget& budget) {
  if (!(sigma.dom == sigma.cod))
    throw CompositionMismatch("t-freeness is a property of endomorphisms; got " +
                              describe(sigma));
  TFreeResult result;
  auto points = cat.t_points(sigma.dom, budget);
  result.vacuous = points.empty();
  result.t_free = true;
  for (const Mor& c : points)
    if (cat.compose(sigma, c) == c) {
      result.t_free = false;
      result.fixed_point = c;
      break;
    }
  return result;
}

bool point_equal(const Category& cat, const Mor& f, const Mor& g, const Budget& budget) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw CompositionMismatch("point_equal needs a parallel pair");
  for (const Mor& x : cat.t_points(f.dom, budget))
    if (!(cat.compose(f, x) == cat.compose(g, x))) return false;
  return true;
}

} // namespace magmoid
