#include "magmoid/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace magmoid {

QuotientCategory::QuotientCategory(CategoryPtr base, std::vector<QuotientHom> homs,
                                   CheckReport verification)
    : base_(std::move(base)), homs_(std::move(homs)),
      verification_(std::move(verification)) {}

const QuotientHom& QuotientCategory::hom_classes(std::string_view dom,
                                                 std::string_view cod) const {
  for (const auto& h : homs_)
    if (h.dom == dom && h.cod == cod) return h;
  throw InputError("no hom classes recorded for " + std::string(dom) + " -> " +
                   std::string(cod));
}

std::size_t QuotientCategory::class_of(const Mor& m) const {
  const QuotientHom& h = hom_classes(m.dom.name, m.cod.name);
  for (std::size_t i = 0; i < h.classes.size(); ++i)
    for (const Mor& member : h.classes[i].members)
      if (member == m) return i;
  throw InputError("morphism not found in the quotient: " + describe(m));
}

QuotientCategory concrete_quotient(CategoryPtr base, const Budget& budget) {
  const Category& cat = *base;
  CheckReport verification{"concrete quotient", 0, {}};
  std::vector<QuotientHom> homs;

  for (const Obj& x : cat.objects()) {
    auto points = cat.t_points(x, budget);
    for (const Obj& y : cat.objects()) {
      QuotientHom qh{x.name, y.name, {}};
      for (Mor& f : cat.hom(x, y, budget)) {
        bool placed = false;
        for (QuotientClass& cls : qh.classes) {
          const Mor& rep = cls.members.front();
          bool same = true;
          for (const Mor& p : points)
            if (!(cat.compose(f, p) == cat.compose(rep, p))) { same = false; break; }
          if (same) { cls.members.push_back(f); placed = true; break; }
        }
        if (!placed) qh.classes.push_back(QuotientClass{{f}});
      }
      for (QuotientClass& cls : qh.classes)
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const Mor& a, const Mor& b) { return FiniteFunction::table_less(a.fn, b.fn); });
      // deterministic class order: by canonical representative
      std::sort(qh.classes.begin(), qh.classes.end(),
                [](const QuotientClass& a, const QuotientClass& b) {
                  return FiniteFunction::table_less(a.members.front().fn, b.members.front().fn);
                });
      homs.push_back(std::move(qh));
    }
  }
  QuotientCategory q(base, std::move(homs), verification);

  // the congruence respects composition
  for (const Obj& x : cat.objects())
    for (const Obj& y : cat.objects()) {
      const QuotientHom& xy = q.hom_classes(x.name, y.name);
      for (const Obj& z : cat.objects()) {
        const QuotientHom& yz = q.hom_classes(y.name, z.name);
        for (const QuotientClass& fc : xy.classes)
          for (const QuotientClass& gc : yz.classes) {
            std::size_t expected =
                q.class_of(cat.compose(gc.members.front(), fc.members.front()));
            for (const Mor& f : fc.members)
              for (const Mor& g : gc.members) {
                ++verification.cases;
                if (q.class_of(cat.compose(g, f)) != expected)
                  verification.violations.push_back(
                      {"congruence", "composite of " + describe(f) + " and " + describe(g) +
                                         " leaves its class"});
              }
          }
      }
    }

  // Hom(t, X) = Hom(Qt, QX): classes of morphisms out of t are singletons
  const Obj& t = cat.t();
  for (const Obj& x : cat.objects()) {
    const QuotientHom& tx = q.hom_classes(t.name, x.name);
    std::size_t total = 0;
    for (const QuotientClass& cls : tx.classes) total += cls.members.size();
    ++verification.cases;
    if (total != tx.classes.size())
      verification.violations.push_back(
          {"Hom(t,X)=Hom(Qt,QX)", "a class of t -> " + x.name + " has several members"});
  }

  // Hom(Qt,-) is faithful on the quotient: distinct classes act differently
  // on some class of t-points
  for (const Obj& x : cat.objects()) {
    auto points = cat.t_points(x, budget);
    for (const Obj& y : cat.objects()) {
      const QuotientHom& xy = q.hom_classes(x.name, y.name);
      for (std::size_t i = 0; i < xy.classes.size(); ++i)
        for (std::size_t j = i + 1; j < xy.classes.size(); ++j) {
          ++verification.cases;
          bool separated = false;
          for (const Mor& p : points)
            if (!(cat.compose(xy.classes[i].members.front(), p) ==
                  cat.compose(xy.classes[j].members.front(), p))) {
              separated = true;
              break;
            }
          if (!separated)
            verification.violations.push_back(
                {"faithfulness", "classes " + std::to_string(i) + " and " + std::to_string(j) +
                                     " of " + x.name + " -> " + y.name + " are not separated"});
        }
    }
  }

  return QuotientCategory(base, std::vector<QuotientHom>(q.homs()), std::move(verification));
}

namespace {

// observational signature of a morphism: the composite tables with every
// t-point of its domain, flattened with separators
std::vector<std::uint32_t> point_signature(const Category& cat, const Mor& m,
                                           const std::vector<Mor>& points) {
  std::vector<std::uint32_t> sig;
  for (const Mor& p : points) {
    FiniteFunction composite = compose(m.fn, p.fn);
    sig.insert(sig.end(), composite.table().begin(), composite.table().end());
    sig.push_back(0xffffffffu);
  }
  return sig;
}

} // namespace

CheckReport check_quotient_cartesian(const QuotientCategory& q, const Budget& budget) {
  const Category& cat = q.base();
  CheckReport report{"quotient product is cartesian", 0, {}};

  std::map<std::string, std::vector<Mor>> points;
  for (const Obj& x : cat.objects()) points[x.name] = cat.t_points(x, budget);

  // well-definedness: [f]#[g] does not depend on representatives; trivially
  // true on singleton classes, so only multi-member classes are swept
  for (const Obj& x : cat.objects())
    for (const Obj& y : cat.objects()) {
      const QuotientHom& xy = q.hom_classes(x.name, y.name);
      for (const Obj& x2 : cat.objects())
        for (const Obj& y2 : cat.objects()) {
          const QuotientHom& x2y2 = q.hom_classes(x2.name, y2.name);
          auto prod_points = cat.t_points(cat.tensor_obj(x, x2), budget);
          for (const QuotientClass& fc : xy.classes)
            for (const QuotientClass& gc : x2y2.classes) {
              if (fc.members.size() == 1 && gc.members.size() == 1) continue;
              Mor rep = cat.tensor_mor(fc.members.front(), gc.members.front());
              auto rep_sig = point_signature(cat, rep, prod_points);
              for (const Mor& f : fc.members)
                for (const Mor& g : gc.members) {
                  ++report.cases;
                  if (report.cases > budget.checks)
                    throw SizeLimitExceeded("quotient product sweep over budget");
                  if (point_signature(cat, cat.tensor_mor(f, g), prod_points) != rep_sig)
                    report.violations.push_back(
                        {"well-defined", describe(f) + " # " + describe(g)});
                }
            }
        }
    }

  // universal property on classes, via the base projections: for every pair
  // of classes ([u], [v]) exactly one class of pairings w -> x#y hits it
  for (const Obj& x : cat.objects())
    for (const Obj& y : cat.objects()) {
      auto p1 = cat.proj1(x, y);
      auto p2 = cat.proj2(x, y);
      if (!p1 || !p2)
        throw MissingProjection("check_quotient_cartesian needs both projections");
      Obj xy = cat.tensor_obj(x, y);
      for (const Obj& w : cat.objects()) {
        const auto& wpts = points[w.name];
        const QuotientHom& wx = q.hom_classes(w.name, x.name);
        const QuotientHom& wy = q.hom_classes(w.name, y.name);
        // class index by signature, for both target hom-sets
        std::map<std::vector<std::uint32_t>, std::size_t> u_index, v_index;
        for (std::size_t i = 0; i < wx.classes.size(); ++i)
          u_index[point_signature(cat, wx.classes[i].members.front(), wpts)] = i;
        for (std::size_t i = 0; i < wy.classes.size(); ++i)
          v_index[point_signature(cat, wy.classes[i].members.front(), wpts)] = i;

        std::map<std::pair<std::size_t, std::size_t>, std::size_t> hits;
        std::set<std::vector<std::uint32_t>> seen_classes;
        for (const Mor& h : cat.hom(w, xy, budget)) {
          if (!seen_classes.insert(point_signature(cat, h, wpts)).second) continue;
          auto ui = u_index.find(point_signature(cat, cat.compose(*p1, h), wpts));
          auto vi = v_index.find(point_signature(cat, cat.compose(*p2, h), wpts));
          if (ui == u_index.end() || vi == v_index.end()) {
            report.violations.push_back(
                {"pairing", "projection composite of " + describe(h) +
                                " lands outside the recorded classes"});
            continue;
          }
          ++hits[{ui->second, vi->second}];
        }
        for (std::size_t i = 0; i < wx.classes.size(); ++i)
          for (std::size_t j = 0; j < wy.classes.size(); ++j) {
            ++report.cases;
            auto it = hits.find({i, j});
            std::size_t n = it == hits.end() ? 0 : it->second;
            if (n != 1)
              report.violations.push_back(
                  {"pairing", "expected exactly one class " + w.name + " -> " + xy.name +
                                  " over class pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + "), found " + std::to_string(n)});
          }
      }
    }
  return report;
}

} // namespace magmoid
