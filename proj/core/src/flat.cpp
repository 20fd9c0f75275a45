#include "magmoid/flat.hpp"

namespace magmoid {

FlatFunctor make_flat_identity() {
  FlatFunctor f;
  f.name = "identity";
  f.on_obj = [](const Obj& x) { return x; };
  f.on_mor = [](const Mor& m) { return m; };
  f.counit = [](const Obj& x) { return Mor{x, x, identity_function(x.carrier)}; };
  f.comul = [](const Obj& x) { return Mor{x, x, identity_function(x.carrier)}; };
  return f;
}

namespace {

Obj trivialize(const Obj& x) {
  const auto* p = std::get_if<PointedData>(&x.data);
  if (!p) throw InvalidSpec("trivializing flat needs pointed objects; '" + x.name + "' is not");
  std::string name = "flat(" + x.name + ")";
  return Obj{name, FiniteSet(name, {p->basepoint}), PointedData{p->basepoint}};
}

Mor between_singletons(Obj dom, Obj cod) {
  FiniteFunction fn(dom.carrier, cod.carrier, {0});
  return Mor{std::move(dom), std::move(cod), std::move(fn)};
}

} // namespace

FlatFunctor make_flat_trivializing() {
  FlatFunctor f;
  f.name = "trivializing";
  f.on_obj = trivialize;
  f.on_mor = [](const Mor& m) {
    return between_singletons(trivialize(m.dom), trivialize(m.cod));
  };
  f.counit = [](const Obj& x) {
    Obj fx = trivialize(x);
    const std::string& x0 = std::get<PointedData>(fx.data).basepoint;
    std::vector<std::uint32_t> table = {
        static_cast<std::uint32_t>(*x.carrier.index_of(x0))};
    FiniteFunction fn(fx.carrier, x.carrier, std::move(table));
    return Mor{std::move(fx), x, std::move(fn)};
  };
  f.comul = [](const Obj& x) {
    Obj fx = trivialize(x);
    Obj ffx = trivialize(fx);
    return between_singletons(std::move(fx), std::move(ffx));
  };
  return f;
}

FlatFunctor with_counit_override(FlatFunctor base, std::string obj_name, FiniteFunction table) {
  auto inner = base.counit;
  base.name += "+counit_override(" + obj_name + ")";
  base.counit = [inner, obj_name, table](const Obj& x) {
    Mor e = inner(x);
    if (x.name == obj_name) e.fn = table;
    return e;
  };
  return base;
}

FlatFunctor with_comul_override(FlatFunctor base, std::string obj_name, FiniteFunction table) {
  if (!base.has_comul())
    throw MissingComultiplication("cannot override m on a flat without comultiplication");
  auto inner = base.comul;
  base.name += "+comul_override(" + obj_name + ")";
  base.comul = [inner, obj_name, table](const Obj& x) {
    Mor m = inner(x);
    if (x.name == obj_name) m.fn = table;
    return m;
  };
  return base;
}

CheckReport check_copointed(const Category& cat, const FlatFunctor& flat,
                            const Budget& budget) {
  CheckReport report{"copointed endofunctor (" + flat.name + ")", 0, {}};
  for (const Obj& x : cat.objects()) {
    Obj fx = flat.on_obj(x);
    // flat preserves identities
    Mor fid = flat.on_mor(cat.identity(x));
    ++report.cases;
    if (!(fid == cat.identity(fx)))
      report.violations.push_back({"functor(id)", "flat(id_" + x.name + ") != id"});
    // the counit is a well-typed morphism
    Mor e = flat.counit(x);
    ++report.cases;
    if (!(e.dom == fx) || !(e.cod == x) || e.fn.dom() != fx.carrier ||
        e.fn.cod() != x.carrier || !cat.is_morphism(e))
      report.violations.push_back({"counit typing", "e at '" + x.name + "'"});
  }
  for (const Obj& x : cat.objects())
    for (const Obj& y : cat.objects())
      for (const Mor& f : cat.hom(x, y, budget)) {
        Mor ff = flat.on_mor(f);
        ++report.cases;
        if (!cat.is_morphism(ff)) {
          report.violations.push_back({"functor typing", "flat(" + describe(f) + ")"});
          continue;
        }
        // functoriality on composites
        for (const Obj& z : cat.objects())
          for (const Mor& g : cat.hom(y, z, budget)) {
            ++report.cases;
            if (!(flat.on_mor(cat.compose(g, f)) == cat.compose(flat.on_mor(g), ff)))
              report.violations.push_back(
                  {"functor(comp)", describe(f) + " then " + describe(g)});
          }
        // naturality of the counit: f o e_X = e_Y o flat(f)
        ++report.cases;
        if (!(cat.compose(f, flat.counit(x)) == cat.compose(flat.counit(y), ff)))
          report.violations.push_back({"counit naturality", describe(f)});
        if (report.cases > budget.checks)
          throw SizeLimitExceeded("copointed sweep over budget");
      }
  return report;
}

CheckReport check_idempotent_comonad(const Category& cat, const FlatFunctor& flat,
                                     const Budget& budget) {
  (void)budget;
  if (!flat.has_comul())
    throw MissingComultiplication("flat functor '" + flat.name + "' has no comultiplication");
  CheckReport report{"idempotent comonad (" + flat.name + ")", 0, {}};
  for (const Obj& x : cat.objects()) {
    Obj fx = flat.on_obj(x);
    Obj ffx = flat.on_obj(fx);
    Mor m = flat.comul(x);
    ++report.cases;
    if (!(m.dom == fx) || !(m.cod == ffx) || m.fn.dom() != fx.carrier ||
        m.fn.cod() != ffx.carrier || !cat.is_morphism(m)) {
      report.violations.push_back({"comultiplication typing", "m at '" + x.name + "'"});
      continue;
    }
    // (CA) m_{flat X} o m_X = flat(m_X) o m_X
    ++report.cases;
    if (!(cat.compose(flat.comul(fx), m) == cat.compose(flat.on_mor(m), m)))
      report.violations.push_back({"(CA)", "at '" + x.name + "'"});
    // (CU) e_{flat X} o m_X = flat(e_X) o m_X = id
    Mor id_fx = cat.identity(fx);
    ++report.cases;
    if (!(cat.compose(flat.counit(fx), m) == id_fx))
      report.violations.push_back({"(CU)", "e_flatX o m != id at '" + x.name + "'"});
    ++report.cases;
    if (!(cat.compose(flat.on_mor(flat.counit(x)), m) == id_fx))
      report.violations.push_back({"(CU)", "flat(e_X) o m != id at '" + x.name + "'"});
    // m invertible
    ++report.cases;
    if (!(m.fn.is_injective() && m.fn.is_surjective()))
      report.violations.push_back({"m invertible", "at '" + x.name + "'"});
  }
  return report;
}

} // namespace magmoid
