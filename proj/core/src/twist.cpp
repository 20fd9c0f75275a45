#include "magmoid/twist.hpp"

#include <algorithm>

namespace magmoid {

namespace {

std::string fresh_label(const FiniteSet& carrier, std::string seed) {
  while (carrier.contains(seed)) seed += "'";
  return seed;
}

class TwistedCategory final : public Category {
public:
  TwistedCategory(CategoryPtr base, PointedEndofunctor T, TwistSide side)
      : Category("twist_" + std::string(side == TwistSide::left ? "left" : "right") +
                     "(" + T.name + ")/" + base->variant(),
                 base->objects(),
                 base->has_t() ? std::optional<std::string>(base->t().name) : std::nullopt),
        base_(std::move(base)), T_(std::move(T)), side_(side) {}

  bool is_morphism(const Mor& m) const override { return base_->is_morphism(m); }

  Obj tensor_obj(const Obj& x, const Obj& y) const override {
    return side_ == TwistSide::left ? base_->tensor_obj(T_.on_obj(x), y)
                                    : base_->tensor_obj(x, T_.on_obj(y));
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    return side_ == TwistSide::left ? base_->tensor_mor(T_.on_mor(f), g)
                                    : base_->tensor_mor(f, T_.on_mor(g));
  }

  std::optional<Mor> diagonal(const Obj& x) const override {
    std::optional<Mor> d = base_->diagonal(x);
    if (!d) return std::nullopt;
    Mor iota = T_.point(x);
    Mor insert = side_ == TwistSide::left
                     ? base_->tensor_mor(iota, base_->identity(x))
                     : base_->tensor_mor(base_->identity(x), iota);
    return base_->compose(insert, *d);
  }

  std::optional<Mor> proj2(const Obj& x, const Obj& y) const override {
    if (side_ != TwistSide::left) return std::nullopt;
    return base_->proj2(T_.on_obj(x), y);
  }

  void record_note(std::string n) { add_note(std::move(n)); }

private:
  CategoryPtr base_;
  PointedEndofunctor T_;
  TwistSide side_;
};

} // namespace

CategoryPtr twist_by_endofunctor(CategoryPtr base, PointedEndofunctor T,
                                 TwistSide side, const Budget& budget) {
  // functoriality of T and well-typedness of iota over the declared objects
  for (const Obj& x : base->objects()) {
    Mor tid = T.on_mor(base->identity(x));
    if (!(tid == base->identity(T.on_obj(x))))
      throw NotNatural("T does not preserve the identity of '" + x.name + "'");
    Mor iota = T.point(x);
    if (!(iota.dom == x) || !(iota.cod == T.on_obj(x)) || !base->is_morphism(iota))
      throw NotNatural("iota at '" + x.name + "' is not a morphism X -> T(X)");
  }
  bool iota_natural = true;
  std::string iota_witness;
  for (const Obj& x : base->objects())
    for (const Obj& y : base->objects())
      for (const Mor& f : base->hom(x, y, budget)) {
        Mor tf = T.on_mor(f);
        if (!base->is_morphism(tf))
          throw NotNatural("T(f) rejected by the hom predicate for f = " + describe(f));
        for (const Obj& z : base->objects())
          for (const Mor& g : base->hom(y, z, budget))
            if (!(T.on_mor(base->compose(g, f)) == base->compose(T.on_mor(g), tf)))
              throw NotNatural("T does not preserve the composite of " + describe(f) +
                               " and " + describe(g));
        if (iota_natural &&
            !(base->compose(tf, T.point(x)) == base->compose(T.point(y), f))) {
          iota_natural = false;
          iota_witness = describe(f);
        }
      }

  auto twisted = std::make_shared<TwistedCategory>(base, T, side);

  // naturality of the induced diagonal is what the construction needs
  for (const Obj& x : twisted->objects())
    for (const Obj& y : twisted->objects())
      for (const Mor& f : twisted->hom(x, y, budget)) {
        auto dx = twisted->diagonal(x);
        auto dy = twisted->diagonal(y);
        if (!dx || !dy) continue;
        if (!(twisted->compose(*dy, f) == twisted->compose(twisted->tensor_mor(f, f), *dx)))
          throw NotNatural("twisted diagonal is not natural with respect to " + describe(f));
      }
  if (!iota_natural)
    twisted->record_note("iota is not natural (first witness: " + iota_witness +
                         "); the induced diagonal is");
  return twisted;
}

PointedEndofunctor identity_endofunctor() {
  PointedEndofunctor T;
  T.name = "id";
  T.on_obj = [](const Obj& x) { return x; };
  T.on_mor = [](const Mor& f) { return f; };
  T.point = [](const Obj& x) { return Mor{x, x, identity_function(x.carrier)}; };
  return T;
}

namespace {

Obj add_bottom_obj(const Obj& x) {
  const auto* p = std::get_if<PointedData>(&x.data);
  if (!p) throw InvalidSpec("add_bottom needs pointed objects");
  std::string bot = fresh_label(x.carrier, "bot");
  std::vector<std::string> labels = x.carrier.elements();
  labels.push_back(bot);
  std::string name = "T(" + x.name + ")";
  return Obj{name, FiniteSet(name, std::move(labels)), PointedData{bot}};
}

Obj add_fresh_obj(const Obj& x) {
  std::string u = fresh_label(x.carrier, "u");
  std::vector<std::string> labels = x.carrier.elements();
  labels.push_back(u);
  std::string name = "T(" + x.name + ")";
  return Obj{name, FiniteSet(name, std::move(labels)), std::monostate{}};
}

} // namespace

PointedEndofunctor add_bottom_endofunctor() {
  PointedEndofunctor T;
  T.name = "bot";
  T.on_obj = add_bottom_obj;
  T.on_mor = [](const Mor& f) {
    Obj dom = add_bottom_obj(f.dom);
    Obj cod = add_bottom_obj(f.cod);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : f.dom.carrier.elements()) pairs.emplace_back(a, f.fn.apply(a));
    pairs.emplace_back(std::get<PointedData>(dom.data).basepoint,
                       std::get<PointedData>(cod.data).basepoint);
    FiniteFunction fn = FiniteFunction::from_pairs(dom.carrier, cod.carrier, pairs);
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  };
  T.point = [](const Obj& x) {
    Obj tx = add_bottom_obj(x);
    const std::string& x0 = std::get<PointedData>(x.data).basepoint;
    const std::string& bot = std::get<PointedData>(tx.data).basepoint;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : x.carrier.elements())
      pairs.emplace_back(a, a == x0 ? bot : a);
    FiniteFunction fn = FiniteFunction::from_pairs(x.carrier, tx.carrier, pairs);
    return Mor{x, std::move(tx), std::move(fn)};
  };
  return T;
}

PointedEndofunctor add_fresh_point_endofunctor() {
  PointedEndofunctor T;
  T.name = "fresh";
  T.on_obj = add_fresh_obj;
  T.on_mor = [](const Mor& f) {
    Obj dom = add_fresh_obj(f.dom);
    Obj cod = add_fresh_obj(f.cod);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : f.dom.carrier.elements()) pairs.emplace_back(a, f.fn.apply(a));
    // the adjoined element maps to the adjoined element
    pairs.emplace_back(fresh_label(f.dom.carrier, "u"), fresh_label(f.cod.carrier, "u"));
    FiniteFunction fn = FiniteFunction::from_pairs(dom.carrier, cod.carrier, pairs);
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  };
  T.point = [](const Obj& x) {
    Obj tx = add_fresh_obj(x);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : x.carrier.elements()) pairs.emplace_back(a, a);
    FiniteFunction fn = FiniteFunction::from_pairs(x.carrier, tx.carrier, pairs);
    return Mor{x, std::move(tx), std::move(fn)};
  };
  return T;
}

PointedEndofunctor times_base_endofunctor(FiniteSet base) {
  PointedEndofunctor T;
  T.name = "xBase";
  auto on_obj = [base](const Obj& x) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> leg;
    for (const auto& a : x.carrier.elements())
      for (const auto& v : base.elements()) {
        labels.push_back(pair_label(a, v));
        leg.emplace_back(labels.back(), v);
      }
    std::string name = "T(" + x.name + ")";
    FiniteSet carrier(name, std::move(labels));
    FiniteFunction to_base = FiniteFunction::from_pairs(carrier, base, leg);
    return Obj{name, std::move(carrier), SliceData{std::move(to_base)}};
  };
  T.on_obj = on_obj;
  T.on_mor = [on_obj, base](const Mor& f) {
    Obj dom = on_obj(f.dom);
    Obj cod = on_obj(f.cod);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : f.dom.carrier.elements())
      for (const auto& v : base.elements())
        pairs.emplace_back(pair_label(a, v), pair_label(f.fn.apply(a), v));
    FiniteFunction fn = FiniteFunction::from_pairs(dom.carrier, cod.carrier, pairs);
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  };
  T.point = [on_obj](const Obj& x) {
    Obj tx = on_obj(x);
    const FiniteFunction& leg = std::get<SliceData>(x.data).to_base;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : x.carrier.elements())
      pairs.emplace_back(a, pair_label(a, leg.apply(a)));
    FiniteFunction fn = FiniteFunction::from_pairs(x.carrier, tx.carrier, pairs);
    return Mor{x, std::move(tx), std::move(fn)};
  };
  return T;
}

} // namespace magmoid
