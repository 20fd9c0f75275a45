#include "magmoid/instances.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace magmoid {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::finset: return "finset";
    case Variant::fininj: return "fininj";
    case Variant::smash: return "smash";
    case Variant::pointed_bot: return "pointed_bot";
    case Variant::slice: return "slice";
    case Variant::cosemigroup: return "cosemigroup";
    case Variant::ordered_magma: return "ordered_magma";
  }
  return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  for (Variant v : {Variant::finset, Variant::fininj, Variant::smash,
                    Variant::pointed_bot, Variant::slice, Variant::cosemigroup,
                    Variant::ordered_magma})
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

namespace {

std::string product_name(const Obj& x, const Obj& y) {
  return "(" + x.name + "#" + y.name + ")";
}

// Fills a product-of-morphisms table: for every pair of factor elements,
// class_dom/class_cod give the product labels before and after. Quotient
// variants may send several pairs to one class; the images must then agree.
FiniteFunction product_table(
    const Obj& dom, const Obj& cod, const Mor& f, const Mor& g,
    const std::function<std::string(const std::string&, const std::string&)>& class_dom,
    const std::function<std::string(const std::string&, const std::string&)>& class_cod) {
  constexpr std::uint32_t unset = 0xffffffffu;
  std::vector<std::uint32_t> table(dom.carrier.size(), unset);
  for (const auto& a : f.dom.carrier.elements())
    for (const auto& b : g.dom.carrier.elements()) {
      auto src = dom.carrier.index_of(class_dom(a, b));
      auto dst = cod.carrier.index_of(class_cod(f.fn.apply(a), g.fn.apply(b)));
      if (!src || !dst)
        throw InvalidSpec("product table: class label missing from product carrier");
      if (table[*src] != unset && table[*src] != *dst)
        throw InvalidSpec("product of morphisms is not well defined on the class of " +
                          pair_label(a, b));
      table[*src] = static_cast<std::uint32_t>(*dst);
    }
  for (std::uint32_t v : table)
    if (v == unset) throw InvalidSpec("product table leaves a class unassigned");
  return FiniteFunction(dom.carrier, cod.carrier, std::move(table));
}

void require_named_objects(const std::vector<ObjectSpec>& objects) {
  std::set<std::string> names;
  for (const auto& o : objects)
    if (!names.insert(o.name).second)
      throw InvalidSpec("duplicate object name '" + o.name + "'");
}

// ---------------------------------------------------------------- finset --

class FinSetCategory final : public Category {
public:
  FinSetCategory(std::vector<Obj> objects, std::optional<std::string> t, bool injective_only)
      : Category(injective_only ? "fininj" : "finset", std::move(objects), std::move(t)),
        injective_only_(injective_only) {}

  bool is_morphism(const Mor& m) const override {
    return !injective_only_ || m.fn.is_injective();
  }

  Obj tensor_obj(const Obj& x, const Obj& y) const override {
    std::vector<std::string> labels;
    labels.reserve(x.carrier.size() * y.carrier.size());
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements())
        labels.push_back(pair_label(a, b));
    std::string name = product_name(x, y);
    return Obj{name, FiniteSet(name, std::move(labels)), std::monostate{}};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    Obj dom = tensor_obj(f.dom, g.dom);
    Obj cod = tensor_obj(f.cod, g.cod);
    auto plain = [](const std::string& a, const std::string& b) { return pair_label(a, b); };
    FiniteFunction fn = product_table(dom, cod, f, g, plain, plain);
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  }

  std::optional<Mor> diagonal(const Obj& x) const override {
    Obj sq = tensor_obj(x, x);
    std::vector<std::uint32_t> table(x.carrier.size());
    for (std::size_t i = 0; i < x.carrier.size(); ++i) {
      const auto& a = x.carrier.element(i);
      table[i] = static_cast<std::uint32_t>(*sq.carrier.index_of(pair_label(a, a)));
    }
    Mor d{x, sq, FiniteFunction(x.carrier, sq.carrier, std::move(table))};
    if (!is_morphism(d)) return std::nullopt; // never for these variants; diagonals are injective
    return d;
  }

  std::optional<Mor> proj1(const Obj& x, const Obj& y) const override {
    if (injective_only_) return std::nullopt;
    return projection(x, y, /*first=*/true);
  }
  std::optional<Mor> proj2(const Obj& x, const Obj& y) const override {
    if (injective_only_) return std::nullopt;
    return projection(x, y, /*first=*/false);
  }

private:
  Mor projection(const Obj& x, const Obj& y, bool first) const {
    Obj prod = tensor_obj(x, y);
    const Obj& target = first ? x : y;
    std::vector<std::uint32_t> table(prod.carrier.size());
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements()) {
        auto src = prod.carrier.index_of(pair_label(a, b));
        table[*src] = static_cast<std::uint32_t>(*target.carrier.index_of(first ? a : b));
      }
    FiniteFunction fn(prod.carrier, target.carrier, std::move(table));
    return Mor{std::move(prod), target, std::move(fn)};
  }

  bool injective_only_;
};

// ------------------------------------------------- smash / pointed_bot ----

const std::string& basepoint_of(const Obj& o) {
  const auto* p = std::get_if<PointedData>(&o.data);
  if (!p) throw InvalidSpec("object '" + o.name + "' carries no basepoint");
  return p->basepoint;
}

class PointedCategory final : public Category {
public:
  enum class Product { smash, bot };

  PointedCategory(std::vector<Obj> objects, std::optional<std::string> t, Product product)
      : Category(product == Product::smash ? "smash" : "pointed_bot",
                 std::move(objects), std::move(t)),
        product_(product) {}

  bool is_morphism(const Mor& m) const override {
    return m.fn.apply(basepoint_of(m.dom)) == basepoint_of(m.cod);
  }

  // Classes are stored in canonical form: one "*" class plus the surviving
  // pairs. For the smash product the pairs have both coordinates non-base;
  // for the bot product only the first coordinate is constrained.
  std::string class_label(const Obj& x, const Obj& y,
                          const std::string& a, const std::string& b) const {
    const std::string& x0 = basepoint_of(x);
    if (a == x0) return "*";
    if (product_ == Product::smash && b == basepoint_of(y)) return "*";
    return pair_label(a, b);
  }

  Obj tensor_obj(const Obj& x, const Obj& y) const override {
    std::set<std::string> labels;
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements())
        labels.insert(class_label(x, y, a, b));
    std::string name = product_name(x, y);
    return Obj{name,
               FiniteSet(name, std::vector<std::string>(labels.begin(), labels.end())),
               PointedData{"*"}};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    Obj dom = tensor_obj(f.dom, g.dom);
    Obj cod = tensor_obj(f.cod, g.cod);
    auto cd = [&](const std::string& a, const std::string& b) {
      return class_label(f.dom, g.dom, a, b);
    };
    auto cc = [&](const std::string& a, const std::string& b) {
      return class_label(f.cod, g.cod, a, b);
    };
    FiniteFunction fn = product_table(dom, cod, f, g, cd, cc);
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  }

  std::optional<Mor> diagonal(const Obj& x) const override {
    Obj sq = tensor_obj(x, x);
    std::vector<std::uint32_t> table(x.carrier.size());
    for (std::size_t i = 0; i < x.carrier.size(); ++i) {
      const auto& a = x.carrier.element(i);
      table[i] = static_cast<std::uint32_t>(*sq.carrier.index_of(class_label(x, x, a, a)));
    }
    return Mor{x, sq, FiniteFunction(x.carrier, sq.carrier, std::move(table))};
  }

private:
  Product product_;
};

// ----------------------------------------------------------------- slice --

const FiniteFunction& slice_leg(const Obj& o) {
  const auto* s = std::get_if<SliceData>(&o.data);
  if (!s) throw InvalidSpec("object '" + o.name + "' carries no structure map");
  return s->to_base;
}

// The magmoidal slice: objects are maps into a fixed base, the product of
// (A,alpha) and (B,beta) is A x B over beta o pr2, diagonals are the usual
// ones. This is the left twist of the cartesian slice by T(A) = A x base.
class SliceCategory final : public Category {
public:
  SliceCategory(FiniteSet base, std::vector<Obj> objects, std::optional<std::string> t)
      : Category("slice", std::move(objects), std::move(t)), base_(std::move(base)) {}

  const FiniteSet& base() const { return base_; }

  bool is_morphism(const Mor& m) const override {
    const FiniteFunction& a = slice_leg(m.dom);
    const FiniteFunction& b = slice_leg(m.cod);
    for (const auto& x : m.dom.carrier.elements())
      if (b.apply(m.fn.apply(x)) != a.apply(x)) return false;
    return true;
  }

  Obj tensor_obj(const Obj& x, const Obj& y) const override {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> leg;
    const FiniteFunction& beta = slice_leg(y);
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements()) {
        labels.push_back(pair_label(a, b));
        leg.emplace_back(labels.back(), beta.apply(b));
      }
    std::string name = product_name(x, y);
    FiniteSet carrier(name, std::move(labels));
    return Obj{name, carrier, SliceData{FiniteFunction::from_pairs(carrier, base_, leg)}};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    Obj dom = tensor_obj(f.dom, g.dom);
    Obj cod = tensor_obj(f.cod, g.cod);
    auto plain = [](const std::string& a, const std::string& b) { return pair_label(a, b); };
    FiniteFunction fn = product_table(dom, cod, f, g, plain, plain);
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  }

  std::optional<Mor> diagonal(const Obj& x) const override {
    Obj sq = tensor_obj(x, x);
    std::vector<std::uint32_t> table(x.carrier.size());
    for (std::size_t i = 0; i < x.carrier.size(); ++i) {
      const auto& a = x.carrier.element(i);
      table[i] = static_cast<std::uint32_t>(*sq.carrier.index_of(pair_label(a, a)));
    }
    return Mor{x, sq, FiniteFunction(x.carrier, sq.carrier, std::move(table))};
  }

  std::optional<Mor> proj2(const Obj& x, const Obj& y) const override {
    Obj prod = tensor_obj(x, y);
    std::vector<std::uint32_t> table(prod.carrier.size());
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements()) {
        auto src = prod.carrier.index_of(pair_label(a, b));
        table[*src] = static_cast<std::uint32_t>(*y.carrier.index_of(b));
      }
    FiniteFunction fn(prod.carrier, y.carrier, std::move(table));
    return Mor{std::move(prod), y, std::move(fn)};
  }

private:
  FiniteSet base_;
};

// The untwisted slice category, with fibre products. Only reachable through
// the C++ API; it exists so the twisting construction has something
// cartesian to act on.
class CartesianSliceCategory final : public Category {
public:
  CartesianSliceCategory(FiniteSet base, std::vector<Obj> objects, std::optional<std::string> t)
      : Category("slice_cartesian", std::move(objects), std::move(t)), base_(std::move(base)) {}

  const FiniteSet& base() const { return base_; }

  bool is_morphism(const Mor& m) const override {
    const FiniteFunction& a = slice_leg(m.dom);
    const FiniteFunction& b = slice_leg(m.cod);
    for (const auto& x : m.dom.carrier.elements())
      if (b.apply(m.fn.apply(x)) != a.apply(x)) return false;
    return true;
  }

  Obj tensor_obj(const Obj& x, const Obj& y) const override {
    const FiniteFunction& alpha = slice_leg(x);
    const FiniteFunction& beta = slice_leg(y);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> leg;
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements())
        if (alpha.apply(a) == beta.apply(b)) {
          labels.push_back(pair_label(a, b));
          leg.emplace_back(labels.back(), alpha.apply(a));
        }
    std::string name = product_name(x, y);
    FiniteSet carrier(name, std::move(labels));
    return Obj{name, carrier, SliceData{FiniteFunction::from_pairs(carrier, base_, leg)}};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    Obj dom = tensor_obj(f.dom, g.dom);
    Obj cod = tensor_obj(f.cod, g.cod);
    constexpr std::uint32_t unset = 0xffffffffu;
    std::vector<std::uint32_t> table(dom.carrier.size(), unset);
    for (const auto& a : f.dom.carrier.elements())
      for (const auto& b : g.dom.carrier.elements()) {
        auto src = dom.carrier.index_of(pair_label(a, b));
        if (!src) continue; // outside the fibre product
        auto dst = cod.carrier.index_of(pair_label(f.fn.apply(a), g.fn.apply(b)));
        if (!dst)
          throw InvalidSpec("morphisms do not restrict to the fibre product");
        table[*src] = static_cast<std::uint32_t>(*dst);
      }
    FiniteFunction fn(dom.carrier, cod.carrier, std::move(table));
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  }

  std::optional<Mor> diagonal(const Obj& x) const override {
    Obj sq = tensor_obj(x, x);
    std::vector<std::uint32_t> table(x.carrier.size());
    for (std::size_t i = 0; i < x.carrier.size(); ++i) {
      const auto& a = x.carrier.element(i);
      table[i] = static_cast<std::uint32_t>(*sq.carrier.index_of(pair_label(a, a)));
    }
    return Mor{x, sq, FiniteFunction(x.carrier, sq.carrier, std::move(table))};
  }

  std::optional<Mor> proj1(const Obj& x, const Obj& y) const override { return projection(x, y, true); }
  std::optional<Mor> proj2(const Obj& x, const Obj& y) const override { return projection(x, y, false); }

private:
  Mor projection(const Obj& x, const Obj& y, bool first) const {
    Obj prod = tensor_obj(x, y);
    const Obj& target = first ? x : y;
    std::vector<std::uint32_t> table(prod.carrier.size());
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements()) {
        auto src = prod.carrier.index_of(pair_label(a, b));
        if (!src) continue;
        table[*src] = static_cast<std::uint32_t>(*target.carrier.index_of(first ? a : b));
      }
    FiniteFunction fn(prod.carrier, target.carrier, std::move(table));
    return Mor{std::move(prod), target, std::move(fn)};
  }

  FiniteSet base_;
};

// ----------------------------------------------------------- cosemigroup --

const ComulData& comul_of(const Obj& o) {
  const auto* c = std::get_if<ComulData>(&o.data);
  if (!c) throw InvalidSpec("object '" + o.name + "' carries no comultiplication");
  return *c;
}

// Cocommutative cosemigroups in finite sets with the cartesian product.
// Morphisms are the functions compatible with comultiplication, which makes
// the comultiplications themselves a natural family of diagonals.
class CosemigroupCategory final : public Category {
public:
  CosemigroupCategory(std::vector<Obj> objects, std::optional<std::string> t)
      : Category("cosemigroup", std::move(objects), std::move(t)) {}

  bool is_morphism(const Mor& m) const override {
    const ComulData& a = comul_of(m.dom);
    const ComulData& b = comul_of(m.cod);
    for (const auto& x : m.dom.carrier.elements()) {
      if (m.fn.apply(a.left.apply(x)) != b.left.apply(m.fn.apply(x))) return false;
      if (m.fn.apply(a.right.apply(x)) != b.right.apply(m.fn.apply(x))) return false;
    }
    return true;
  }

  Obj tensor_obj(const Obj& x, const Obj& y) const override {
    const ComulData& cx = comul_of(x);
    const ComulData& cy = comul_of(y);
    std::vector<std::string> labels;
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements())
        labels.push_back(pair_label(a, b));
    std::string name = product_name(x, y);
    FiniteSet carrier(name, std::move(labels));
    std::vector<std::pair<std::string, std::string>> lpairs, rpairs;
    for (const auto& a : x.carrier.elements())
      for (const auto& b : y.carrier.elements()) {
        std::string e = pair_label(a, b);
        lpairs.emplace_back(e, pair_label(cx.left.apply(a), cy.left.apply(b)));
        rpairs.emplace_back(e, pair_label(cx.right.apply(a), cy.right.apply(b)));
      }
    return Obj{name, carrier,
               ComulData{FiniteFunction::from_pairs(carrier, carrier, lpairs),
                         FiniteFunction::from_pairs(carrier, carrier, rpairs)}};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    Obj dom = tensor_obj(f.dom, g.dom);
    Obj cod = tensor_obj(f.cod, g.cod);
    auto plain = [](const std::string& a, const std::string& b) { return pair_label(a, b); };
    FiniteFunction fn = product_table(dom, cod, f, g, plain, plain);
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  }

  std::optional<Mor> diagonal(const Obj& x) const override {
    const ComulData& c = comul_of(x);
    Obj sq = tensor_obj(x, x);
    std::vector<std::uint32_t> table(x.carrier.size());
    for (std::size_t i = 0; i < x.carrier.size(); ++i) {
      const auto& a = x.carrier.element(i);
      auto dst = sq.carrier.index_of(pair_label(c.left.apply(a), c.right.apply(a)));
      table[i] = static_cast<std::uint32_t>(*dst);
    }
    return Mor{x, sq, FiniteFunction(x.carrier, sq.carrier, std::move(table))};
  }
};

// ---------------------------------------------------------- ordered magma --

// A finite poset with a monotone, square-increasing operation, viewed as a
// thin category: each element becomes an object with a one-element carrier,
// a morphism a -> b exists iff a <= b, and a # b := a.b.
class OrderedMagmaCategory final : public Category {
public:
  OrderedMagmaCategory(std::vector<Obj> objects, std::optional<std::string> t,
                       std::set<std::pair<std::string, std::string>> le,
                       std::map<std::pair<std::string, std::string>, std::string> op)
      : Category("ordered_magma", std::move(objects), std::move(t)),
        le_(std::move(le)), op_(std::move(op)) {}

  bool leq(const std::string& a, const std::string& b) const {
    return le_.count({a, b}) > 0;
  }

  static const std::string& element_of(const Obj& o) {
    const auto* d = std::get_if<OrderData>(&o.data);
    if (!d) throw InvalidSpec("object '" + o.name + "' is not a poset element");
    return d->element;
  }

  bool is_morphism(const Mor& m) const override {
    return leq(element_of(m.dom), element_of(m.cod));
  }

  Obj tensor_obj(const Obj& x, const Obj& y) const override {
    const std::string& c = op_.at({element_of(x), element_of(y)});
    auto obj = find_object(c);
    if (!obj) throw InvalidSpec("operation result '" + c + "' is not a declared element");
    return *obj;
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    Obj dom = tensor_obj(f.dom, g.dom);
    Obj cod = tensor_obj(f.cod, g.cod);
    return unique_map(std::move(dom), std::move(cod));
  }

  std::optional<Mor> diagonal(const Obj& x) const override {
    Obj sq = tensor_obj(x, x);
    if (!leq(element_of(x), element_of(sq))) return std::nullopt;
    return unique_map(x, std::move(sq));
  }

private:
  Mor unique_map(Obj dom, Obj cod) const {
    std::vector<std::uint32_t> table(dom.carrier.size(), 0);
    FiniteFunction fn(dom.carrier, cod.carrier, std::move(table));
    return Mor{std::move(dom), std::move(cod), std::move(fn)};
  }

  std::set<std::pair<std::string, std::string>> le_;
  std::map<std::pair<std::string, std::string>, std::string> op_;
};

// ------------------------------------------------------------- builders ---

std::vector<Obj> plain_objects(const std::vector<ObjectSpec>& specs) {
  std::vector<Obj> out;
  for (const auto& s : specs)
    out.push_back(Obj{s.name, FiniteSet(s.name, s.elements), std::monostate{}});
  return out;
}

std::vector<Obj> pointed_objects(const std::vector<ObjectSpec>& specs) {
  std::vector<Obj> out;
  for (const auto& s : specs) {
    FiniteSet carrier(s.name, s.elements);
    if (!carrier.contains(s.basepoint))
      throw InvalidSpec("basepoint '" + s.basepoint + "' of '" + s.name +
                        "' is not a carrier element");
    out.push_back(Obj{s.name, std::move(carrier), PointedData{s.basepoint}});
  }
  return out;
}

std::vector<Obj> slice_objects(const FiniteSet& base, const std::vector<ObjectSpec>& specs) {
  std::vector<Obj> out;
  for (const auto& s : specs) {
    FiniteSet carrier(s.name, s.elements);
    FiniteFunction leg = FiniteFunction::from_pairs(carrier, base, s.to_base);
    out.push_back(Obj{s.name, std::move(carrier), SliceData{std::move(leg)}});
  }
  return out;
}

std::vector<Obj> cosemigroup_objects(const std::vector<ObjectSpec>& specs) {
  std::vector<Obj> out;
  for (const auto& s : specs) {
    FiniteSet carrier(s.name, s.elements);
    std::vector<std::pair<std::string, std::string>> lp, rp;
    for (const auto& [a, lr] : s.comul) {
      lp.emplace_back(a, lr.first);
      rp.emplace_back(a, lr.second);
    }
    FiniteFunction l = FiniteFunction::from_pairs(carrier, carrier, lp);
    FiniteFunction r = FiniteFunction::from_pairs(carrier, carrier, rp);
    // coassociativity, stated componentwise for Delta(a) = (l a, r a)
    for (const auto& a : carrier.elements()) {
      bool ok = l.apply(l.apply(a)) == l.apply(a) &&
                r.apply(l.apply(a)) == l.apply(r.apply(a)) &&
                r.apply(r.apply(a)) == r.apply(a);
      if (!ok)
        throw InvalidSpec("comultiplication of '" + s.name +
                          "' fails coassociativity at '" + a + "'");
    }
    for (const auto& a : carrier.elements())
      if (l.apply(a) != r.apply(a))
        throw InvalidSpec("comultiplication of '" + s.name +
                          "' fails cocommutativity at '" + a + "'");
    out.push_back(Obj{s.name, std::move(carrier), ComulData{std::move(l), std::move(r)}});
  }
  return out;
}

CategoryPtr build_ordered_magma(const InstanceSpec& spec) {
  const OrderedMagmaParams& p = spec.magma;
  if (p.elements.empty()) throw InvalidSpec("ordered_magma needs at least one element");
  std::set<std::string> elems(p.elements.begin(), p.elements.end());
  if (elems.size() != p.elements.size())
    throw InvalidSpec("ordered_magma elements are not distinct");

  std::set<std::pair<std::string, std::string>> le;
  for (const auto& e : elems) le.insert({e, e});
  for (const auto& [a, b] : p.le) {
    if (!elems.count(a) || !elems.count(b))
      throw InvalidSpec("order relation mentions an unknown element");
    le.insert({a, b});
  }
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : le)
      for (const auto& e : elems)
        if (le.count({b, e}) && !le.count({a, e})) {
          le.insert({a, e});
          changed = true;
        }
  }
  for (const auto& [a, b] : le)
    if (a != b && le.count({b, a}))
      throw InvalidSpec("order relation is not antisymmetric: " + a + " <= " + b + " <= " + a);

  auto op_at = [&](const std::string& a, const std::string& b) -> const std::string& {
    auto it = p.op.find({a, b});
    if (it == p.op.end())
      throw InvalidSpec("operation table is missing " + a + "." + b);
    if (!elems.count(it->second))
      throw InvalidSpec("operation result '" + it->second + "' is not an element");
    return it->second;
  };
  for (const auto& a : elems)
    for (const auto& b : elems) op_at(a, b);
  // monotone in both arguments
  for (const auto& [a, a2] : le)
    for (const auto& [b, b2] : le)
      if (!le.count({op_at(a, b), op_at(a2, b2)}))
        throw InvalidSpec("non-monotone operation: " + a + "." + b + " vs " + a2 + "." + b2);
  for (const auto& a : elems)
    if (!le.count({a, op_at(a, a)}))
      throw InvalidSpec("square-increase fails: not " + a + " <= " + a + "." + a);

  std::vector<Obj> objects;
  for (const auto& e : p.elements)
    objects.push_back(Obj{e, FiniteSet(e, {e}), OrderData{e}});
  return std::make_shared<OrderedMagmaCategory>(
      std::move(objects), spec.t, std::move(le),
      std::map<std::pair<std::string, std::string>, std::string>(p.op));
}

} // namespace

CategoryPtr build_category(const InstanceSpec& spec) {
  if (spec.variant != Variant::ordered_magma) require_named_objects(spec.objects);
  switch (spec.variant) {
    case Variant::finset:
      return std::make_shared<FinSetCategory>(plain_objects(spec.objects), spec.t, false);
    case Variant::fininj:
      return std::make_shared<FinSetCategory>(plain_objects(spec.objects), spec.t, true);
    case Variant::smash:
      return std::make_shared<PointedCategory>(pointed_objects(spec.objects), spec.t,
                                               PointedCategory::Product::smash);
    case Variant::pointed_bot:
      return std::make_shared<PointedCategory>(pointed_objects(spec.objects), spec.t,
                                               PointedCategory::Product::bot);
    case Variant::slice: {
      if (!spec.slice_base) throw InvalidSpec("slice instance needs a base set");
      return std::make_shared<SliceCategory>(
          *spec.slice_base, slice_objects(*spec.slice_base, spec.objects), spec.t);
    }
    case Variant::cosemigroup:
      return std::make_shared<CosemigroupCategory>(cosemigroup_objects(spec.objects), spec.t);
    case Variant::ordered_magma:
      return build_ordered_magma(spec);
  }
  throw InvalidSpec("unknown variant");
}

CategoryPtr build_cartesian_slice(const FiniteSet& base,
                                  const std::vector<ObjectSpec>& objects,
                                  const std::optional<std::string>& t) {
  require_named_objects(objects);
  return std::make_shared<CartesianSliceCategory>(base, slice_objects(base, objects), t);
}

} // namespace magmoid
