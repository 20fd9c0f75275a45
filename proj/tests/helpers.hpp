#pragma once

// Shared fixtures: the standard small instances the suites exercise, plus
// table-corrupting decorators for mutation tests and the bracket-abstraction
// oracle for the combinator suite.

#include <algorithm>
#include <stdexcept>

#include <magmoid/comb/term.hpp>
#include <magmoid/instances.hpp>

namespace fixtures {

using namespace magmoid;

// finite sets: t = {*}, A = {a0,a1}, B3 = {b0,b1,b2}
inline InstanceSpec finset_spec() {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}},
                  {"A", {"a0", "a1"}, "", {}, {}},
                  {"B3", {"b0", "b1", "b2"}, "", {}, {}}};
  spec.t = "t";
  return spec;
}

// finite sets sized for the or-table fixed point: t = {*}, A = C = {0,1}
inline InstanceSpec logic_spec() {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}},
                  {"A", {"0", "1"}, "", {}, {}},
                  {"C", {"0", "1"}, "", {}, {}},
                  {"t2", {"*", "o"}, "", {}, {}}};
  spec.t = "t";
  return spec;
}

inline InstanceSpec fininj_spec() {
  InstanceSpec spec = finset_spec();
  spec.variant = Variant::fininj;
  return spec;
}

// pointed sets: t = ({*},*), X2 = ({*,x},*), Y3 = ({*,y1,y2},*)
inline InstanceSpec pointed_spec(Variant v) {
  InstanceSpec spec;
  spec.variant = v;
  spec.objects = {{"t", {"*"}, "*", {}, {}},
                  {"X2", {"*", "x"}, "*", {}, {}},
                  {"Y3", {"*", "y1", "y2"}, "*", {}, {}}};
  spec.t = "t";
  return spec;
}

// slice over X = {p,q}: t = ({t0} -> p), A = ({a1,a2} -> p,q), B = ({b} -> p)
inline InstanceSpec slice_spec() {
  InstanceSpec spec;
  spec.variant = Variant::slice;
  spec.slice_base = FiniteSet("X", {"p", "q"});
  spec.objects = {{"t", {"t0"}, "", {{"t0", "p"}}, {}},
                  {"A", {"a1", "a2"}, "", {{"a1", "p"}, {"a2", "q"}}, {}},
                  {"B", {"b"}, "", {{"b", "p"}}, {}}};
  spec.t = "t";
  return spec;
}

// cosemigroups: a one-point one, the identity comultiplication on two
// points, and a genuinely non-identity comultiplication (constant idempotent)
inline InstanceSpec cosemigroup_spec() {
  InstanceSpec spec;
  spec.variant = Variant::cosemigroup;
  spec.objects = {
      {"t", {"e"}, "", {}, {{"e", {"e", "e"}}}},
      {"D", {"d0", "d1"}, "", {}, {{"d0", {"d0", "d0"}}, {"d1", {"d1", "d1"}}}},
      {"K3", {"k0", "k1", "k2"}, "", {},
       {{"k0", {"k0", "k0"}}, {"k1", {"k0", "k0"}}, {"k2", {"k0", "k0"}}}}};
  spec.t = "t";
  return spec;
}

// the chain 0 <= 1 <= 2 with a.b = max(a,b)
inline InstanceSpec ordered_magma_spec() {
  InstanceSpec spec;
  spec.variant = Variant::ordered_magma;
  spec.magma.elements = {"0", "1", "2"};
  spec.magma.le = {{"0", "1"}, {"1", "2"}};
  for (const std::string& a : spec.magma.elements)
    for (const std::string& b : spec.magma.elements)
      spec.magma.op[{a, b}] = std::max(a, b);
  spec.t = "0";
  return spec;
}

inline CategoryPtr finset() { return build_category(finset_spec()); }
inline CategoryPtr logic() { return build_category(logic_spec()); }
inline CategoryPtr fininj() { return build_category(fininj_spec()); }
inline CategoryPtr smash() { return build_category(pointed_spec(Variant::smash)); }
inline CategoryPtr pointed_bot() { return build_category(pointed_spec(Variant::pointed_bot)); }
inline CategoryPtr slice() { return build_category(slice_spec()); }
inline CategoryPtr cosemigroup() { return build_category(cosemigroup_spec()); }
inline CategoryPtr ordered_magma() { return build_category(ordered_magma_spec()); }

inline std::vector<std::pair<std::string, CategoryPtr>> all_variants() {
  return {{"finset", finset()},       {"fininj", fininj()},
          {"smash", smash()},         {"pointed_bot", pointed_bot()},
          {"slice", slice()},         {"cosemigroup", cosemigroup()},
          {"ordered_magma", ordered_magma()}};
}

// morphism from label pairs
inline Mor mor(const Category& cat, const Obj& dom, const Obj& cod,
               std::vector<std::pair<std::string, std::string>> pairs) {
  Mor m{dom, cod, FiniteFunction::from_pairs(dom.carrier, cod.carrier, pairs)};
  if (!cat.is_morphism(m)) throw std::runtime_error("fixture is not a morphism");
  return m;
}

// ------------------------------------------------------------ decorators --

// Swaps two entries of the table of id_X # id_Y, leaving every other product
// untouched: a single-table corruption the bifunctoriality check must catch.
class CorruptIdentityProduct final : public Category {
public:
  CorruptIdentityProduct(CategoryPtr base, std::string x, std::string y)
      : Category(base->variant(), base->objects(),
                 base->has_t() ? std::optional<std::string>(base->t().name) : std::nullopt),
        base_(std::move(base)), x_(std::move(x)), y_(std::move(y)) {}

  bool is_morphism(const Mor& m) const override { return base_->is_morphism(m); }
  Obj tensor_obj(const Obj& x, const Obj& y) const override { return base_->tensor_obj(x, y); }
  std::optional<Mor> diagonal(const Obj& x) const override { return base_->diagonal(x); }
  std::optional<Mor> proj1(const Obj& x, const Obj& y) const override { return base_->proj1(x, y); }
  std::optional<Mor> proj2(const Obj& x, const Obj& y) const override { return base_->proj2(x, y); }

  Mor tensor_mor(const Mor& f, const Mor& g) const override {
    Mor out = base_->tensor_mor(f, g);
    if (f.dom.name == x_ && g.dom.name == y_ && f.fn.is_identity() && g.fn.is_identity()) {
      auto table = out.fn.table();
      if (out.fn.cod().size() >= 2) {
        table[0] = (table[0] + 1) % out.fn.cod().size(); // one entry, one slot
        out.fn = FiniteFunction(out.fn.dom(), out.fn.cod(), std::move(table));
      }
    }
    return out;
  }

private:
  CategoryPtr base_;
  std::string x_, y_;
};

// Rotates the diagonal table at one object.
class CorruptDiagonal final : public Category {
public:
  CorruptDiagonal(CategoryPtr base, std::string at)
      : Category(base->variant(), base->objects(),
                 base->has_t() ? std::optional<std::string>(base->t().name) : std::nullopt),
        base_(std::move(base)), at_(std::move(at)) {}

  bool is_morphism(const Mor& m) const override { return base_->is_morphism(m); }
  Obj tensor_obj(const Obj& x, const Obj& y) const override { return base_->tensor_obj(x, y); }
  Mor tensor_mor(const Mor& f, const Mor& g) const override { return base_->tensor_mor(f, g); }
  std::optional<Mor> proj1(const Obj& x, const Obj& y) const override { return base_->proj1(x, y); }
  std::optional<Mor> proj2(const Obj& x, const Obj& y) const override { return base_->proj2(x, y); }

  std::optional<Mor> diagonal(const Obj& x) const override {
    auto d = base_->diagonal(x);
    if (d && x.name == at_) {
      auto table = d->fn.table();
      if (d->fn.cod().size() >= 2) {
        table[0] = (table[0] + 1) % d->fn.cod().size(); // one entry, one slot
        d->fn = FiniteFunction(d->fn.dom(), d->fn.cod(), std::move(table));
      }
    }
    return d;
  }

private:
  CategoryPtr base_;
  std::string at_;
};

// ------------------------------------------------ bracket abstraction -----

// Standard abstraction: [x]x = I, [x]M = K M when x is not free, and
// [x](M N) = S ([x]M) ([x]N). Used to derive the SKI fixed-point combinator
// from lambda f.(lambda x.f(xx))(lambda x.f(xx)) as an oracle input.
inline magmoid::comb::TermPtr bracket(const std::string& var,
                                      const magmoid::comb::TermPtr& body) {
  using namespace magmoid::comb;
  if (body->kind() == Term::Kind::atom && body->atom_name() == var)
    return Term::constant('I');
  if (!contains_atom(body, var)) return Term::app(Term::constant('K'), body);
  return Term::app(Term::app(Term::constant('S'), bracket(var, body->fn())),
                   bracket(var, body->arg()));
}

inline magmoid::comb::TermPtr y_ski() {
  using namespace magmoid::comb;
  TermPtr f = Term::atom("f");
  TermPtr x = Term::atom("x");
  TermPtr inner = bracket("x", Term::app(f, Term::app(x, x))); // lambda x. f (x x)
  return bracket("f", Term::app(inner, inner));
}

} // namespace fixtures
