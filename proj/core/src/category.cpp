#include "magmoid/category.hpp"

#include <algorithm>

namespace magmoid {

Mor make_mor(Obj dom, Obj cod, FiniteFunction fn) {
  if (fn.dom() != dom.carrier)
    throw CompositionMismatch("function domain '" + fn.dom().id() +
                              "' does not match object '" + dom.name + "'");
  if (fn.cod() != cod.carrier)
    throw CompositionMismatch("function codomain '" + fn.cod().id() +
                              "' does not match object '" + cod.name + "'");
  return Mor{std::move(dom), std::move(cod), std::move(fn)};
}

std::string describe(const Mor& m) {
  return m.dom.name + " -> " + m.cod.name + " " + describe(m.fn);
}

Category::Category(std::string variant, std::vector<Obj> objects,
                   std::optional<std::string> t_name)
    : variant_(std::move(variant)), objects_(std::move(objects)) {
  if (t_name) {
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (objects_[i].name == *t_name) { t_index_ = i; break; }
    if (!t_index_)
      throw InvalidSpec("chosen object '" + *t_name + "' is not among the declared objects");
  }
}

const Obj& Category::t() const {
  if (!t_index_) throw InvalidSpec("instance has no chosen object t");
  return objects_[*t_index_];
}

std::optional<Obj> Category::find_object(std::string_view name) const {
  for (const Obj& o : objects_)
    if (o.name == name) return o;
  return std::nullopt;
}

Mor Category::identity(const Obj& x) const {
  return Mor{x, x, identity_function(x.carrier)};
}

Mor Category::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom)
    throw CompositionMismatch("cannot compose " + describe(f) + " with " + describe(g));
  return Mor{f.dom, g.cod, magmoid::compose(g.fn, f.fn)};
}

std::vector<Mor> Category::hom(const Obj& x, const Obj& y, const Budget& budget) const {
  std::vector<Mor> out;
  for (FiniteFunction& fn : enumerate_functions(x.carrier, y.carrier, budget)) {
    Mor m{x, y, std::move(fn)};
    if (is_morphism(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mor> Category::t_points(const Obj& a, const Budget& budget) const {
  return hom(t(), a, budget);
}

namespace {

class RestrictedDiagonals final : public Category {
public:
  RestrictedDiagonals(CategoryPtr base, std::vector<std::string> allowed)
      : Category(base->variant(), base->objects(),
                 base->has_t() ? std::optional<std::string>(base->t().name)
                               : std::nullopt),
        base_(std::move(base)), allowed_(std::move(allowed)) {
    std::sort(allowed_.begin(), allowed_.end());
  }

  bool is_morphism(const Mor& m) const override { return base_->is_morphism(m); }
  Obj tensor_obj(const Obj& x, const Obj& y) const override { return base_->tensor_obj(x, y); }
  Mor tensor_mor(const Mor& f, const Mor& g) const override { return base_->tensor_mor(f, g); }
  std::optional<Mor> proj1(const Obj& x, const Obj& y) const override { return base_->proj1(x, y); }
  std::optional<Mor> proj2(const Obj& x, const Obj& y) const override { return base_->proj2(x, y); }

  std::optional<Mor> diagonal(const Obj& x) const override {
    if (!std::binary_search(allowed_.begin(), allowed_.end(), x.name))
      return std::nullopt;
    return base_->diagonal(x);
  }

private:
  CategoryPtr base_;
  std::vector<std::string> allowed_;
};

} // namespace

CategoryPtr restrict_diagonals(CategoryPtr base, std::vector<std::string> allowed_names) {
  return std::make_shared<RestrictedDiagonals>(std::move(base), std::move(allowed_names));
}

} // namespace magmoid
