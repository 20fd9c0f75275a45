#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "magmoid/kernel.hpp"

namespace magmoid {

// Variant-specific structure carried by an object beyond its carrier.
struct PointedData {
  std::string basepoint;
  friend bool operator==(const PointedData&, const PointedData&) = default;
};
struct SliceData {
  FiniteFunction to_base; // structure map into the slice base
  friend bool operator==(const SliceData&, const SliceData&) = default;
};
struct ComulData {
  // comultiplication a |-> (left(a), right(a)), both self-maps of the carrier
  FiniteFunction left, right;
  friend bool operator==(const ComulData&, const ComulData&) = default;
};
struct OrderData {
  std::string element; // the underlying poset element
  friend bool operator==(const OrderData&, const OrderData&) = default;
};

using ObjData = std::variant<std::monostate, PointedData, SliceData, ComulData, OrderData>;

// An object of a concrete category instance. Derived objects (products,
// internal homs, flat images) are values of this same type, so the
// magmoidal product closes over everything we can name.
struct Obj {
  std::string name;
  FiniteSet carrier;
  ObjData data;
  friend bool operator==(const Obj&, const Obj&) = default;
};

// A morphism as witnessed by its underlying function plus the objects it
// connects; equality is strict on all three parts.
struct Mor {
  Obj dom, cod;
  FiniteFunction fn;
  friend bool operator==(const Mor&, const Mor&) = default;
};

Mor make_mor(Obj dom, Obj cod, FiniteFunction fn);
std::string describe(const Mor& m);

// A finite concrete category with a chosen magmoidal product #, a chosen
// object t, and (partial) diagonals d_X : X -> X#X. The hom predicate is a
// decidable test rather than a stored list; closure of the predicate under
// identity and composition is checked by the test suites, not assumed here.
class Category {
public:
  virtual ~Category() = default;

  const std::string& variant() const { return variant_; }
  const std::vector<Obj>& objects() const { return objects_; }
  bool has_t() const { return t_index_.has_value(); }
  const Obj& t() const;
  std::optional<Obj> find_object(std::string_view name) const;
  const std::vector<std::string>& notes() const { return notes_; }

  virtual bool is_morphism(const Mor& m) const = 0;
  virtual Obj tensor_obj(const Obj& x, const Obj& y) const = 0;
  virtual Mor tensor_mor(const Mor& f, const Mor& g) const = 0;
  // d_X : X -> X#X when defined for this object
  virtual std::optional<Mor> diagonal(const Obj& x) const = 0;
  // natural projections, present only in variants that genuinely have them
  virtual std::optional<Mor> proj1(const Obj& x, const Obj& y) const { (void)x; (void)y; return std::nullopt; }
  virtual std::optional<Mor> proj2(const Obj& x, const Obj& y) const { (void)x; (void)y; return std::nullopt; }

  Mor identity(const Obj& x) const;
  Mor compose(const Mor& g, const Mor& f) const;

  // every morphism x -> y accepted by the hom predicate, in lexicographic
  // order of the underlying tables
  std::vector<Mor> hom(const Obj& x, const Obj& y, const Budget& budget = {}) const;
  // generalised elements t -> a
  std::vector<Mor> t_points(const Obj& a, const Budget& budget = {}) const;

protected:
  Category(std::string variant, std::vector<Obj> objects,
           std::optional<std::string> t_name);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

private:
  std::string variant_;
  std::vector<Obj> objects_;
  std::optional<std::size_t> t_index_;
  std::vector<std::string> notes_;
};

using CategoryPtr = std::shared_ptr<const Category>;

// Decorator that hides the diagonal everywhere outside `allowed`, so the
// "local comagma only" setups are expressible with any base instance.
CategoryPtr restrict_diagonals(CategoryPtr base, std::vector<std::string> allowed_names);

} // namespace magmoid
