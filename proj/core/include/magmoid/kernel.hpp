#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magmoid/budget.hpp"
#include "magmoid/error.hpp"

namespace magmoid {

// A finite set of distinct element labels. Labels are opaque strings kept in
// lexicographic order, so two sets are equal iff their ids and label vectors
// compare equal.
class FiniteSet {
public:
  FiniteSet() = default;
  FiniteSet(std::string id, std::vector<std::string> elements);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(std::string_view label) const;
  // index in canonical order, or nullopt
  std::optional<std::size_t> index_of(std::string_view label) const;
  const std::string& element(std::size_t i) const { return elements_.at(i); }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
  std::string id_;
  std::vector<std::string> elements_; // sorted, pairwise distinct
};

// A total function between finite sets, stored as an index table over the
// canonical element order of the domain.
class FiniteFunction {
public:
  FiniteFunction() = default;
  FiniteFunction(FiniteSet dom, FiniteSet cod, std::vector<std::uint32_t> table);

  // Builds from (element, image) pairs; every domain element must be
  // assigned exactly once and every image must lie in the codomain.
  static FiniteFunction from_pairs(
      const FiniteSet& dom, const FiniteSet& cod,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  const FiniteSet& dom() const { return dom_; }
  const FiniteSet& cod() const { return cod_; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  std::uint32_t apply_index(std::size_t i) const { return table_.at(i); }
  const std::string& apply(std::string_view x) const;

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

  // strict order on the index tables of parallel functions; the canonical
  // representative of any collection is its table_less-least member
  static bool table_less(const FiniteFunction& a, const FiniteFunction& b);

private:
  FiniteSet dom_, cod_;
  std::vector<std::uint32_t> table_;
};

FiniteFunction identity_function(const FiniteSet& s);

// (g o f)(x) = g(f(x)); requires cod(f) == dom(g)
FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f);

// |cod|^|dom|, guarded by budget.enumeration
std::uint64_t function_count(const FiniteSet& dom, const FiniteSet& cod,
                             const Budget& budget = {});

// All total functions dom -> cod in lexicographic order of the index table.
std::vector<FiniteFunction> enumerate_functions(const FiniteSet& dom,
                                                const FiniteSet& cod,
                                                const Budget& budget = {});

// "{a->x, b->y}"
std::string describe(const FiniteFunction& f);

// canonical label of an ordered pair of elements
std::string pair_label(std::string_view a, std::string_view b);

} // namespace magmoid
