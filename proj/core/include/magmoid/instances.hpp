#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magmoid/category.hpp"

namespace magmoid {

enum class Variant { finset, fininj, smash, pointed_bot, slice, cosemigroup, ordered_magma };

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

struct ObjectSpec {
  std::string name;
  std::vector<std::string> elements;
  // smash / pointed_bot
  std::string basepoint;
  // slice: element of the base each carrier element sits over
  std::vector<std::pair<std::string, std::string>> to_base;
  // cosemigroup: a |-> (left, right)
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> comul;
};

struct OrderedMagmaParams {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> le; // reflexive closure added
  std::map<std::pair<std::string, std::string>, std::string> op;
};

struct InstanceSpec {
  Variant variant = Variant::finset;
  std::vector<ObjectSpec> objects;
  std::optional<std::string> t;
  std::optional<FiniteSet> slice_base;
  OrderedMagmaParams magma;
};

// Builds the named magmoidal category, validating the variant-specific
// conditions; throws InvalidSpec naming the violated one.
CategoryPtr build_category(const InstanceSpec& spec);

// The plain slice category over `base` with fibre products (its categorical
// product). Used as the starting point for the twisting construction; the
// `slice` variant above is its left twist, implemented directly.
CategoryPtr build_cartesian_slice(const FiniteSet& base,
                                  const std::vector<ObjectSpec>& objects,
                                  const std::optional<std::string>& t);

} // namespace magmoid
