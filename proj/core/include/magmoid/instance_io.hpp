#pragma once

#include <map>

#include "magmoid/flat.hpp"
#include "magmoid/hom.hpp"
#include "magmoid/instances.hpp"

namespace magmoid {

struct HomCandidate {
  Obj X, Y, hom_obj;
  Mor ev;
};

// Everything an instance file describes: the category, named morphisms,
// optional internal-hom candidates and an optional flat endofunctor.
struct BuiltInstance {
  InstanceSpec spec;
  CategoryPtr category;
  std::map<std::string, Mor> morphisms;
  std::vector<HomCandidate> hom_candidates;
  std::optional<FlatFunctor> flat;
};

// Object expressions used by files and the command line:
//   name | expr "#" expr (parenthesise nested products) |
//   hom(X,Y) (the internal hom Y^X) | flat(X)
Obj resolve_object_expr(const BuiltInstance& inst, std::string_view expr);

// Parses the JSON instance document; throws InputError on malformed input
// and InvalidSpec on variant violations.
BuiltInstance parse_instance_text(const std::string& text);
BuiltInstance load_instance(const std::string& path);

} // namespace magmoid
