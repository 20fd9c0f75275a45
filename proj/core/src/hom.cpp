#include "magmoid/hom.hpp"

#include <algorithm>
#include <map>

namespace magmoid {

bool InternalHomWitness::certified_at(const Obj& probe) const {
  return std::any_of(certificate.begin(), certificate.end(),
                     [&](const ProbeCheck& p) { return p.probe == probe && p.bijective; });
}

namespace {

ProbeCheck run_probe(const Category& cat, const Obj& X, const Obj& Y, const Obj& hom_obj,
                     const Mor& ev, const Obj& W, const Budget& budget) {
  ProbeCheck check;
  check.probe = W;
  auto into = cat.hom(W, hom_obj, budget);
  auto outof = cat.hom(cat.tensor_obj(W, X), Y, budget);
  check.maps_in = into.size();
  check.maps_out = outof.size();

  Mor id_x = cat.identity(X);
  std::map<std::vector<std::uint32_t>, const Mor*> seen;
  for (const Mor& f : into) {
    Mor g = cat.compose(ev, cat.tensor_mor(f, id_x));
    auto [it, fresh] = seen.emplace(g.fn.table(), &f);
    if (!fresh)
      throw NotRepresentable("probe '" + W.name + "': " + describe(it->second->fn) + " and " +
                             describe(f.fn) + " curry to the same map " + describe(g.fn));
  }
  for (const Mor& g : outof)
    if (!seen.count(g.fn.table()))
      throw NotRepresentable("probe '" + W.name + "': no morphism " + W.name + " -> " +
                             hom_obj.name + " curries to " + describe(g.fn));
  check.bijective = seen.size() == outof.size();
  return check;
}

} // namespace

InternalHomWitness check_internal_hom(const Category& cat, const Obj& X, const Obj& Y,
                                      const Obj& hom_obj, const Mor& ev,
                                      const std::vector<Obj>& probes, const Budget& budget) {
  if (!(ev.dom == cat.tensor_obj(hom_obj, X)) || !(ev.cod == Y))
    throw NotRepresentable("evaluation map has the wrong shape: " + describe(ev));
  if (!cat.is_morphism(ev))
    throw NotRepresentable("evaluation map is rejected by the hom predicate");
  InternalHomWitness witness{X, Y, hom_obj, ev, {}};
  for (const Obj& W : probes)
    witness.certificate.push_back(run_probe(cat, X, Y, hom_obj, ev, W, budget));
  return witness;
}

namespace {

// label of a function table, positional over the domain's canonical order
std::string table_label(const FiniteFunction& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (i) s += ",";
    s += f.cod().element(f.apply_index(i));
  }
  s += "]";
  return s;
}

std::optional<std::pair<Obj, Mor>> finset_hom(const Category& cat, const Obj& X, const Obj& Y) {
  auto fns = enumerate_functions(X.carrier, Y.carrier);
  std::vector<std::string> labels;
  labels.reserve(fns.size());
  for (const auto& h : fns) labels.push_back(table_label(h));
  std::string name = "(" + Y.name + "^" + X.name + ")";
  Obj hom_obj{name, FiniteSet(name, std::move(labels)), std::monostate{}};
  Obj prod = cat.tensor_obj(hom_obj, X);
  std::vector<std::pair<std::string, std::string>> ev_pairs;
  for (const auto& h : fns)
    for (const auto& x : X.carrier.elements())
      ev_pairs.emplace_back(pair_label(table_label(h), x), h.apply(x));
  FiniteFunction ev_fn = FiniteFunction::from_pairs(prod.carrier, Y.carrier, ev_pairs);
  Mor ev{std::move(prod), Y, std::move(ev_fn)};
  return std::make_pair(std::move(hom_obj), std::move(ev));
}

// pointed_bot: the hom carrier is *all* functions X -> Y, pointed by the
// constant at the basepoint of Y; ev sends the collapsed class to that
// basepoint. The certificate, not the label of the basepoint, is what
// justifies the choice.
std::optional<std::pair<Obj, Mor>> pointed_bot_hom(const Category& cat, const Obj& X,
                                                   const Obj& Y) {
  const auto& y0 = std::get<PointedData>(Y.data).basepoint;
  auto fns = enumerate_functions(X.carrier, Y.carrier);
  std::vector<std::string> labels;
  std::string base_label;
  for (const auto& h : fns) {
    labels.push_back(table_label(h));
    bool constant_base = true;
    for (std::size_t i = 0; i < h.dom().size(); ++i)
      if (h.cod().element(h.apply_index(i)) != y0) { constant_base = false; break; }
    if (constant_base) base_label = labels.back();
  }
  std::string name = "(" + Y.name + "^" + X.name + ")";
  Obj hom_obj{name, FiniteSet(name, std::move(labels)), PointedData{base_label}};
  Obj prod = cat.tensor_obj(hom_obj, X); // (Y^X) # X, collapsed on the base row
  std::vector<std::pair<std::string, std::string>> ev_pairs;
  ev_pairs.emplace_back("*", y0);
  for (const auto& h : fns) {
    std::string hl = table_label(h);
    if (hl == base_label) continue;
    for (const auto& x : X.carrier.elements())
      ev_pairs.emplace_back(pair_label(hl, x), h.apply(x));
  }
  FiniteFunction ev_fn = FiniteFunction::from_pairs(prod.carrier, Y.carrier, ev_pairs);
  Mor ev{std::move(prod), Y, std::move(ev_fn)};
  return std::make_pair(std::move(hom_obj), std::move(ev));
}

// slice: hom_base(X, Y) x base, over pr2; ev((h, v), x) = h(x).
std::optional<std::pair<Obj, Mor>> slice_hom(const Category& cat, const Obj& X, const Obj& Y) {
  const FiniteFunction& xleg = std::get<SliceData>(X.data).to_base;
  const FiniteFunction& yleg = std::get<SliceData>(Y.data).to_base;
  const FiniteSet& base = xleg.cod();
  std::vector<FiniteFunction> over; // functions X -> Y over the base
  for (auto& h : enumerate_functions(X.carrier, Y.carrier)) {
    bool ok = true;
    for (const auto& x : X.carrier.elements())
      if (yleg.apply(h.apply(x)) != xleg.apply(x)) { ok = false; break; }
    if (ok) over.push_back(std::move(h));
  }
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> leg;
  for (const auto& h : over)
    for (const auto& v : base.elements()) {
      labels.push_back(pair_label(table_label(h), v));
      leg.emplace_back(labels.back(), v);
    }
  std::string name = "(" + Y.name + "^" + X.name + ")";
  FiniteSet carrier(name, std::move(labels));
  FiniteFunction to_base = FiniteFunction::from_pairs(carrier, base, leg);
  Obj hom_obj{name, std::move(carrier), SliceData{std::move(to_base)}};
  Obj prod = cat.tensor_obj(hom_obj, X);
  std::vector<std::pair<std::string, std::string>> ev_pairs;
  for (const auto& h : over)
    for (const auto& v : base.elements())
      for (const auto& x : X.carrier.elements())
        ev_pairs.emplace_back(pair_label(pair_label(table_label(h), v), x), h.apply(x));
  FiniteFunction ev_fn = FiniteFunction::from_pairs(prod.carrier, Y.carrier, ev_pairs);
  Mor ev{std::move(prod), Y, std::move(ev_fn)};
  return std::make_pair(std::move(hom_obj), std::move(ev));
}

} // namespace

std::optional<std::pair<Obj, Mor>> internal_hom_candidate(const Category& cat,
                                                          const Obj& X, const Obj& Y) {
  if (cat.variant() == "finset") return finset_hom(cat, X, Y);
  if (cat.variant() == "pointed_bot") return pointed_bot_hom(cat, X, Y);
  if (cat.variant() == "slice") return slice_hom(cat, X, Y);
  return std::nullopt;
}

InternalHomWitness certified_hom(const Category& cat, const Obj& X, const Obj& Y,
                                 const Budget& budget) {
  auto candidate = internal_hom_candidate(cat, X, Y);
  if (!candidate)
    throw NotRepresentable("no internal hom recipe for variant '" + cat.variant() + "'");
  return check_internal_hom(cat, X, Y, candidate->first, candidate->second,
                            cat.objects(), budget);
}

Mor curry(const Category& cat, const InternalHomWitness& hom, const Mor& g, const Obj& W,
          const Budget& budget) {
  if (!(g.dom == cat.tensor_obj(W, hom.X)) || !(g.cod == hom.Y))
    throw CompositionMismatch("curry: g must be a morphism W#X -> Y; got " + describe(g));
  // Searching for the unique solution is itself the on-demand certificate at
  // g: zero or several solutions both mean representability fails at W.
  std::vector<Mor> solutions;
  Mor id_x = cat.identity(hom.X);
  for (const Mor& f : cat.hom(W, hom.hom_obj, budget))
    if (cat.compose(hom.ev, cat.tensor_mor(f, id_x)) == g) solutions.push_back(f);
  if (solutions.empty())
    throw NoSolution("no morphism of " + W.name + " -> " + hom.hom_obj.name +
                     " curries to " + describe(g.fn));
  if (solutions.size() > 1)
    throw MultipleSolutions("curry is not unique for " + describe(g.fn));
  return solutions.front();
}

Mor uncurry(const Category& cat, const InternalHomWitness& hom, const Mor& f) {
  return cat.compose(hom.ev, cat.tensor_mor(f, cat.identity(hom.X)));
}

} // namespace magmoid
