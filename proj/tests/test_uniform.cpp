#include <doctest.h>

#include <algorithm>

#include <magmoid/theorems.hpp>
#include <magmoid/uniform.hpp>

#include "helpers.hpp"

using namespace magmoid;
using namespace fixtures;

TEST_CASE("internal homs certify on finite sets, pointed_bot, and slices") {
  for (auto cat : {finset(), pointed_bot(), slice()}) {
    CAPTURE(cat->variant());
    for (const Obj& x : cat->objects())
      for (const Obj& y : cat->objects()) {
        InternalHomWitness w = certified_hom(*cat, x, y);
        CHECK(w.certificate.size() == cat->objects().size());
        for (const auto& p : w.certificate) {
          CHECK(p.bijective);
          CHECK(p.maps_in == p.maps_out);
        }
      }
  }
}

TEST_CASE("pointed_bot hom carrier holds all functions") {
  InstanceSpec spec;
  spec.variant = Variant::pointed_bot;
  spec.objects = {{"t", {"*"}, "*", {}, {}},
                  {"X", {"*", "a"}, "*", {}, {}},
                  {"Y", {"*", "b"}, "*", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj X = *cat->find_object("X");
  Obj Y = *cat->find_object("Y");
  InternalHomWitness w = certified_hom(*cat, X, Y);
  CHECK(w.hom_obj.carrier.size() == 4); // all maps {*,a} -> {*,b}, pointed or not
  CHECK(std::get<PointedData>(w.hom_obj.data).basepoint == "[*,*]");
}

TEST_CASE("an undersized hom candidate is not representable") {
  auto fs = logic();
  Obj C = *fs->find_object("C");
  auto cand = internal_hom_candidate(*fs, C, C);
  REQUIRE(cand.has_value());
  // drop one element from the carrier and restrict ev
  std::vector<std::string> labels = cand->first.carrier.elements();
  labels.pop_back();
  std::string name = cand->first.name + "_small";
  Obj small{name, FiniteSet(name, labels), std::monostate{}};
  Obj prod = fs->tensor_obj(small, C);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& h : labels)
    for (const auto& x : C.carrier.elements())
      pairs.emplace_back(pair_label(h, x), cand->second.fn.apply(pair_label(h, x)));
  Mor ev{prod, C, FiniteFunction::from_pairs(prod.carrier, C.carrier, pairs)};
  CHECK_THROWS_AS(check_internal_hom(*fs, C, C, small, ev, {fs->t()}), NotRepresentable);
}

TEST_CASE("curry and uncurry are mutually inverse on certified pairs") {
  auto fs = logic();
  Obj A = *fs->find_object("A");
  Obj C = *fs->find_object("C");
  InternalHomWitness w = certified_hom(*fs, A, C);
  for (const Obj& W : fs->objects()) {
    for (const Mor& g : fs->hom(fs->tensor_obj(W, A), C))
      CHECK(uncurry(*fs, w, curry(*fs, w, g, W)) == g);
    for (const Mor& f : fs->hom(W, w.hom_obj))
      CHECK(curry(*fs, w, uncurry(*fs, w, f), W) == f);
  }
  // curry of ev itself is the identity
  Mor ev_curried = curry(*fs, w, w.ev, w.hom_obj);
  CHECK(ev_curried == fs->identity(w.hom_obj));
}

TEST_CASE("an oversized candidate makes curry ambiguous") {
  auto fs = logic();
  Obj C = *fs->find_object("C");
  auto cand = internal_hom_candidate(*fs, C, C);
  std::vector<std::string> labels = cand->first.carrier.elements();
  labels.push_back("dup");
  std::string name = cand->first.name + "_big";
  Obj big{name, FiniteSet(name, labels), std::monostate{}};
  Obj prod = fs->tensor_obj(big, C);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& h : cand->first.carrier.elements())
    for (const auto& x : C.carrier.elements())
      pairs.emplace_back(pair_label(h, x), cand->second.fn.apply(pair_label(h, x)));
  // the duplicate element evaluates like the first genuine row
  const std::string& clone = cand->first.carrier.elements().front();
  for (const auto& x : C.carrier.elements())
    pairs.emplace_back(pair_label("dup", x), cand->second.fn.apply(pair_label(clone, x)));
  Mor ev{prod, C, FiniteFunction::from_pairs(prod.carrier, C.carrier, pairs)};
  InternalHomWitness w{C, C, big, ev, {}};
  Obj t = fs->t();
  Mor g = fs->compose(ev, fs->tensor_mor(
      mor(*fs, t, big, {{"*", clone}}), fs->identity(C)));
  CHECK_THROWS_AS(curry(*fs, w, g, t), MultipleSolutions);
}

namespace {

// all split pairs p : B -> A, s : A -> B with p o s = id
std::vector<std::pair<Mor, Mor>> split_pairs(const Category& cat, const Obj& B, const Obj& A) {
  std::vector<std::pair<Mor, Mor>> out;
  for (const Mor& p : cat.hom(B, A))
    for (const Mor& s : cat.hom(A, B))
      if (cat.compose(p, s) == cat.identity(A)) out.emplace_back(p, s);
  return out;
}

} // namespace

TEST_CASE("uniform fix on the degenerate one-point instance") {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}}, {"A", {"a"}, "", {}, {}}, {"C", {"c"}, "", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj A = *cat->find_object("A");
  Obj C = *cat->find_object("C");
  InternalHomWitness E_hom = certified_hom(*cat, C, C);
  FlatFunctor flat = make_flat_identity();
  Mor id_A = cat->identity(A);
  Obj AB = cat->tensor_obj(A, A);
  Mor F{AB, C, FiniteFunction(AB.carrier, C.carrier, {0})};
  Mor idx{E_hom.hom_obj, A, FiniteFunction(E_hom.hom_obj.carrier, A.carrier, {0})};
  UniformFixReport r = uniform_fix(*cat, flat, E_hom, id_A, id_A, F, idx);
  CHECK(r.hypothesis_ok);
  CHECK(r.conclusion_ok);
}

TEST_CASE("uniform fix over every rectangle-satisfying instance, carriers <= 2") {
  // brute-force search oracle: enumerate (p, s, F, idx) over small carriers;
  // whenever the rectangle holds, the constructed fix must satisfy the square
  for (std::size_t na = 1; na <= 2; ++na)
    for (std::size_t nb = na; nb <= 2; ++nb)
      for (std::size_t nc = 1; nc <= 2; ++nc) {
        InstanceSpec spec;
        spec.variant = Variant::finset;
        auto make_labels = [](std::string stem, std::size_t n) {
          std::vector<std::string> out;
          for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
          return out;
        };
        spec.objects = {{"t", {"*"}, "", {}, {}},
                        {"A", make_labels("a", na), "", {}, {}},
                        {"B", make_labels("b", nb), "", {}, {}},
                        {"C", make_labels("c", nc), "", {}, {}}};
        spec.t = "t";
        auto cat = build_category(spec);
        Obj A = *cat->find_object("A");
        Obj B = *cat->find_object("B");
        Obj C = *cat->find_object("C");
        InternalHomWitness E_hom = certified_hom(*cat, C, C);
        FlatFunctor flat = make_flat_identity();
        Mor e_E = flat.counit(E_hom.hom_obj);
        Obj AB = cat->tensor_obj(A, B);
        std::size_t verified = 0, rejected = 0;
        for (const auto& [p, s] : split_pairs(*cat, B, A))
          for (const Mor& F : cat->hom(AB, C))
            for (const Mor& idx : cat->hom(E_hom.hom_obj, A)) {
              try {
                UniformFixReport r = uniform_fix(*cat, flat, E_hom, p, s, F, idx);
                CHECK(r.conclusion_ok);
                ++verified;
                // no instance with a t-free endomorphism can pass: the
                // diagonal argument in action
                CHECK(nc == 1);
              } catch (const HypothesisFailed&) {
                ++rejected;
              }
            }
        CAPTURE(na); CAPTURE(nb); CAPTURE(nc);
        CHECK(verified + rejected > 0);
        if (nc == 1) CHECK(verified > 0);
        if (nc == 2) CHECK(verified == 0);
      }
}

TEST_CASE("uniform fix reproduces the pointwise fixed point through the certificate") {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}}, {"A", {"a0", "a1"}, "", {}, {}},
                  {"C", {"c"}, "", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj A = *cat->find_object("A");
  Obj C = *cat->find_object("C");
  InternalHomWitness E_hom = certified_hom(*cat, C, C);
  FlatFunctor flat = make_flat_identity();
  Mor id_A = cat->identity(A);
  Obj AA = cat->tensor_obj(A, A);
  for (const Mor& F : cat->hom(AA, C))
    for (const Mor& idx : cat->hom(E_hom.hom_obj, A)) {
      try {
        UniformFixReport r = uniform_fix(*cat, flat, E_hom, id_A, id_A, F, idx);
        REQUIRE(r.conclusion_ok);
        // each point of C^C names an endomorphism sigma; idx picks its a0
        for (const Mor& sig_point : cat->t_points(E_hom.hom_obj)) {
          Mor sigma = uncurry(*cat, E_hom, sig_point);
          // sigma as an endomorphism C -> C via t # C = C relabelling is
          // read off elementwise
          std::vector<std::pair<std::string, std::string>> tbl;
          for (const auto& c : C.carrier.elements())
            tbl.emplace_back(c, sigma.fn.apply(pair_label("*", c)));
          Mor sig = mor(*cat, C, C, tbl);
          Mor a0 = cat->compose(idx, sig_point);
          FixedPointReport fp = fixed_point(*cat, A, C, F, sig, a0);
          CHECK(fp.conclusion_ok);
          CHECK(cat->compose(r.fix, sig_point) == fp.c);
        }
      } catch (const HypothesisFailed&) {
      }
    }
}

TEST_CASE("crisp variants collapse to the plain one when flat is the identity") {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}}, {"A", {"a"}, "", {}, {}}, {"C", {"c"}, "", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj A = *cat->find_object("A");
  Obj C = *cat->find_object("C");
  InternalHomWitness E_hom = certified_hom(*cat, C, C);
  FlatFunctor flat = make_flat_identity();
  Mor id_A = cat->identity(A);
  Obj AA = cat->tensor_obj(A, A);
  Mor F{AA, C, FiniteFunction(AA.carrier, C.carrier, {0})};
  Mor idx{E_hom.hom_obj, A, FiniteFunction(E_hom.hom_obj.carrier, A.carrier, {0})};

  UniformFixReport plain = uniform_fix(*cat, flat, E_hom, id_A, id_A, F, idx);
  UniformFixReport crisp_s =
      uniform_fix_crisp(*cat, flat, E_hom, id_A, id_A, F, idx, CrispVariant::crisp_section);
  UniformFixReport crisp_i =
      uniform_fix_crisp(*cat, flat, E_hom, id_A, id_A, F, idx, CrispVariant::crisp_index);
  CHECK(plain.fix == crisp_s.fix);
  CHECK(plain.fix == crisp_i.fix);
  CHECK(crisp_s.conclusion_ok);
  CHECK(crisp_i.conclusion_ok);
}

TEST_CASE("trivializing flat on pointed sets: the crisp fixed point") {
  InstanceSpec spec;
  spec.variant = Variant::pointed_bot;
  spec.objects = {{"t", {"*"}, "*", {}, {}},
                  {"A", {"*", "a"}, "*", {}, {}},
                  {"C", {"*"}, "*", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj A = *cat->find_object("A");
  Obj C = *cat->find_object("C");
  InternalHomWitness E_hom = certified_hom(*cat, C, C);
  FlatFunctor flat = make_flat_trivializing();
  Obj flatE = flat.on_obj(E_hom.hom_obj);
  Obj flatA = flat.on_obj(A);
  Mor id_A = cat->identity(A);
  Obj AA = cat->tensor_obj(A, A);

  auto idxs = cat->hom(flatE, A);
  REQUIRE_FALSE(idxs.empty());
  auto Fs = cat->hom(AA, C);
  REQUIRE_FALSE(Fs.empty());
  UniformFixReport r = uniform_fix(*cat, flat, E_hom, id_A, id_A, Fs.front(), idxs.front());
  CHECK(r.hypothesis_ok);
  CHECK(r.conclusion_ok);

  // crisp section: s = the unique flat(A) -> A into B = A with p = e_A... p o s = e_A
  auto sections = cat->hom(flatA, A);
  REQUIRE_FALSE(sections.empty());
  Mor s_crisp = sections.front();
  if (cat->compose(id_A, s_crisp) == flat.counit(A)) {
    UniformFixReport rc = uniform_fix_crisp(*cat, flat, E_hom, id_A, s_crisp,
                                            Fs.front(), idxs.front(),
                                            CrispVariant::crisp_section);
    CHECK(rc.conclusion_ok);
  }
}

TEST_CASE("crisp_section without a comultiplication is refused") {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}}, {"A", {"a"}, "", {}, {}}, {"C", {"c"}, "", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj A = *cat->find_object("A");
  Obj C = *cat->find_object("C");
  InternalHomWitness E_hom = certified_hom(*cat, C, C);
  FlatFunctor flat = make_flat_identity();
  flat.comul = nullptr;
  Mor id_A = cat->identity(A);
  Obj AA = cat->tensor_obj(A, A);
  Mor F{AA, C, FiniteFunction(AA.carrier, C.carrier, {0})};
  Mor idx{E_hom.hom_obj, A, FiniteFunction(E_hom.hom_obj.carrier, A.carrier, {0})};
  CHECK_THROWS_AS(uniform_fix_crisp(*cat, flat, E_hom, id_A, id_A, F, idx,
                                    CrispVariant::crisp_section),
                  MissingComultiplication);
}

TEST_CASE("a corrupted index fails the rectangle on a two-point C") {
  auto fs = logic();
  Obj A = *fs->find_object("A");
  Obj C = *fs->find_object("C");
  InternalHomWitness E_hom = certified_hom(*fs, C, C);
  FlatFunctor flat = make_flat_identity();
  Mor id_A = fs->identity(A);
  Obj AA = fs->tensor_obj(A, A);
  Mor F = fs->hom(AA, C).front();
  for (const Mor& idx : fs->hom(E_hom.hom_obj, A))
    CHECK_THROWS_AS(uniform_fix(*fs, flat, E_hom, id_A, id_A, F, idx), HypothesisFailed);
}

TEST_CASE("fix from a split epi onto C^A, for |A| <= 3 and one-point C") {
  for (std::size_t na = 1; na <= 3; ++na) {
    InstanceSpec spec;
    spec.variant = Variant::finset;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na; ++i) labels.push_back("a" + std::to_string(i));
    spec.objects = {{"t", {"*"}, "", {}, {}}, {"A", labels, "", {}, {}},
                    {"C", {"c"}, "", {}, {}}};
    spec.t = "t";
    auto cat = build_category(spec);
    Obj A = *cat->find_object("A");
    Obj C = *cat->find_object("C");
    InternalHomWitness CA_hom = certified_hom(*cat, A, C);
    InternalHomWitness CC_hom = certified_hom(*cat, C, C);
    // alpha is the unique map A -> C^A; every point of A gives a section
    auto alphas = cat->hom(A, CA_hom.hom_obj);
    REQUIRE(alphas.size() == 1);
    std::size_t checked = 0;
    for (const Mor& ell : cat->hom(CA_hom.hom_obj, A)) {
      if (!(cat->compose(alphas.front(), ell) == cat->identity(CA_hom.hom_obj))) continue;
      SplitEpiReport r =
          fix_from_split_epi(*cat, A, C, CA_hom, CC_hom, alphas.front(), ell);
      CHECK(r.ok());
      ++checked;
    }
    CHECK(checked == na);
  }
}

TEST_CASE("a non-section is rejected by the split-epi construction") {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}}, {"A", {"a0", "a1"}, "", {}, {}},
                  {"C", {"c"}, "", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj A = *cat->find_object("A");
  Obj C = *cat->find_object("C");
  InternalHomWitness CA_hom = certified_hom(*cat, A, C);
  InternalHomWitness CC_hom = certified_hom(*cat, C, C);
  // a wrongly-shaped ell: A -> A is not C^A -> A
  Mor bad{A, A, identity_function(A.carrier)};
  CHECK_THROWS_AS(fix_from_split_epi(*cat, A, C, CA_hom, CC_hom,
                                     cat->hom(A, CA_hom.hom_obj).front(), bad),
                  CompositionMismatch);
}

TEST_CASE("reflexive objects give the fixed-point map") {
  InstanceSpec spec;
  spec.variant = Variant::finset;
  spec.objects = {{"t", {"*"}, "", {}, {}}, {"C", {"c"}, "", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj C = *cat->find_object("C");
  InternalHomWitness CC_hom = certified_hom(*cat, C, C);
  Mor app = cat->hom(C, CC_hom.hom_obj).front();
  Mor lam = cat->hom(CC_hom.hom_obj, C).front();
  SplitEpiReport r = fix_reflexive(*cat, C, CC_hom, app, lam);
  CHECK(r.ok());
  CHECK(r.fix.dom == CC_hom.hom_obj);
  CHECK(r.fix.cod == C);

  // breaking the section is caught
  InstanceSpec spec2 = spec;
  spec2.objects[1].elements = {"c0", "c1"};
  auto cat2 = build_category(spec2);
  Obj C2 = *cat2->find_object("C");
  InternalHomWitness CC2 = certified_hom(*cat2, C2, C2);
  // app cannot be split epi onto the four-point C^C from a two-point C
  for (const Mor& app2 : cat2->hom(C2, CC2.hom_obj))
    for (const Mor& lam2 : cat2->hom(CC2.hom_obj, C2))
      CHECK_THROWS_AS(fix_reflexive(*cat2, C2, CC2, app2, lam2), NotASection);
}

TEST_CASE("curry by brute-force search on the pointed instance") {
  InstanceSpec spec;
  spec.variant = Variant::pointed_bot;
  spec.objects = {{"t", {"*"}, "*", {}, {}},
                  {"X", {"*", "a"}, "*", {}, {}},
                  {"Y", {"*", "b"}, "*", {}, {}}};
  spec.t = "t";
  auto cat = build_category(spec);
  Obj X = *cat->find_object("X");
  Obj Y = *cat->find_object("Y");
  InternalHomWitness w = certified_hom(*cat, X, Y);
  for (const Obj& W : cat->objects()) {
    for (const Mor& g : cat->hom(cat->tensor_obj(W, X), Y)) {
      Mor f = curry(*cat, w, g, W);
      CHECK(uncurry(*cat, w, f) == g); // found by search, re-verified
    }
    for (const Mor& f : cat->hom(W, w.hom_obj))
      CHECK(curry(*cat, w, uncurry(*cat, w, f), W) == f);
  }
}

TEST_CASE("a genuine non-section is caught by NotASection") {
  auto fs = logic(); // |C| = 2: no map out of A can split onto C^A
  Obj A = *fs->find_object("A");
  Obj C = *fs->find_object("C");
  InternalHomWitness CA_hom = certified_hom(*fs, A, C);
  InternalHomWitness CC_hom = certified_hom(*fs, C, C);
  Mor alpha = fs->hom(A, CA_hom.hom_obj).front();
  Mor ell = fs->hom(CA_hom.hom_obj, A).front();
  CHECK_THROWS_AS(fix_from_split_epi(*fs, A, C, CA_hom, CC_hom, alpha, ell), NotASection);
}
