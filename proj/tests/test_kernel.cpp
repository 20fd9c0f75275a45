#include <doctest.h>

#include <magmoid/kernel.hpp>

using namespace magmoid;

namespace {
FiniteSet set01() { return FiniteSet("X", {"0", "1"}); }
FiniteSet set012() { return FiniteSet("Y", {"0", "1", "2"}); }
} // namespace

TEST_CASE("sets canonicalise and reject duplicates") {
  FiniteSet s("S", {"b", "a", "c"});
  CHECK(s.elements() == std::vector<std::string>{"a", "b", "c"});
  CHECK(s.index_of("b") == 1);
  CHECK_FALSE(s.contains("d"));
  CHECK_THROWS_AS(FiniteSet("S", {"a", "a"}), DuplicateAssignment);
}

TEST_CASE("make_function validates totality and images") {
  auto f = FiniteFunction::from_pairs(set01(), set012(), {{"0", "1"}, {"1", "2"}});
  CHECK(f.apply("0") == "1");
  CHECK(f.apply("1") == "2");

  FiniteSet one("Z", {"0"});
  CHECK_THROWS_AS(FiniteFunction::from_pairs(one, one, {}), MissingAssignment);
  CHECK_THROWS_AS(FiniteFunction::from_pairs(one, one, {{"0", "7"}}), ForeignElement);
  CHECK_THROWS_AS(FiniteFunction::from_pairs(one, one, {{"0", "0"}, {"0", "0"}}),
                  DuplicateAssignment);
}

TEST_CASE("composition laws") {
  FiniteSet x = set01();
  auto swap = FiniteFunction::from_pairs(x, x, {{"0", "1"}, {"1", "0"}});
  auto id = identity_function(x);

  CHECK(compose(id, swap) == swap);
  CHECK(compose(swap, id) == swap);
  CHECK(compose(swap, swap) == id);

  auto g = FiniteFunction::from_pairs(set012(), set012(), {{"0", "0"}, {"1", "1"}, {"2", "2"}});
  CHECK_THROWS_AS(compose(g, swap), CompositionMismatch);
}

TEST_CASE("equality is strict on dom, cod, and table") {
  FiniteSet x = set01();
  FiniteSet y = set012();
  auto f = FiniteFunction::from_pairs(x, x, {{"0", "0"}, {"1", "1"}});
  auto g = FiniteFunction::from_pairs(x, y, {{"0", "0"}, {"1", "1"}});
  CHECK(f == f);
  CHECK_FALSE(f == g); // same mapping, different codomain
  auto swap = FiniteFunction::from_pairs(x, x, {{"0", "1"}, {"1", "0"}});
  CHECK_FALSE(f == swap);
}

TEST_CASE("enumeration counts and order") {
  auto fns = enumerate_functions(set01(), set01());
  REQUIRE(fns.size() == 4);
  // lexicographic in the table
  CHECK(fns[0].table() == std::vector<std::uint32_t>{0, 0});
  CHECK(fns[1].table() == std::vector<std::uint32_t>{0, 1});
  CHECK(fns[2].table() == std::vector<std::uint32_t>{1, 0});
  CHECK(fns[3].table() == std::vector<std::uint32_t>{1, 1});
  for (std::size_t i = 0; i + 1 < fns.size(); ++i)
    CHECK(FiniteFunction::table_less(fns[i], fns[i + 1]));

  FiniteSet empty("E", {});
  CHECK(enumerate_functions(empty, set01()).size() == 1);
  CHECK(enumerate_functions(set01(), empty).empty());

  Budget tight;
  tight.enumeration = 3;
  CHECK_THROWS_AS(enumerate_functions(set01(), set01(), tight), SizeLimitExceeded);
}

TEST_CASE("associativity and identities, exhaustive on small sets") {
  FiniteSet a("A", {"0", "1"});
  FiniteSet b("B", {"0", "1", "2"});
  FiniteSet c("C", {"0", "1"});
  FiniteSet d("D", {"0", "1", "2"});
  for (const auto& f : enumerate_functions(a, b))
    for (const auto& g : enumerate_functions(b, c)) {
      CHECK(compose(g, compose(f, identity_function(a))) == compose(g, f));
      for (const auto& h : enumerate_functions(c, d))
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
}

TEST_CASE("enumeration has no duplicates") {
  auto fns = enumerate_functions(set012(), set01());
  CHECK(fns.size() == 8);
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = i + 1; j < fns.size(); ++j)
      CHECK_FALSE(fns[i] == fns[j]);
}
