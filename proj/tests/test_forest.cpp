#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "crf/error.hpp"
#include "crf/forest.hpp"
#include "oracles.hpp"

using namespace crf;

namespace {
const ColorTable ab({"a", "b"});

Tree leaf(ColorId c) { return Tree{c, {}}; }

// Random raw ordering of the same tree.
Tree scramble(Tree t, std::mt19937& rng) {
  for (auto& child : t.children) child = scramble(std::move(child), rng);
  std::shuffle(t.children.begin(), t.children.end(), rng);
  return t;
}
}  // namespace

TEST_CASE("color table") {
  CHECK(ab.size() == 2);
  CHECK(ab.id("b") == 1);
  CHECK_FALSE(ab.find("c"));
  CHECK_THROWS_AS(ColorTable({"a", "a"}), Error);
  CHECK_THROWS_AS(ColorTable({"1x"}), Error);
  CHECK(ColorTable::parse(" x , y_2 ").names() == std::vector<std::string>{"x", "y_2"});
}

TEST_CASE("parse_forest examples") {
  CHECK(parse_forest("0", ab).empty());

  const auto t = parse_forest("a[b,a]", ab);
  REQUIRE(t.size() == 1);
  CHECK(t.trees()[0].color == 0);
  REQUIRE(t.trees()[0].children.size() == 2);

  CHECK(parse_forest("b+a", ab) == parse_forest("a+b", ab));
  CHECK(parse_forest(" a [ b , a ] + b ", ab) == parse_forest("b+a[a,b]", ab));
}

TEST_CASE("parse_forest errors carry positions") {
  try {
    parse_forest("a[b,c]", ab);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_forest("a[b", ab), ParseError);
  CHECK_THROWS_AS(parse_forest("a+", ab), ParseError);
  CHECK_THROWS_AS(parse_forest("", ab), ParseError);
  CHECK_THROWS_AS(parse_forest("0+a", ab), ParseError);
  CHECK_THROWS_AS(parse_forest("a[]", ab), ParseError);
}

TEST_CASE("canonicalize") {
  // a[b, a[b]] given as (b, a[b]): color a sorts first, so a[b] precedes b.
  Tree raw{0, {leaf(1), Tree{0, {leaf(1)}}}};
  CHECK(format_tree(canonicalize(raw), ab) == "a[a[b],b]");
  CHECK(canonicalize(leaf(0)) == leaf(0));
  CHECK(canonicalize(Tree{0, {leaf(1), leaf(0)}}) == canonicalize(Tree{0, {leaf(0), leaf(1)}}));
}

TEST_CASE("format_forest") {
  CHECK(format_forest(Forest(), ab) == "0");
  CHECK(format_forest(Forest({leaf(1), leaf(0)}), ab) == "a+b");
  CHECK(format_forest(parse_forest("a[b,a]", ab), ab) == "a[a,b]");
}

TEST_CASE("direct_sum") {
  const auto a = single_vertex(0);
  const auto tree = parse_forest("a[b]", ab);
  CHECK(direct_sum(Forest(), tree) == tree);
  CHECK(format_forest(direct_sum(a, a), ab) == "a+a");
  CHECK(format_forest(direct_sum(tree, a), ab) == "a+a[b]");
  CHECK(direct_sum(tree, a) == direct_sum(a, tree));
}

TEST_CASE("k0_class and single_vertex") {
  CHECK(k0_class(Forest(), 2).is_zero());
  CHECK(k0_class(parse_forest("a[b]", ab), 2) == K0Class({1, 1}));
  CHECK(k0_class(parse_forest("a[b,a]", ab), 2) == K0Class({2, 1}));
  CHECK(format_forest(single_vertex(0), ab) == "a");
  CHECK(format_forest(single_vertex(1), ab) == "b");
  for (ColorId s = 0; s < 2; ++s) CHECK(k0_class(single_vertex(s), 2) == K0Class::unit(2, s));
}

TEST_CASE("K0Class text form and arithmetic") {
  CHECK(K0Class({2, 1}).str() == "(2,1)");
  CHECK(K0Class::parse(" ( 2 , 1 ) ", 2) == K0Class({2, 1}));
  CHECK_THROWS_AS(K0Class::parse("(2,1)", 3), Error);
  CHECK_THROWS_AS(K0Class::parse("(2,-1)", 2), ParseError);
  CHECK(K0Class({2, 1}) - K0Class({1, 1}) == K0Class({1, 0}));
  CHECK_THROWS_AS(K0Class({0, 1}) - K0Class({1, 0}), std::domain_error);
}

TEST_CASE("properties over every forest with at most 5 vertices, 2 colors") {
  std::mt19937 rng(7);
  std::set<std::string> seen;
  std::vector<Forest> all;
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& f : oracle::brute_force_forests(n, 2)) all.push_back(f);

  for (const auto& f : all) {
    const auto text = format_forest(f, ab);
    // round trip
    CHECK(parse_forest(text, ab) == f);
    // injective formatting
    CHECK(seen.insert(text).second);
    // every raw ordering canonicalizes to the same serialization
    std::vector<Tree> raw;
    for (const auto& t : f.trees()) raw.push_back(scramble(t, rng));
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(format_forest(Forest(raw), ab) == text);
  }

  // additivity of the class over direct sums
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 11)
      CHECK(k0_class(direct_sum(all[i], all[j]), 2) == k0_class(all[i], 2) + k0_class(all[j], 2));
}
