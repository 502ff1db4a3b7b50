#include <doctest.h>

#include <algorithm>

#include "crf/cuts.hpp"
#include "crf/error.hpp"
#include "oracles.hpp"

using namespace crf;

namespace {
const ColorTable ab({"a", "b"});
Forest F(const char* text) { return parse_forest(text, ab); }

std::vector<std::pair<std::string, std::string>> cut_strings(const Forest& f) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : enumerate_cuts(f))
    out.emplace_back(format_forest(e.result.pruned, ab), format_forest(e.result.root_part, ab));
  std::sort(out.begin(), out.end());
  return out;
}

using Flags = std::vector<std::vector<K0Class>>;
Flags sorted(Flags f) {
  std::sort(f.begin(), f.end());
  return f;
}
}  // namespace

TEST_CASE("enumerate_cuts examples") {
  using P = std::pair<std::string, std::string>;
  CHECK(cut_strings(F("a")) == std::vector<P>{{"0", "a"}, {"a", "0"}});
  CHECK(cut_strings(F("a[b]")) == std::vector<P>{{"0", "a[b]"}, {"a[b]", "0"}, {"b", "a"}});
  CHECK(cut_strings(F("a[b,a]")) == std::vector<P>{{"0", "a[a,b]"},
                                                   {"a", "a[b]"},
                                                   {"a+b", "a"},
                                                   {"a[a,b]", "0"},
                                                   {"b", "a[a]"}});
  CHECK(cut_strings(Forest()) == std::vector<P>{{"0", "0"}});
}

TEST_CASE("cut descriptors name edges by preorder child index") {
  const auto cuts = enumerate_cuts(F("a[a[b],b]"));
  // preorder: 0=a, 1=a, 2=b (under 1), 3=b
  bool saw_both = false;
  for (const auto& e : cuts) {
    REQUIRE(e.cut.components.size() == 1);
    const auto& c = e.cut.components[0];
    if (!c.full && c.edges == std::vector<std::size_t>{2, 3}) {
      saw_both = true;
      CHECK(format_forest(e.result.pruned, ab) == "b+b");
      CHECK(format_forest(e.result.root_part, ab) == "a[a]");
    }
    // no edge is selected together with an edge above it
    if (!c.full) CHECK_FALSE((std::count(c.edges.begin(), c.edges.end(), 1) && std::count(c.edges.begin(), c.edges.end(), 2)));
  }
  CHECK(saw_both);
  // antichains of {1,2,3} with 2 below 1: {}, 1, 2, 3, 1+3, 2+3 -> 6, plus full
  CHECK(cuts.size() == 7);
}

TEST_CASE("count_cut_pairs examples") {
  CHECK(count_cut_pairs(F("a+a"), F("a"), F("a")) == 2);
  CHECK(count_cut_pairs(F("a[a]"), F("a"), F("a")) == 1);
  CHECK(count_cut_pairs(F("a[b,a]"), F("a[b,a]"), Forest()) == 1);
  CHECK(count_cut_pairs(F("a[b]"), F("a"), F("b")) == 0);
  CHECK(count_cut_pairs(F("a[b]"), F("a"), F("a")) == 0);
}

TEST_CASE("cuts agree with exhaustive edge-subset enumeration") {
  // Every tree with up to 7 vertices (6 edges) in one color, up to 5 in two.
  auto check_forest = [](const Forest& f) {
    const auto expected = oracle::brute_force_cuts(f);
    std::uint64_t total = 0;
    for (const auto& [pr, n] : expected) total += n;
    CHECK(enumerate_cuts(f).size() == total);
    CHECK(cut_table(f) == expected);
    std::uint64_t formula = 1;
    for (const auto& t : f.trees()) formula *= count_tree_cuts(t);
    CHECK(formula == total);
    for (const auto& e : enumerate_cuts(f))
      CHECK(k0_class(e.result.pruned, 2) + k0_class(e.result.root_part, 2) == k0_class(f, 2));
  };
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& f : oracle::brute_force_forests(n, 1))
      if (f.size() == 1) check_forest(f);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : oracle::brute_force_forests(n, 2)) check_forest(f);
}

TEST_CASE("enumerate_flags examples") {
  const auto tree = F("a[b,a]");
  CHECK(enumerate_flags(tree, 1, 2) == Flags{{K0Class({2, 1})}});
  CHECK(sorted(enumerate_flags(tree, 2, 2)) ==
        sorted({{K0Class({0, 1}), K0Class({2, 0})},
                {K0Class({1, 0}), K0Class({1, 1})},
                {K0Class({1, 1}), K0Class({1, 0})}}));
  CHECK(sorted(enumerate_flags(tree, 3, 2)) ==
        sorted({{K0Class({1, 0}), K0Class({0, 1}), K0Class({1, 0})},
                {K0Class({0, 1}), K0Class({1, 0}), K0Class({1, 0})}}));
  CHECK(enumerate_flags(tree, 4, 2).empty());
  CHECK(enumerate_flags(tree, 7, 2).empty());
}

TEST_CASE("enumerate_flags edge cases") {
  CHECK(enumerate_flags(Forest(), 0, 2) == Flags{{}});
  CHECK(enumerate_flags(Forest(), 1, 2).empty());
  CHECK_THROWS_AS(enumerate_flags(F("a"), 0, 2), Error);
  // two equal components give two flags with the same class sequence
  CHECK(enumerate_flags(F("a+a"), 2, 2) == Flags{{K0Class({1, 0}), K0Class({1, 0})},
                                                   {K0Class({1, 0}), K0Class({1, 0})}});
}
