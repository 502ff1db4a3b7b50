#include <doctest.h>

#include <set>

#include "crf/enumerate.hpp"
#include "crf/error.hpp"
#include "oracles.hpp"

using namespace crf;

namespace {
const ColorTable ab({"a", "b"});
const ColorTable a_only({"a"});

std::vector<std::string> names(const std::vector<Forest>& forests, const ColorTable& colors) {
  std::vector<std::string> out;
  for (const auto& f : forests) out.push_back(format_forest(f, colors));
  return out;
}

// Swaps colors 0 and 1.
Tree swap_colors(const Tree& t) {
  Tree out{t.color == 0 ? 1u : 0u, {}};
  for (const auto& c : t.children) out.children.push_back(swap_colors(c));
  return out;
}
}  // namespace

TEST_CASE("forests_of_class examples") {
  CHECK(forests_of_class(K0Class({0, 0})) == std::vector<Forest>{Forest()});

  std::set<std::string> expected{"a[b]", "b[a]", "a+b"};
  const auto mixed = names(forests_of_class(K0Class({1, 1})), ab);
  CHECK(std::set<std::string>(mixed.begin(), mixed.end()) == expected);
  CHECK(mixed.size() == 3);

  std::set<std::string> three{"a[a[a]]", "a[a,a]", "a+a[a]", "a+a+a"};
  const auto single = names(forests_of_class(K0Class({3})), a_only);
  CHECK(std::set<std::string>(single.begin(), single.end()) == three);
  CHECK(single.size() == 4);
}

TEST_CASE("count_forests_of_class examples") {
  CHECK(count_forests_of_class(K0Class({0, 0})) == 1);
  CHECK(count_forests_of_class(K0Class({1, 1})) == 3);
  // Forests on n vertices correspond to rooted trees on n + 1 vertices.
  const std::vector<unsigned long> expected{1, 2, 4, 9, 20, 48};
  for (std::uint32_t n = 1; n <= 6; ++n)
    CHECK(count_forests_of_class(K0Class({n})) == expected[n - 1]);
}

TEST_CASE("single-color counts agree with exhaustive labelled generation") {
  const std::vector<std::size_t> expected{1, 2, 4, 9, 20, 48};
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const auto brute = oracle::brute_force_forests(n, 1);
    CHECK(brute.size() == expected[n - 1]);
    const auto& generated = forests_of_class(K0Class({n}));
    CHECK(std::vector<Forest>(brute.begin(), brute.end()) == generated);
  }
}

TEST_CASE("two-color generation agrees with brute force and the counting formula") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto brute = oracle::brute_force_forests(n, 2);
    std::size_t generated_total = 0;
    for (std::uint32_t i = 0; i <= n; ++i) {
      const K0Class alpha({i, static_cast<std::uint32_t>(n - i)});
      const auto& forests = forests_of_class(alpha);
      generated_total += forests.size();
      CHECK(count_forests_of_class(alpha) == static_cast<unsigned long>(forests.size()));
      for (std::size_t k = 0; k < forests.size(); ++k) {
        CHECK(k0_class(forests[k], 2) == alpha);
        CHECK(brute.count(forests[k]) == 1);
        if (k) CHECK(forests[k - 1] < forests[k]);
      }
    }
    CHECK(generated_total == brute.size());
  }
  // total 6 without brute force
  for (std::uint32_t i = 0; i <= 6; ++i) {
    const K0Class alpha({i, 6 - i});
    CHECK(count_forests_of_class(alpha) == static_cast<unsigned long>(forests_of_class(alpha).size()));
  }
}

TEST_CASE("color symmetry") {
  for (std::uint32_t i = 0; i <= 3; ++i) {
    for (std::uint32_t j = 0; i + j <= 4; ++j) {
      std::vector<Forest> mapped;
      for (const auto& f : forests_of_class(K0Class({i, j}))) {
        std::vector<Tree> trees;
        for (const auto& t : f.trees()) trees.push_back(swap_colors(t));
        mapped.emplace_back(std::move(trees));
      }
      std::sort(mapped.begin(), mapped.end());
      CHECK(mapped == forests_of_class(K0Class({j, i})));
    }
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(forests_of_class(K0Class({13})), SizeLimitError);
  CHECK_THROWS_AS(forests_of_class(K0Class({3, 2}), 4), SizeLimitError);
  CHECK_THROWS_AS(count_forests_of_class(K0Class({7, 6})), SizeLimitError);
  CHECK(forests_of_class(K0Class({2, 2}), 4).size() == count_forests_of_class(K0Class({2, 2})));
}

TEST_CASE("class universes") {
  CHECK(sub_classes(K0Class({1, 1})).size() == 4);
  const auto classes = classes_up_to(2, 2);
  CHECK(classes.size() == 6);
  CHECK(classes.front().is_zero());
  CHECK(classes.back().total() == 2);
  const auto forests = forests_up_to(2, 2);
  CHECK(forests.size() == 1 + 2 + 7);
}
