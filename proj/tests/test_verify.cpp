#include <doctest.h>

#include "crf/error.hpp"
#include "crf/verify.hpp"

using namespace crf;

TEST_CASE("every suite passes on a small universe") {
  const VerifyConfig config{ColorTable({"a", "b"}), WeightMap({1, 2}), 3};
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto report = run_suite(name, config);
    CHECK(report.suite == name);
    CHECK(report.bound == 3);
    CHECK(report.checked() > 0);
    CHECK(report.passed());
    for (const auto& r : report.instances)
      if (!r.ok) FAIL_CHECK(r.identity << " at " << r.instance << ": " << r.detail);
  }
}

TEST_CASE("single color universe") {
  const VerifyConfig config{ColorTable({"a"}), WeightMap({1}), 4};
  for (const auto& report : run_all_suites(config)) {
    CAPTURE(report.suite);
    CHECK(report.passed());
  }
}

TEST_CASE("suite runs are deterministic") {
  const VerifyConfig config{ColorTable({"a", "b"}), WeightMap({1, 2}), 2};
  const auto first = run_suite("hopf-axioms", config);
  const auto second = run_suite("hopf-axioms", config);
  REQUIRE(first.checked() == second.checked());
  for (std::size_t i = 0; i < first.checked(); ++i) {
    CHECK(first.instances[i].identity == second.instances[i].identity);
    CHECK(first.instances[i].instance == second.instances[i].instance);
  }
}

TEST_CASE("unknown suite") {
  const VerifyConfig config{ColorTable({"a"}), WeightMap({1}), 2};
  CHECK_THROWS_AS(run_suite("nope", config), Error);
}

TEST_CASE("class sequences") {
  CHECK(class_sequences_of(K0Class({0, 0})) == std::vector<std::vector<K0Class>>{{}});
  // compositions of (1,1): (1,1), (1,0)(0,1), (0,1)(1,0)
  CHECK(class_sequences_of(K0Class({1, 1})).size() == 3);
  // single color: compositions of n number 2^(n-1)
  CHECK(class_sequences_of(K0Class({4})).size() == 8);
  const auto all = class_sequences_up_to(1, 3);
  CHECK(all.size() == 1 + 1 + 2 + 4);
  CHECK(all.front().empty());
}
