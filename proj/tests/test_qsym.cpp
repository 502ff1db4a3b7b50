#include <doctest.h>

#include <random>

#include "crf/enumerate.hpp"
#include "crf/error.hpp"
#include "crf/qsym.hpp"
#include "oracles.hpp"

using namespace crf;

namespace {
const ColorTable ab({"a", "b"});
QSymElement Z(std::initializer_list<K0Class> parts) { return QSymElement(Composition(parts)); }
Composition C(std::initializer_list<K0Class> parts) { return Composition(parts); }
const K0Class a10({1, 0}), a01({0, 1}), a11({1, 1}), a20({2, 0}), a21({2, 1});

QSymElement from_counts(const std::map<Composition, std::uint64_t>& counts) {
  QSymElement out;
  for (const auto& [z, n] : counts) out.add(z, static_cast<unsigned long>(n));
  return out;
}
}  // namespace

TEST_CASE("compositions") {
  CHECK_THROWS_AS(Composition({K0Class({0, 0})}), Error);
  CHECK(format_composition(C({a21, a10})) == "Z[(2,1),(1,0)]");
  CHECK(format_composition(Composition()) == "Z[]");
  CHECK(parse_composition("Z[(2,1), (1,0)]", 2) == C({a21, a10}));
  CHECK(parse_composition("Z[]", 2) == Composition());
  CHECK_THROWS_AS(parse_composition("Z[(2,1)", 2), ParseError);
  CHECK_THROWS_AS(parse_composition("[(2,1)]", 2), ParseError);
  CHECK(C({a21, a10}).degree(2) == K0Class({3, 1}));
}

TEST_CASE("quasi_shuffle examples") {
  const K0Class alpha1({1, 0}), beta1({0, 1}), beta2({2, 0});
  CHECK(quasi_shuffle(Z({alpha1}), Z({beta1, beta2})) ==
        Z({alpha1 + beta1, beta2}) + Z({beta1, alpha1 + beta2}) + Z({beta1, beta2, alpha1}) +
            Z({beta1, alpha1, beta2}) + Z({alpha1, beta1, beta2}));
  CHECK(quasi_shuffle(qsym_unit(), Z({a21, a10})) == Z({a21, a10}));
  CHECK(quasi_shuffle(Z({a10}), Z({a01})) == Z({a10, a01}) + Z({a01, a10}) + Z({a11}));
  // equal parts: two paddings give Z(a,a)
  CHECK(quasi_shuffle(Z({a10}), Z({a10})) == 2 * Z({a10, a10}) + Z({a20}));
}

TEST_CASE("quasi_shuffle agrees with literal zero padding") {
  const std::vector<K0Class> pool{a10, a01, a11, a20};
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 3), pick(0, pool.size() - 1);
  auto random_comp = [&] {
    std::vector<K0Class> parts(len(rng));
    for (auto& p : parts) p = pool[pick(rng)];
    return Composition(std::move(parts));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_comp();
    const auto b = random_comp();
    const auto c = random_comp();
    CHECK(quasi_shuffle_basis(a, b) == from_counts(oracle::padded_quasi_shuffle(a, b, 2)));
    CHECK(quasi_shuffle_basis(a, b) == quasi_shuffle_basis(b, a));
    CHECK(quasi_shuffle(quasi_shuffle_basis(a, b), QSymElement(c)) ==
          quasi_shuffle(QSymElement(a), quasi_shuffle_basis(b, c)));
  }
}

TEST_CASE("deconcat examples") {
  QSymTensor unit_split;
  unit_split.add({Composition(), Composition()}, 1);
  CHECK(deconcat(qsym_unit()) == unit_split);

  QSymTensor single;
  single.add({Composition(), C({a10})}, 1);
  single.add({C({a10}), Composition()}, 1);
  CHECK(deconcat(Z({a10})) == single);

  QSymTensor pair_split;
  pair_split.add({Composition(), C({a10, a01})}, 1);
  pair_split.add({C({a10}), C({a01})}, 1);
  pair_split.add({C({a10, a01}), Composition()}, 1);
  CHECK(deconcat(Z({a10, a01})) == pair_split);
}

TEST_CASE("pair examples") {
  CHECK(pair(Z({a10}), NSymElement(Word({a10}))) == 1);
  CHECK(pair(Z({a10}), NSymElement(Word({a01}))) == 0);
  CHECK(pair(Z({a10, a01}), NSymElement(Word({a10}))) == 0);
  CHECK(pair(qsym_unit(), nsym_unit()) == 1);
  CHECK(pair(qsym_unit(), NSymElement(Word({a10}))) == 0);
  CHECK(pair(3 * Z({a10}) + Z({a01}), 2 * NSymElement(Word({a10})) + NSymElement(Word({a01}))) == 7);
}

TEST_CASE("rho_t examples") {
  CHECK(rho_t(Forest(), 2) == qsym_unit());
  CHECK(rho_t(single_vertex(0), 2) == Z({a10}));
  CHECK(rho_t(parse_forest("a[b,a]", ab), 2) ==
        Z({a21}) + Z({a01, a20}) + Z({a10, a11}) + Z({a11, a10}) + Z({a10, a01, a10}) +
            Z({a01, a10, a10}));
  CHECK_THROWS_AS(rho_t(parse_forest("a[a,a]", ab), 2, 2), SizeLimitError);
}

TEST_CASE("rho_t is multiplicative and comultiplicative") {
  const auto universe = forests_up_to(2, 3);
  for (const auto& a : universe) {
    CHECK(deconcat(rho_t(a, 2)) == rho_t_tensor(ck_comul_tensor(a), 2));
    CHECK((rho_t(a, 2).empty() || qsym_degree(rho_t(a, 2), 2) == k0_class(a, 2)));
    for (const auto& b : universe)
      if (a.vertex_count() + b.vertex_count() <= 4)
        CHECK(rho_t(ck_mul(a, b), 2) == quasi_shuffle(rho_t(a, 2), rho_t(b, 2)));
  }
}
