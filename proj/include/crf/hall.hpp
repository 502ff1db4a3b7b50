#pragma once

// The Ringel-Hall algebra of colored rooted forests in the delta basis, and the
// Connes-Kreimer operations on its graded dual in the W basis.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "crf/enumerate.hpp"
#include "crf/forest.hpp"
#include "crf/linear.hpp"

namespace crf {

using HallElement = LinearCombination<Forest>;
using HallTensor = Tensor<Forest>;

inline HallElement delta(const Forest& forest) { return HallElement(forest); }
inline HallElement hall_unit() { return HallElement(Forest()); }

/// Convolution product: delta_A * delta_B = sum over M of (number of cuts of M
/// with P = A, R = B) delta_M. Candidates M come from grafting the trees of A
/// onto B; coefficients always come from cut counting.
HallElement hall_mul(const HallElement& f, const HallElement& g);
HallElement hall_mul_basis(const Forest& pruned, const Forest& root_part);

/// Same product, but with candidates taken from every forest of class [A]+[B].
/// Slow; kept as an independent route for cross-checks.
HallElement hall_mul_reference(const Forest& pruned, const Forest& root_part,
                               std::size_t num_colors, std::size_t size_limit = kDefaultSizeLimit);

/// Distinct forests obtained by attaching each tree of `pruned` to a vertex of
/// `root_part` or leaving it as its own component.
std::vector<Forest> graft_candidates(const Forest& pruned, const Forest& root_part);

/// Delta(delta_A) = sum over distinct ordered splittings A = A' + A'' of delta_A' (x) delta_A''.
HallTensor hall_comul(const HallElement& f);
HallTensor hall_comul_basis(const Forest& forest);

/// Componentwise product on H (x) H.
HallTensor hall_tensor_mul(const HallTensor& x, const HallTensor& y);

/// Sum of delta_A over every forest of class alpha.
HallElement kappa(const K0Class& alpha, std::size_t size_limit = kDefaultSizeLimit);

Rational counit(const HallElement& f);

/// Antipode via S(x) = -x - sum S(x') * x'' over the reduced coproduct.
HallElement antipode(const HallElement& f, std::size_t size_limit = kDefaultSizeLimit);

/// W_A W_B = W_{A+B} in the dual.
Forest ck_mul(const Forest& a, const Forest& b);

/// One (P_C, R_C) pair per admissible cut of the forest, with multiplicity.
std::vector<std::pair<Forest, Forest>> ck_comul(const Forest& forest);
HallTensor ck_comul_tensor(const Forest& forest);

/// Class of every term when `f` is homogeneous; nullopt otherwise (or when empty).
std::optional<K0Class> hall_degree(const HallElement& f, std::size_t num_colors);

}  // namespace crf
