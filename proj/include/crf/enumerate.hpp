#pragma once

// Non-isomorphic colored rooted forests of a given K0 class.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "crf/forest.hpp"

namespace crf {

inline constexpr std::size_t kDefaultSizeLimit = 12;

/// Throws SizeLimitError when `alpha.total() > size_limit`.
void check_size(const K0Class& alpha, std::size_t size_limit);

/// All forests of class `alpha`, canonical and sorted ascending. Memoized
/// process-wide by class; the returned reference is stable.
const std::vector<Forest>& forests_of_class(const K0Class& alpha,
                                            std::size_t size_limit = kDefaultSizeLimit);

/// All trees of class `alpha`, canonical and sorted ascending.
const std::vector<Tree>& trees_of_class(const K0Class& alpha,
                                        std::size_t size_limit = kDefaultSizeLimit);

/// Number of forests of class `alpha`, computed without generating them
/// (multivariate Euler transform of the rooted-tree counts).
mpz_class count_forests_of_class(const K0Class& alpha, std::size_t size_limit = kDefaultSizeLimit);

/// Every class beta with 0 <= beta <= alpha componentwise, sorted ascending.
std::vector<K0Class> sub_classes(const K0Class& alpha);

/// Every class in N^num_colors with total vertex count <= bound, sorted by
/// (total, vector).
std::vector<K0Class> classes_up_to(std::size_t num_colors, std::size_t bound);

/// Every forest with at most `bound` vertices, sorted by (vertex count, canonical order).
std::vector<Forest> forests_up_to(std::size_t num_colors, std::size_t bound);

}  // namespace crf
