#pragma once

// Admissible cuts of colored forests and the flags (iterated cuts) built from them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "crf/forest.hpp"

namespace crf {

/// Cut of one component tree: either the formal full cut (P = T, R = empty)
/// or an admissible edge subset. An edge is named by the preorder index of
/// its child endpoint in the canonical tree; the empty subset is the null cut.
struct TreeCut {
  bool full = false;
  std::vector<std::size_t> edges;

  friend bool operator==(const TreeCut&, const TreeCut&) = default;
};

/// One TreeCut per component of the forest, in canonical component order.
struct Cut {
  std::vector<TreeCut> components;

  friend bool operator==(const Cut&, const Cut&) = default;
};

struct CutResult {
  Forest pruned;     // P_C
  Forest root_part;  // R_C
};

struct CutEntry {
  Cut cut;
  CutResult result;
};

/// Every admissible cut of `forest`, in deterministic order. Cuts of distinct
/// components combine independently; equal sibling subtrees give distinct cuts.
std::vector<CutEntry> enumerate_cuts(const Forest& forest);

/// Number of admissible cuts of `tree` (full cut included).
std::uint64_t count_tree_cuts(const Tree& tree);

/// Multiplicity of each (P_C, R_C) pair over the cuts of a forest.
using CutTable = std::map<std::pair<Forest, Forest>, std::uint64_t>;

/// Memoized process-wide; the returned reference stays valid for the process lifetime.
const CutTable& cut_table(const Forest& forest);

/// Number of admissible cuts C of `whole` with P_C = pruned and R_C = root_part.
std::uint64_t count_cut_pairs(const Forest& whole, const Forest& pruned, const Forest& root_part);

/// Class sequences ([V1], [V2/V1], ..., [Vk/Vk-1]) of the strict k-step flags
/// V1 < ... < Vk = A, one entry per flag (with multiplicity), every part nonzero.
/// For A empty, k = 0 yields the single empty sequence and k >= 1 yields nothing.
/// Throws crf::Error for k = 0 with A nonempty.
std::vector<std::vector<K0Class>> enumerate_flags(const Forest& forest, std::size_t k,
                                                  std::size_t num_colors);

}  // namespace crf
