#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the cut enumerator, the orderly forest generator or the
// quasi-shuffle recursion they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "crf/forest.hpp"
#include "crf/qsym.hpp"

namespace crf::oracle {

/// A forest as a parent array: parent[v] < v, or -1 for a root.
struct FlatForest {
  std::vector<int> parent;
  std::vector<ColorId> color;
};

inline Tree build_tree(const FlatForest& flat, int root) {
  Tree t{flat.color[static_cast<std::size_t>(root)], {}};
  for (std::size_t v = 0; v < flat.parent.size(); ++v)
    if (flat.parent[v] == root) t.children.push_back(build_tree(flat, static_cast<int>(v)));
  return t;
}

/// Children are attached in vertex order, so the result is generally not
/// canonical until passed through Forest's constructor.
inline std::vector<Tree> raw_trees(const FlatForest& flat) {
  std::vector<Tree> trees;
  for (std::size_t v = 0; v < flat.parent.size(); ++v)
    if (flat.parent[v] < 0) trees.push_back(build_tree(flat, static_cast<int>(v)));
  return trees;
}

/// Every labelled forest on n vertices with colors in [0, num_colors):
/// each vertex picks a parent among the earlier vertices or none.
template <class Fn>
void for_each_flat_forest(std::size_t n, std::size_t num_colors, Fn&& fn) {
  FlatForest flat{std::vector<int>(n, -1), std::vector<ColorId>(n, 0)};
  auto assign = [&](std::size_t v, auto&& self) -> void {
    if (v == n) {
      fn(flat);
      return;
    }
    for (int p = -1; p < static_cast<int>(v); ++p) {
      flat.parent[v] = p;
      for (ColorId c = 0; c < num_colors; ++c) {
        flat.color[v] = c;
        self(v + 1, self);
      }
    }
  };
  assign(0, assign);
}

/// Distinct forests on exactly n vertices, by exhaustive labelled generation.
inline std::set<Forest> brute_force_forests(std::size_t n, std::size_t num_colors) {
  std::set<Forest> out;
  for_each_flat_forest(n, num_colors, [&](const FlatForest& flat) { out.insert(Forest(raw_trees(flat))); });
  return out;
}

/// Flattens a tree in preorder; returns parent indices (-1 at the root).
inline FlatForest flatten(const Tree& tree) {
  FlatForest flat;
  auto visit = [&](const Tree& t, int parent, auto&& self) -> void {
    const int self_index = static_cast<int>(flat.parent.size());
    flat.parent.push_back(parent);
    flat.color.push_back(t.color);
    for (const auto& child : t.children) self(child, self_index, self);
  };
  visit(tree, -1, visit);
  return flat;
}

/// Multiset of (P, R) over the admissible cuts of a tree: every subset of
/// non-root vertices (edge to parent) with no selected vertex below another,
/// plus the full cut.
inline std::map<std::pair<Forest, Forest>, std::uint64_t> brute_force_tree_cuts(const Tree& tree) {
  const auto flat = flatten(tree);
  const std::size_t n = flat.parent.size();
  std::map<std::pair<Forest, Forest>, std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (mask & 1) continue;  // the root has no edge above it
    bool admissible = true;
    for (std::size_t v = 1; v < n && admissible; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int a = flat.parent[v]; a > 0; a = flat.parent[static_cast<std::size_t>(a)])
        if (mask >> a & 1) admissible = false;
    }
    if (!admissible) continue;
    // Severing the selected edges: selected vertices become roots of P.
    FlatForest cut = flat;
    std::vector<bool> in_pruned(n, false);
    for (std::size_t v = 1; v < n; ++v) {
      const auto p = static_cast<std::size_t>(flat.parent[v]);
      in_pruned[v] = (mask >> v & 1) || in_pruned[p];
      if (mask >> v & 1) cut.parent[v] = -1;
    }
    std::vector<Tree> pruned, root;
    for (std::size_t v = 0; v < n; ++v) {
      if (cut.parent[v] >= 0) continue;
      (in_pruned[v] ? pruned : root).push_back(build_tree(cut, static_cast<int>(v)));
    }
    ++out[{Forest(std::move(pruned)), Forest(std::move(root))}];
  }
  ++out[{Forest({tree}), Forest()}];
  return out;
}

/// Forest cuts as the product of per-tree cuts.
inline std::map<std::pair<Forest, Forest>, std::uint64_t> brute_force_cuts(const Forest& forest) {
  std::map<std::pair<Forest, Forest>, std::uint64_t> acc{{{Forest(), Forest()}, 1}};
  for (const auto& tree : forest.trees()) {
    std::map<std::pair<Forest, Forest>, std::uint64_t> next;
    for (const auto& [pr, count] : acc)
      for (const auto& [tpr, tcount] : brute_force_tree_cuts(tree))
        next[{direct_sum(pr.first, tpr.first), direct_sum(pr.second, tpr.second)}] += count * tcount;
    acc = std::move(next);
  }
  return acc;
}

/// Quasi-shuffle by literal zero padding: pick the length p, the positions
/// carrying the parts of a and of b (order preserving), require every position
/// to be covered, and add the padded sequences.
inline std::map<Composition, std::uint64_t> padded_quasi_shuffle(const Composition& a, const Composition& b,
                                                                 std::size_t num_colors) {
  std::map<Composition, std::uint64_t> out;
  const auto k = a.size();
  const auto l = b.size();
  for (std::size_t p = std::max(k, l); p <= k + l; ++p) {
    for (std::uint64_t amask = 0; amask < (std::uint64_t{1} << p); ++amask) {
      if (static_cast<std::size_t>(__builtin_popcountll(amask)) != k) continue;
      for (std::uint64_t bmask = 0; bmask < (std::uint64_t{1} << p); ++bmask) {
        if (static_cast<std::size_t>(__builtin_popcountll(bmask)) != l) continue;
        if ((amask | bmask) != (std::uint64_t{1} << p) - 1) continue;
        std::vector<K0Class> nu(p, K0Class::zero(num_colors)), mu(p, K0Class::zero(num_colors));
        std::size_t ia = 0, ib = 0;
        for (std::size_t i = 0; i < p; ++i) {
          if (amask >> i & 1) nu[i] = a.parts()[ia++];
          if (bmask >> i & 1) mu[i] = b.parts()[ib++];
        }
        std::vector<K0Class> sum;
        for (std::size_t i = 0; i < p; ++i) sum.push_back(nu[i] + mu[i]);
        ++out[Composition(std::move(sum))];
      }
    }
  }
  return out;
}

}  // namespace crf::oracle
