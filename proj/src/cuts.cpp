#include "crf/cuts.hpp"

#include <mutex>
#include <optional>

#include "crf/error.hpp"

namespace crf {
namespace {

// A cut of one tree by an admissible edge subset. The root always survives.
struct PartialCut {
  std::vector<std::size_t> edges;
  std::vector<Tree> pruned;
  Tree remainder;
};

std::vector<PartialCut> edge_cuts(const Tree& tree, std::size_t root_index) {
  // Options per child: sever the edge to it, or descend into it.
  std::vector<PartialCut> acc{PartialCut{{}, {}, Tree{tree.color, {}}}};
  std::size_t child_index = root_index + 1;
  for (const auto& child : tree.children) {
    std::vector<PartialCut> options;
    options.push_back(PartialCut{{child_index}, {child}, Tree{}});
    for (auto& sub : edge_cuts(child, child_index)) options.push_back(std::move(sub));

    std::vector<PartialCut> next;
    next.reserve(acc.size() * options.size());
    for (const auto& partial : acc) {
      for (std::size_t o = 0; o < options.size(); ++o) {
        PartialCut combined = partial;
        const auto& option = options[o];
        combined.edges.insert(combined.edges.end(), option.edges.begin(), option.edges.end());
        combined.pruned.insert(combined.pruned.end(), option.pruned.begin(), option.pruned.end());
        if (o != 0) combined.remainder.children.push_back(option.remainder);
        next.push_back(std::move(combined));
      }
    }
    acc = std::move(next);
    child_index += child.vertex_count();
  }
  return acc;
}

// Per component: the edge cuts followed by the full cut (remainder = nullopt).
struct ComponentOption {
  TreeCut cut;
  std::vector<Tree> pruned;
  std::optional<Tree> remainder;
};

std::vector<ComponentOption> component_options(const Tree& tree) {
  std::vector<ComponentOption> out;
  for (auto& partial : edge_cuts(tree, 0))
    out.push_back({TreeCut{false, std::move(partial.edges)}, std::move(partial.pruned),
                   std::move(partial.remainder)});
  out.push_back({TreeCut{true, {}}, {tree}, std::nullopt});
  return out;
}

}  // namespace

std::vector<CutEntry> enumerate_cuts(const Forest& forest) {
  struct Partial {
    Cut cut;
    std::vector<Tree> pruned;
    std::vector<Tree> roots;
  };
  std::vector<Partial> acc{Partial{}};
  for (const auto& tree : forest.trees()) {
    const auto options = component_options(tree);
    std::vector<Partial> next;
    next.reserve(acc.size() * options.size());
    for (const auto& partial : acc) {
      for (const auto& option : options) {
        Partial combined = partial;
        combined.cut.components.push_back(option.cut);
        combined.pruned.insert(combined.pruned.end(), option.pruned.begin(), option.pruned.end());
        if (option.remainder) combined.roots.push_back(*option.remainder);
        next.push_back(std::move(combined));
      }
    }
    acc = std::move(next);
  }

  std::vector<CutEntry> out;
  out.reserve(acc.size());
  for (auto& partial : acc)
    out.push_back({std::move(partial.cut),
                   CutResult{Forest(std::move(partial.pruned)), Forest(std::move(partial.roots))}});
  return out;
}

std::uint64_t count_tree_cuts(const Tree& tree) {
  // Antichains of edges below the root, plus the full cut.
  auto edge_subsets = [](const Tree& t, auto&& self) -> std::uint64_t {
    std::uint64_t n = 1;
    for (const auto& child : t.children) n *= 1 + self(child, self);
    return n;
  };
  return edge_subsets(tree, edge_subsets) + 1;
}

const CutTable& cut_table(const Forest& forest) {
  static std::mutex mutex;
  static std::map<Forest, CutTable> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(forest); it != memo.end()) return it->second;
  }
  CutTable table;
  for (auto& entry : enumerate_cuts(forest))
    ++table[{std::move(entry.result.pruned), std::move(entry.result.root_part)}];
  std::lock_guard lock(mutex);
  return memo.emplace(forest, std::move(table)).first->second;
}

std::uint64_t count_cut_pairs(const Forest& whole, const Forest& pruned, const Forest& root_part) {
  if (pruned.vertex_count() + root_part.vertex_count() != whole.vertex_count()) return 0;
  const auto& table = cut_table(whole);
  auto it = table.find({pruned, root_part});
  return it == table.end() ? 0 : it->second;
}

std::vector<std::vector<K0Class>> enumerate_flags(const Forest& forest, std::size_t k,
                                                  std::size_t num_colors) {
  if (k == 0) {
    if (!forest.empty()) throw Error("a nonempty forest has no 0-step flag");
    return {{}};
  }
  if (forest.empty()) return {};
  if (k == 1) return {{k0_class(forest, num_colors)}};

  std::vector<std::vector<K0Class>> out;
  for (const auto& entry : enumerate_cuts(forest)) {
    const auto& [pruned, root_part] = entry.result;
    if (pruned.empty() || root_part.empty()) continue;
    const auto last = k0_class(root_part, num_colors);
    for (auto& prefix : enumerate_flags(pruned, k - 1, num_colors)) {
      prefix.push_back(last);
      out.push_back(std::move(prefix));
    }
  }
  return out;
}

}  // namespace crf
