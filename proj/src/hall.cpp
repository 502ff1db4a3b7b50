#include "crf/hall.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "crf/cuts.hpp"
#include "crf/error.hpp"

namespace crf {
namespace {

// Rebuilds `tree` with extra children: attachments[v] lists the trees grafted
// under the vertex with preorder index v.
Tree rebuild(const Tree& tree, std::size_t& index,
             const std::vector<std::vector<const Tree*>>& attachments) {
  Tree out{tree.color, {}};
  const auto self = index++;
  for (const auto& child : tree.children) out.children.push_back(rebuild(child, index, attachments));
  for (const auto* extra : attachments[self]) out.children.push_back(*extra);
  return out;
}

}  // namespace

std::vector<Forest> graft_candidates(const Forest& pruned, const Forest& root_part) {
  const auto base_vertices = root_part.vertex_count();
  const auto& grafts = pruned.trees();
  // choice[i] == base_vertices means "standalone component".
  std::vector<std::size_t> choice(grafts.size(), 0);
  std::set<Forest> seen;
  while (true) {
    std::vector<std::vector<const Tree*>> attachments(base_vertices);
    std::vector<Tree> components;
    for (std::size_t i = 0; i < grafts.size(); ++i) {
      if (choice[i] == base_vertices) {
        components.push_back(grafts[i]);
      } else {
        attachments[choice[i]].push_back(&grafts[i]);
      }
    }
    std::size_t index = 0;
    for (const auto& tree : root_part.trees()) components.push_back(rebuild(tree, index, attachments));
    seen.insert(Forest(std::move(components)));

    std::size_t pos = 0;
    while (pos < choice.size() && choice[pos] == base_vertices) choice[pos++] = 0;
    if (pos == choice.size()) break;
    ++choice[pos];
  }
  return {seen.begin(), seen.end()};
}

HallElement hall_mul_basis(const Forest& pruned, const Forest& root_part) {
  static std::mutex mutex;
  static std::map<std::pair<Forest, Forest>, HallElement> memo;
  std::pair<Forest, Forest> key{pruned, root_part};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  HallElement out;
  for (const auto& whole : graft_candidates(pruned, root_part)) {
    const auto count = count_cut_pairs(whole, pruned, root_part);
    out.add(whole, Rational(static_cast<unsigned long>(count)));
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), out);
  return out;
}

HallElement hall_mul(const HallElement& f, const HallElement& g) {
  HallElement out;
  for (const auto& [a, ca] : f) {
    for (const auto& [b, cb] : g) {
      const Rational c = ca * cb;
      for (const auto& [m, cm] : hall_mul_basis(a, b)) out.add(m, c * cm);
    }
  }
  return out;
}

HallElement hall_mul_reference(const Forest& pruned, const Forest& root_part,
                               std::size_t num_colors, std::size_t size_limit) {
  const auto cls = k0_class(pruned, num_colors) + k0_class(root_part, num_colors);
  HallElement out;
  for (const auto& whole : forests_of_class(cls, size_limit)) {
    const auto count = count_cut_pairs(whole, pruned, root_part);
    out.add(whole, Rational(static_cast<unsigned long>(count)));
  }
  return out;
}

HallTensor hall_comul_basis(const Forest& forest) {
  // Group equal components; a splitting picks how many copies of each go left.
  std::vector<std::pair<const Tree*, std::size_t>> groups;
  for (const auto& tree : forest.trees()) {
    if (!groups.empty() && *groups.back().first == tree) {
      ++groups.back().second;
    } else {
      groups.emplace_back(&tree, 1);
    }
  }
  HallTensor out;
  std::vector<std::size_t> left(groups.size(), 0);
  while (true) {
    std::vector<Tree> l;
    std::vector<Tree> r;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      l.insert(l.end(), left[i], *groups[i].first);
      r.insert(r.end(), groups[i].second - left[i], *groups[i].first);
    }
    out.add({Forest(std::move(l)), Forest(std::move(r))}, 1);

    std::size_t pos = 0;
    while (pos < left.size() && left[pos] == groups[pos].second) left[pos++] = 0;
    if (pos == left.size()) break;
    ++left[pos];
  }
  return out;
}

HallTensor hall_comul(const HallElement& f) {
  HallTensor out;
  for (const auto& [a, c] : f)
    for (const auto& [pair, cp] : hall_comul_basis(a)) out.add(pair, c * cp);
  return out;
}

HallTensor hall_tensor_mul(const HallTensor& x, const HallTensor& y) {
  return tensor_mul(x, y, hall_mul_basis, hall_mul_basis);
}

HallElement kappa(const K0Class& alpha, std::size_t size_limit) {
  HallElement out;
  for (const auto& forest : forests_of_class(alpha, size_limit)) out.add(forest, 1);
  return out;
}

Rational counit(const HallElement& f) { return f.coefficient(Forest()); }

namespace {

HallElement antipode_basis(const Forest& forest) {
  static std::mutex mutex;
  static std::map<Forest, HallElement> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(forest); it != memo.end()) return it->second;
  }
  HallElement out = delta(forest);
  if (!forest.empty()) {
    out = -out;
    for (const auto& [pair, c] : hall_comul_basis(forest)) {
      const auto& [left, right] = pair;
      if (left.empty() || right.empty()) continue;
      out -= c * hall_mul(antipode_basis(left), delta(right));
    }
  }
  std::lock_guard lock(mutex);
  memo.emplace(forest, out);
  return out;
}

}  // namespace

HallElement antipode(const HallElement& f, std::size_t size_limit) {
  HallElement out;
  for (const auto& [a, c] : f) {
    if (a.vertex_count() > size_limit)
      throw SizeLimitError("forest has " + std::to_string(a.vertex_count()) +
                           " vertices, above the size limit of " + std::to_string(size_limit));
    out += c * antipode_basis(a);
  }
  return out;
}

Forest ck_mul(const Forest& a, const Forest& b) { return direct_sum(a, b); }

std::vector<std::pair<Forest, Forest>> ck_comul(const Forest& forest) {
  std::vector<std::pair<Forest, Forest>> out;
  for (auto& entry : enumerate_cuts(forest))
    out.emplace_back(std::move(entry.result.pruned), std::move(entry.result.root_part));
  return out;
}

HallTensor ck_comul_tensor(const Forest& forest) {
  HallTensor out;
  for (const auto& [pair, count] : cut_table(forest))
    out.add(pair, Rational(static_cast<unsigned long>(count)));
  return out;
}

std::optional<K0Class> hall_degree(const HallElement& f, std::size_t num_colors) {
  std::optional<K0Class> degree;
  for (const auto& [a, c] : f) {
    auto cls = k0_class(a, num_colors);
    if (degree && *degree != cls) return std::nullopt;
    degree = std::move(cls);
  }
  return degree;
}

}  // namespace crf
