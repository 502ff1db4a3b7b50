#include "crf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "crf/error.hpp"

namespace crf {
namespace {

std::mutex memo_mutex;
std::map<K0Class, std::vector<Tree>> tree_memo;
std::map<K0Class, std::vector<Forest>> forest_memo;

std::vector<Tree> generate_trees(const K0Class& alpha, std::size_t size_limit) {
  std::vector<Tree> out;
  for (ColorId s = 0; s < alpha.size(); ++s) {
    if (alpha[s] == 0) continue;
    const auto rest = alpha - K0Class::unit(alpha.size(), s);
    for (const auto& below : forests_of_class(rest, size_limit))
      out.push_back(Tree{s, below.trees()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Multisets of trees drawn from `pool` at indices >= `from`, summing to `remaining`.
// Choosing indices in non-decreasing order yields each multiset once, already sorted.
void extend_forests(const std::vector<std::pair<K0Class, const Tree*>>& pool, std::size_t from,
                    const K0Class& remaining, std::vector<Tree>& current, std::vector<Forest>& out) {
  if (remaining.is_zero()) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    const auto& [cls, tree] = pool[i];
    if (!cls.fits_in(remaining)) continue;
    current.push_back(*tree);
    extend_forests(pool, i, remaining - cls, current, out);
    current.pop_back();
  }
}

std::vector<Forest> generate_forests(const K0Class& alpha, std::size_t size_limit) {
  if (alpha.is_zero()) return {Forest()};
  std::vector<std::pair<K0Class, const Tree*>> pool;
  for (const auto& beta : sub_classes(alpha)) {
    if (beta.is_zero()) continue;
    for (const auto& tree : trees_of_class(beta, size_limit)) pool.emplace_back(beta, &tree);
  }
  std::sort(pool.begin(), pool.end(),
            [](const auto& a, const auto& b) { return *a.second < *b.second; });
  std::vector<Forest> out;
  std::vector<Tree> current;
  extend_forests(pool, 0, alpha, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void check_size(const K0Class& alpha, std::size_t size_limit) {
  if (alpha.total() > size_limit)
    throw SizeLimitError("class " + alpha.str() + " has " + std::to_string(alpha.total()) +
                         " vertices, above the size limit of " + std::to_string(size_limit));
}

const std::vector<Tree>& trees_of_class(const K0Class& alpha, std::size_t size_limit) {
  check_size(alpha, size_limit);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = tree_memo.find(alpha); it != tree_memo.end()) return it->second;
  }
  auto trees = generate_trees(alpha, size_limit);
  std::lock_guard lock(memo_mutex);
  return tree_memo.emplace(alpha, std::move(trees)).first->second;
}

const std::vector<Forest>& forests_of_class(const K0Class& alpha, std::size_t size_limit) {
  check_size(alpha, size_limit);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = forest_memo.find(alpha); it != forest_memo.end()) return it->second;
  }
  auto forests = generate_forests(alpha, size_limit);
  std::lock_guard lock(memo_mutex);
  return forest_memo.emplace(alpha, std::move(forests)).first->second;
}

mpz_class count_forests_of_class(const K0Class& alpha, std::size_t size_limit) {
  check_size(alpha, size_limit);
  const auto classes = sub_classes(alpha);  // ascending, so every strict sub-class comes first
  std::map<K0Class, mpz_class> trees;
  std::map<K0Class, mpz_class> forests;

  // c(gamma) = sum over k dividing every entry of gamma of |gamma/k| * t(gamma/k).
  auto weighted_tree_sum = [&](const K0Class& gamma) {
    const auto g = std::accumulate(gamma.counts().begin(), gamma.counts().end(), std::uint32_t{0},
                                   [](std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); });
    mpz_class sum = 0;
    for (std::uint32_t k = 1; k <= g; ++k) {
      if (g % k != 0) continue;
      auto counts = gamma.counts();
      for (auto& c : counts) c /= k;
      const K0Class part(std::move(counts));
      sum += mpz_class(static_cast<unsigned long>(part.total())) * trees.at(part);
    }
    return sum;
  };

  for (const auto& beta : classes) {
    if (beta.is_zero()) {
      forests[beta] = 1;
      trees[beta] = 0;
      continue;
    }
    mpz_class t = 0;
    for (ColorId s = 0; s < beta.size(); ++s)
      if (beta[s] > 0) t += forests.at(beta - K0Class::unit(beta.size(), s));
    trees[beta] = t;

    // |beta| f(beta) = sum over nonzero gamma <= beta of c(gamma) f(beta - gamma).
    mpz_class acc = 0;
    for (const auto& gamma : sub_classes(beta)) {
      if (gamma.is_zero()) continue;
      acc += weighted_tree_sum(gamma) * forests.at(beta - gamma);
    }
    forests[beta] = acc / static_cast<unsigned long>(beta.total());
  }
  return forests.at(alpha);
}

std::vector<K0Class> sub_classes(const K0Class& alpha) {
  std::vector<K0Class> out{K0Class::zero(alpha.size())};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<K0Class> next;
    for (const auto& partial : out) {
      for (std::uint32_t v = 0; v <= alpha[i]; ++v) {
        auto counts = partial.counts();
        counts[i] = v;
        next.emplace_back(std::move(counts));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<K0Class> classes_up_to(std::size_t num_colors, std::size_t bound) {
  K0Class box(std::vector<std::uint32_t>(num_colors, static_cast<std::uint32_t>(bound)));
  std::vector<K0Class> out;
  for (auto& cls : sub_classes(box))
    if (cls.total() <= bound) out.push_back(std::move(cls));
  std::stable_sort(out.begin(), out.end(),
                   [](const K0Class& a, const K0Class& b) { return a.total() < b.total(); });
  return out;
}

std::vector<Forest> forests_up_to(std::size_t num_colors, std::size_t bound) {
  std::vector<Forest> out;
  for (const auto& cls : classes_up_to(num_colors, bound))
    for (const auto& f : forests_of_class(cls, std::max(bound, kDefaultSizeLimit))) out.push_back(f);
  std::stable_sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return a < b;
  });
  return out;
}

}  // namespace crf
