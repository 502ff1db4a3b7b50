#pragma once

// K0-graded noncommutative symmetric functions: the free algebra on generators
// X_alpha (alpha a nonzero class), its split-the-degree coproduct, the algebra
// map rho into the Hall algebra, and the weight map / J_S construction.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crf/enumerate.hpp"
#include "crf/forest.hpp"
#include "crf/hall.hpp"
#include "crf/linear.hpp"

namespace crf {

/// Sequence of nonzero classes; the empty word is the unit.
class Word {
 public:
  Word() = default;
  /// Throws crf::Error if a letter is the zero class.
  explicit Word(std::vector<K0Class> letters);

  const std::vector<K0Class>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  K0Class degree(std::size_t num_colors) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<K0Class> letters_;
};

Word concat(const Word& a, const Word& b);

/// "(1,1)|(1,0)"; the empty word is "1".
std::string format_word(const Word& word);
Word parse_word(std::string_view text, std::size_t num_colors);

using NSymElement = LinearCombination<Word>;
using NSymTensor = Tensor<Word>;

inline NSymElement nsym_unit() { return NSymElement(Word()); }
/// X_alpha, with X_0 identified with the unit.
NSymElement generator(const K0Class& alpha);

NSymElement nsym_mul(const NSymElement& u, const NSymElement& v);
NSymTensor nsym_comul(const NSymElement& u);
NSymTensor nsym_comul_word(const Word& word);
NSymTensor nsym_tensor_mul(const NSymTensor& x, const NSymTensor& y);

/// X_a1 ... X_ak -> kappa_a1 * ... * kappa_ak.
HallElement rho(const NSymElement& u, std::size_t size_limit = kDefaultSizeLimit);
HallElement rho_word(const Word& word, std::size_t size_limit = kDefaultSizeLimit);
HallTensor rho_tensor(const NSymTensor& x, std::size_t size_limit = kDefaultSizeLimit);

/// Positive integer weight per color; V(alpha) = sum_s alpha_s * weight(s).
class WeightMap {
 public:
  WeightMap() = default;
  /// Throws crf::Error on a zero weight.
  explicit WeightMap(std::vector<std::uint32_t> weights);

  /// Parses "a=1,b=2"; every color of the table must be assigned.
  static WeightMap parse(std::string_view text, const ColorTable& colors);

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint32_t weight(ColorId color) const { return weights_.at(color); }
  std::size_t value(const K0Class& alpha) const;

 private:
  std::vector<std::uint32_t> weights_;
};

/// Every class alpha with V(alpha) = n, sorted ascending.
std::vector<K0Class> classes_of_weight(std::size_t n, const WeightMap& weights);

/// J_S(Y_n) = sum of X_alpha over V(alpha) = n; J_S(Y_0) = 1.
NSymElement js(std::size_t n, const WeightMap& weights, std::size_t size_limit = kDefaultSizeLimit);

/// rho(J_S(Y_n)) = sum of delta_A over forests with V([A]) = n.
HallElement rho_js(std::size_t n, const WeightMap& weights,
                   std::size_t size_limit = kDefaultSizeLimit);

std::optional<K0Class> nsym_degree(const NSymElement& u, std::size_t num_colors);

}  // namespace crf
