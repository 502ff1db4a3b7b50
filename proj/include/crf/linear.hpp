#pragma once

#include <map>
#include <utility>

#include <gmpxx.h>

namespace crf {

using Rational = mpq_class;

/// Finitely supported map Key -> exact rational. Zero coefficients are never
/// stored, so equality is term-by-term.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Rational coefficient = 1) { add(std::move(key), coefficient); }

  void add(const Key& key, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add(key, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [key, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Elements of A (x) B over basis keys of A and B.
template <class Left, class Right = Left>
using Tensor = LinearCombination<std::pair<Left, Right>>;

/// Componentwise product (a (x) b)(c (x) d) = ac (x) bd of two tensors, given
/// basis-level products for each side.
template <class Left, class Right, class MulLeft, class MulRight>
Tensor<Left, Right> tensor_mul(const Tensor<Left, Right>& x, const Tensor<Left, Right>& y,
                               MulLeft&& mul_left, MulRight&& mul_right) {
  Tensor<Left, Right> out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      const auto left = mul_left(kx.first, ky.first);
      const auto right = mul_right(kx.second, ky.second);
      const Rational c = cx * cy;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add({l, r}, c * cl * cr);
    }
  }
  return out;
}

}  // namespace crf
