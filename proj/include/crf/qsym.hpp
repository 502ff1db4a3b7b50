#pragma once

// K0-graded quasisymmetric functions in the Z basis: quasi-shuffle product,
// deconcatenation coproduct, the pairing with NSym, and the transpose of rho
// evaluated on the W basis of the Connes-Kreimer dual.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "crf/enumerate.hpp"
#include "crf/forest.hpp"
#include "crf/hall.hpp"
#include "crf/linear.hpp"
#include "crf/nsym.hpp"

namespace crf {

/// Z(alpha_1, ..., alpha_k) with every part nonzero; Z() is the unit.
class Composition {
 public:
  Composition() = default;
  /// Throws crf::Error if a part is the zero class.
  explicit Composition(std::vector<K0Class> parts);

  const std::vector<K0Class>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  K0Class degree(std::size_t num_colors) const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<K0Class> parts_;
};

/// "Z[(2,1),(1,0)]"; the unit is "Z[]".
std::string format_composition(const Composition& z);
Composition parse_composition(std::string_view text, std::size_t num_colors);

using QSymElement = LinearCombination<Composition>;
using QSymTensor = Tensor<Composition>;

inline QSymElement qsym_unit() { return QSymElement(Composition()); }

QSymElement quasi_shuffle(const QSymElement& u, const QSymElement& v);
QSymElement quasi_shuffle_basis(const Composition& a, const Composition& b);

QSymTensor deconcat(const QSymElement& u);
QSymTensor deconcat_basis(const Composition& z);

QSymTensor qsym_tensor_mul(const QSymTensor& x, const QSymTensor& y);

/// <Z(a_1..a_n), X_b1 ... X_bm> = [n = m and a_i = b_i for all i], bilinearly.
Rational pair(const QSymElement& z, const NSymElement& x);
Rational pair(const QSymTensor& z, const NSymTensor& x);

/// rho^t(W_A): one Z term per strict flag of A, summed over every flag length.
QSymElement rho_t(const Forest& forest, std::size_t num_colors,
                  std::size_t size_limit = kDefaultSizeLimit);

/// (rho^t (x) rho^t) applied to a tensor in the W basis.
QSymTensor rho_t_tensor(const HallTensor& x, std::size_t num_colors,
                        std::size_t size_limit = kDefaultSizeLimit);

std::optional<K0Class> qsym_degree(const QSymElement& u, std::size_t num_colors);

}  // namespace crf
