#include "crf/qsym.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "crf/cuts.hpp"
#include "crf/error.hpp"

namespace crf {

Composition::Composition(std::vector<K0Class> parts) : parts_(std::move(parts)) {
  for (const auto& part : parts_)
    if (part.is_zero()) throw Error("composition parts must be nonzero classes");
}

K0Class Composition::degree(std::size_t num_colors) const {
  auto out = K0Class::zero(num_colors);
  for (const auto& part : parts_) out += part;
  return out;
}

std::string format_composition(const Composition& z) {
  std::string out = "Z[";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ',';
    out += z.parts()[i].str();
  }
  return out + "]";
}

Composition parse_composition(std::string_view text, std::size_t num_colors) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) != "Z[") throw ParseError("expected 'Z['", pos);
  pos += 2;
  std::vector<K0Class> parts;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      const auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated class vector", pos);
      try {
        parts.push_back(K0Class::parse(text.substr(pos, close + 1 - pos), num_colors));
      } catch (const ParseError& e) {
        throw ParseError("malformed class vector", pos + e.position());
      }
      pos = close + 1;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ']'", pos);
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after composition", pos);
  return Composition(std::move(parts));
}

QSymElement quasi_shuffle_basis(const Composition& a, const Composition& b) {
  // Each output cell is left-only, right-only, or merged; the first cell
  // decides which parts are consumed.
  static std::mutex mutex;
  static std::map<std::pair<Composition, Composition>, QSymElement> memo;
  std::pair<Composition, Composition> key{a, b};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  QSymElement out;
  if (a.empty()) {
    out.add(b, 1);
  } else if (b.empty()) {
    out.add(a, 1);
  } else {
    const auto& ap = a.parts();
    const auto& bp = b.parts();
    const Composition a_tail(std::vector<K0Class>(ap.begin() + 1, ap.end()));
    const Composition b_tail(std::vector<K0Class>(bp.begin() + 1, bp.end()));
    auto prepend = [&out](const K0Class& head, const QSymElement& rest) {
      for (const auto& [z, c] : rest) {
        std::vector<K0Class> parts{head};
        parts.insert(parts.end(), z.parts().begin(), z.parts().end());
        out.add(Composition(std::move(parts)), c);
      }
    };
    prepend(ap.front(), quasi_shuffle_basis(a_tail, b));
    prepend(bp.front(), quasi_shuffle_basis(a, b_tail));
    prepend(ap.front() + bp.front(), quasi_shuffle_basis(a_tail, b_tail));
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), out);
  return out;
}

QSymElement quasi_shuffle(const QSymElement& u, const QSymElement& v) {
  QSymElement out;
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) {
      const Rational c = ca * cb;
      for (const auto& [z, cz] : quasi_shuffle_basis(a, b)) out.add(z, c * cz);
    }
  }
  return out;
}

QSymTensor deconcat_basis(const Composition& z) {
  QSymTensor out;
  const auto& parts = z.parts();
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    Composition left(std::vector<K0Class>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i)));
    Composition right(std::vector<K0Class>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end()));
    out.add({std::move(left), std::move(right)}, 1);
  }
  return out;
}

QSymTensor deconcat(const QSymElement& u) {
  QSymTensor out;
  for (const auto& [z, c] : u)
    for (const auto& [pair, cp] : deconcat_basis(z)) out.add(pair, c * cp);
  return out;
}

QSymTensor qsym_tensor_mul(const QSymTensor& x, const QSymTensor& y) {
  return tensor_mul(x, y, quasi_shuffle_basis, quasi_shuffle_basis);
}

Rational pair(const QSymElement& z, const NSymElement& x) {
  Rational out = 0;
  for (const auto& [comp, c] : z) {
    const auto w = x.coefficient(Word(comp.parts()));
    if (w != 0) out += c * w;
  }
  return out;
}

Rational pair(const QSymTensor& z, const NSymTensor& x) {
  Rational out = 0;
  for (const auto& [comps, c] : z) {
    const auto w = x.coefficient({Word(comps.first.parts()), Word(comps.second.parts())});
    if (w != 0) out += c * w;
  }
  return out;
}

QSymElement rho_t(const Forest& forest, std::size_t num_colors, std::size_t size_limit) {
  if (forest.vertex_count() > size_limit)
    throw SizeLimitError("forest has " + std::to_string(forest.vertex_count()) +
                         " vertices, above the size limit of " + std::to_string(size_limit));
  if (forest.empty()) return qsym_unit();
  QSymElement out;
  // A flag of length k needs k nonzero parts, so k never exceeds the vertex count.
  for (std::size_t k = 1; k <= forest.vertex_count(); ++k)
    for (auto& parts : enumerate_flags(forest, k, num_colors)) out.add(Composition(std::move(parts)), 1);
  return out;
}

QSymTensor rho_t_tensor(const HallTensor& x, std::size_t num_colors, std::size_t size_limit) {
  QSymTensor out;
  for (const auto& [pair, c] : x) {
    const auto left = rho_t(pair.first, num_colors, size_limit);
    const auto right = rho_t(pair.second, num_colors, size_limit);
    for (const auto& [l, cl] : left)
      for (const auto& [r, cr] : right) out.add({l, r}, c * cl * cr);
  }
  return out;
}

std::optional<K0Class> qsym_degree(const QSymElement& u, std::size_t num_colors) {
  std::optional<K0Class> degree;
  for (const auto& [z, c] : u) {
    auto cls = z.degree(num_colors);
    if (degree && *degree != cls) return std::nullopt;
    degree = std::move(cls);
  }
  return degree;
}

}  // namespace crf
