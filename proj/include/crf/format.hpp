#pragma once

// Text keys for basis elements, shared by the CLI, the verification reports and
// the Python bindings. Tensor keys join both sides with " ⊗ ".

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "crf/forest.hpp"
#include "crf/linear.hpp"
#include "crf/nsym.hpp"
#include "crf/qsym.hpp"

namespace crf {

inline constexpr std::string_view kTensorSeparator = " ⊗ ";

inline std::string key_string(const Forest& f, const ColorTable& colors) { return format_forest(f, colors); }
inline std::string key_string(const Word& w, const ColorTable&) { return format_word(w); }
inline std::string key_string(const Composition& z, const ColorTable&) { return format_composition(z); }

template <class L, class R>
std::string key_string(const std::pair<L, R>& p, const ColorTable& colors) {
  return key_string(p.first, colors) + std::string(kTensorSeparator) + key_string(p.second, colors);
}

/// Always "p/q", including integers ("2/1").
std::string rational_string(const Rational& r);

/// Terms in a one-line human-readable form: "2*a+a + 1*a[a]"; "0" when empty.
template <class Key>
std::string element_string(const LinearCombination<Key>& x, const ColorTable& colors) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : x) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*" + key_string(key, colors);
  }
  return out;
}

/// Term-by-term differences between two elements, one "key: lhs vs rhs" entry
/// per mismatching key, in key order. Empty when equal.
template <class Key>
std::string difference_string(const LinearCombination<Key>& lhs, const LinearCombination<Key>& rhs,
                              const ColorTable& colors) {
  std::set<Key> keys;
  for (const auto& [key, c] : lhs) keys.insert(key);
  for (const auto& [key, c] : rhs) keys.insert(key);
  std::string out;
  for (const auto& key : keys) {
    const auto l = lhs.coefficient(key);
    const auto r = rhs.coefficient(key);
    if (l == r) continue;
    if (!out.empty()) out += "; ";
    out += key_string(key, colors) + ": " + l.get_str() + " vs " + r.get_str();
  }
  return out;
}

}  // namespace crf
