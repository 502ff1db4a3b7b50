#pragma once

// Colored rooted forests up to isomorphism, and their K0 classes.
//
// A Tree is always held in canonical form: children sorted ascending by the
// structural order (color id first, then child lists lexicographically).
// A Forest is a canonically sorted list of trees, so two forests are
// isomorphic exactly when they compare equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crf {

using ColorId = std::uint32_t;

/// Interned color identifiers. Order defines K0Class coordinates.
class ColorTable {
 public:
  ColorTable() = default;
  explicit ColorTable(std::vector<std::string> names);

  /// Parses a comma-separated list such as "a,b".
  static ColorTable parse(std::string_view text);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ColorId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ColorId> find(std::string_view name) const;
  ColorId id(std::string_view name) const;

  static bool is_identifier(std::string_view text);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ColorId> index_;
};

/// Per-color vertex counts; an element of the effective cone N^|S|.
class K0Class {
 public:
  K0Class() = default;
  static K0Class zero(std::size_t num_colors) { return K0Class(std::vector<std::uint32_t>(num_colors, 0)); }
  explicit K0Class(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {}

  static K0Class unit(std::size_t num_colors, ColorId color);

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint32_t operator[](std::size_t i) const { return counts_.at(i); }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

  std::size_t total() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise <=.
  bool fits_in(const K0Class& other) const;

  K0Class& operator+=(const K0Class& other);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  /// Componentwise difference; throws std::domain_error if it leaves the cone.
  friend K0Class operator-(const K0Class& a, const K0Class& b);

  friend bool operator==(const K0Class&, const K0Class&) = default;
  friend auto operator<=>(const K0Class&, const K0Class&) = default;

  /// Text form "(2,1)".
  std::string str() const;
  static K0Class parse(std::string_view text, std::size_t num_colors);

 private:
  std::vector<std::uint32_t> counts_;
};

struct Tree {
  ColorId color = 0;
  std::vector<Tree> children;

  std::size_t vertex_count() const;
};

std::strong_ordering compare(const Tree& a, const Tree& b);
inline std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return compare(a, b); }
inline bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }

/// Recursively sorts children into canonical order.
Tree canonicalize(Tree raw);

class Forest {
 public:
  Forest() = default;
  /// Canonicalizes every tree and sorts the components.
  explicit Forest(std::vector<Tree> trees);

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  bool empty() const noexcept { return trees_.empty(); }
  std::size_t size() const noexcept { return trees_.size(); }
  std::size_t vertex_count() const;

  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }

 private:
  std::vector<Tree> trees_;
};

Forest single_vertex(ColorId color);
Forest direct_sum(const Forest& a, const Forest& b);
K0Class k0_class(const Forest& forest, std::size_t num_colors);
K0Class k0_class(const Tree& tree, std::size_t num_colors);

Forest parse_forest(std::string_view text, const ColorTable& colors);
std::string format_forest(const Forest& forest, const ColorTable& colors);
std::string format_tree(const Tree& tree, const ColorTable& colors);

/// Grammar reference printed by usage errors.
extern const char* const kForestGrammar;

}  // namespace crf
