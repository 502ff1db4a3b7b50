#include "crf/forest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "crf/error.hpp"

namespace crf {

const char* const kForestGrammar =
    "forest := \"0\" | tree (\"+\" tree)*\n"
    "tree   := IDENT | IDENT \"[\" tree (\",\" tree)* \"]\"\n"
    "IDENT  := [A-Za-z_][A-Za-z0-9_]*   (whitespace ignored between tokens)\n";

// ---------------------------------------------------------------- ColorTable

ColorTable::ColorTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) throw Error("invalid color identifier '" + names_[i] + "'");
    if (!index_.emplace(names_[i], static_cast<ColorId>(i)).second)
      throw Error("duplicate color identifier '" + names_[i] + "'");
  }
}

ColorTable ColorTable::parse(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    names.emplace_back(item);
    start = end + 1;
  }
  if (names.size() == 1 && names.front().empty()) throw Error("color list is empty");
  return ColorTable(std::move(names));
}

std::optional<ColorId> ColorTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ColorId ColorTable::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw Error("unknown color '" + std::string(name) + "'");
}

bool ColorTable::is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

// ------------------------------------------------------------------- K0Class

K0Class K0Class::unit(std::size_t num_colors, ColorId color) {
  auto out = zero(num_colors);
  out.counts_.at(color) = 1;
  return out;
}

std::size_t K0Class::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

bool K0Class::is_zero() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](auto c) { return c == 0; });
}

bool K0Class::fits_in(const K0Class& other) const {
  if (size() != other.size()) throw std::invalid_argument("K0Class dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (counts_[i] > other.counts_[i]) return false;
  return true;
}

K0Class& K0Class::operator+=(const K0Class& other) {
  if (size() != other.size()) throw std::invalid_argument("K0Class dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

K0Class operator-(const K0Class& a, const K0Class& b) {
  if (!b.fits_in(a)) throw std::domain_error("K0Class difference leaves the effective cone");
  K0Class out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.counts_[i] -= b.counts_[i];
  return out;
}

std::string K0Class::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

K0Class K0Class::parse(std::string_view text, std::size_t num_colors) {
  std::vector<std::uint32_t> counts;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "' in class vector", pos);
    ++pos;
  };
  expect('(');
  skip_ws();
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) throw ParseError("expected non-negative integer in class vector", pos);
      pos = static_cast<std::size_t>(ptr - text.data());
      counts.push_back(value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(')');
      break;
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after class vector", pos);
  if (counts.size() != num_colors)
    throw Error("class " + std::string(text) + " has " + std::to_string(counts.size()) +
                " entries but there are " + std::to_string(num_colors) + " colors");
  return K0Class(std::move(counts));
}

// ---------------------------------------------------------------------- Tree

std::size_t Tree::vertex_count() const {
  std::size_t n = 1;
  for (const auto& child : children) n += child.vertex_count();
  return n;
}

std::strong_ordering compare(const Tree& a, const Tree& b) {
  if (auto c = a.color <=> b.color; c != 0) return c;
  const auto n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a.children[i], b.children[i]); c != 0) return c;
  return a.children.size() <=> b.children.size();
}

Tree canonicalize(Tree raw) {
  for (auto& child : raw.children) child = canonicalize(std::move(child));
  std::sort(raw.children.begin(), raw.children.end());
  return raw;
}

// -------------------------------------------------------------------- Forest

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  for (auto& tree : trees_) tree = canonicalize(std::move(tree));
  std::sort(trees_.begin(), trees_.end());
}

std::size_t Forest::vertex_count() const {
  std::size_t n = 0;
  for (const auto& tree : trees_) n += tree.vertex_count();
  return n;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(),
                                                b.trees_.begin(), b.trees_.end(), compare);
}

Forest single_vertex(ColorId color) { return Forest({Tree{color, {}}}); }

Forest direct_sum(const Forest& a, const Forest& b) {
  std::vector<Tree> trees;
  trees.reserve(a.size() + b.size());
  std::merge(a.trees().begin(), a.trees().end(), b.trees().begin(), b.trees().end(),
             std::back_inserter(trees));
  return Forest(std::move(trees));
}

namespace {

void accumulate_colors(const Tree& tree, std::vector<std::uint32_t>& counts) {
  counts.at(tree.color) += 1;
  for (const auto& child : tree.children) accumulate_colors(child, counts);
}

class ForestParser {
 public:
  ForestParser(std::string_view text, const ColorTable& colors) : text_(text), colors_(colors) {}

  Forest parse() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      finish();
      return Forest();
    }
    std::vector<Tree> trees;
    trees.push_back(tree());
    while (accept('+')) trees.push_back(tree());
    finish();
    return Forest(std::move(trees));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
  }

  Tree tree() {
    skip_ws();
    const auto start = pos_;
    auto is_head = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
    auto is_tail = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
    if (!is_head(static_cast<unsigned char>(peek()))) {
      if (pos_ >= text_.size()) throw ParseError("unexpected end of input, expected color identifier", pos_);
      throw ParseError("expected color identifier", pos_);
    }
    while (pos_ < text_.size() && is_tail(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto ident = text_.substr(start, pos_ - start);
    const auto color = colors_.find(ident);
    if (!color) throw ParseError("unknown color identifier '" + std::string(ident) + "'", start);

    Tree out{*color, {}};
    if (accept('[')) {
      out.children.push_back(tree());
      while (accept(',')) out.children.push_back(tree());
      if (!accept(']')) throw ParseError("expected ',' or ']'", pos_);
    }
    return out;
  }

  std::string_view text_;
  const ColorTable& colors_;
  std::size_t pos_ = 0;
};

}  // namespace

K0Class k0_class(const Tree& tree, std::size_t num_colors) {
  std::vector<std::uint32_t> counts(num_colors, 0);
  accumulate_colors(tree, counts);
  return K0Class(std::move(counts));
}

K0Class k0_class(const Forest& forest, std::size_t num_colors) {
  std::vector<std::uint32_t> counts(num_colors, 0);
  for (const auto& tree : forest.trees()) accumulate_colors(tree, counts);
  return K0Class(std::move(counts));
}

Forest parse_forest(std::string_view text, const ColorTable& colors) {
  return ForestParser(text, colors).parse();
}

std::string format_tree(const Tree& tree, const ColorTable& colors) {
  std::string out = colors.name(tree.color);
  if (!tree.children.empty()) {
    out += '[';
    for (std::size_t i = 0; i < tree.children.size(); ++i) {
      if (i) out += ',';
      out += format_tree(tree.children[i], colors);
    }
    out += ']';
  }
  return out;
}

std::string format_forest(const Forest& forest, const ColorTable& colors) {
  if (forest.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < forest.size(); ++i) {
    if (i) out += '+';
    out += format_tree(forest.trees()[i], colors);
  }
  return out;
}

}  // namespace crf
