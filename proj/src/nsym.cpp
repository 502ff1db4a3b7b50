#include "crf/nsym.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>

#include "crf/error.hpp"

namespace crf {

Word::Word(std::vector<K0Class> letters) : letters_(std::move(letters)) {
  for (const auto& letter : letters_)
    if (letter.is_zero()) throw Error("word letters must be nonzero classes");
}

K0Class Word::degree(std::size_t num_colors) const {
  auto out = K0Class::zero(num_colors);
  for (const auto& letter : letters_) out += letter;
  return out;
}

Word concat(const Word& a, const Word& b) {
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(letters));
}

std::string format_word(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '|';
    out += word.letters()[i].str();
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t num_colors) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "1") return Word();
  std::vector<K0Class> letters;
  std::size_t start = 0;
  while (true) {
    const auto end = trimmed.find('|', start);
    const auto part = trimmed.substr(start, end == std::string_view::npos ? end : end - start);
    letters.push_back(K0Class::parse(part, num_colors));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Word(std::move(letters));
}

NSymElement generator(const K0Class& alpha) {
  if (alpha.is_zero()) return nsym_unit();
  return NSymElement(Word({alpha}));
}

NSymElement nsym_mul(const NSymElement& u, const NSymElement& v) {
  NSymElement out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) out.add(concat(a, b), ca * cb);
  return out;
}

namespace {

NSymElement word_mul(const Word& a, const Word& b) { return NSymElement(concat(a, b)); }

NSymTensor letter_comul(const K0Class& gamma) {
  NSymTensor out;
  for (const auto& alpha : sub_classes(gamma)) {
    auto left = alpha.is_zero() ? Word() : Word({alpha});
    const auto beta = gamma - alpha;
    auto right = beta.is_zero() ? Word() : Word({beta});
    out.add({std::move(left), std::move(right)}, 1);
  }
  return out;
}

}  // namespace

NSymTensor nsym_tensor_mul(const NSymTensor& x, const NSymTensor& y) {
  return tensor_mul(x, y, word_mul, word_mul);
}

NSymTensor nsym_comul_word(const Word& word) {
  NSymTensor out;
  out.add({Word(), Word()}, 1);
  for (const auto& letter : word.letters()) out = nsym_tensor_mul(out, letter_comul(letter));
  return out;
}

NSymTensor nsym_comul(const NSymElement& u) {
  NSymTensor out;
  for (const auto& [word, c] : u)
    for (const auto& [pair, cp] : nsym_comul_word(word)) out.add(pair, c * cp);
  return out;
}

HallElement rho_word(const Word& word, std::size_t size_limit) {
  static std::mutex mutex;
  static std::map<Word, HallElement> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(word); it != memo.end()) {
      if (!word.empty()) check_size(word.degree(word.letters().front().size()), size_limit);
      return it->second;
    }
  }
  HallElement out = hall_unit();
  if (!word.empty()) {
    check_size(word.degree(word.letters().front().size()), size_limit);
    for (const auto& letter : word.letters()) out = hall_mul(out, kappa(letter, size_limit));
  }
  std::lock_guard lock(mutex);
  memo.emplace(word, out);
  return out;
}

HallElement rho(const NSymElement& u, std::size_t size_limit) {
  HallElement out;
  for (const auto& [word, c] : u) out += c * rho_word(word, size_limit);
  return out;
}

HallTensor rho_tensor(const NSymTensor& x, std::size_t size_limit) {
  HallTensor out;
  for (const auto& [pair, c] : x) {
    const auto left = rho_word(pair.first, size_limit);
    const auto right = rho_word(pair.second, size_limit);
    for (const auto& [l, cl] : left)
      for (const auto& [r, cr] : right) out.add({l, r}, c * cl * cr);
  }
  return out;
}

WeightMap::WeightMap(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
  for (auto w : weights_)
    if (w == 0) throw Error("color weights must be positive integers");
}

WeightMap WeightMap::parse(std::string_view text, const ColorTable& colors) {
  std::vector<std::uint32_t> weights(colors.size(), 0);
  std::vector<bool> assigned(colors.size(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected color=weight", start);
    auto name = item.substr(0, eq);
    auto value_text = item.substr(eq + 1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
    while (!value_text.empty() && std::isspace(static_cast<unsigned char>(value_text.front()))) value_text.remove_prefix(1);
    while (!value_text.empty() && std::isspace(static_cast<unsigned char>(value_text.back()))) value_text.remove_suffix(1);
    const auto color = colors.id(name);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc{} || ptr != value_text.data() + value_text.size())
      throw ParseError("expected integer weight", start + eq + 1);
    if (assigned[color]) throw Error("color '" + std::string(name) + "' weighted twice");
    assigned[color] = true;
    weights[color] = value;
    start = end + 1;
  }
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (!assigned[i]) throw Error("no weight given for color '" + colors.name(static_cast<ColorId>(i)) + "'");
  return WeightMap(std::move(weights));
}

std::size_t WeightMap::value(const K0Class& alpha) const {
  if (alpha.size() != weights_.size()) throw std::invalid_argument("K0Class dimension mismatch");
  std::size_t v = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) v += std::size_t{alpha[i]} * weights_[i];
  return v;
}

std::vector<K0Class> classes_of_weight(std::size_t n, const WeightMap& weights) {
  std::vector<K0Class> out;
  std::vector<std::uint32_t> counts(weights.size(), 0);
  auto fill = [&](std::size_t i, std::size_t remaining, auto&& self) -> void {
    if (i == counts.size()) {
      if (remaining == 0) out.emplace_back(counts);
      return;
    }
    const auto w = weights.weight(static_cast<ColorId>(i));
    for (std::size_t a = 0; a * w <= remaining; ++a) {
      counts[i] = static_cast<std::uint32_t>(a);
      self(i + 1, remaining - a * w, self);
    }
    counts[i] = 0;
  };
  fill(0, n, fill);
  std::sort(out.begin(), out.end());
  return out;
}

NSymElement js(std::size_t n, const WeightMap& weights, std::size_t size_limit) {
  if (n > size_limit)
    throw SizeLimitError("weight " + std::to_string(n) + " is above the size limit of " +
                         std::to_string(size_limit));
  if (n == 0) return nsym_unit();
  NSymElement out;
  for (const auto& alpha : classes_of_weight(n, weights)) out += generator(alpha);
  return out;
}

HallElement rho_js(std::size_t n, const WeightMap& weights, std::size_t size_limit) {
  if (n > size_limit)
    throw SizeLimitError("weight " + std::to_string(n) + " is above the size limit of " +
                         std::to_string(size_limit));
  HallElement out;
  for (const auto& alpha : classes_of_weight(n, weights)) out += kappa(alpha, size_limit);
  return out;
}

std::optional<K0Class> nsym_degree(const NSymElement& u, std::size_t num_colors) {
  std::optional<K0Class> degree;
  for (const auto& [word, c] : u) {
    auto cls = word.degree(num_colors);
    if (degree && *degree != cls) return std::nullopt;
    degree = std::move(cls);
  }
  return degree;
}

}  // namespace crf
