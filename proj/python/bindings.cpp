// Python view of the library. Elements come back as dicts from text keys (or
// pairs of keys for tensors) to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "crf/cuts.hpp"
#include "crf/enumerate.hpp"
#include "crf/error.hpp"
#include "crf/format.hpp"
#include "crf/hall.hpp"
#include "crf/nsym.hpp"
#include "crf/qsym.hpp"
#include "crf/verify.hpp"

namespace py = pybind11;
using namespace crf;

namespace {

using ClassSeq = std::vector<std::vector<std::uint32_t>>;

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.get_str());
}

template <class L, class R>
py::object key_object(const std::pair<L, R>& p, const ColorTable& colors) {
  return py::make_tuple(key_string(p.first, colors), key_string(p.second, colors));
}

template <class Key>
py::object key_object(const Key& k, const ColorTable& colors) {
  return py::str(key_string(k, colors));
}

template <class Key>
py::dict to_dict(const LinearCombination<Key>& x, const ColorTable& colors) {
  py::dict out;
  for (const auto& [k, c] : x) out[key_object(k, colors)] = fraction(c);
  return out;
}

// Fixed colors, weights and size limit; every forest, class and word is read
// relative to them.
class Algebra {
 public:
  Algebra(const std::string& colors, const std::optional<std::string>& weights, std::size_t max_vertices)
      : colors_(ColorTable::parse(colors)), weights_(default_weights()), limit_(max_vertices) {
    if (weights) weights_ = WeightMap::parse(*weights, colors_);
  }

  std::vector<std::string> colors() const { return colors_.names(); }
  std::size_t max_vertices() const { return limit_; }

  std::string normalize(const std::string& forest) const { return format_forest(parse(forest), colors_); }

  std::vector<std::uint32_t> k0_class(const std::string& forest) const {
    return crf::k0_class(parse(forest), colors_.size()).counts();
  }

  std::vector<std::string> enumerate(const std::vector<std::uint32_t>& alpha) const {
    std::vector<std::string> out;
    for (const auto& f : forests_of_class(klass(alpha), limit_)) out.push_back(format_forest(f, colors_));
    return out;
  }

  std::string count(const std::vector<std::uint32_t>& alpha) const {
    return count_forests_of_class(klass(alpha), limit_).get_str();
  }

  py::dict cuts(const std::string& forest) const {
    py::dict out;
    for (const auto& [pr, n] : cut_table(parse(forest)))
      out[py::make_tuple(format_forest(pr.first, colors_), format_forest(pr.second, colors_))] = n;
    return out;
  }

  std::vector<std::vector<std::vector<std::uint32_t>>> flags(const std::string& forest, std::size_t k) const {
    std::vector<std::vector<std::vector<std::uint32_t>>> out;
    for (const auto& flag : enumerate_flags(parse(forest), k, colors_.size())) {
      auto& seq = out.emplace_back();
      for (const auto& c : flag) seq.push_back(c.counts());
    }
    return out;
  }

  py::dict hall_mul(const std::string& a, const std::string& b) const {
    return to_dict(crf::hall_mul_basis(parse(a), parse(b)), colors_);
  }
  py::dict hall_comul(const std::string& a) const { return to_dict(crf::hall_comul_basis(parse(a)), colors_); }
  py::dict kappa(const std::vector<std::uint32_t>& alpha) const {
    return to_dict(crf::kappa(klass(alpha), limit_), colors_);
  }
  py::dict antipode(const std::string& a) const { return to_dict(crf::antipode(delta(parse(a)), limit_), colors_); }

  py::dict rho(const ClassSeq& word) const { return to_dict(crf::rho_word(make_word(word), limit_), colors_); }
  py::dict nsym_comul(const ClassSeq& word) const { return to_dict(crf::nsym_comul_word(make_word(word)), colors_); }
  py::dict js(std::size_t n) const { return to_dict(crf::js(n, weights_, limit_), colors_); }
  py::dict rho_js(std::size_t n) const { return to_dict(crf::rho_js(n, weights_, limit_), colors_); }

  py::dict rho_t(const std::string& forest) const {
    return to_dict(crf::rho_t(parse(forest), colors_.size(), limit_), colors_);
  }
  py::dict quasi_shuffle(const ClassSeq& a, const ClassSeq& b) const {
    return to_dict(crf::quasi_shuffle_basis(make_comp(a), make_comp(b)), colors_);
  }
  py::dict deconcat(const ClassSeq& z) const { return to_dict(crf::deconcat_basis(make_comp(z)), colors_); }
  py::object pair(const ClassSeq& z, const ClassSeq& word) const {
    return fraction(crf::pair(QSymElement(make_comp(z)), NSymElement(make_word(word))));
  }

  py::dict verify(const std::string& suite, std::size_t bound) const {
    const VerifyConfig config{colors_, weights_, bound};
    std::vector<SuiteReport> reports;
    if (suite == "all")
      reports = run_all_suites(config);
    else
      reports.push_back(run_suite(suite, config));
    py::dict out;
    bool passed = true;
    for (const auto& r : reports) {
      py::list failures;
      for (const auto& i : r.instances)
        if (!i.ok) failures.append(py::make_tuple(i.identity, i.instance, i.detail));
      py::dict entry;
      entry["checked"] = r.checked();
      entry["failed"] = r.failed();
      entry["failures"] = failures;
      out[py::str(r.suite)] = entry;
      passed = passed && r.passed();
    }
    out["passed"] = passed;
    return out;
  }

 private:
  WeightMap default_weights() const {
    std::vector<std::uint32_t> w(colors_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::uint32_t>(i + 1);
    return WeightMap(std::move(w));
  }

  Forest parse(const std::string& text) const {
    auto f = parse_forest(text, colors_);
    if (f.vertex_count() > limit_) throw SizeLimitError("forest exceeds max_vertices");
    return f;
  }

  K0Class klass(const std::vector<std::uint32_t>& counts) const {
    if (counts.size() != colors_.size()) throw Error("class dimension does not match the number of colors");
    return K0Class(counts);
  }

  std::vector<K0Class> classes(const ClassSeq& seq) const {
    std::vector<K0Class> out;
    for (const auto& c : seq) out.push_back(klass(c));
    return out;
  }
  Word make_word(const ClassSeq& seq) const { return Word(classes(seq)); }
  Composition make_comp(const ClassSeq& seq) const { return Composition(classes(seq)); }

  ColorTable colors_;
  WeightMap weights_;
  std::size_t limit_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hall algebra of colored rooted forests and its (quasi)symmetric function maps";

  auto base = py::register_exception<Error>(m, "CrfError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<const std::string&, const std::optional<std::string>&, std::size_t>(), py::arg("colors") = "a",
           py::arg("weights") = py::none(), py::arg("max_vertices") = kDefaultSizeLimit)
      .def_property_readonly("colors", &Algebra::colors)
      .def_property_readonly("max_vertices", &Algebra::max_vertices)
      .def("normalize", &Algebra::normalize, py::arg("forest"))
      .def("k0_class", &Algebra::k0_class, py::arg("forest"))
      .def("enumerate", &Algebra::enumerate, py::arg("alpha"))
      .def("count", &Algebra::count, py::arg("alpha"), "number of forests of a class, as a decimal string")
      .def("cuts", &Algebra::cuts, py::arg("forest"))
      .def("flags", &Algebra::flags, py::arg("forest"), py::arg("k"))
      .def("hall_mul", &Algebra::hall_mul, py::arg("a"), py::arg("b"))
      .def("hall_comul", &Algebra::hall_comul, py::arg("a"))
      .def("kappa", &Algebra::kappa, py::arg("alpha"))
      .def("antipode", &Algebra::antipode, py::arg("a"))
      .def("rho", &Algebra::rho, py::arg("word"))
      .def("nsym_comul", &Algebra::nsym_comul, py::arg("word"))
      .def("js", &Algebra::js, py::arg("n"))
      .def("rho_js", &Algebra::rho_js, py::arg("n"))
      .def("rho_t", &Algebra::rho_t, py::arg("forest"))
      .def("quasi_shuffle", &Algebra::quasi_shuffle, py::arg("a"), py::arg("b"))
      .def("deconcat", &Algebra::deconcat, py::arg("z"))
      .def("pair", &Algebra::pair, py::arg("z"), py::arg("word"))
      .def("verify", &Algebra::verify, py::arg("suite") = "all", py::arg("bound") = 4);
}
