#include "crf/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "crf/cuts.hpp"
#include "crf/enumerate.hpp"
#include "crf/error.hpp"
#include "crf/format.hpp"
#include "crf/hall.hpp"
#include "crf/qsym.hpp"

namespace crf {

std::size_t SuiteReport::failed() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.ok; }));
}

namespace {

using Triple = std::tuple<Forest, Forest, Forest>;
using HallTriple = LinearCombination<Triple>;

std::string key_string(const Triple& t, const ColorTable& colors) {
  const std::string sep(kTensorSeparator);
  return format_forest(std::get<0>(t), colors) + sep + format_forest(std::get<1>(t), colors) + sep +
         format_forest(std::get<2>(t), colors);
}

std::string triple_difference(const HallTriple& lhs, const HallTriple& rhs, const ColorTable& colors) {
  std::set<Triple> keys;
  for (const auto& [k, c] : lhs) keys.insert(k);
  for (const auto& [k, c] : rhs) keys.insert(k);
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

class SuiteRunner {
 public:
  SuiteRunner(std::string name, const VerifyConfig& config) : config_(config) {
    report_.suite = std::move(name);
    report_.bound = config.bound;
    if (config.weights.size() != config.colors.size())
      throw Error("weights must cover every color");
  }

  std::size_t num_colors() const { return config_.colors.size(); }
  const ColorTable& colors() const { return config_.colors; }
  std::size_t bound() const { return config_.bound; }
  std::size_t limit() const { return std::max(config_.bound, kDefaultSizeLimit); }

  std::string f(const Forest& forest) const { return format_forest(forest, config_.colors); }

  template <class Key>
  void expect_equal(std::string identity, std::string instance, const LinearCombination<Key>& lhs,
                    const LinearCombination<Key>& rhs) {
    InstanceResult r{std::move(identity), std::move(instance), lhs == rhs, {}};
    if (!r.ok) r.detail = difference_string(lhs, rhs, config_.colors);
    report_.instances.push_back(std::move(r));
  }

  void expect_triple(std::string identity, std::string instance, const HallTriple& lhs,
                     const HallTriple& rhs) {
    InstanceResult r{std::move(identity), std::move(instance), lhs == rhs, {}};
    if (!r.ok) r.detail = triple_difference(lhs, rhs, config_.colors);
    report_.instances.push_back(std::move(r));
  }

  template <class T>
  void expect_value(std::string identity, std::string instance, const T& lhs, const T& rhs,
                    const std::function<std::string(const T&)>& show) {
    InstanceResult r{std::move(identity), std::move(instance), lhs == rhs, {}};
    if (!r.ok) r.detail = show(lhs) + " vs " + show(rhs);
    report_.instances.push_back(std::move(r));
  }

  void expect(std::string identity, std::string instance, bool ok, std::string detail) {
    report_.instances.push_back({std::move(identity), std::move(instance), ok, ok ? "" : std::move(detail)});
  }

  SuiteReport take() { return std::move(report_); }

  std::vector<Forest> forests() const { return forests_up_to(num_colors(), bound()); }

  /// Ordered pairs of forests whose vertex counts sum to at most `bound`,
  /// sorted by combined size.
  std::vector<std::pair<Forest, Forest>> forest_pairs() const {
    const auto universe = forests();
    std::vector<std::pair<Forest, Forest>> out;
    for (const auto& a : universe)
      for (const auto& b : universe)
        if (a.vertex_count() + b.vertex_count() <= bound()) out.emplace_back(a, b);
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      return x.first.vertex_count() + x.second.vertex_count() <
             y.first.vertex_count() + y.second.vertex_count();
    });
    return out;
  }

 private:
  const VerifyConfig& config_;
  SuiteReport report_;
};

std::string rational_show(const Rational& r) { return r.get_str(); }
std::string mpz_show(const mpz_class& z) { return z.get_str(); }

// ------------------------------------------------------------------ suites

SuiteReport enumeration_suite(const VerifyConfig& config) {
  SuiteRunner run("enumeration", config);
  for (const auto& alpha : classes_up_to(run.num_colors(), run.bound())) {
    const auto& forests = forests_of_class(alpha, run.limit());
    run.expect_value<mpz_class>("generated count = Euler-transform count", alpha.str(),
                                mpz_class(static_cast<unsigned long>(forests.size())),
                                count_forests_of_class(alpha, run.limit()), mpz_show);
    bool ok = std::adjacent_find(forests.begin(), forests.end(),
                                 [](const Forest& a, const Forest& b) { return !(a < b); }) ==
              forests.end();
    std::string detail;
    for (const auto& forest : forests) {
      if (k0_class(forest, run.num_colors()) != alpha) {
        ok = false;
        detail = run.f(forest) + " has class " + k0_class(forest, run.num_colors()).str();
        break;
      }
      if (parse_forest(run.f(forest), run.colors()) != forest) {
        ok = false;
        detail = run.f(forest) + " does not round-trip";
        break;
      }
    }
    run.expect("forests are canonical, distinct, of the requested class", alpha.str(), ok,
               detail.empty() ? "duplicate or unsorted forests" : detail);
  }
  return run.take();
}

SuiteReport cuts_suite(const VerifyConfig& config) {
  SuiteRunner run("cuts", config);
  for (const auto& forest : run.forests()) {
    const auto cuts = enumerate_cuts(forest);
    std::uint64_t expected = 1;
    for (const auto& tree : forest.trees()) expected *= count_tree_cuts(tree);
    run.expect_value<std::uint64_t>("cut count = product of per-tree antichain counts",
                                    run.f(forest), cuts.size(), expected,
                                    [](const std::uint64_t& n) { return std::to_string(n); });
    const auto whole = k0_class(forest, run.num_colors());
    bool additive = true;
    std::string detail;
    for (const auto& entry : cuts) {
      const auto sum = k0_class(entry.result.pruned, run.num_colors()) +
                       k0_class(entry.result.root_part, run.num_colors());
      if (sum != whole) {
        additive = false;
        detail = run.f(entry.result.pruned) + " | " + run.f(entry.result.root_part);
        break;
      }
    }
    run.expect("[P_C] + [R_C] = [F]", run.f(forest), additive, detail);
  }
  return run.take();
}

SuiteReport hall_oracle_suite(const VerifyConfig& config) {
  SuiteRunner run("hall-oracle", config);
  for (const auto& [a, b] : run.forest_pairs()) {
    run.expect_equal("grafting product = product over all forests of the class",
                     run.f(a) + " * " + run.f(b), hall_mul_basis(a, b),
                     hall_mul_reference(a, b, run.num_colors(), run.limit()));
  }
  return run.take();
}

SuiteReport theorem1_suite(const VerifyConfig& config) {
  SuiteRunner run("theorem1", config);
  for (const auto& gamma : classes_up_to(run.num_colors(), run.bound())) {
    HallTensor rhs;
    for (const auto& alpha : sub_classes(gamma)) {
      const auto left = kappa(alpha, run.limit());
      const auto right = kappa(gamma - alpha, run.limit());
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) rhs.add({l, r}, cl * cr);
    }
    run.expect_equal("Delta(kappa_g) = sum kappa_a (x) kappa_b", gamma.str(),
                     hall_comul(kappa(gamma, run.limit())), rhs);
    run.expect_equal("Delta(rho(X_g)) = (rho (x) rho)(Delta X_g)", gamma.str(),
                     hall_comul(rho(generator(gamma), run.limit())),
                     rho_tensor(nsym_comul(generator(gamma)), run.limit()));
  }
  return run.take();
}

SuiteReport theorem2_suite(const VerifyConfig& config) {
  SuiteRunner run("theorem2", config);
  for (const auto& forest : run.forests()) {
    const auto transpose = rho_t(forest, run.num_colors(), run.limit());
    const auto cls = k0_class(forest, run.num_colors());
    for (auto& letters : class_sequences_of(cls)) {
      const Word word(std::move(letters));
      const auto lhs = pair(transpose, NSymElement(word));
      const auto rhs = rho_word(word, run.limit()).coefficient(forest);
      run.expect_value<Rational>("<rho^t(W_A), X_w> = coefficient of delta_A in rho(X_w)",
                                 run.f(forest) + " ; " + format_word(word), lhs, rhs, rational_show);
    }
    run.expect_value<bool>("deg rho^t(W_A) = [A]", run.f(forest),
                           transpose.empty() || qsym_degree(transpose, run.num_colors()) == cls, true,
                           [](const bool& b) { return b ? "homogeneous" : "inhomogeneous"; });
  }
  return run.take();
}

SuiteReport lemma41_suite(const VerifyConfig& config) {
  SuiteRunner run("lemma41", config);
  for (std::size_t n = 0; n <= run.bound(); ++n) {
    NSymTensor rhs;
    for (std::size_t i = 0; i <= n; ++i) {
      const auto left = js(i, config.weights, run.limit());
      const auto right = js(n - i, config.weights, run.limit());
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) rhs.add({l, r}, cl * cr);
    }
    run.expect_equal("Delta(J_S(Y_n)) = sum J_S(Y_i) (x) J_S(Y_j)", "n=" + std::to_string(n),
                     nsym_comul(js(n, config.weights, run.limit())), rhs);
    run.expect_equal("rho(J_S(Y_n)) = sum of delta_A over V([A]) = n", "n=" + std::to_string(n),
                     rho(js(n, config.weights, run.limit()), run.limit()),
                     rho_js(n, config.weights, run.limit()));
  }
  return run.take();
}

HallTriple comul_left_first(const Forest& forest) {
  HallTriple out;
  for (const auto& [pair, c] : hall_comul_basis(forest))
    for (const auto& [inner, ci] : hall_comul_basis(pair.first))
      out.add({inner.first, inner.second, pair.second}, c * ci);
  return out;
}

HallTriple comul_right_first(const Forest& forest) {
  HallTriple out;
  for (const auto& [pair, c] : hall_comul_basis(forest))
    for (const auto& [inner, ci] : hall_comul_basis(pair.second))
      out.add({pair.first, inner.first, inner.second}, c * ci);
  return out;
}

SuiteReport hopf_axioms_suite(const VerifyConfig& config) {
  SuiteRunner run("hopf-axioms", config);
  const auto universe = run.forests();

  for (const auto& a : universe) {
    const auto x = delta(a);
    const auto key = run.f(a);
    const auto comul = hall_comul(x);

    run.expect_triple("coassociativity", key, comul_left_first(a), comul_right_first(a));

    HallTensor swapped;
    for (const auto& [p, c] : comul) swapped.add({p.second, p.first}, c);
    run.expect_equal("cocommutativity", key, comul, swapped);

    HallElement left_counit, right_counit;
    for (const auto& [p, c] : comul) {
      if (p.first.empty()) left_counit.add(p.second, c);
      if (p.second.empty()) right_counit.add(p.first, c);
    }
    run.expect_equal("(counit (x) id) Delta = id", key, left_counit, x);
    run.expect_equal("(id (x) counit) Delta = id", key, right_counit, x);

    run.expect_equal("unit * x = x = x * unit", key, hall_mul(hall_unit(), x), x);
    run.expect_equal("unit * x = x = x * unit", key, hall_mul(x, hall_unit()), x);

    HallElement left_antipode, right_antipode;
    for (const auto& [p, c] : comul) {
      left_antipode += c * hall_mul(antipode(delta(p.first), run.limit()), delta(p.second));
      right_antipode += c * hall_mul(delta(p.first), antipode(delta(p.second), run.limit()));
    }
    const auto expected = counit(x) * hall_unit();
    run.expect_equal("m (S (x) id) Delta = unit counit", key, left_antipode, expected);
    run.expect_equal("m (id (x) S) Delta = unit counit", key, right_antipode, expected);
  }

  for (const auto& [a, b] : run.forest_pairs()) {
    const auto key = run.f(a) + " * " + run.f(b);
    run.expect_equal("Delta(x * y) = Delta(x) * Delta(y)", key,
                     hall_comul(hall_mul_basis(a, b)),
                     hall_tensor_mul(hall_comul_basis(a), hall_comul_basis(b)));
  }

  for (const auto& a : universe) {
    for (const auto& b : universe) {
      if (a.vertex_count() + b.vertex_count() > run.bound()) continue;
      for (const auto& c : universe) {
        if (a.vertex_count() + b.vertex_count() + c.vertex_count() > run.bound()) continue;
        run.expect_equal("(x * y) * z = x * (y * z)", run.f(a) + " * " + run.f(b) + " * " + run.f(c),
                         hall_mul(hall_mul_basis(a, b), delta(c)),
                         hall_mul(delta(a), hall_mul_basis(b, c)));
      }
    }
  }

  // Dual pair QSym / NSym: product in one is adjoint to the coproduct in the other.
  const auto sequences = class_sequences_up_to(run.num_colors(), run.bound());
  for (const auto& seq_v : sequences) {
    const Word v(seq_v);
    const auto v_degree = v.degree(run.num_colors());
    const auto comul_v = nsym_comul_word(v);
    for (const auto& seq_a : sequences) {
      const Composition a(seq_a);
      const auto a_degree = a.degree(run.num_colors());
      if (!a_degree.fits_in(v_degree)) continue;
      for (const auto& seq_b : class_sequences_of(v_degree - a_degree)) {
        const Composition b(seq_b);
        QSymTensor ab_tensor;
        ab_tensor.add({a, b}, 1);
        const auto lhs = pair(ab_tensor, comul_v);
        const auto rhs = pair(quasi_shuffle_basis(a, b), NSymElement(v));
        run.expect_value<Rational>(
            "<a (x) b, Delta v> = <ab, v>",
            format_composition(a) + " (x) " + format_composition(b) + " ; " + format_word(v), lhs, rhs,
            rational_show);
      }
    }
  }
  for (const auto& seq_a : sequences) {
    const Composition a(seq_a);
    const auto comul_a = deconcat_basis(a);
    const auto a_degree = a.degree(run.num_colors());
    for (const auto& seq_v : sequences) {
      const Word v(seq_v);
      const auto v_degree = v.degree(run.num_colors());
      if (!v_degree.fits_in(a_degree)) continue;
      for (const auto& seq_w : class_sequences_of(a_degree - v_degree)) {
        const Word w(seq_w);
        NSymTensor vw_tensor;
        vw_tensor.add({v, w}, 1);
        const auto lhs = pair(comul_a, vw_tensor);
        const auto rhs = pair(QSymElement(a), NSymElement(concat(v, w)));
        run.expect_value<Rational>(
            "<Delta a, v (x) w> = <a, vw>",
            format_composition(a) + " ; " + format_word(v) + " (x) " + format_word(w), lhs, rhs,
            rational_show);
      }
    }
  }
  return run.take();
}

SuiteReport duality_suite(const VerifyConfig& config) {
  SuiteRunner run("duality", config);
  for (const auto& [a, b] : run.forest_pairs()) {
    const auto product = hall_mul_basis(a, b);
    const auto cls = k0_class(a, run.num_colors()) + k0_class(b, run.num_colors());
    for (const auto& m : forests_of_class(cls, run.limit())) {
      const auto key = run.f(m) + " ; " + run.f(a) + " (x) " + run.f(b);
      run.expect_value<Rational>("<Delta_CK W_M, delta_A (x) delta_B> = <W_M, delta_A * delta_B>", key,
                                 ck_comul_tensor(m).coefficient({a, b}), product.coefficient(m),
                                 rational_show);
      run.expect_value<Rational>("<W_A W_B, delta_M> = <W_A (x) W_B, Delta delta_M>", key,
                                 Rational(ck_mul(a, b) == m ? 1 : 0),
                                 hall_comul_basis(m).coefficient({a, b}), rational_show);
    }
  }
  return run.take();
}

SuiteReport rhot_hopf_suite(const VerifyConfig& config) {
  SuiteRunner run("rhot-hopf", config);
  for (const auto& forest : run.forests()) {
    run.expect_equal("Delta(rho^t(W_A)) = (rho^t (x) rho^t)(Delta_CK W_A)", run.f(forest),
                     deconcat(rho_t(forest, run.num_colors(), run.limit())),
                     rho_t_tensor(ck_comul_tensor(forest), run.num_colors(), run.limit()));
  }
  for (const auto& [a, b] : run.forest_pairs()) {
    run.expect_equal("rho^t(W_A W_B) = rho^t(W_A) rho^t(W_B)", run.f(a) + " * " + run.f(b),
                     rho_t(ck_mul(a, b), run.num_colors(), run.limit()),
                     quasi_shuffle(rho_t(a, run.num_colors(), run.limit()),
                                   rho_t(b, run.num_colors(), run.limit())));
  }
  return run.take();
}

SuiteReport qsym_algebra_suite(const VerifyConfig& config) {
  SuiteRunner run("qsym-algebra", config);
  const auto sequences = class_sequences_up_to(run.num_colors(), run.bound());
  auto total = [](const std::vector<K0Class>& s) {
    std::size_t t = 0;
    for (const auto& c : s) t += c.total();
    return t;
  };
  for (const auto& sa : sequences) {
    const Composition a(sa);
    run.expect_equal("Z[] a = a", format_composition(a), quasi_shuffle_basis(Composition(), a),
                     QSymElement(a));
    for (const auto& sb : sequences) {
      if (total(sa) + total(sb) > run.bound()) continue;
      const Composition b(sb);
      const auto key_ab = format_composition(a) + " * " + format_composition(b);
      run.expect_equal("ab = ba", key_ab, quasi_shuffle_basis(a, b), quasi_shuffle_basis(b, a));
      run.expect_equal("Delta(ab) = Delta(a) Delta(b)", key_ab, deconcat(quasi_shuffle_basis(a, b)),
                       qsym_tensor_mul(deconcat_basis(a), deconcat_basis(b)));
      for (const auto& sc : sequences) {
        if (total(sa) + total(sb) + total(sc) > run.bound()) continue;
        const Composition c(sc);
        run.expect_equal("(ab)c = a(bc)", key_ab + " * " + format_composition(c),
                         quasi_shuffle(quasi_shuffle_basis(a, b), QSymElement(c)),
                         quasi_shuffle(QSymElement(a), quasi_shuffle_basis(b, c)));
      }
    }
  }
  return run.take();
}

using SuiteFn = SuiteReport (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"enumeration", enumeration_suite}, {"cuts", cuts_suite},
      {"hall-oracle", hall_oracle_suite}, {"theorem1", theorem1_suite},
      {"theorem2", theorem2_suite},       {"lemma41", lemma41_suite},
      {"hopf-axioms", hopf_axioms_suite}, {"duality", duality_suite},
      {"rhot-hopf", rhot_hopf_suite},     {"qsym-algebra", qsym_algebra_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view suite, const VerifyConfig& config) {
  for (const auto& [name, fn] : suites())
    if (name == suite) return fn(config);
  throw Error("unknown verification suite '" + std::string(suite) + "'");
}

std::vector<SuiteReport> run_all_suites(const VerifyConfig& config) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : suites()) out.push_back(fn(config));
  return out;
}

std::vector<std::vector<K0Class>> class_sequences_of(const K0Class& alpha) {
  if (alpha.is_zero()) return {{}};
  std::vector<std::vector<K0Class>> out;
  for (const auto& head : sub_classes(alpha)) {
    if (head.is_zero()) continue;
    for (auto& rest : class_sequences_of(alpha - head)) {
      rest.insert(rest.begin(), head);
      out.push_back(std::move(rest));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<K0Class>> class_sequences_up_to(std::size_t num_colors, std::size_t bound) {
  std::vector<std::vector<K0Class>> out;
  for (const auto& alpha : classes_up_to(num_colors, bound))
    for (auto& seq : class_sequences_of(alpha)) out.push_back(std::move(seq));
  auto total = [](const std::vector<K0Class>& s) {
    std::size_t t = 0;
    for (const auto& c : s) t += c.total();
    return t;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto ta = total(a), tb = total(b);
    return ta != tb ? ta < tb : a < b;
  });
  return out;
}

}  // namespace crf
