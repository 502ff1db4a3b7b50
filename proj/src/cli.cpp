#include "crf/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crf/cuts.hpp"
#include "crf/enumerate.hpp"
#include "crf/error.hpp"
#include "crf/format.hpp"
#include "crf/hall.hpp"
#include "crf/nsym.hpp"
#include "crf/qsym.hpp"
#include "crf/verify.hpp"

namespace crf {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSyntaxReference =
    "Forest expressions:\n"
    "  forest := \"0\" | tree (\"+\" tree)*\n"
    "  tree   := IDENT | IDENT \"[\" tree (\",\" tree)* \"]\"\n"
    "Classes:       \"(i,j,...)\" with one entry per color in --colors order\n"
    "Words:         \"(1,1)|(1,0)\"; the empty word is \"1\"\n"
    "Compositions:  \"Z[(2,1),(1,0)]\"; the unit is \"Z[]\"\n"
    "Weights:       \"a=1,b=2\" (positive integers, one per color)\n";

struct Session {
  std::string colors_text = "a";
  std::string weights_text;
  std::optional<std::size_t> max_vertices;
  bool json = false;

  ColorTable colors;
  WeightMap weights;
  std::size_t size_limit = kDefaultSizeLimit;

  void resolve() {
    colors = ColorTable::parse(colors_text);
    if (weights_text.empty()) {
      std::vector<std::uint32_t> w(colors.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::uint32_t>(i + 1);
      weights = WeightMap(std::move(w));
    } else {
      weights = WeightMap::parse(weights_text, colors);
    }
    if (max_vertices) {
      if (*max_vertices == 0) throw Error("--max-vertices must be positive");
      size_limit = *max_vertices;
    }
  }
};

Json degree_json(const std::optional<K0Class>& degree) {
  if (!degree) return nullptr;
  Json out = Json::array();
  for (auto c : degree->counts()) out.push_back(c);
  return out;
}

template <class Key>
void print_element(std::ostream& out, const Session& s, const LinearCombination<Key>& x,
                   const std::optional<K0Class>& degree) {
  if (s.json) {
    Json terms = Json::object();
    for (const auto& [key, c] : x) terms[key_string(key, s.colors)] = rational_string(c);
    Json doc;
    doc["terms"] = std::move(terms);
    doc["degree"] = degree_json(degree);
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& [key, c] : x) out << c.get_str() << '\t' << key_string(key, s.colors) << '\n';
  if (x.empty()) out << "0\n";
}

template <class Key, class DegreeFn>
void print_tensor(std::ostream& out, const Session& s, const LinearCombination<Key>& x, DegreeFn degree_of) {
  std::optional<K0Class> degree;
  bool homogeneous = true;
  for (const auto& [key, c] : x) {
    auto d = degree_of(key.first) + degree_of(key.second);
    if (degree && *degree != d) homogeneous = false;
    degree = std::move(d);
  }
  print_element(out, s, x, homogeneous ? degree : std::nullopt);
}

void print_report(std::ostream& out, const Session& s, const std::vector<SuiteReport>& reports) {
  bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (s.json) {
    Json doc;
    doc["passed"] = passed;
    Json suites = Json::array();
    for (const auto& report : reports) {
      Json j;
      j["suite"] = report.suite;
      j["bound"] = report.bound;
      j["checked"] = report.checked();
      j["failed"] = report.failed();
      Json instances = Json::array();
      for (const auto& inst : report.instances) {
        Json i;
        i["identity"] = inst.identity;
        i["instance"] = inst.instance;
        i["ok"] = inst.ok;
        if (!inst.ok) i["counterexample"] = inst.detail;
        instances.push_back(std::move(i));
      }
      j["instances"] = std::move(instances);
      suites.push_back(std::move(j));
    }
    doc["suites"] = std::move(suites);
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& report : reports) {
    out << report.suite << ": " << report.checked() << " checked, " << report.failed() << " failed"
        << " (bound " << report.bound << ")\n";
    for (const auto& inst : report.instances) {
      if (inst.ok) continue;
      out << "  FAIL " << inst.identity << " [" << inst.instance << "]: " << inst.detail << '\n';
    }
  }
  out << (passed ? "all identities hold\n" : "verification FAILED\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  CLI::App app{"Hopf algebras of colored rooted forests", "crf"};
  app.footer(kSyntaxReference);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--colors", s.colors_text, "comma-separated color identifiers; order fixes class coordinates")
      ->default_val("a");
  app.add_option("--weights", s.weights_text, "positive weight per color, e.g. a=1,b=2 (default: 1,2,3,...)");
  app.add_option("--max-vertices", s.max_vertices,
                 "size limit for enumeration (default 12); the bound for verify (default 4)");
  app.add_flag("--json", s.json, "emit JSON");

  std::function<int()> action;
  auto forest_of = [&](const std::string& text) { return parse_forest(text, s.colors); };
  auto class_degree = [&](const Forest& f) { return k0_class(f, s.colors.size()); };

  // forest
  auto* forest_cmd = app.add_subcommand("forest", "parse and normalize forest expressions");
  forest_cmd->require_subcommand(1);
  std::string forest_text;
  auto* normalize = forest_cmd->add_subcommand("normalize", "canonical form and K0 class");
  normalize->add_option("forest", forest_text, "forest expression")->required();
  normalize->callback([&] {
    action = [&] {
      const auto f = forest_of(forest_text);
      const auto cls = class_degree(f);
      if (s.json) {
        Json doc;
        doc["forest"] = format_forest(f, s.colors);
        doc["class"] = degree_json(cls);
        out << doc.dump() << '\n';
      } else {
        out << format_forest(f, s.colors) << ' ' << cls.str() << '\n';
      }
      return 0;
    };
  });
  auto* klass = forest_cmd->add_subcommand("class", "K0 class of a forest");
  klass->add_option("forest", forest_text, "forest expression")->required();
  klass->callback([&] {
    action = [&] {
      const auto cls = class_degree(forest_of(forest_text));
      if (s.json) {
        Json doc;
        doc["class"] = degree_json(cls);
        out << doc.dump() << '\n';
      } else {
        out << cls.str() << '\n';
      }
      return 0;
    };
  });

  // cuts
  auto* cuts_cmd = app.add_subcommand("cuts", "admissible cuts and flags");
  cuts_cmd->require_subcommand(1);
  std::string cuts_forest;
  std::optional<std::size_t> flag_length;
  auto* cuts_list = cuts_cmd->add_subcommand("list", "every admissible cut as (P_C, R_C)");
  cuts_list->add_option("forest", cuts_forest, "forest expression")->required();
  cuts_list->callback([&] {
    action = [&] {
      const auto f = forest_of(cuts_forest);
      const auto entries = enumerate_cuts(f);
      if (s.json) {
        Json list = Json::array();
        for (const auto& e : entries) {
          Json components = Json::array();
          for (const auto& c : e.cut.components)
            components.push_back(c.full ? Json("full") : Json(c.edges));
          Json j;
          j["cut"] = std::move(components);
          j["pruned"] = format_forest(e.result.pruned, s.colors);
          j["root"] = format_forest(e.result.root_part, s.colors);
          list.push_back(std::move(j));
        }
        Json doc;
        doc["forest"] = format_forest(f, s.colors);
        doc["cuts"] = std::move(list);
        doc["count"] = entries.size();
        out << doc.dump() << '\n';
      } else {
        for (const auto& e : entries)
          out << format_forest(e.result.pruned, s.colors) << '\t'
              << format_forest(e.result.root_part, s.colors) << '\n';
        out << "count: " << entries.size() << '\n';
      }
      return 0;
    };
  });
  auto* cuts_flags = cuts_cmd->add_subcommand("flags", "class sequences of strict flags ending at the forest");
  cuts_flags->add_option("forest", cuts_forest, "forest expression")->required();
  cuts_flags->add_option("--k", flag_length, "flag length (default: every length)");
  cuts_flags->callback([&] {
    action = [&] {
      const auto f = forest_of(cuts_forest);
      check_size(class_degree(f), s.size_limit);
      std::vector<std::vector<K0Class>> flags;
      if (flag_length) {
        flags = enumerate_flags(f, *flag_length, s.colors.size());
      } else {
        for (std::size_t k = f.empty() ? 0 : 1; k <= f.vertex_count(); ++k)
          for (auto& flag : enumerate_flags(f, k, s.colors.size())) flags.push_back(std::move(flag));
      }
      if (s.json) {
        Json list = Json::array();
        for (const auto& flag : flags) {
          Json parts = Json::array();
          for (const auto& c : flag) parts.push_back(c.str());
          list.push_back(std::move(parts));
        }
        Json doc;
        doc["forest"] = format_forest(f, s.colors);
        doc["flags"] = std::move(list);
        doc["count"] = flags.size();
        out << doc.dump() << '\n';
      } else {
        for (const auto& flag : flags) out << format_composition(Composition(flag)) << '\n';
        out << "count: " << flags.size() << '\n';
      }
      return 0;
    };
  });

  // enumerate
  std::string class_text;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "every forest of a K0 class");
  enumerate_cmd->add_option("--class", class_text, "class vector, e.g. \"(1,1)\"")->required();
  enumerate_cmd->callback([&] {
    action = [&] {
      const auto alpha = K0Class::parse(class_text, s.colors.size());
      const auto& forests = forests_of_class(alpha, s.size_limit);
      if (s.json) {
        Json list = Json::array();
        for (const auto& f : forests) list.push_back(format_forest(f, s.colors));
        Json doc;
        doc["class"] = degree_json(alpha);
        doc["forests"] = std::move(list);
        doc["count"] = forests.size();
        out << doc.dump() << '\n';
      } else {
        for (const auto& f : forests) out << format_forest(f, s.colors) << '\n';
        out << "count: " << forests.size() << '\n';
      }
      return 0;
    };
  });

  // hall
  auto* hall_cmd = app.add_subcommand("hall", "Ringel-Hall algebra in the delta basis");
  hall_cmd->require_subcommand(1);
  std::string hall_left, hall_right;
  auto* hall_mul_cmd = hall_cmd->add_subcommand("mul", "delta_A * delta_B");
  hall_mul_cmd->add_option("A", hall_left, "forest expression")->required();
  hall_mul_cmd->add_option("B", hall_right, "forest expression")->required();
  hall_mul_cmd->callback([&] {
    action = [&] {
      const auto a = forest_of(hall_left);
      const auto b = forest_of(hall_right);
      check_size(class_degree(a) + class_degree(b), s.size_limit);
      const auto product = hall_mul(delta(a), delta(b));
      print_element(out, s, product, hall_degree(product, s.colors.size()));
      return 0;
    };
  });
  auto* hall_comul_cmd = hall_cmd->add_subcommand("comul", "Delta(delta_A)");
  hall_comul_cmd->add_option("A", hall_left, "forest expression")->required();
  hall_comul_cmd->callback([&] {
    action = [&] {
      print_tensor(out, s, hall_comul(delta(forest_of(hall_left))), class_degree);
      return 0;
    };
  });
  auto* hall_kappa_cmd = hall_cmd->add_subcommand("kappa", "sum of delta_A over forests of a class");
  hall_kappa_cmd->add_option("--class", class_text, "class vector")->required();
  hall_kappa_cmd->callback([&] {
    action = [&] {
      const auto alpha = K0Class::parse(class_text, s.colors.size());
      print_element(out, s, kappa(alpha, s.size_limit), alpha);
      return 0;
    };
  });
  auto* hall_antipode_cmd = hall_cmd->add_subcommand("antipode", "S(delta_A)");
  hall_antipode_cmd->add_option("A", hall_left, "forest expression")->required();
  hall_antipode_cmd->callback([&] {
    action = [&] {
      const auto a = forest_of(hall_left);
      const auto image = antipode(delta(a), s.size_limit);
      print_element(out, s, image, hall_degree(image, s.colors.size()));
      return 0;
    };
  });

  // nsym
  auto* nsym_cmd = app.add_subcommand("nsym", "graded noncommutative symmetric functions");
  nsym_cmd->require_subcommand(1);
  std::string word_text;
  std::size_t weight_n = 0;
  auto* rho_cmd = nsym_cmd->add_subcommand("rho", "rho(X_a1 ... X_ak) in the Hall algebra");
  rho_cmd->add_option("--word", word_text, "word, e.g. \"(1,1)|(1,0)\"")->required();
  rho_cmd->callback([&] {
    action = [&] {
      const auto word = parse_word(word_text, s.colors.size());
      const auto image = rho_word(word, s.size_limit);
      print_element(out, s, image, word.degree(s.colors.size()));
      return 0;
    };
  });
  auto* js_cmd = nsym_cmd->add_subcommand("js", "J_S(Y_n) = sum of X_a over V(a) = n");
  js_cmd->add_option("--n", weight_n, "weight")->required();
  js_cmd->callback([&] {
    action = [&] {
      print_element(out, s, js(weight_n, s.weights, s.size_limit), std::nullopt);
      return 0;
    };
  });
  auto* rhojs_cmd = nsym_cmd->add_subcommand("rhojs", "rho(J_S(Y_n)) = sum of delta_A over V([A]) = n");
  rhojs_cmd->add_option("--n", weight_n, "weight")->required();
  rhojs_cmd->callback([&] {
    action = [&] {
      const auto image = rho_js(weight_n, s.weights, s.size_limit);
      print_element(out, s, image, hall_degree(image, s.colors.size()));
      return 0;
    };
  });

  // qsym
  auto* qsym_cmd = app.add_subcommand("qsym", "graded quasisymmetric functions");
  qsym_cmd->require_subcommand(1);
  std::string comp_left, comp_right, rhot_forest;
  auto comp_degree = [&](const Composition& z) { return z.degree(s.colors.size()); };
  auto* shuffle_cmd = qsym_cmd->add_subcommand("shuffle", "quasi-shuffle product of two compositions");
  shuffle_cmd->add_option("left", comp_left, "composition, e.g. \"Z[(1,0)]\"")->required();
  shuffle_cmd->add_option("right", comp_right, "composition")->required();
  shuffle_cmd->callback([&] {
    action = [&] {
      const auto a = parse_composition(comp_left, s.colors.size());
      const auto b = parse_composition(comp_right, s.colors.size());
      const auto product = quasi_shuffle_basis(a, b);
      print_element(out, s, product, qsym_degree(product, s.colors.size()));
      return 0;
    };
  });
  auto* deconcat_cmd = qsym_cmd->add_subcommand("deconcat", "deconcatenation coproduct");
  deconcat_cmd->add_option("composition", comp_left, "composition")->required();
  deconcat_cmd->callback([&] {
    action = [&] {
      print_tensor(out, s, deconcat_basis(parse_composition(comp_left, s.colors.size())), comp_degree);
      return 0;
    };
  });
  auto* rhot_cmd = qsym_cmd->add_subcommand("rhot", "rho^t(W_A) as a sum over flags");
  rhot_cmd->add_option("--forest", rhot_forest, "forest expression")->required();
  rhot_cmd->callback([&] {
    action = [&] {
      const auto a = forest_of(rhot_forest);
      print_element(out, s, rho_t(a, s.colors.size(), s.size_limit), class_degree(a));
      return 0;
    };
  });

  // verify
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run identity suites on a bounded universe");
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->callback([&] {
    action = [&] {
      VerifyConfig config{s.colors, s.weights, s.max_vertices.value_or(4)};
      std::vector<SuiteReport> reports;
      if (suite == "all") {
        reports = run_all_suites(config);
      } else {
        reports.push_back(run_suite(suite, config));
      }
      print_report(out, s, reports);
      const bool passed =
          std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
      return passed ? static_cast<int>(kExitOk) : static_cast<int>(kExitVerifyFailure);
    };
  });
  std::string suites_list;
  for (const auto& name : suite_names()) suites_list += (suites_list.empty() ? "" : ", ") + name;
  verify_cmd->footer("Suites: " + suites_list + ", all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kExitDomainError;
  }

  try {
    s.resolve();
    return action ? action() : static_cast<int>(kExitDomainError);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace crf
