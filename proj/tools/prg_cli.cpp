// prg: command-line front end for the projective reflection group library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "prg/characters.hpp"
#include "prg/diagonal.hpp"
#include "prg/galois.hpp"
#include "prg/io.hpp"
#include "prg/rs.hpp"
#include "prg/verify.hpp"

using namespace prg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("--out: cannot open " + path);
    out << text << '\n';
  }
  void emit(const Json& j) const { emit(j.dump(2)); }
};

Json read_json_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(flag + ": cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

Json collapsed_to_json(const PartitionSeries& s) {
  Json out = Json::array();
  for (const auto& [exps, coef] : s.collapse_total_degree()) {
    out.push_back(Json{{"exps", exps}, {"coef", coef}});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in projective reflection groups G(r,p,q,n)"};
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  app.add_option("--out", output.path, "Write the result to FILE instead of stdout");

  std::string params_text;
  std::string element_text;
  int k = 1;
  int bound = 8;

  auto* group = app.add_subcommand("group", "Group enumeration");
  auto* group_enum = group->add_subcommand("enumerate", "List the elements of G(r,p,q,n)");
  group->require_subcommand(1);
  bool count_only = false;
  group_enum->add_option("--params", params_text, "r,p,q,n")->required();
  group_enum->add_flag("--count-only", count_only, "Print only the number of elements");

  auto* stats = app.add_subcommand("stats", "Flag-major statistics of one element");
  stats->add_option("--params", params_text, "r,p,q,n")->required();
  stats->add_option("--element", element_text, "\"sigma; colors\", 1-based")->required();

  auto* rs = app.add_subcommand("rs", "Projective Robinson-Schensted correspondence");
  rs->add_option("--params", params_text, "r,p,q,n")->required();
  rs->add_option("--element", element_text, "\"sigma; colors\", 1-based")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Partition-graded Hilbert series");
  std::string which;
  hilbert->add_option("kind", which, "diagonal, tensor or rhs")
      ->required()
      ->check(CLI::IsMember({"diagonal", "tensor", "rhs"}));
  hilbert->add_option("--params", params_text, "r,p,q,n")->required();
  hilbert->add_option("--k", k, "Number of variable sets")->check(CLI::Range(1, kMaxBlocks));
  hilbert->add_option("--bound", bound, "Total degree bound")->check(CLI::NonNegativeNumber);

  auto* kron = app.add_subcommand("kronecker", "Coarse Kronecker coefficient");
  std::string shapes_file;
  kron->add_option("--params", params_text, "r,p,q,n")->required();
  kron->add_option("--shapes", shapes_file, "JSON file with a list of shapes")->required();
  kron->add_option("--k", k, "Number of shapes")->check(CLI::PositiveNumber);

  auto* character = app.add_subcommand("character", "Irreducible character of G(r,n)");
  std::string shape_text;
  std::string type_text;
  character->add_option("--shape", shape_text, "JSON r-tuple of partitions")->required();
  character->add_option("--type", type_text, "Cycle type as len:color,...")->required();

  auto* galois = app.add_subcommand("galois", "Galois-twisted bivariate series");
  int d = 1;
  bool collapse = false;
  std::optional<int> galois_bound;
  galois->add_option("--params", params_text, "r,p,q,n")->required();
  galois->add_option("--d", d, "Exponent coprime to r")->required();
  galois->add_option("--bound", galois_bound, "Total degree bound");
  galois->add_flag("--collapse", collapse, "Substitute y_{i,j} = y_i");

  auto* verify = app.add_subcommand("verify", "Run an identity suite and write a report");
  std::string suite;
  std::string config_file;
  VerifyConfig config;
  bool no_timing = false;
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--config", config_file, "JSON file with max_order, max_r, bije_max_entry, timing");
  auto* max_order_opt =
      verify->add_option("--max-order", config.max_order, "Largest group order enumerated");
  auto* max_r_opt = verify->add_option("--max-r", config.max_r,
                                       "Largest r for the order-bounded suites");
  verify->add_flag("--no-timing", no_timing, "Report every ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (group_enum->parsed()) {
      const GroupParams g = parse_params(params_text);
      if (count_only) {
        output.emit(std::to_string(g.order()));
      } else {
        Json list = Json::array();
        for_each_element(g, [&](const Element& e) { list.push_back(format_element(e)); });
        output.emit(list);
      }
    } else if (stats->parsed()) {
      const GroupParams g = parse_params(params_text);
      output.emit(profile_to_json(stat_profile(parse_element(element_text, g))).dump());
    } else if (rs->parsed()) {
      const GroupParams g = parse_params(params_text);
      const ProjectiveRs res = projective_rs(parse_element(element_text, g));
      output.emit(Json{{"P", tableau_to_json(res.P)},
                       {"Q", tableau_to_json(res.Q)},
                       {"shape", shape_class_to_json(res.shape)},
                       {"stabilizer_order", res.shape.stabilizer_order}});
    } else if (hilbert->parsed()) {
      const GroupParams g = parse_params(params_text);
      const PartitionSeries s = which == "diagonal" ? hilb_diag(g, k, bound)
                                : which == "tensor" ? hilb_tensor(g, k, bound)
                                                    : uou_rhs(g, k, bound);
      output.emit(series_to_json(s));
    } else if (kron->parsed()) {
      const GroupParams h = parse_params(params_text);
      const Json shapes = read_json_file(shapes_file, "--shapes");
      if (!shapes.is_array()) throw std::invalid_argument("--shapes: expected a JSON list");
      std::vector<ShapeClass> mus;
      for (const auto& s : shapes) mus.push_back(shape_class(shape_from_json(s), h.p));
      if (kron->count("--k") && static_cast<int>(mus.size()) != k) {
        throw std::invalid_argument("--k: the shapes file holds " + std::to_string(mus.size()) +
                                    " shapes");
      }
      output.emit(Json{{"coarse_kronecker", coarse_kronecker(h, mus)}}.dump());
    } else if (character->parsed()) {
      Json parsed;
      try {
        parsed = Json::parse(shape_text);
      } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("--shape: ") + e.what());
      }
      const MultiShape shape = shape_from_json(parsed);
      const CycleType type = parse_cycle_type(type_text, static_cast<int>(shape.size()));
      output.emit(cyclotomic_to_json(wreath_character(shape, type)).dump());
    } else if (galois->parsed()) {
      const GroupParams g = parse_params(params_text);
      const GaloisResult res = galois_check(g, d, galois_bound);
      Json out{{"d", d}, {"params", params_to_json(g)}, {"equal", res.equal}};
      if (collapse) {
        out["combinatorial"] = collapsed_to_json(res.combinatorial);
        out["representation"] = collapsed_to_json(res.representation);
      } else {
        out["combinatorial"] = series_to_json(res.combinatorial);
        out["representation"] = series_to_json(res.representation);
      }
      output.emit(out);
      return res.equal ? 0 : kExitFail;
    } else if (verify->parsed()) {
      if (!config_file.empty()) {
        const Json c = read_json_file(config_file, "--config");
        if (c.contains("max_order") && max_order_opt->count() == 0) {
          config.max_order = c.at("max_order").get<std::uint64_t>();
        }
        if (c.contains("max_r") && max_r_opt->count() == 0) config.max_r = c.at("max_r").get<int>();
        if (c.contains("bije_max_entry")) config.bije_max_entry = c.at("bije_max_entry").get<int>();
        if (c.contains("timing")) config.timing = c.at("timing").get<bool>();
      }
      if (no_timing) config.timing = false;
      const VerifyReport report = run_verify(suite, config);
      output.emit(report.to_json());
      return report.all_passed() ? 0 : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
