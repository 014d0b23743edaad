#include "prg/io.hpp"

#include <sstream>
#include <stdexcept>

namespace prg {

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> out;
  long long v;
  while (in >> v) out.push_back(static_cast<int>(v));
  if (!in.eof()) throw std::invalid_argument("expected integers in \"" + text + "\"");
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupParams parse_params(const std::string& text) {
  std::string spaced = text;
  for (auto& ch : spaced) {
    if (ch == ',') ch = ' ';
  }
  const auto v = parse_ints(spaced);
  if (v.size() != 4) throw std::invalid_argument("params must be r,p,q,n");
  return validate_params(v[0], v[1], v[2], v[3]);
}

Json params_to_json(const GroupParams& params) {
  return Json{{"r", params.r}, {"p", params.p}, {"q", params.q}, {"n", params.n}};
}

GroupParams params_from_json(const Json& j) {
  return validate_params(j.at("r").get<int>(), j.at("p").get<int>(), j.at("q").get<int>(),
                         j.at("n").get<int>());
}

std::string params_label(const GroupParams& params) {
  std::ostringstream os;
  os << "G(" << params.r << "," << params.p << "," << params.q << "," << params.n << ")";
  return os.str();
}

Element parse_element(const std::string& text, const GroupParams& params) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("element needs \"sigma; colors\"");
  const auto images = parse_ints(text.substr(0, semi));
  const auto colors = parse_ints(text.substr(semi + 1));
  if (static_cast<int>(images.size()) != params.n || static_cast<int>(colors.size()) != params.n) {
    throw std::invalid_argument("element length differs from n");
  }
  Permutation sigma;
  for (int v : images) sigma.push_back(v - 1);
  return canonicalize(sigma, ColorVector(colors.begin(), colors.end()), params);
}

std::string format_element(const Element& g) {
  std::ostringstream os;
  for (int i = 0; i < g.rank(); ++i) os << (i ? " " : "") << g.sigma()[i] + 1;
  os << ";";
  for (int c : g.colors()) os << " " << c;
  return os.str();
}

Json element_to_json(const Element& g) {
  Json sigma = Json::array();
  for (int v : g.sigma()) sigma.push_back(v + 1);
  Json colors = Json::array();
  for (int c : g.colors()) colors.push_back(c);
  return Json{{"sigma", sigma}, {"colors", colors}};
}

Element element_from_json(const Json& j, const GroupParams& params) {
  Permutation sigma;
  for (const auto& v : j.at("sigma")) sigma.push_back(v.get<int>() - 1);
  ColorVector colors;
  for (const auto& v : j.at("colors")) colors.push_back(v.get<int>());
  if (static_cast<int>(sigma.size()) != params.n || static_cast<int>(colors.size()) != params.n) {
    throw std::invalid_argument("element length differs from n");
  }
  return canonicalize(sigma, colors, params);
}

Json profile_to_json(const StatProfile& prof) {
  auto arr = [](const RankVector<int>& v) { return Json(std::vector<int>(v.begin(), v.end())); };
  return Json{{"hdes", arr(prof.hdes)},
              {"h", arr(prof.h)},
              {"k", arr(prof.k)},
              {"lambda", arr(prof.lambda)},
              {"fmaj", prof.fmaj}};
}

Json partition_to_json(const Partition& lambda) {
  return Json(std::vector<int>(lambda.begin(), lambda.end()));
}

Partition partition_from_json(const Json& j) {
  Partition out;
  for (const auto& v : j) {
    if (out.size() == out.capacity()) throw std::invalid_argument("partition too long");
    out.push_back(v.get<int>());
  }
  if (!is_partition(out)) throw std::invalid_argument("not a partition: " + j.dump());
  return trimmed(out);
}

Json shape_to_json(const MultiShape& shape) {
  Json out = Json::array();
  for (const auto& lambda : shape) out.push_back(partition_to_json(lambda));
  return out;
}

MultiShape shape_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("shape must be a non-empty list");
  MultiShape out;
  for (const auto& lambda : j) out.push_back(partition_from_json(lambda));
  return out;
}

Json shape_class_to_json(const ShapeClass& mu) {
  return Json{{"representative", shape_to_json(mu.representative)},
              {"stabilizer_order", mu.stabilizer_order},
              {"orbit_size", mu.orbit_size()}};
}

Json tableau_to_json(const MultiTableau& t) {
  Json comps = Json::array();
  for (const auto& diagram : t) comps.push_back(Json(diagram));
  return Json{{"components", comps}};
}

MultiTableau tableau_from_json(const Json& j) {
  MultiTableau out;
  for (const auto& diagram : j.at("components")) {
    out.push_back(diagram.get<Tableau>());
  }
  return out;
}

Json series_to_json(const PartitionSeries& series) {
  Json out = Json::array();
  for (const auto& [exps, coef] : series.terms()) {
    Json e = Json::array();
    for (const auto& lambda : exps) e.push_back(partition_to_json(lambda));
    out.push_back(Json{{"exps", e}, {"coef", coef}});
  }
  return out;
}

Json poly_to_json(const UniPoly& poly) { return Json(dense_coefficients(poly)); }

Json cyclotomic_to_json(const Cyclotomic& x) { return Json(x.coefficients()); }

CycleType parse_cycle_type(const std::string& text, int r) {
  CycleType out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("cycle must be length:color");
    const auto len = parse_ints(item.substr(0, colon));
    const auto color = parse_ints(item.substr(colon + 1));
    if (len.size() != 1 || color.size() != 1 || len[0] < 1) {
      throw std::invalid_argument("malformed cycle \"" + item + "\"");
    }
    out.emplace_back(len[0], residue(color[0], r));
  }
  if (out.empty()) throw std::invalid_argument("empty cycle type");
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace prg
