#include "nilheis/json_io.hpp"

#include <fstream>
#include <map>
#include <tuple>

namespace nilheis {

using nlohmann::json;

namespace {

std::vector<long long> ll_list(const json& j, const char* what) {
  require(j.is_array(), "ParseError", std::string(what) + " must be an array");
  std::vector<long long> v;
  for (auto& x : j) {
    require(x.is_number_integer(), "ParseError", std::string(what) + " must hold integers");
    v.push_back(x.get<long long>());
  }
  return v;
}

GroupPtr cayley_from_json(const json& j) {
  require(j.contains("n") && j["n"].is_number_integer(), "ParseError", "missing integer n");
  int n = j["n"].get<int>();
  require(n >= 1, "ParseError", "n must be positive");
  require(j.contains("table") && j["table"].is_array() && (int)j["table"].size() == n,
          "ParseError", "table must be an n-row array");
  std::vector<std::vector<int>> table(n);
  for (int i = 0; i < n; i++) {
    auto& row = j["table"][i];
    require(row.is_array() && (int)row.size() == n, "ParseError", "table rows must have n entries");
    for (auto& x : row) {
      require(x.is_number_integer(), "ParseError", "table entries must be integers");
      int v = x.get<int>();
      require(v >= 0 && v < n, "ParseError", "table entry out of range");
      table[i].push_back(v);
    }
  }
  return CayleyGroup::validate(std::move(table), j.value("label", ""));
}

GroupPtr hsub_from_json(const json& j) {
  require(j.contains("ambient"), "ParseError", "hsub needs an ambient map");
  auto amb = make_heisenberg(bilinear_from_json(j["ambient"]));
  require(j.contains("generators") && j["generators"].is_array(), "ParseError",
          "hsub needs a generator list");
  std::vector<HeisenbergElement> gens;
  for (auto& g : j["generators"]) {
    require(g.is_array() && g.size() == 3, "ParseError", "generator must be [a, b, c]");
    gens.push_back(h_element(amb, ll_list(g[0], "generator a-part"),
                             ll_list(g[1], "generator b-part"), ll_list(g[2], "generator c-part")));
  }

  // breadth-first closure inside the coordinate group
  auto key = [](const HeisenbergElement& e) { return std::make_tuple(e.a, e.b, e.c); };
  std::map<std::tuple<std::vector<long long>, std::vector<long long>, std::vector<long long>>, int>
      index;
  std::vector<HeisenbergElement> elems{amb.identity()};
  index[key(elems[0])] = 0;
  for (size_t head = 0; head < elems.size(); head++)
    for (auto& g : gens) {
      auto x = h_multiply(amb, elems[head], g);
      if (index.emplace(key(x), (int)elems.size()).second) {
        elems.push_back(std::move(x));
        require((long long)elems.size() <= table_bound(), "TooLarge",
                "generated subgroup exceeds the table bound");
      }
    }
  int n = (int)elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) table[a][b] = index.at(key(h_multiply(amb, elems[a], elems[b])));
  return CayleyGroup::validate(std::move(table), j.value("label", "hsub"), 64);
}

}  // namespace

BilinearMap bilinear_from_json(const json& j) {
  require(j.is_object(), "ParseError", "map spec must be an object");
  for (const char* f : {"A", "B", "C", "mu"})
    require(j.contains(f), "ParseError", std::string("map spec missing ") + f);
  BilinearMap m;
  m.a_factors = ll_list(j["A"], "A");
  m.b_factors = ll_list(j["B"], "B");
  m.c_factors = ll_list(j["C"], "C");
  require(j["mu"].is_array() && j["mu"].size() == m.a_factors.size(), "ParseError",
          "mu must have one row per A-generator");
  for (auto& row : j["mu"]) {
    require(row.is_array() && row.size() == m.b_factors.size(), "ParseError",
            "mu rows must have one entry per B-generator");
    std::vector<std::vector<long long>> r;
    for (auto& v : row) r.push_back(ll_list(v, "mu value"));
    m.mu.push_back(std::move(r));
  }
  return m;
}

ParsedGroup group_from_json(const json& j) {
  require(j.is_object() && j.contains("format") && j["format"].is_string(), "ParseError",
          "group file needs a format field");
  std::string fmt = j["format"].get<std::string>();
  ParsedGroup out;
  out.label = j.value("label", "");
  if (fmt == "cayley") {
    out.group = cayley_from_json(j);
  } else if (fmt == "heisenberg") {
    out.group = to_cayley(make_heisenberg(bilinear_from_json(j))).group;
  } else if (fmt == "hsub") {
    out.group = hsub_from_json(j);
  } else {
    fail("ParseError", "unknown format " + fmt);
  }
  if (out.label.empty()) out.label = out.group->label();
  return out;
}

ParsedGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "ParseError", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("ParseError", std::string("invalid JSON: ") + e.what());
  }
  return group_from_json(j);
}

json certificate_to_json(const EmbeddingCertificate& cert) {
  json j;
  j["source"] = {{"label", cert.source->label()}, {"order", cert.source->order()}};
  j["mu_hat"] = {{"A", cert.mu_hat.a_factors},
                 {"B", cert.mu_hat.b_factors},
                 {"C", cert.mu_hat.c_factors},
                 {"mu", cert.mu_hat.mu}};
  json elems = json::array();
  for (int g = 0; g < cert.source->order(); g++)
    elems.push_back(json::array(
        {g, json::array({cert.delta[g].a, cert.delta[g].b, cert.delta[g].c})}));
  j["delta"] = {{"elements", elems}};
  json zeta = json::array();
  for (size_t i = 0; i < cert.centre_members.size(); i++)
    zeta.push_back(json::array({cert.centre_members[i], cert.zeta[i]}));
  j["zeta"] = zeta;

  json checks;
  checks["hom"] = cert.checks.hom;
  checks["mono"] = cert.checks.mono;
  checks["normal_image"] =
      cert.checks.normal_image ? json(*cert.checks.normal_image) : json(nullptr);
  json chain = json::array();
  for (auto& [label, a, b] : cert.checks.div_chain) chain.push_back(json::array({label, a, b}));
  checks["div_chain"] = chain;
  json eqs = json::array();
  for (auto& [label, a, b] : cert.checks.equalities) eqs.push_back(json::array({label, a, b}));
  checks["equalities"] = eqs;
  checks["nondegenerate"] = cert.checks.nondegenerate;
  json dc;
  for (auto& [k, v] : cert.checks.d_counts) dc[k] = v;
  checks["d_counts"] = dc;
  checks["mode"] = cert.checks.mode;
  j["checks"] = checks;
  return j;
}

}  // namespace nilheis
