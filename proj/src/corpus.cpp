#include "nilheis/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <functional>

#include "nilheis/abelian.hpp"
#include "nilheis/json_io.hpp"

namespace nilheis {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> table_from_rule(int n, const std::function<int(int, int)>& f) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) t[a][b] = f(a, b);
  return t;
}

GroupPtr cyclic(int n) {
  return CayleyGroup::validate(table_from_rule(n, [n](int a, int b) { return (a + b) % n; }));
}

GroupPtr quaternion8() {
  // element 2u + s: unit u in {1, i, j, k}, sign s
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return CayleyGroup::validate(table_from_rule(8, [](int x, int y) {
    int u = x >> 1, s = x & 1, v = y >> 1, t = y & 1;
    return 2 * unit[u][v] + ((s + t + sgn[u][v]) & 1);
  }));
}

GroupPtr dihedral4() {  // order 8: element a + 4b with a mod 4 rotation, b flip
  return CayleyGroup::validate(table_from_rule(8, [](int x, int y) {
    int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
    int rot = ((b ? a - c : a + c) % 4 + 4) % 4;
    return rot + 4 * ((b + d) % 2);
  }));
}

GroupPtr extraspecial_exp_p2(int p) {  // order p^3, exponent p^2
  int n = p * p * p;
  long long pp = p * p;
  return CayleyGroup::validate(table_from_rule(n, [p, pp](int x, int y) {
    long long i = x / p, j = x % p, i2 = y / p, j2 = y % p;
    long long mult = 1;
    for (int e = 0; e < j; e++) mult = mult * (1 + p) % pp;
    long long ii = (i + i2 * mult) % pp;
    return (int)(ii * p + (j + j2) % p);
  }));
}

json cayley_file(const GroupPtr& g, const std::string& label) {
  return {{"format", "cayley"}, {"n", g->order()}, {"table", g->table_rows()}, {"label", label}};
}

json heis_file(std::vector<long long> a, std::vector<long long> b, std::vector<long long> c,
               std::vector<std::vector<std::vector<long long>>> mu, const std::string& label) {
  return {{"format", "heisenberg"}, {"A", a}, {"B", b}, {"C", c}, {"mu", mu}, {"label", label}};
}

json expected_record(const GroupPtr& g) {
  json e;
  e["order"] = g->order();
  e["exponent"] = exponent(*g);
  auto cls = nilpotency_class_le2(g);
  e["class"] = cls ? json(*cls) : json(">=3");
  e["centre"] = abelian_invariants(centre(g)).factors;
  e["derived"] = abelian_invariants(derived_subgroup(g)).factors;
  if (is_nilpotent(*g)) e["d"] = d_nilpotent(g);
  return e;
}

std::vector<CorpusEntry> build() {
  std::vector<std::pair<std::string, json>> files;
  auto add = [&](const std::string& name, json file) { files.emplace_back(name, std::move(file)); };

  add("trivial", cayley_file(cyclic(1), "trivial"));
  add("v4", cayley_file(direct_product(cyclic(2), cyclic(2)), "Z/2 x Z/2"));
  add("z8", cayley_file(cyclic(8), "Z/8"));
  add("z12", cayley_file(cyclic(12), "Z/12"));
  add("z2xz4", cayley_file(direct_product(cyclic(2), cyclic(4)), "Z/2 x Z/4"));
  add("z2z2z2", cayley_file(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
                            "Z/2 x Z/2 x Z/2"));
  add("z6xz2", cayley_file(direct_product(cyclic(6), cyclic(2)), "Z/6 x Z/2"));

  // both extraspecial types at p^3 for p in {2, 3, 5}
  add("d4", cayley_file(dihedral4(), "D4"));
  add("q8", cayley_file(quaternion8(), "Q8"));
  add("es27_exp3", heis_file({3}, {3}, {3}, {{{1}}}, "extraspecial 27, exponent 3"));
  add("es27_exp9", cayley_file(extraspecial_exp_p2(3), "extraspecial 27, exponent 9"));
  add("es125_exp5", heis_file({5}, {5}, {5}, {{{1}}}, "extraspecial 125, exponent 5"));
  add("es125_exp25", cayley_file(extraspecial_exp_p2(5), "extraspecial 125, exponent 25"));

  // extraspecial central products at p^5
  add("es32_central",
      heis_file({2, 2}, {2, 2}, {2}, {{{1}, {0}}, {{0}, {1}}}, "extraspecial 32"));
  add("es243_central",
      heis_file({3, 3}, {3, 3}, {3}, {{{1}, {0}}, {{0}, {1}}}, "extraspecial 243"));

  // Heisenberg samples over Z/4 and Z/6
  add("heis_z4", heis_file({4}, {4}, {4}, {{{1}}}, "H(Z/4)"));
  add("heis_z6", heis_file({6}, {6}, {6}, {{{1}}}, "H(Z/6)"));

  // direct products with abelian groups
  add("q8xz2", cayley_file(direct_product(quaternion8(), cyclic(2)), "Q8 x Z/2"));
  add("q8xz3", cayley_file(direct_product(quaternion8(), cyclic(3)), "Q8 x Z/3"));
  add("d4xz2", cayley_file(direct_product(dihedral4(), cyclic(2)), "D4 x Z/2"));
  add("d4xz4", cayley_file(direct_product(dihedral4(), cyclic(4)), "D4 x Z/4"));

  // subgroup-of-Heisenberg samples
  add("hsub_16", json{{"format", "hsub"},
                      {"ambient", heis_file({4}, {4}, {4}, {{{1}}}, "")},
                      {"generators", json::array({json::array({{2}, {0}, {0}}),
                                                  json::array({{0}, {1}, {0}})})},
                      {"label", "index-4 subgroup of H(Z/4)"}});
  add("hsub_z4", json{{"format", "hsub"},
                      {"ambient", heis_file({2}, {2}, {2}, {{{1}}}, "")},
                      {"generators", json::array({json::array({{1}, {1}, {0}})})},
                      {"label", "Z/4 inside H(Z/2)"}});

  std::vector<CorpusEntry> out;
  for (auto& [name, file] : files) {
    CorpusEntry e;
    e.name = name;
    e.group = group_from_json(file).group;
    file["name"] = name;
    file["expected"] = expected_record(e.group);
    e.file = std::move(file);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build();
  return c;
}

void write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : corpus()) {
    std::ofstream out(std::filesystem::path(dir) / (e.name + ".json"));
    require(out.good(), "IOError", "cannot write into " + dir);
    out << e.file.dump(2) << "\n";
  }
}

}  // namespace nilheis
