#include "nilheis/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nilheis/abelian.hpp"
#include "nilheis/heisenberg.hpp"
#include "nilheis/json_io.hpp"

namespace nilheis {

using nlohmann::json;

namespace {

long long exp_of(const std::vector<long long>& factors) {
  return factors.empty() ? 1 : factors.back();
}

bool zero_vec(const std::vector<long long>& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

VerifyResult bad(std::string check, std::string witness) {
  return {false, std::move(check), std::move(witness)};
}

}  // namespace

VerifyResult verify_certificate(const GroupPtr& g, const json& cert) {
  int n = g->order();

  // ---- reconstruct the claimed data -------------------------------------
  HeisenbergGroup h;
  std::vector<HeisenbergElement> delta(n);
  try {
    h = make_heisenberg(bilinear_from_json(cert.at("mu_hat")));
    auto& elems = cert.at("delta").at("elements");
    require(elems.is_array() && (int)elems.size() == n, "ParseError",
            "delta must list every group element");
    std::vector<char> seen(n, 0);
    for (auto& e : elems) {
      require(e.is_array() && e.size() == 2, "ParseError", "delta entry must be [g, [a,b,c]]");
      int idx = e[0].get<int>();
      require(idx >= 0 && idx < n && !seen[idx], "ParseError", "delta indices must cover G once");
      seen[idx] = 1;
      auto& abc = e[1];
      require(abc.is_array() && abc.size() == 3, "ParseError", "delta image must be [a, b, c]");
      HeisenbergElement x{abc[0].get<std::vector<long long>>(),
                          abc[1].get<std::vector<long long>>(),
                          abc[2].get<std::vector<long long>>()};
      require(h.contains(x), "ParseError", "delta image outside H(mu)");
      delta[idx] = std::move(x);
    }
  } catch (const std::exception& e) {
    return bad("format", e.what());
  }

  // ---- homomorphism and injectivity -------------------------------------
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++)
      if (!(delta[g->mul(x, y)] == h_multiply(h, delta[x], delta[y])))
        return bad("hom", "delta(" + std::to_string(x) + " * " + std::to_string(y) +
                              ") != delta(" + std::to_string(x) + ") * delta(" +
                              std::to_string(y) + ")");
  {
    std::set<std::tuple<std::vector<long long>, std::vector<long long>, std::vector<long long>>>
        imgs;
    for (int x = 0; x < n; x++)
      if (!imgs.insert({delta[x].a, delta[x].b, delta[x].c}).second)
        return bad("mono", "duplicate image at element " + std::to_string(x));
  }

  // ---- centre map -------------------------------------------------------
  auto z = centre(g);
  try {
    auto& zj = cert.at("zeta");
    if (!zj.is_array() || (int)zj.size() != z.size())
      return bad("zeta", "zeta must list every centre element");
    std::set<int> covered;
    for (auto& e : zj) {
      int zm = e.at(0).get<int>();
      auto coords = e.at(1).get<std::vector<long long>>();
      if (!z.contains(zm)) return bad("zeta", std::to_string(zm) + " is not central");
      covered.insert(zm);
      if (!(delta[zm].c == coords) || !zero_vec(delta[zm].a) || !zero_vec(delta[zm].b))
        return bad("zeta", "delta(" + std::to_string(zm) + ") != (0, 0, zeta)");
    }
    if ((int)covered.size() != z.size()) return bad("zeta", "zeta does not cover the centre");
  } catch (const std::exception& e) {
    return bad("zeta", e.what());
  }

  // ---- counts and divisibility chain ------------------------------------
  auto zp = abelian_invariants(z);
  if ((int)h.map.c_factors.size() != zp.d())
    return bad("d_counts", "d(C) = " + std::to_string(h.map.c_factors.size()) +
                               " != d(Z(G)) = " + std::to_string(zp.d()));
  long long exp_ab = std::lcm(exp_of(h.map.a_factors), exp_of(h.map.b_factors));
  long long exp_gz = exponent(*quotient(g, z).group);
  long long exp_der = exponent(*subgroup_as_group(derived_subgroup(g)).group);
  long long exp_c = exp_of(h.map.c_factors);
  auto check_div = [](long long a, long long b) { return a != 0 && b % a == 0; };
  if (!check_div(exp_gz, exp_ab))
    return bad("div_chain", "exp(G/Z) does not divide exp(AxB)");
  if (!check_div(exp_ab, exp_der))
    return bad("div_chain", "exp(AxB) does not divide exp(G')");
  if (!check_div(exp_der, zp.exp()))
    return bad("div_chain", "exp(G') does not divide exp(Z(G))");
  if (!check_div(zp.exp(), exp_c))
    return bad("div_chain", "exp(Z(G)) does not divide exp(C)");
  if (!check_div(exp_c, exponent(*g)))
    return bad("div_chain", "exp(C) does not divide exp(G)");

  if (!is_nondegenerate_mu(h.map)) return bad("nondegenerate", "mu has a nontrivial kernel");
  for (long long p : prime_factors(h.order))
    if (g->order() % p != 0)
      return bad("primes", "prime " + std::to_string(p) + " does not divide |G|");

  // ---- mode-dependent claims --------------------------------------------
  std::string mode = cert.value("/checks/mode"_json_pointer, std::string("full"));
  const json* normal_claim = cert.contains("checks") && cert["checks"].contains("normal_image")
                                 ? &cert["checks"]["normal_image"]
                                 : nullptr;
  if (mode == "full" && h.order > table_bound())
    return bad("mode", "full mode claimed but |H| exceeds the table bound");
  if (normal_claim && normal_claim->is_boolean() && normal_claim->get<bool>()) {
    if (h.order > table_bound())
      return bad("normal_image", "normality claimed but |H| exceeds the table bound");
    auto t = to_cayley(h);
    std::vector<int> img;
    for (int x = 0; x < n; x++) img.push_back(t.index_of(h, delta[x]));
    std::sort(img.begin(), img.end());
    auto handle = make_subgroup_unchecked(t.group, std::move(img));
    if (auto w = normality_witness(handle))
      return bad("normal_image", "conjugation by " + std::to_string(*w) + " escapes the image");
  }
  return {};
}

}  // namespace nilheis
