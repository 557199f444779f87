#include "nilheis/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nilheis {

namespace {

bool is_cyclic(const SubgroupHandle& h) { return abelian_invariants(h).d() <= 1; }

SubgroupHandle preimage(const GroupPtr& g, const QuotientResult& q, const SubgroupHandle& sub) {
  std::vector<int> members;
  for (int x = 0; x < g->order(); x++)
    if (sub.contains(q.projection(x))) members.push_back(x);
  return make_subgroup_unchecked(g, std::move(members));
}

// invariant-factor chain of a multiset of cyclic orders (largest orders of
// each prime merged first)
std::vector<long long> invariants_of_orders(const std::vector<long long>& orders) {
  std::map<long long, std::vector<long long>> pparts;
  for (long long n : orders)
    for (long long p : prime_factors(n)) {
      long long q = 1, m = n;
      while (m % p == 0) { q *= p; m /= p; }
      pparts[p].push_back(q);
    }
  size_t k = 0;
  for (auto& [p, qs] : pparts) {
    std::sort(qs.rbegin(), qs.rend());
    k = std::max(k, qs.size());
  }
  std::vector<long long> inv;
  for (size_t slot = 0; slot < k; slot++) {
    long long f = 1;
    for (auto& [p, qs] : pparts)
      if (slot < qs.size()) f *= qs[slot];
    inv.push_back(f);
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

}  // namespace

void check_c_decomposition(const CDecomposition& dec) {
  require(!dec.kernels.empty() || dec.group->order() == 1, "Invalid", "no kernels");
  SubgroupHandle inter = full_subgroup(dec.group);
  for (auto& n : dec.kernels) {
    require(n.parent == dec.group, "Invalid", "kernel belongs to another group");
    require(!normality_witness(n), "Invalid", "kernel is not normal");
    auto q = quotient(dec.group, n);
    require(is_cyclic(centre(q.group)), "Invalid", "quotient centre is not cyclic");
    inter = intersect(inter, n);
  }
  require(inter.size() == 1, "Invalid", "kernels do not intersect trivially");
}

CDecomposition c_decomposition_exists(const GroupPtr& g) {
  auto z = centre(g);
  auto zp = abelian_invariants(z);
  if (zp.d() <= 1) return {g, {trivial_subgroup(g)}};

  CDecomposition dec{g, {}};
  for (int i = 0; i < zp.d(); i++) {
    auto ci = generate_subgroup(g, {zp.generators[i]});
    auto q = quotient(g, ci);
    auto inner = c_decomposition_exists(q.group);
    for (auto& n : inner.kernels) dec.kernels.push_back(preimage(g, q, n));
  }
  // deduplicate identical kernels
  std::sort(dec.kernels.begin(), dec.kernels.end(),
            [](const SubgroupHandle& a, const SubgroupHandle& b) { return a.members < b.members; });
  dec.kernels.erase(std::unique(dec.kernels.begin(), dec.kernels.end()), dec.kernels.end());
  check_c_decomposition(dec);
  return dec;
}

CDecomposition c_decomposition_p_minimal(const GroupPtr& p) {
  require(prime_factors(p->order()).size() <= 1, "NotPGroup",
          "order " + std::to_string(p->order()) + " is not a prime power");
  auto base = c_decomposition_exists(p);
  auto z = centre(p);
  std::vector<SubgroupHandle> meets;
  for (auto& n : base.kernels) meets.push_back(intersect(n, z));
  auto picked = trivially_intersecting_subset(z, meets);
  CDecomposition dec{p, {}};
  for (int i : picked) dec.kernels.push_back(base.kernels[i]);
  if (dec.kernels.empty()) dec.kernels.push_back(trivial_subgroup(p));
  check_c_decomposition(dec);
  int dz = abelian_invariants(z).d();
  require((int)dec.kernels.size() == std::max(dz, 1), "Internal",
          "kernel count does not match d(Z(P))");
  return dec;
}

CDecomposition c_decomposition_min(const GroupPtr& g) {
  auto sylows = sylow_split(g);  // throws NotNilpotent
  // minimal decomposition inside each Sylow subgroup, pulled back to G
  std::vector<std::vector<SubgroupHandle>> per_prime;
  size_t k = 0;
  for (auto& syl : sylows) {
    auto sub = subgroup_as_group(syl);
    auto dec = c_decomposition_p_minimal(sub.group);
    std::vector<SubgroupHandle> lifted;
    for (auto& n : dec.kernels) {
      std::vector<int> members;
      for (int m : n.members) members.push_back(sub.to_parent[m]);
      lifted.push_back(make_subgroup_unchecked(g, std::move(members)));
    }
    std::sort(lifted.begin(), lifted.end(),
              [](const SubgroupHandle& a, const SubgroupHandle& b) {
                return a.members < b.members;
              });
    k = std::max(k, lifted.size());
    per_prime.push_back(std::move(lifted));
  }

  CDecomposition dec{g, {}};
  for (size_t slot = 0; slot < k; slot++) {
    // product over primes: the slot's kernel, or the whole Sylow when this
    // prime's decomposition is shorter (its quotient contribution is trivial,
    // keeping the combined quotient centre cyclic)
    SubgroupHandle n = trivial_subgroup(g);
    for (size_t q = 0; q < sylows.size(); q++)
      n = product_subgroup(n, slot < per_prime[q].size() ? per_prime[q][slot] : sylows[q]);
    dec.kernels.push_back(n);
  }
  if (dec.kernels.empty()) dec.kernels.push_back(trivial_subgroup(g));
  check_c_decomposition(dec);
  int dz = abelian_invariants(centre(g)).d();
  require((int)dec.kernels.size() == std::max(dz, 1), "Internal",
          "kernel count does not match d(Z(G))");
  return dec;
}

SubdirectEmbedding subdirect_embedding(const CDecomposition& dec) {
  check_c_decomposition(dec);
  SubdirectEmbedding emb;
  for (auto& n : dec.kernels) emb.quotients.push_back(quotient(dec.group, n));
  GroupPtr prod = emb.quotients[0].group;
  for (size_t i = 1; i < emb.quotients.size(); i++)
    prod = direct_product(prod, emb.quotients[i].group);
  emb.product = prod;

  GroupMap f;
  f.domain = dec.group;
  f.codomain = prod;
  for (int x = 0; x < dec.group->order(); x++) {
    long long idx = 0;
    for (auto& q : emb.quotients) idx = idx * q.group->order() + q.projection(x);
    f.images.push_back((int)idx);
  }
  emb.map = verify_map(std::move(f), MapKind::monomorphism);
  return emb;
}

SubgroupHandle derived_of_subgroup(const SubgroupHandle& h) {
  const auto& g = *h.parent;
  std::vector<int> comms;
  for (int a : h.members)
    for (int b : h.members) comms.push_back(g.commutator(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generate_subgroup(h.parent, comms);
}

CentralProductDecomposition central_product_decomposition(const GroupPtr& g) {
  auto cls = nilpotency_class_le2(g);
  require(cls.has_value(), "ClassTooHigh", "nilpotency class exceeds 2");
  require(*cls == 2, "AbelianInput", "derived subgroup is trivial");
  auto der = derived_subgroup(g);
  auto derp = abelian_invariants(der);
  require(derp.d() == 1, "DerivedNotCyclic", "derived subgroup is not cyclic");

  auto am = module_from_extension(g, der, derp.generators[0]);
  auto db = darboux_generators(am);

  auto min_lift = [&](const std::vector<long long>& coords) {
    return am.coset_reps[am.m_pres.element_at(coords)];
  };

  CentralProductDecomposition cpd;
  cpd.group = g;
  cpd.t = db.t;
  for (int i = 0; i < db.t; i++)
    cpd.factors.push_back(generate_subgroup(
        g, {min_lift(db.generators[2 * i]), min_lift(db.generators[2 * i + 1])}));
  std::vector<int> agens;
  for (int r : db.residual) agens.push_back(min_lift(db.generators[r]));
  cpd.abelian_part = generate_subgroup(g, agens);
  for (auto& e : cpd.factors) cpd.derived_chain.push_back(derived_of_subgroup(e));

  // --- verify every claim of the decomposition ---
  auto z = centre(g);
  for (int m : cpd.abelian_part.members)
    require(z.contains(m), "Internal", "abelian part is not central");
  auto commute = [&](const SubgroupHandle& x, const SubgroupHandle& y) {
    for (int a : x.members)
      for (int b : y.members)
        if (g->mul(a, b) != g->mul(b, a)) return false;
    return true;
  };
  for (size_t i = 0; i < cpd.factors.size(); i++)
    for (size_t j = i + 1; j < cpd.factors.size(); j++)
      require(commute(cpd.factors[i], cpd.factors[j]), "Internal",
              "central factors fail to commute");
  for (auto& e : cpd.factors)
    require(commute(cpd.abelian_part, e), "Internal", "abelian part fails to commute");

  SubgroupHandle prod = cpd.abelian_part;
  for (auto& e : cpd.factors) prod = product_subgroup(prod, e);
  require(prod.size() == g->order(), "Internal", "central product does not cover the group");

  for (auto& e : cpd.factors) {
    auto sub = subgroup_as_group(e);
    require(nilpotency_class_le2(sub.group) == 2, "Internal", "factor is not of class 2");
    require(d_nilpotent(sub.group) == 2, "Internal", "factor is not 2-generated");
  }
  require(d_nilpotent(g) == 2 * cpd.t + abelian_invariants(cpd.abelian_part).d(), "Internal",
          "d(G) != 2t + d(A)");
  auto gz = quotient(g, z);
  require(d_nilpotent(gz.group) == 2 * cpd.t, "Internal", "t != d(G/Z)/2");
  // derived chain: G' = E_1' >= ... >= E_t' != 1, non-strict
  require(cpd.derived_chain[0].members == der.members, "Internal", "E_1' != G'");
  for (int i = 0; i + 1 < cpd.t; i++)
    for (int m : cpd.derived_chain[i + 1].members)
      require(cpd.derived_chain[i].contains(m), "Internal", "derived chain not descending");
  require(cpd.derived_chain.back().size() > 1, "Internal", "E_t' is trivial");
  // G/Z(G) isomorphic to prod (E_i')^2, by abelian invariants
  std::vector<long long> sq;
  for (auto& e : cpd.derived_chain) {
    sq.push_back(e.size());
    sq.push_back(e.size());
  }
  require(abelian_invariants_group(gz.group).factors == invariants_of_orders(sq), "Internal",
          "G/Z does not match the derived-chain squares");
  return cpd;
}

}  // namespace nilheis
