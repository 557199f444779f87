#include "nilheis/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nilheis {

std::optional<std::vector<long long>> AbelianPresentation::coords(int parent_element) const {
  auto it = std::lower_bound(members.begin(), members.end(), parent_element);
  if (it == members.end() || *it != parent_element) return std::nullopt;
  return member_coords[it - members.begin()];
}

int AbelianPresentation::element_at(const std::vector<long long>& c) const {
  int x = parent->identity();
  for (size_t i = 0; i < factors.size(); i++)
    x = parent->mul(x, parent->power(generators[i], ((c[i] % factors[i]) + factors[i]) % factors[i]));
  return x;
}

namespace {

// Basis of an abelian p-group given as a standalone Cayley group: pick an
// element of maximal order, split it off via the quotient, lift and adjust
// the quotient basis so the lifted orders match.
std::vector<std::pair<int, int>> abelian_p_basis(const GroupPtr& a) {
  if (a->order() == 1) return {};
  int g = 0, best = 1;
  for (int x = 0; x < a->order(); x++) {
    int o = a->element_order(x);
    if (o > best) { best = o; g = x; }
  }
  auto cyc = generate_subgroup(a, {g});
  auto q = quotient(a, cyc);
  auto qbasis = abelian_p_basis(q.group);

  std::vector<std::pair<int, int>> basis{{g, best}};
  for (auto [qe, qo] : qbasis) {
    int h = q.coset_reps[qe];
    int excess = a->power(h, qo);  // lands in <g>
    long long t = discrete_log_cyclic(a, g, excess);
    // ord(g) is maximal, so qo | t and h * g^{-t/qo} has order exactly qo
    require(t % qo == 0, "Internal", "abelian basis lift adjustment failed");
    int adjusted = a->mul(h, a->power(g, -(t / qo)));
    require(a->element_order(adjusted) == qo, "Internal", "lifted generator has wrong order");
    basis.push_back({adjusted, qo});
  }
  return basis;
}

}  // namespace

AbelianPresentation abelian_invariants(const SubgroupHandle& a) {
  const auto& g = *a.parent;
  for (int x : a.members)
    for (int y : a.members)
      require(g.mul(x, y) == g.mul(y, x), "NotAbelian",
              "witness pair (" + std::to_string(x) + "," + std::to_string(y) + ")");

  AbelianPresentation pres;
  pres.parent = a.parent;
  pres.members = a.members;

  if (a.size() > 1) {
    auto sub = subgroup_as_group(a);
    // primary decomposition: per-prime bases, orders descending
    std::map<long long, std::vector<std::pair<int, int>>> primary;  // p -> (parent elt, order)
    for (long long p : prime_factors(a.size())) {
      std::vector<int> pmembers;
      for (int i = 0; i < sub.group->order(); i++) {
        int o = sub.group->element_order(i);
        while (o % p == 0) o /= p;
        if (o == 1) pmembers.push_back(i);
      }
      auto handle = make_subgroup_unchecked(sub.group, pmembers);
      auto comp = subgroup_as_group(handle);
      auto basis = abelian_p_basis(comp.group);
      std::sort(basis.begin(), basis.end(),
                [](auto& l, auto& r) { return l.second > r.second; });
      for (auto& [e, o] : basis) e = sub.to_parent[comp.to_parent[e]];
      primary[p] = basis;
    }
    size_t k = 0;
    for (auto& [p, basis] : primary) k = std::max(k, basis.size());
    // slot 0 takes the largest order from every prime; CRT merges them into
    // one cyclic factor since the orders are coprime
    for (size_t slot = 0; slot < k; slot++) {
      long long f = 1;
      int gen = a.parent->identity();
      for (auto& [p, basis] : primary)
        if (slot < basis.size()) {
          f *= basis[slot].second;
          gen = a.parent->mul(gen, basis[slot].first);
        }
      pres.factors.push_back(f);
      pres.generators.push_back(gen);
    }
    std::reverse(pres.factors.begin(), pres.factors.end());
    std::reverse(pres.generators.begin(), pres.generators.end());
  }

  // coordinate dictionary; doubles as the reconstruction-bijection check
  pres.member_coords.assign(pres.members.size(), {});
  std::vector<char> seen(pres.members.size(), 0);
  std::vector<long long> c(pres.factors.size(), 0);
  for (long long count = 0;; count++) {
    int x = pres.element_at(c);
    auto it = std::lower_bound(pres.members.begin(), pres.members.end(), x);
    require(it != pres.members.end() && *it == x, "Internal", "presentation escapes subgroup");
    size_t idx = it - pres.members.begin();
    require(!seen[idx], "Internal", "presentation is not a bijection");
    seen[idx] = 1;
    pres.member_coords[idx] = c;
    size_t i = 0;
    for (; i < c.size(); i++) {
      if (++c[i] < pres.factors[i]) break;
      c[i] = 0;
    }
    if (i == c.size()) break;
  }
  require(std::all_of(seen.begin(), seen.end(), [](char s) { return s == 1; }), "Internal",
          "presentation does not cover the subgroup");
  for (size_t i = 0; i < pres.factors.size(); i++) {
    require(pres.factors[i] >= 2, "Internal", "trivial invariant factor");
    if (i + 1 < pres.factors.size())
      require(pres.factors[i + 1] % pres.factors[i] == 0, "Internal", "divisibility chain broken");
    require(a.parent->element_order(pres.generators[i]) == pres.factors[i], "Internal",
            "generator order mismatch");
  }
  return pres;
}

AbelianPresentation abelian_invariants_group(const GroupPtr& g) {
  return abelian_invariants(full_subgroup(g));
}

namespace {

std::vector<int> tis_rec(const SubgroupHandle& a,
                         const std::vector<SubgroupHandle>& x,
                         const std::vector<int>& orig_idx) {
  int da = abelian_invariants(a).d();
  if (da == 0) return {};

  int best = -1, best_d = da;
  for (size_t i = 0; i < x.size(); i++) {
    int d = abelian_invariants(x[i]).d();
    if (d < best_d) { best_d = d; best = (int)i; }
  }
  require(best >= 0, "Internal",
          "no subgroup with smaller d found; intersection cannot be trivial");

  const auto& b = x[best];
  std::vector<SubgroupHandle> xb;
  xb.reserve(x.size());
  for (auto& k : x) xb.push_back(intersect(b, k));
  auto inner = tis_rec(b, xb, orig_idx);
  std::vector<int> y{orig_idx[best]};
  for (int i : inner)
    if (i != orig_idx[best]) y.push_back(i);
  return y;
}

}  // namespace

std::vector<int> trivially_intersecting_subset(const SubgroupHandle& a,
                                               const std::vector<SubgroupHandle>& x) {
  auto primes = prime_factors(a.size());
  require(primes.size() <= 1, "BadInput", "not a p-group");
  SubgroupHandle inter = a;
  for (auto& k : x) {
    for (int m : k.members)
      require(a.contains(m), "BadInput", "list member is not a subgroup of A");
    inter = intersect(inter, k);
  }
  require(inter.size() == 1, "BadInput", "intersection of X is not trivial");

  std::vector<int> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto y = tis_rec(a, x, idx);
  std::sort(y.begin(), y.end());
  return y;
}

long long discrete_log_cyclic(const GroupPtr& g, int c, int x) {
  int cur = g->identity();
  long long e = 0;
  do {
    if (cur == x) return e;
    cur = g->mul(cur, c);
    e++;
  } while (cur != g->identity());
  fail("NotMember", std::to_string(x) + " is not a power of " + std::to_string(c));
}

int d_nilpotent(const GroupPtr& g) {
  require(is_nilpotent(*g), "NotNilpotent", "d(G) via abelianization needs a nilpotent group");
  auto q = quotient(g, derived_subgroup(g));
  return abelian_invariants_group(q.group).d();
}

}  // namespace nilheis
