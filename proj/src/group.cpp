#include "nilheis/group.hpp"

#include <algorithm>
#include <numeric>

namespace nilheis {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

GroupPtr CayleyGroup::validate(std::vector<std::vector<int>> table, std::string label,
                               int assoc_scan_bound) {
  int n = (int)table.size();
  require(n >= 1, "NotAGroup", "empty table");
  for (int i = 0; i < n; i++) {
    require((int)table[i].size() == n, "NotAGroup", "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; j++)
      require(table[i][j] >= 0 && table[i][j] < n, "NotAGroup",
              "entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  // identity (not necessarily index 0)
  int e = -1;
  for (int i = 0; i < n && e < 0; i++) {
    bool ok = true;
    for (int j = 0; j < n && ok; j++) ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  require(e >= 0, "NotAGroup", "missing identity");

  // Latin square
  for (int i = 0; i < n; i++) {
    std::vector<char> seen_r(n, 0), seen_c(n, 0);
    for (int j = 0; j < n; j++) {
      require(!seen_r[table[i][j]], "NotAGroup", "row " + std::to_string(i) + " repeats " +
                                                    std::to_string(table[i][j]));
      require(!seen_c[table[j][i]], "NotAGroup", "column " + std::to_string(i) + " repeats " +
                                                     std::to_string(table[j][i]));
      seen_r[table[i][j]] = 1;
      seen_c[table[j][i]] = 1;
    }
  }

  auto mul = [&](int a, int b) { return table[a][b]; };

  if (n <= assoc_scan_bound) {
    for (int a = 0; a < n; a++)
      for (int b = 0; b < n; b++)
        for (int c = 0; c < n; c++)
          require(mul(mul(a, b), c) == mul(a, mul(b, c)), "NotAGroup",
                  "non-associative triple " + triple(a, b, c));
  } else {
    // Light's test: associativity with the middle element drawn from a
    // generating set extends to all triples.
    std::vector<char> closed(n, 0);
    closed[e] = 1;
    std::vector<int> gens, frontier{e};
    for (;;) {
      int g = -1;
      for (int i = 0; i < n; i++)
        if (!closed[i]) { g = i; break; }
      if (g < 0) break;
      gens.push_back(g);
      std::vector<int> queue{g};
      closed[g] = 1;
      while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; i++)
          if (closed[i]) {
            for (int y : {mul(x, i), mul(i, x)})
              if (!closed[y]) { closed[y] = 1; queue.push_back(y); }
          }
      }
    }
    for (int s : gens)
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          require(mul(mul(a, s), b) == mul(a, mul(s, b)), "NotAGroup",
                  "non-associative triple " + triple(a, s, b));
  }

  std::vector<int> inv(n, -1);
  for (int g = 0; g < n; g++) {
    for (int h = 0; h < n; h++)
      if (mul(g, h) == e) { inv[g] = h; break; }
    require(inv[g] >= 0 && mul(inv[g], g) == e, "NotAGroup",
            "no two-sided inverse for " + std::to_string(g));
  }

  auto g = std::shared_ptr<CayleyGroup>(new CayleyGroup());
  g->n_ = n;
  g->identity_ = e;
  g->label_ = std::move(label);
  g->inverses_ = std::move(inv);
  g->table_.resize(size_t(n) * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) g->table_[size_t(i) * n + j] = table[i][j];
  return g;
}

int CayleyGroup::power(int g, long long e) const {
  if (e < 0) return power(inv(g), -e);
  int acc = identity_, base = g;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int CayleyGroup::element_order(int g) const {
  int x = g, k = 1;
  while (x != identity_) {
    x = mul(x, g);
    k++;
  }
  return k;
}

std::vector<std::vector<int>> CayleyGroup::table_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; i++)
    for (int j = 0; j < n_; j++) rows[i][j] = mul(i, j);
  return rows;
}

SubgroupHandle make_subgroup_unchecked(GroupPtr g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubgroupHandle h;
  h.mask.assign(g->order(), 0);
  for (int m : members) h.mask[m] = 1;
  h.members = std::move(members);
  h.parent = std::move(g);
  return h;
}

SubgroupHandle trivial_subgroup(const GroupPtr& g) {
  return make_subgroup_unchecked(g, {g->identity()});
}

SubgroupHandle full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup_unchecked(g, std::move(all));
}

SubgroupHandle generate_subgroup(const GroupPtr& g, const std::vector<int>& gens) {
  std::vector<char> mask(g->order(), 0);
  std::vector<int> queue{g->identity()};
  mask[g->identity()] = 1;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int s : gens) {
      int y = g->mul(x, s);
      if (!mask[y]) { mask[y] = 1; queue.push_back(y); }
    }
  }
  std::vector<int> members;
  for (int i = 0; i < g->order(); i++)
    if (mask[i]) members.push_back(i);
  return make_subgroup_unchecked(g, std::move(members));
}

SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b) {
  std::vector<int> members;
  for (int m : a.members)
    if (b.contains(m)) members.push_back(m);
  return make_subgroup_unchecked(a.parent, std::move(members));
}

SubgroupHandle product_subgroup(const SubgroupHandle& a, const SubgroupHandle& b) {
  std::vector<char> mask(a.parent->order(), 0);
  for (int x : a.members)
    for (int y : b.members) mask[a.parent->mul(x, y)] = 1;
  std::vector<int> members;
  for (int i = 0; i < a.parent->order(); i++)
    if (mask[i]) members.push_back(i);
  return make_subgroup_unchecked(a.parent, std::move(members));
}

SubgroupHandle centre(const GroupPtr& g) {
  std::vector<int> members;
  for (int z = 0; z < g->order(); z++) {
    bool central = true;
    for (int x = 0; x < g->order() && central; x++) central = g->mul(z, x) == g->mul(x, z);
    if (central) members.push_back(z);
  }
  return make_subgroup_unchecked(g, std::move(members));
}

SubgroupHandle derived_subgroup(const GroupPtr& g) {
  std::vector<int> comms;
  for (int a = 0; a < g->order(); a++)
    for (int b = 0; b < g->order(); b++) comms.push_back(g->commutator(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generate_subgroup(g, comms);
}

SubgroupHandle centralizer(const GroupPtr& g, const SubgroupHandle& h) {
  std::vector<int> members;
  for (int x = 0; x < g->order(); x++) {
    bool ok = true;
    for (int m : h.members)
      if (g->mul(x, m) != g->mul(m, x)) { ok = false; break; }
    if (ok) members.push_back(x);
  }
  return make_subgroup_unchecked(g, std::move(members));
}

bool is_abelian(const CayleyGroup& g) {
  for (int a = 0; a < g.order(); a++)
    for (int b = a + 1; b < g.order(); b++)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::optional<int> normality_witness(const SubgroupHandle& n) {
  const auto& g = *n.parent;
  for (int x = 0; x < g.order(); x++)
    for (int m : n.members)
      if (!n.contains(g.mul(g.mul(x, m), g.inv(x)))) return x;
  return std::nullopt;
}

std::optional<int> nilpotency_class_le2(const GroupPtr& g) {
  if (g->order() == 1) return 0;
  if (is_abelian(*g)) return 1;
  auto z = centre(g);
  auto der = derived_subgroup(g);
  for (int m : der.members)
    if (!z.contains(m)) return std::nullopt;
  return 2;
}

QuotientResult quotient(const GroupPtr& g, const SubgroupHandle& n) {
  require(n.parent == g, "BadInput", "subgroup does not belong to this group");
  if (auto w = normality_witness(n))
    fail("NotNormal", "conjugation by element " + std::to_string(*w) + " moves the subgroup");

  int order = g->order();
  std::vector<int> cls(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; x++) {
    if (cls[x] >= 0) continue;
    int id = (int)reps.size();
    reps.push_back(x);  // x is minimal in its coset: smaller members were already assigned
    for (int m : n.members) cls[g->mul(x, m)] = id;
  }
  int q = (int)reps.size();
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; a++)
    for (int b = 0; b < q; b++) table[a][b] = cls[g->mul(reps[a], reps[b])];
  QuotientResult res;
  res.group = CayleyGroup::validate(std::move(table), g->label() + "/N");
  res.coset_reps = std::move(reps);
  res.projection = GroupMap{g, res.group, std::move(cls), MapKind::homomorphism};
  return res;
}

long long exponent(const CayleyGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order(); x++) e = std::lcm(e, (long long)g.element_order(x));
  return e;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; p++)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

namespace {

bool is_p_power_order(const CayleyGroup& g, int x, long long p) {
  int o = g.element_order(x);
  while (o % p == 0) o /= p;
  return o == 1;
}

// p-power-order element sets, without the closure check.
std::vector<std::vector<int>> sylow_candidates(const CayleyGroup& g) {
  std::vector<std::vector<int>> out;
  for (long long p : prime_factors(g.order())) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); x++)
      if (is_p_power_order(g, x, p)) members.push_back(x);
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

bool is_nilpotent(const CayleyGroup& g) {
  // A finite group is nilpotent iff each set of p-power-order elements is
  // multiplicatively closed (then G is the direct product of its Sylows).
  for (auto& members : sylow_candidates(g)) {
    std::vector<char> mask(g.order(), 0);
    for (int m : members) mask[m] = 1;
    for (int a : members)
      for (int b : members)
        if (!mask[g.mul(a, b)]) return false;
  }
  return true;
}

std::vector<SubgroupHandle> sylow_split(const GroupPtr& g) {
  std::vector<SubgroupHandle> out;
  for (auto& members : sylow_candidates(*g)) {
    std::vector<char> mask(g->order(), 0);
    for (int m : members) mask[m] = 1;
    for (int a : members)
      for (int b : members)
        require(mask[g->mul(a, b)], "NotNilpotent",
                "p-power-order elements not closed: " + std::to_string(a) + "*" +
                    std::to_string(b));
    out.push_back(make_subgroup_unchecked(g, members));
  }
  return out;
}

GroupMap verify_map(GroupMap f, MapKind expect) {
  const auto& d = *f.domain;
  const auto& c = *f.codomain;
  require((int)f.images.size() == d.order(), "BadInput", "map not total");
  for (int im : f.images)
    require(im >= 0 && im < c.order(), "BadInput", "image out of range");
  for (int a = 0; a < d.order(); a++)
    for (int b = 0; b < d.order(); b++)
      require(f.images[d.mul(a, b)] == c.mul(f.images[a], f.images[b]), "NotHomomorphism",
              "witness pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
  f.kind = MapKind::homomorphism;
  if (expect == MapKind::monomorphism || expect == MapKind::isomorphism) {
    std::vector<int> seen(c.order(), -1);
    for (int a = 0; a < d.order(); a++) {
      if (seen[f.images[a]] >= 0)
        fail("NotInjective", "elements " + std::to_string(seen[f.images[a]]) + " and " +
                                 std::to_string(a) + " collide");
      seen[f.images[a]] = a;
    }
    f.kind = MapKind::monomorphism;
  }
  if (expect == MapKind::isomorphism) {
    require(d.order() == c.order(), "NotSurjective", "order mismatch");
    f.kind = MapKind::isomorphism;
  }
  return f;
}

SubgroupAsGroup subgroup_as_group(const SubgroupHandle& h) {
  int k = h.size();
  std::vector<int> from_parent(h.parent->order(), -1);
  for (int i = 0; i < k; i++) from_parent[h.members[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) {
      int prod = h.parent->mul(h.members[i], h.members[j]);
      require(from_parent[prod] >= 0, "BadInput", "member set not closed under multiplication");
      table[i][j] = from_parent[prod];
    }
  SubgroupAsGroup res;
  res.group = CayleyGroup::validate(std::move(table), h.parent->label() + " subgroup");
  res.to_parent = h.members;
  res.from_parent = std::move(from_parent);
  return res;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  int na = a->order(), nb = b->order();
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; i++)
    for (int j = 0; j < na * nb; j++) {
      int ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
      table[i][j] = a->mul(ai, aj) * nb + b->mul(bi, bj);
    }
  return CayleyGroup::validate(std::move(table), a->label() + " x " + b->label(),
                               /*assoc_scan_bound=*/64);
}

}  // namespace nilheis
