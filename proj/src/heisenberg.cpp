#include "nilheis/heisenberg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "nilheis/altmod.hpp"

namespace nilheis {

namespace {

std::vector<long long> add_mod(const std::vector<long long>& u, const std::vector<long long>& v,
                               const std::vector<long long>& moduli) {
  std::vector<long long> w(u.size());
  for (size_t i = 0; i < u.size(); i++) w[i] = (u[i] + v[i]) % moduli[i];
  return w;
}

std::vector<long long> neg_mod(const std::vector<long long>& u,
                               const std::vector<long long>& moduli) {
  std::vector<long long> w(u.size());
  for (size_t i = 0; i < u.size(); i++) w[i] = (moduli[i] - u[i]) % moduli[i];
  return w;
}

std::vector<long long> sub_mod(const std::vector<long long>& u, const std::vector<long long>& v,
                               const std::vector<long long>& moduli) {
  return add_mod(u, neg_mod(v, moduli), moduli);
}

long long product_of(const std::vector<long long>& factors) {
  long long p = 1;
  for (long long f : factors) p *= f;
  return p;
}

// cardinality of the span of coordinate vectors, by closure
long long span_size(const std::vector<std::vector<long long>>& gens,
                    const std::vector<long long>& moduli) {
  std::set<std::vector<long long>> s{std::vector<long long>(moduli.size(), 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& g : gens)
      for (auto v : std::set<std::vector<long long>>(s))
        if (s.insert(add_mod(v, g, moduli)).second) grew = true;
  }
  return (long long)s.size();
}

// kernel of a -> mu(a, -) as generators over a_factors
std::vector<std::vector<long long>> left_kernel(const BilinearMap& m) {
  int na = (int)m.a_factors.size(), nb = (int)m.b_factors.size(), nc = (int)m.c_factors.size();
  IntMatrix a(nb * nc, na);
  std::vector<long long> rows;
  for (int j = 0; j < nb; j++)
    for (int k = 0; k < nc; k++) {
      for (int i = 0; i < na; i++) a.at(j * nc + k, i) = m.mu[i][j][k];
      rows.push_back(m.c_factors[k]);
    }
  return kernel_mod(a, rows, m.a_factors);
}

std::vector<std::vector<long long>> right_kernel(const BilinearMap& m) {
  BilinearMap t;
  t.a_factors = m.b_factors;
  t.b_factors = m.a_factors;
  t.c_factors = m.c_factors;
  t.mu.assign(t.a_factors.size(), std::vector<std::vector<long long>>(t.b_factors.size()));
  for (size_t i = 0; i < m.a_factors.size(); i++)
    for (size_t j = 0; j < m.b_factors.size(); j++) t.mu[j][i] = m.mu[i][j];
  return left_kernel(t);
}

}  // namespace

HeisenbergElement HeisenbergGroup::identity() const {
  return {std::vector<long long>(map.a_factors.size(), 0),
          std::vector<long long>(map.b_factors.size(), 0),
          std::vector<long long>(map.c_factors.size(), 0)};
}

bool HeisenbergGroup::contains(const HeisenbergElement& x) const {
  auto ok = [](const std::vector<long long>& v, const std::vector<long long>& m) {
    if (v.size() != m.size()) return false;
    for (size_t i = 0; i < v.size(); i++)
      if (v[i] < 0 || v[i] >= m[i]) return false;
    return true;
  };
  return ok(x.a, map.a_factors) && ok(x.b, map.b_factors) && ok(x.c, map.c_factors);
}

HeisenbergGroup make_heisenberg(BilinearMap m) {
  int na = (int)m.a_factors.size(), nb = (int)m.b_factors.size(), nc = (int)m.c_factors.size();
  for (long long f : m.a_factors) require(f >= 1, "BadInput", "nonpositive factor");
  for (long long f : m.b_factors) require(f >= 1, "BadInput", "nonpositive factor");
  for (long long f : m.c_factors) require(f >= 1, "BadInput", "nonpositive factor");
  require((int)m.mu.size() == na, "BadInput", "mu has wrong row count");
  for (int i = 0; i < na; i++) {
    require((int)m.mu[i].size() == nb, "BadInput", "mu has wrong column count");
    for (int j = 0; j < nb; j++) {
      require((int)m.mu[i][j].size() == nc, "BadInput", "mu value has wrong length");
      for (int k = 0; k < nc; k++) {
        long long v = m.mu[i][j][k];
        require(v >= 0 && v < m.c_factors[k], "BadInput", "mu value not reduced");
        require(m.a_factors[i] * v % m.c_factors[k] == 0, "BadInput",
                "mu value not killed by the A-generator order");
        require(m.b_factors[j] * v % m.c_factors[k] == 0, "BadInput",
                "mu value not killed by the B-generator order");
      }
    }
  }
  HeisenbergGroup h;
  h.order = product_of(m.a_factors) * product_of(m.b_factors) * product_of(m.c_factors);
  h.map = std::move(m);
  return h;
}

std::vector<long long> mu_eval(const BilinearMap& m, const std::vector<long long>& a,
                               const std::vector<long long>& b) {
  require(a.size() == m.a_factors.size() && b.size() == m.b_factors.size(), "BadInput",
          "coordinate length mismatch");
  std::vector<long long> c(m.c_factors.size(), 0);
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); j++) {
      if (b[j] == 0) continue;
      for (size_t k = 0; k < c.size(); k++) {
        long long mod = m.c_factors[k];
        c[k] = (c[k] + (a[i] % mod) * ((b[j] % mod) * m.mu[i][j][k] % mod)) % mod;
      }
    }
  }
  return c;
}

HeisenbergElement h_element(const HeisenbergGroup& h, std::vector<long long> a,
                            std::vector<long long> b, std::vector<long long> c) {
  return {reduce_coords(std::move(a), h.map.a_factors),
          reduce_coords(std::move(b), h.map.b_factors),
          reduce_coords(std::move(c), h.map.c_factors)};
}

HeisenbergElement h_multiply(const HeisenbergGroup& h, const HeisenbergElement& x,
                             const HeisenbergElement& y) {
  require(h.contains(x) && h.contains(y), "BadInput", "element outside the group");
  const auto& m = h.map;
  return {add_mod(x.a, y.a, m.a_factors), add_mod(x.b, y.b, m.b_factors),
          add_mod(add_mod(x.c, mu_eval(m, x.a, y.b), m.c_factors), y.c, m.c_factors)};
}

HeisenbergElement h_inverse(const HeisenbergGroup& h, const HeisenbergElement& x) {
  require(h.contains(x), "BadInput", "element outside the group");
  const auto& m = h.map;
  return {neg_mod(x.a, m.a_factors), neg_mod(x.b, m.b_factors),
          sub_mod(mu_eval(m, x.a, x.b), x.c, m.c_factors)};
}

HeisenbergElement h_commutator(const HeisenbergGroup& h, const HeisenbergElement& x,
                               const HeisenbergElement& y) {
  require(h.contains(x) && h.contains(y), "BadInput", "element outside the group");
  const auto& m = h.map;
  auto c = sub_mod(mu_eval(m, x.a, y.b), mu_eval(m, y.a, x.b), m.c_factors);
  return {std::vector<long long>(m.a_factors.size(), 0),
          std::vector<long long>(m.b_factors.size(), 0), std::move(c)};
}

HeisenbergElement h_power(const HeisenbergGroup& h, const HeisenbergElement& x, long long e) {
  if (e < 0) return h_power(h, h_inverse(h, x), -e);
  HeisenbergElement acc = h.identity(), base = x;
  while (e > 0) {
    if (e & 1) acc = h_multiply(h, acc, base);
    base = h_multiply(h, base, base);
    e >>= 1;
  }
  return acc;
}

HeisenbergCentre h_centre(const HeisenbergGroup& h) {
  HeisenbergCentre z;
  z.a_kernel_gens = left_kernel(h.map);
  z.b_kernel_gens = right_kernel(h.map);
  z.size = span_size(z.a_kernel_gens, h.map.a_factors) *
           span_size(z.b_kernel_gens, h.map.b_factors) * product_of(h.map.c_factors);
  return z;
}

bool is_nondegenerate_mu(const BilinearMap& m) {
  auto zero = [](const std::vector<std::vector<long long>>& gens) {
    for (auto& g : gens)
      for (long long x : g)
        if (x != 0) return false;
    return true;
  };
  return zero(left_kernel(m)) && zero(right_kernel(m));
}

long long table_bound() {
  if (const char* env = std::getenv("NILHEIS_TABLE_BOUND")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 4096;
}

HeisenbergTable to_cayley(const HeisenbergGroup& h) {
  require(h.order <= table_bound(), "TooLarge",
          "|H| = " + std::to_string(h.order) + " exceeds the table bound " +
              std::to_string(table_bound()));
  HeisenbergTable t;
  const auto& m = h.map;
  std::vector<long long> all;
  all.insert(all.end(), m.a_factors.begin(), m.a_factors.end());
  all.insert(all.end(), m.b_factors.begin(), m.b_factors.end());
  all.insert(all.end(), m.c_factors.begin(), m.c_factors.end());
  int n = (int)h.order;
  for (int idx = 0; idx < n; idx++) {
    std::vector<long long> digits(all.size());
    long long rem = idx;
    for (int i = (int)all.size() - 1; i >= 0; i--) {
      digits[i] = rem % all[i];
      rem /= all[i];
    }
    HeisenbergElement e;
    e.a.assign(digits.begin(), digits.begin() + m.a_factors.size());
    e.b.assign(digits.begin() + m.a_factors.size(),
               digits.begin() + m.a_factors.size() + m.b_factors.size());
    e.c.assign(digits.begin() + m.a_factors.size() + m.b_factors.size(), digits.end());
    t.elements.push_back(std::move(e));
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      table[i][j] = t.index_of(h, h_multiply(h, t.elements[i], t.elements[j]));
  t.group = CayleyGroup::validate(std::move(table), "H(mu)", 64);
  return t;
}

int HeisenbergTable::index_of(const HeisenbergGroup& h, const HeisenbergElement& x) const {
  require(h.contains(x), "BadInput", "element outside the group");
  long long idx = 0;
  for (size_t i = 0; i < x.a.size(); i++) idx = idx * h.map.a_factors[i] + x.a[i];
  for (size_t i = 0; i < x.b.size(); i++) idx = idx * h.map.b_factors[i] + x.b[i];
  for (size_t i = 0; i < x.c.size(); i++) idx = idx * h.map.c_factors[i] + x.c[i];
  return (int)idx;
}

CanonicalHomForm canonical_hom_form(const BilinearMap& m) {
  require(m.a_factors == m.b_factors, "PreconditionFailed", "A and B differ");
  require(m.c_factors.size() <= 1, "PreconditionFailed", "C is not cyclic");
  long long c = m.c_factors.empty() ? 1 : m.c_factors[0];
  long long expa = m.a_factors.empty() ? 1 : m.a_factors.back();
  require(c % expa == 0, "PreconditionFailed", "exp(A) does not divide |C|");
  require(is_nondegenerate_mu(m), "PreconditionFailed", "mu is degenerate");

  // target: nu on Hom(A,C) x A with Hom(A,C) = A via alpha_i(e_j) = d_ij c/a_i
  BilinearMap nu;
  nu.a_factors = m.a_factors;
  nu.b_factors = m.a_factors;
  nu.c_factors = m.c_factors;
  int n = (int)m.a_factors.size();
  nu.mu.assign(n, std::vector<std::vector<long long>>(n, std::vector<long long>(
                                                             m.c_factors.size(), 0)));
  for (int i = 0; i < n; i++)
    if (!m.c_factors.empty()) nu.mu[i][i][0] = c / m.a_factors[i];

  CanonicalHomForm out;
  HeisenbergGroup hmu = make_heisenberg(m);
  out.target = make_heisenberg(nu);
  out.domain_table = to_cayley(hmu);
  out.target_table = to_cayley(out.target);

  GroupMap f;
  f.domain = out.domain_table.group;
  f.codomain = out.target_table.group;
  for (const auto& x : out.domain_table.elements) {
    // coordinates of the homomorphism y -> mu(x.a, y) in the alpha-basis
    std::vector<long long> hom(n, 0);
    for (int i = 0; i < n; i++) {
      std::vector<long long> e(n, 0);
      e[i] = 1;
      auto v = mu_eval(m, x.a, e);
      long long val = m.c_factors.empty() ? 0 : v[0];
      long long step = c / m.a_factors[i];
      require(val % step == 0, "Internal", "mu value escapes the dual lattice");
      hom[i] = (val / step) % m.a_factors[i];
    }
    HeisenbergElement y{hom, x.b, x.c};
    f.images.push_back(out.target_table.index_of(out.target, y));
  }
  out.iso = verify_map(std::move(f), MapKind::isomorphism);
  return out;
}

}  // namespace nilheis
