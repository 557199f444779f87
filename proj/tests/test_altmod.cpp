#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "nilheis/altmod.hpp"
#include "test_util.hpp"

using namespace nilheis;
namespace tu = nilheis::testutil;

namespace {

using Vec = std::vector<long long>;

// subgroup of the coordinate module generated by vs, by additive closure
std::set<Vec> span_of(const std::vector<Vec>& vs, const std::vector<long long>& moduli) {
  std::set<Vec> s{Vec(moduli.size(), 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& g : vs)
      for (Vec v : std::set<Vec>(s)) {
        for (size_t i = 0; i < v.size(); i++) v[i] = (v[i] + g[i]) % moduli[i];
        if (s.insert(v).second) grew = true;
      }
  }
  return s;
}

std::vector<Vec> unit_vectors(int n) {
  std::vector<Vec> u;
  for (int i = 0; i < n; i++) {
    Vec e(n, 0);
    e[i] = 1;
    u.push_back(e);
  }
  return u;
}

AlternatingModule q8_module() {
  auto q8 = tu::quaternion8();
  return module_from_extension(q8, centre(q8), 1);
}

AlternatingModule h27_module() {
  auto h = tu::heisenberg_mod(3);
  return module_from_extension(h, centre(h), centre(h).members[1]);
}

// free-standing module without group provenance
AlternatingModule raw_module(std::vector<long long> m_orders, long long c,
                             std::vector<std::vector<long long>> omega) {
  AlternatingModule am;
  am.m_orders = std::move(m_orders);
  am.c_order = c;
  am.omega = std::move(omega);
  return am;
}

// random module respecting alternation and the order-compatibility constraint
AlternatingModule random_module(std::mt19937& rng, const std::vector<long long>& m_orders,
                                long long c) {
  int n = (int)m_orders.size();
  std::vector<std::vector<long long>> omega(n, Vec(n, 0));
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      long long step = std::lcm(c / std::gcd(c, m_orders[i]), c / std::gcd(c, m_orders[j]));
      long long v = step * std::uniform_int_distribution<long long>(0, c / step - 1)(rng) % c;
      omega[i][j] = v;
      omega[j][i] = (c - v) % c;
    }
  return raw_module(m_orders, c, std::move(omega));
}

// d(M/N) for N spanned by gens, via an explicit Cayley table of M
int d_of_quotient(const AlternatingModule& am, const std::vector<Vec>& gens) {
  long long size = 1;
  for (long long m : am.m_orders) size *= m;
  REQUIRE(size <= 4096);
  auto index_of = [&](const Vec& v) {
    long long idx = 0;
    for (size_t i = 0; i < v.size(); i++) idx = idx * am.m_orders[i] + v[i];
    return (int)idx;
  };
  auto vec_of = [&](long long idx) {
    Vec v(am.m_orders.size());
    for (int i = (int)am.m_orders.size() - 1; i >= 0; i--) {
      v[i] = idx % am.m_orders[i];
      idx /= am.m_orders[i];
    }
    return v;
  };
  std::vector<std::vector<int>> t(size, std::vector<int>(size));
  for (long long a = 0; a < size; a++)
    for (long long b = 0; b < size; b++) {
      Vec va = vec_of(a), vb = vec_of(b);
      for (size_t i = 0; i < va.size(); i++) va[i] = (va[i] + vb[i]) % am.m_orders[i];
      t[a][b] = index_of(va);
    }
  auto g = CayleyGroup::validate(t, "", 64);
  std::vector<int> ngens;
  for (auto& v : gens) ngens.push_back(index_of(reduce_coords(v, am.m_orders)));
  auto q = quotient(g, generate_subgroup(g, ngens));
  return abelian_invariants_group(q.group).d();
}

}  // namespace

TEST_CASE("module from a central extension of Q8") {
  auto am = q8_module();
  CHECK(am.m_orders == std::vector<long long>{2, 2});
  CHECK(am.c_order == 2);
  CHECK(am.omega[0][0] == 0);
  CHECK(am.omega[1][1] == 0);
  CHECK(am.omega[0][1] == 1);
  CHECK(am.omega[1][0] == 1);  // -1 = 1 mod 2
}

TEST_CASE("module from the extraspecial group of order 27") {
  auto am = h27_module();
  CHECK(am.m_orders == std::vector<long long>{3, 3});
  CHECK(am.c_order == 3);
  CHECK(am.omega[0][1] != 0);
  CHECK((am.omega[0][1] + am.omega[1][0]) % 3 == 0);
}

TEST_CASE("abelian extensions give the zero pairing") {
  auto g = direct_product(tu::cyclic(2), tu::cyclic(4));
  // C = the Z/4 factor
  auto c = generate_subgroup(g, {1});
  auto am = module_from_extension(g, c, 1);
  CHECK(am.m_orders == std::vector<long long>{2});
  CHECK(am.omega[0][0] == 0);
  CHECK(!is_nondegenerate(am));  // nontrivial M, zero pairing
}

TEST_CASE("module_from_extension precondition failures") {
  auto q8 = tu::quaternion8();
  // <i> = {1,-1,i,-i} is cyclic but not central
  CHECK_THROWS_WITH_AS(module_from_extension(q8, generate_subgroup(q8, {2}), 2),
                       doctest::Contains("NotCentral"), Error);
  // trivial C does not contain the derived subgroup
  CHECK_THROWS_WITH_AS(module_from_extension(q8, trivial_subgroup(q8), q8->identity()),
                       doctest::Contains("DerivedNotContained"), Error);
  // Klein four-group is not generated by one element
  auto v4 = direct_product(tu::cyclic(2), tu::cyclic(2));
  CHECK_THROWS_WITH_AS(module_from_extension(v4, full_subgroup(v4), 1),
                       doctest::Contains("NotCyclic"), Error);
}

TEST_CASE("omega is independent of the chosen coset lifts") {
  std::mt19937 rng(5);
  for (auto g : {tu::quaternion8(), tu::heisenberg_mod(3), tu::extraspecial_exp_p2(3),
                 tu::heisenberg_mod(4)}) {
    auto z = centre(g);
    // centre need not be cyclic in general; here it is for all four
    auto am = module_from_extension(g, z, abelian_invariants(z).generators[0]);
    std::uniform_int_distribution<int> pick(0, z.size() - 1);
    for (int it = 0; it < 100; it++) {
      std::vector<int> lifts = am.lifts;
      for (auto& l : lifts) l = g->mul(l, z.members[pick(rng)]);
      for (int i = 0; i < am.rank(); i++)
        for (int j = 0; j < am.rank(); j++)
          CHECK(discrete_log_cyclic(g, am.c_gen, g->commutator(lifts[i], lifts[j])) %
                    am.c_order ==
                am.omega[i][j]);
    }
  }
}

TEST_CASE("dictionary: centralizers map to orthogonal complements") {
  for (auto g : {tu::quaternion8(), tu::heisenberg_mod(3), tu::extraspecial_exp_p2(3)}) {
    auto z = centre(g);
    auto am = module_from_extension(g, z, abelian_invariants(z).generators[0]);
    // H = a few cyclic subgroups containing C
    for (int seed = 0; seed < g->order(); seed += 3) {
      auto h = product_subgroup(generate_subgroup(g, {seed}), z);
      std::vector<Vec> hgens;
      for (int m : h.members) hgens.push_back(project_to_module(am, m));
      auto perp = orthogonal_complement(am, hgens);
      auto perp_set = span_of(perp, am.m_orders);
      std::set<Vec> central_img;
      for (int m : centralizer(g, h).members)
        central_img.insert(project_to_module(am, m));
      CHECK(perp_set == central_img);
    }
    // pi(Z(G)) = M^perp: here Z(G) = C so the radical must be trivial
    auto rad = span_of(orthogonal_complement(am, unit_vectors(am.rank())), am.m_orders);
    std::set<Vec> z_img;
    for (int m : z.members) z_img.insert(project_to_module(am, m));
    CHECK(rad == z_img);
  }
}

TEST_CASE("orthogonal complement basics") {
  auto am = q8_module();
  CHECK(span_of(orthogonal_complement(am, {}), am.m_orders).size() == 4);
  auto perp = span_of(orthogonal_complement(am, {Vec{1, 0}}), am.m_orders);
  CHECK(perp == std::set<Vec>{{0, 0}, {1, 0}});

  auto zero = raw_module({2, 2}, 4, {{0, 0}, {0, 0}});
  CHECK(span_of(orthogonal_complement(zero, {Vec{1, 1}}), zero.m_orders).size() == 4);
}

TEST_CASE("non-degeneracy tests") {
  CHECK(!is_nondegenerate(raw_module({2}, 2, {{0}})));
  CHECK(is_nondegenerate(q8_module()));
  CHECK(is_nondegenerate(raw_module({4, 4}, 8, {{0, 2}, {6, 0}})));
  CHECK(!is_nondegenerate(raw_module({4, 4}, 8, {{0, 4}, {4, 0}})));  // (2,0) in radical
  // trivial module is vacuously non-degenerate
  CHECK(is_nondegenerate(raw_module({}, 5, {})));
}

TEST_CASE("darboux generators on spec-level examples") {
  auto db = darboux_generators(q8_module());
  CHECK(db.t == 1);
  CHECK(db.pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(db.hyperbolic_values == Vec{1});
  CHECK(db.residual.empty());

  auto zero = raw_module({2, 4, 2}, 6, std::vector<Vec>(3, Vec(3, 0)));
  db = darboux_generators(zero);
  CHECK(db.t == 0);
  CHECK(db.residual == std::vector<int>{0, 1, 2});

  auto m48 = raw_module({4, 4}, 8, {{0, 2}, {6, 0}});
  db = darboux_generators(m48);
  CHECK(db.t == 1);
  CHECK((db.hyperbolic_values[0] == 2 || db.hyperbolic_values[0] == 6));
  CHECK(d_of_quotient(m48, orthogonal_complement(m48, unit_vectors(2))) == 2 * db.t);
}

TEST_CASE("darboux generators on random modules") {
  std::mt19937 rng(99);
  std::vector<std::pair<std::vector<long long>, long long>> shapes = {
      {{2, 2}, 2}, {{4, 4}, 4}, {{2, 4}, 4},     {{3, 3, 3}, 3},
      {{2, 2, 2}, 4}, {{6, 6}, 6}, {{2, 4, 4}, 8}, {{3, 9}, 9}};
  for (int it = 0; it < 120; it++) {
    auto& [orders, c] = shapes[it % shapes.size()];
    auto am = random_module(rng, orders, c);
    auto db = darboux_generators(am);
    int n = am.rank();
    // new tuple generates M
    size_t msize = 1;
    for (long long m : am.m_orders) msize *= (size_t)m;
    CHECK(span_of(db.generators, am.m_orders).size() == msize);
    // orthogonality outside the pairs, chain inside
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        bool paired = i / 2 == j / 2 && i / 2 < db.t && i != j;
        long long v = omega_eval(am, db.generators[i], db.generators[j]);
        if (!paired) CHECK(v == 0);
      }
    for (int i = 0; i + 1 < db.t; i++) {
      long long oi = c / std::gcd(c, db.hyperbolic_values[i]);
      long long oj = c / std::gcd(c, db.hyperbolic_values[i + 1]);
      CHECK(oi % oj == 0);
    }
    // t = half the minimal generator count of M / M^perp
    CHECK(2 * db.t == d_of_quotient(am, orthogonal_complement(am, unit_vectors(n))));
  }
}

TEST_CASE("isotropic structure on the Q8 module") {
  auto am = q8_module();
  auto is = isotropic_structure(am);
  CHECK(is.mq_basis == std::vector<Vec>{{1, 0}});
  CHECK(is.imq_basis == std::vector<Vec>{{0, 1}});
  CHECK(is.q_order == 2);
  CHECK(is.alpha == Vec{1, 0});
  // Im h(alpha, i alpha) generates Z/q
  auto h = hermitian(am, is, is.alpha, apply_i(am, is, is.alpha));
  CHECK(std::gcd(h.second, is.q_order) == 1);
}

TEST_CASE("isotropic structure on (Z/3)^2") {
  auto am = raw_module({3, 3}, 3, {{0, 1}, {2, 0}});
  auto is = isotropic_structure(am);
  CHECK(is.q_order == 3);
  // h(x,x) = omega_Q(ix, x) = omega(y, x) = -1 = 2 mod 3
  auto h = hermitian(am, is, Vec{1, 0}, Vec{1, 0});
  CHECK(h.first == 2);
  CHECK(h.second == 0);
}

TEST_CASE("isotropic structure rejects degenerate modules") {
  CHECK_THROWS_WITH_AS(isotropic_structure(raw_module({2}, 2, {{0}})),
                       doctest::Contains("Degenerate"), Error);
}

TEST_CASE("isotropic structure of the trivial module is empty") {
  auto g = tu::cyclic(4);
  auto am = module_from_extension(g, full_subgroup(g), 1);
  CHECK(am.rank() == 0);
  auto is = isotropic_structure(am);
  CHECK(is.mq_basis.empty());
  CHECK(is.alpha.empty());
}

TEST_CASE("complex and hermitian identities") {
  std::mt19937 rng(123);
  std::vector<AlternatingModule> mods = {q8_module(), h27_module(),
                                         raw_module({4, 4}, 8, {{0, 2}, {6, 0}}),
                                         raw_module({3, 3}, 3, {{0, 1}, {2, 0}})};
  for (int it = 0; it < 40; it++) {
    auto am = random_module(rng, {4, 4}, 4);
    if (is_nondegenerate(am)) mods.push_back(am);
  }
  for (auto& am : mods) {
    auto is = isotropic_structure(am);
    int n = am.rank();
    auto units = unit_vectors(n);
    // i*i = -1 on generators
    for (auto& e : units) {
      auto ii = apply_i(am, is, apply_i(am, is, e));
      Vec neg(n);
      for (int k = 0; k < n; k++) neg[k] = (am.m_orders[k] - e[k]) % am.m_orders[k];
      CHECK(ii == neg);
    }
    // direct sum M = M_Q (+) iM_Q
    auto mq = span_of(is.mq_basis, am.m_orders);
    auto imq = span_of(is.imq_basis, am.m_orders);
    std::set<Vec> both;
    for (auto& a : mq)
      for (auto& b : imq) {
        Vec sum(n);
        for (int k = 0; k < n; k++) sum[k] = (a[k] + b[k]) % am.m_orders[k];
        both.insert(sum);
      }
    long long msize = 1;
    for (long long m : am.m_orders) msize *= m;
    CHECK((long long)both.size() == msize);
    CHECK(mq.size() * imq.size() == (size_t)msize);
    // isotropy of both halves
    for (auto& a : is.mq_basis)
      for (auto& b : is.mq_basis) CHECK(omega_eval(am, a, b) == 0);
    for (auto& a : is.imq_basis)
      for (auto& b : is.imq_basis) CHECK(omega_eval(am, a, b) == 0);
    // hermitian identities on generator pairs
    long long q = is.q_order;
    for (auto& u : units)
      for (auto& v : units) {
        auto h = hermitian(am, is, u, v);
        CHECK(h.second == omega_q(am, is, u, v));                     // Im h = omega_Q
        auto hc = hermitian(am, is, v, u);                            // h(u,v) = conj h(v,u)
        CHECK(h.first == hc.first);
        CHECK((h.second + hc.second) % q == 0);
        auto hi = hermitian(am, is, apply_i(am, is, u), v);           // h(iu,v) = i h(u,v)
        CHECK(hi.first == (q - h.second) % q);
        CHECK(hi.second == h.first);
        // omega(iu, iv) = omega(u, v)
        CHECK(omega_eval(am, apply_i(am, is, u), apply_i(am, is, v)) == omega_eval(am, u, v));
      }
    if (!is.alpha.empty()) {
      auto ha = hermitian(am, is, is.alpha, apply_i(am, is, is.alpha));
      CHECK(std::gcd(ha.second, q) == 1);
    }
  }
}
