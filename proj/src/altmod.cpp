#include "nilheis/altmod.hpp"

#include <algorithm>
#include <numeric>

namespace nilheis {

std::vector<long long> reduce_coords(std::vector<long long> v,
                                     const std::vector<long long>& moduli) {
  require(v.size() == moduli.size(), "BadInput", "coordinate length mismatch");
  for (size_t i = 0; i < v.size(); i++) v[i] = ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
  return v;
}

long long omega_eval(const AlternatingModule& am, const std::vector<long long>& u,
                     const std::vector<long long>& v) {
  int n = am.rank();
  require((int)u.size() == n && (int)v.size() == n, "BadInput", "coordinate length mismatch");
  long long acc = 0, c = am.c_order;
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++)
      acc = (acc + (u[i] % c) * ((v[j] % c) * am.omega[i][j] % c)) % c;
  }
  return ((acc % c) + c) % c;
}

std::vector<long long> project_to_module(const AlternatingModule& am, int g) {
  require(am.has_source(), "BadInput", "module has no source group");
  auto c = am.m_pres.coords(am.projection(g));
  require(c.has_value(), "Internal", "projection left the module presentation");
  return *c;
}

int lift_to_source(const AlternatingModule& am, const std::vector<long long>& v) {
  require(am.has_source(), "BadInput", "module has no source group");
  const auto& g = *am.source;
  auto red = reduce_coords(v, am.m_orders);
  int x = g.identity();
  for (int i = 0; i < am.rank(); i++) x = g.mul(x, g.power(am.lifts[i], red[i]));
  return x;
}

AlternatingModule module_from_extension(const GroupPtr& g, const SubgroupHandle& c, int c_gen) {
  require(c.parent == g, "BadInput", "subgroup does not belong to this group");
  auto z = centre(g);
  for (int m : c.members)
    require(z.contains(m), "NotCentral", "element " + std::to_string(m) + " is not central");
  auto gen_closure = generate_subgroup(g, {c_gen});
  require(gen_closure.members == c.members, "NotCyclic",
          "given element does not generate the subgroup");
  auto der = derived_subgroup(g);
  for (int m : der.members)
    require(c.contains(m), "DerivedNotContained",
            "commutator " + std::to_string(m) + " lies outside the subgroup");

  AlternatingModule am;
  am.source = g;
  am.c_gen = c_gen;
  am.c_sub = c;
  am.c_order = c.size();
  auto q = quotient(g, c);
  am.m_group = q.group;
  am.projection = q.projection;
  am.coset_reps = q.coset_reps;
  am.m_pres = abelian_invariants_group(q.group);
  am.m_orders = am.m_pres.factors;
  for (int gen : am.m_pres.generators) am.lifts.push_back(q.coset_reps[gen]);

  int n = am.rank();
  am.omega.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      int comm = g->commutator(am.lifts[i], am.lifts[j]);
      am.omega[i][j] = discrete_log_cyclic(g, c_gen, comm) % am.c_order;
    }
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      require((am.omega[i][j] + am.omega[j][i]) % am.c_order == 0, "Internal",
              "pairing is not alternating");
      require(am.m_orders[i] * am.omega[i][j] % am.c_order == 0, "Internal",
              "pairing is not killed by the generator order");
    }
  return am;
}

std::vector<std::vector<long long>> orthogonal_complement(
    const AlternatingModule& am, const std::vector<std::vector<long long>>& gens) {
  int n = am.rank();
  // row per generator g: sum_i m_i * (sum_j omega[i][j] g_j) = 0 mod c
  IntMatrix a((int)gens.size(), n);
  for (size_t k = 0; k < gens.size(); k++) {
    require((int)gens[k].size() == n, "BadInput", "coordinate length mismatch");
    for (int i = 0; i < n; i++) {
      long long s = 0;
      for (int j = 0; j < n; j++)
        s = (s + am.omega[i][j] * (gens[k][j] % am.c_order)) % am.c_order;
      a.at((int)k, i) = s;
    }
  }
  std::vector<long long> rows(gens.size(), am.c_order);
  return kernel_mod(a, rows, am.m_orders);
}

bool is_nondegenerate(const AlternatingModule& am) {
  int n = am.rank();
  std::vector<std::vector<long long>> units;
  for (int i = 0; i < n; i++) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    units.push_back(e);
  }
  for (auto& v : orthogonal_complement(am, units))
    if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) return false;
  return true;
}

namespace {

// Attempt one lift of omega; returns the result if re-evaluation confirms
// the Darboux block structure, nullopt otherwise.
std::optional<DarbouxBasis> darboux_try(const AlternatingModule& am, bool symmetric) {
  int n = am.rank();
  long long c = am.c_order;
  IntMatrix w(n, n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      long long v = am.omega[i][j] % c;
      if (v < 0) v += c;
      if (symmetric && 2 * v > c) v -= c;  // symmetric lift in (-c/2, c/2]
      w.at(i, j) = v;
      w.at(j, i) = -v;
    }
  auto sm = alternating_smith(w);

  DarbouxBasis db;
  db.basis_matrix = sm.B;
  for (int j = 0; j < n; j++) {
    std::vector<long long> col(n);
    for (int i = 0; i < n; i++) {
      Int red = sm.B.at(i, j) % am.m_orders[i];
      if (red < 0) red += am.m_orders[i];
      col[i] = red.convert_to<long long>();
    }
    db.generators.push_back(col);
  }

  // re-evaluate omega on the new tuple and demand the block structure in C
  std::vector<std::vector<long long>> ev(n, std::vector<long long>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) ev[i][j] = omega_eval(am, db.generators[i], db.generators[j]);

  int t = 0;
  for (int i = 0; i < sm.s; i++)
    if (ev[2 * i][2 * i + 1] != 0) t++;
  // values killed by c must come last in the chain
  for (int i = 0; i < t; i++)
    if (ev[2 * i][2 * i + 1] == 0) return std::nullopt;

  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      bool paired = i / 2 == j / 2 && i / 2 < t && i != j;
      if (!paired && ev[i][j] != 0) return std::nullopt;
    }
  // chain of subgroups of C: |<d_i>| descending
  for (int i = 0; i + 1 < t; i++) {
    long long oi = c / std::gcd(c, ev[2 * i][2 * i + 1]);
    long long oj = c / std::gcd(c, ev[2 * i + 2][2 * i + 3]);
    if (oi % oj != 0) return std::nullopt;
  }

  db.t = t;
  for (int i = 0; i < t; i++) {
    db.pairs.push_back({2 * i, 2 * i + 1});
    db.hyperbolic_values.push_back(ev[2 * i][2 * i + 1]);
  }
  for (int i = 2 * t; i < n; i++) db.residual.push_back(i);
  return db;
}

}  // namespace

DarbouxBasis darboux_generators(const AlternatingModule& am) {
  if (auto db = darboux_try(am, false)) return *db;
  if (auto db = darboux_try(am, true)) return *db;
  fail("DegenerateLift", "no integer lift of the pairing produced a Darboux tuple");
}

IsotropicStructure isotropic_structure(const AlternatingModule& am) {
  require(is_nondegenerate(am), "Degenerate", "the pairing has a nontrivial radical");
  IsotropicStructure is;
  is.darboux = darboux_generators(am);
  int n = am.rank(), t = is.darboux.t;
  require(t > 0 || n == 0 || std::all_of(am.m_orders.begin(), am.m_orders.end(),
                                         [](long long m) { return m == 1; }),
          "NoHyperbolicPairs", "nonzero non-degenerate module without hyperbolic pairs");
  // residual generators lie in the radical, hence are zero elements here
  for (int r : is.darboux.residual)
    for (long long x : is.darboux.generators[r])
      require(x == 0, "Internal", "nonzero residual generator in a non-degenerate module");

  for (int i = 0; i < t; i++) {
    is.mq_basis.push_back(is.darboux.generators[2 * i]);
    is.imq_basis.push_back(is.darboux.generators[2 * i + 1]);
  }
  if (t > 0) is.alpha = is.mq_basis[0];

  // i on the Darboux tuple: x_j -> y_j, y_j -> -x_j; conjugate by B to get
  // the action on the original generators (B is unimodular)
  IntMatrix j(n, n);
  for (int i = 0; i < t; i++) {
    j.at(2 * i + 1, 2 * i) = 1;
    j.at(2 * i, 2 * i + 1) = -1;
  }
  is.i_action = is.darboux.basis_matrix * j * inverse_unimodular(is.darboux.basis_matrix);

  long long g = am.c_order;
  for (auto& row : am.omega)
    for (long long v : row) g = std::gcd(g, v % am.c_order);
  is.q_order = am.c_order / g;
  is.phi_mult = g;
  return is;
}

std::vector<long long> apply_i(const AlternatingModule& am, const IsotropicStructure& is,
                               const std::vector<long long>& v) {
  int n = am.rank();
  require((int)v.size() == n, "BadInput", "coordinate length mismatch");
  std::vector<long long> out(n, 0);
  for (int i = 0; i < n; i++) {
    Int s = 0;
    for (int j = 0; j < n; j++) s += is.i_action.at(i, j) * v[j];
    Int red = s % am.m_orders[i];
    if (red < 0) red += am.m_orders[i];
    out[i] = red.convert_to<long long>();
  }
  return out;
}

long long omega_q(const AlternatingModule& am, const IsotropicStructure& is,
                  const std::vector<long long>& u, const std::vector<long long>& v) {
  long long w = omega_eval(am, u, v);
  require(w % is.phi_mult == 0, "Internal", "pairing value escapes the image of Q");
  return (w / is.phi_mult) % is.q_order;
}

std::pair<long long, long long> hermitian(const AlternatingModule& am,
                                          const IsotropicStructure& is,
                                          const std::vector<long long>& u,
                                          const std::vector<long long>& v) {
  return {omega_q(am, is, apply_i(am, is, u), v), omega_q(am, is, u, v)};
}

}  // namespace nilheis
