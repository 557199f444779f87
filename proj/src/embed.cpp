#include "nilheis/embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nilheis/decompose.hpp"

namespace nilheis {

namespace {

long long mod_inverse(long long a, long long n) {  // gcd(a, n) = 1
  if (n == 1) return 0;
  long long t = 0, newt = 1, r = n, newr = ((a % n) + n) % n;
  while (newr != 0) {
    long long q = r / newr;
    std::tie(t, newt) = std::make_pair(newt, t - q * newt);
    std::tie(r, newr) = std::make_pair(newr, r - q * newr);
  }
  require(r == 1, "Internal", "modular inverse of a non-unit");
  return ((t % n) + n) % n;
}

std::vector<long long> add_vec(const std::vector<long long>& u, const std::vector<long long>& v,
                               const std::vector<long long>& moduli) {
  std::vector<long long> w(u.size());
  for (size_t i = 0; i < u.size(); i++) w[i] = (u[i] + v[i]) % moduli[i];
  return w;
}

bool all_zero(const std::vector<long long>& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

}  // namespace

ZExtensionResult z_extension(long long n, const AbelianPresentation& k, int iota_one,
                             long long m, long long kappa_one) {
  require(n >= 1 && m >= 1, "BadInput", "orders must be positive");
  kappa_one = ((kappa_one % m) + m) % m;
  require(kappa_one * n % m == 0, "BadInput", "kappa is not a homomorphism");
  auto ic0 = k.coords(iota_one);
  require(ic0.has_value(), "BadInput", "iota(1) lies outside K");
  require(k.parent->element_order(iota_one) == n, "NotInjective", "iota(1) has order != n");

  long long ke = k.exp();
  ZExtensionResult ze;
  ze.l = std::lcm(m, ke);
  ze.theta_mult = ze.l / m;
  ze.phi_gen_images.assign(k.d(), 0);

  if (n > 1) {
    require(ke % n == 0, "Internal", "exp(K) not divisible by n");
    const auto& ic = *ic0;
    // split K into cyclic prime-power pieces; for each prime dividing n keep
    // the piece on which iota(1) projects with the largest order
    struct Piece {
      int gen = -1;
      long long q = 1, c = 0;
    };
    std::map<long long, Piece> picked;
    for (long long p : prime_factors(n)) {
      Piece best;
      long long best_o = 0;
      for (int r = 0; r < k.d(); r++) {
        if (k.factors[r] % p != 0) continue;
        long long q = 1, t = k.factors[r];
        while (t % p == 0) {
          q *= p;
          t /= p;
        }
        long long c = ic[r] % q;
        long long o = q / std::gcd(q, c);
        if (o > best_o) {
          best_o = o;
          best = {r, q, c};
        }
      }
      require(best.gen >= 0, "Internal", "no K-component for a prime dividing n");
      picked[p] = best;
    }
    // combine the picked pieces into Z/d and push iota through it
    long long d = 1;
    for (auto& [p, pc] : picked) d *= pc.q;
    long long x = 0;
    std::vector<long long> gen_x(k.d(), 0);  // image of each K-generator in Z/d
    for (auto& [p, pc] : picked) {
      long long rest = d / pc.q;  // coprime to q
      long long e = rest * mod_inverse(rest % pc.q, pc.q) % d;  // 1 mod q, 0 elsewhere
      x = (x + pc.c * e) % d;
      gen_x[pc.gen] = (gen_x[pc.gen] + e) % d;
    }
    long long v = (ke / d) * x % ke;  // the reduced iota(1) inside Z/exp(K)
    require(v % (ke / n) == 0, "Internal", "reduced iota is not injective");
    long long a = v / (ke / n) % n;
    require(std::gcd(a, n) == 1, "Internal", "reduced iota is not injective");

    long long g0 = std::gcd(m, n);
    require(kappa_one % (m / g0) == 0, "Internal", "kappa value has the wrong order");
    long long b = kappa_one / (m / g0) % n * (n / g0) % n;
    long long xsol = b * mod_inverse(a, n) % n;  // a * xsol = b (mod n)

    long long scale = ze.l / ke;
    for (int r = 0; r < k.d(); r++) {
      long long w = (ke / d) % ze.l * (gen_x[r] % ze.l) % ze.l;
      w = w * (scale % ze.l) % ze.l;
      ze.phi_gen_images[r] = w * xsol % ze.l;
    }
  }

  for (int r = 0; r < k.d(); r++)
    require(ze.phi_gen_images[r] * k.factors[r] % ze.l == 0, "Internal",
            "phi is not a homomorphism");
  for (long long j = 0; j < n; j++) {
    long long lhs = phi_eval(ze, k, k.parent->power(iota_one, j));
    long long rhs = j * kappa_one % m * ze.theta_mult % ze.l;
    require(lhs == rhs, "Internal", "extension square fails to commute");
  }
  return ze;
}

long long phi_eval(const ZExtensionResult& ze, const AbelianPresentation& k, int elem) {
  auto c = k.coords(elem);
  require(c.has_value(), "NotMember", "element outside K");
  long long s = 0;
  for (int r = 0; r < k.d(); r++) s = (s + (*c)[r] * ze.phi_gen_images[r]) % ze.l;
  return s;
}

CoordSubgroup span_subgroup(const std::vector<std::vector<long long>>& gens,
                            std::vector<long long> moduli) {
  std::set<std::vector<long long>> seen;
  seen.insert(std::vector<long long>(moduli.size(), 0));
  std::vector<std::vector<long long>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (auto& v : frontier)
      for (auto& raw : gens) {
        auto g = reduce_coords(raw, moduli);
        auto w = add_vec(v, g, moduli);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }

  CoordSubgroup cs;
  cs.ambient_moduli = std::move(moduli);
  cs.members.assign(seen.begin(), seen.end());
  int n = (int)cs.members.size();
  std::map<std::vector<long long>, int> idx;
  for (int i = 0; i < n; i++) idx[cs.members[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      table[i][j] = idx.at(add_vec(cs.members[i], cs.members[j], cs.ambient_moduli));
  cs.table = CayleyGroup::validate(std::move(table), "span", 64);
  cs.pres = abelian_invariants_group(cs.table);
  return cs;
}

std::optional<std::vector<long long>> CoordSubgroup::coords(
    const std::vector<long long>& v) const {
  auto w = reduce_coords(v, ambient_moduli);
  auto it = std::lower_bound(members.begin(), members.end(), w);
  if (it == members.end() || *it != w) return std::nullopt;
  return pres.coords((int)(it - members.begin()));
}

std::vector<long long> CoordSubgroup::vector_at(const std::vector<long long>& c) const {
  return members[pres.element_at(c)];
}

std::vector<std::vector<long long>> CoordSubgroup::generator_vectors() const {
  std::vector<std::vector<long long>> out;
  for (int g : pres.generators) out.push_back(members[g]);
  return out;
}

long long ExtendedPolarisation::zeta(int z) const {
  long long t = discrete_log_cyclic(group, z_gen, z);
  return t * zeta_mult % l_hat;
}

long long ExtendedPolarisation::zeta_j(int which, int g) const {
  const auto& pres = which == 1 ? pre1_pres : pre2_pres;
  const auto& imgs = which == 1 ? zeta1_gen_images : zeta2_gen_images;
  auto c = pres.coords(g);
  require(c.has_value(), "NotMember", "element outside the polarisation preimage");
  long long s = 0;
  for (int r = 0; r < pres.d(); r++) s = (s + (*c)[r] * imgs[r]) % l_hat;
  return s;
}

ExtendedPolarisation build_polarisation(const GroupPtr& g) {
  auto cls = nilpotency_class_le2(g);
  require(cls.has_value(), "ClassTooHigh", "nilpotency class exceeds 2");
  require(*cls == 2, "AbelianInput", "group is abelian");
  auto z = centre(g);
  auto zp = abelian_invariants(z);
  require(zp.d() <= 1, "CentreNotCyclic", "centre needs " + std::to_string(zp.d()) +
                           " generators");

  ExtendedPolarisation pol;
  pol.group = g;
  pol.m = z.size();
  pol.z_gen = zp.generators[0];
  pol.am = module_from_extension(g, z, pol.z_gen);
  pol.iso = isotropic_structure(pol.am);
  const auto& am = pol.am;

  auto span_in_m = [&](const std::vector<std::vector<long long>>& basis) {
    std::vector<int> gens;
    for (auto& v : basis) gens.push_back(am.m_pres.element_at(v));
    return generate_subgroup(am.m_group, gens);
  };
  auto l1 = span_in_m(pol.iso.mq_basis);
  auto l2 = span_in_m(pol.iso.imq_basis);
  pol.l1_pres = abelian_invariants(l1);
  pol.l2_pres = abelian_invariants(l2);

  // lambda: L1 x L2 -> M must hit every element exactly once
  int mn = am.m_group->order();
  pol.lambda_inv.assign(mn, {-1, -1});
  for (int u : l1.members)
    for (int v : l2.members) {
      int s = am.m_group->mul(u, v);
      require(pol.lambda_inv[s].first == -1, "Internal", "isotropic parts overlap");
      pol.lambda_inv[s] = {u, v};
    }
  for (int s = 0; s < mn; s++)
    require(pol.lambda_inv[s].first != -1, "Internal", "isotropic parts do not cover");

  auto preimage_of = [&](const SubgroupHandle& l) {
    std::vector<int> members;
    for (int x = 0; x < g->order(); x++)
      if (l.contains(am.projection(x))) members.push_back(x);
    return make_subgroup_unchecked(g, std::move(members));
  };
  pol.pre1 = preimage_of(l1);
  pol.pre2 = preimage_of(l2);
  pol.pre1_pres = abelian_invariants(pol.pre1);  // isotropic => abelian preimage
  pol.pre2_pres = abelian_invariants(pol.pre2);

  auto reps_of = [&](const SubgroupHandle& pre) {
    std::vector<int> rep(mn, -1);
    for (int x : pre.members) {
      int pm = am.projection(x);
      if (rep[pm] == -1) rep[pm] = x;
    }
    return rep;
  };
  pol.rep1 = reps_of(pol.pre1);
  pol.rep2 = reps_of(pol.pre2);

  // chain the two cyclic extensions: first against Z(G) itself, then against
  // the cyclic group produced by the first step
  pol.ze1 = z_extension(pol.m, pol.pre1_pres, pol.z_gen, pol.m, 1);
  pol.l1 = pol.ze1.l;
  pol.ze2 = z_extension(pol.m, pol.pre2_pres, pol.z_gen, pol.l1, pol.ze1.theta_mult % pol.l1);
  pol.l_hat = pol.ze2.l;
  pol.zeta_mult = pol.ze2.theta_mult * pol.ze1.theta_mult % pol.l_hat;
  pol.zeta1_gen_images.clear();
  for (long long w : pol.ze1.phi_gen_images)
    pol.zeta1_gen_images.push_back(w * pol.ze2.theta_mult % pol.l_hat);
  pol.zeta2_gen_images = pol.ze2.phi_gen_images;

  for (int zm : z.members) {
    require(pol.zeta_j(1, zm) == pol.zeta(zm), "Internal", "zeta_1 disagrees on the centre");
    require(pol.zeta_j(2, zm) == pol.zeta(zm), "Internal", "zeta_2 disagrees on the centre");
  }
  return pol;
}

ElementDecomposition decompose_element(const ExtendedPolarisation& pol, int g) {
  const auto& gg = *pol.group;
  auto [u, v] = pol.lambda_inv[pol.am.projection(g)];
  int g1 = pol.rep1[u], g2 = pol.rep2[v];
  int c = gg.mul(gg.mul(gg.inv(g2), g), gg.inv(g1));
  require(pol.am.c_sub.contains(c), "Internal", "residual factor is not central");
  require(gg.mul(gg.mul(g2, c), g1) == g, "Internal", "decomposition fails to multiply back");
  return {g2, c, g1};
}

KeyCompletion key_completion(const ExtendedPolarisation& pol) {
  const auto& am = pol.am;
  KeyCompletion kc;
  BilinearMap mu;
  mu.a_factors = pol.l1_pres.factors;
  mu.b_factors = pol.l2_pres.factors;
  mu.c_factors = {pol.l_hat};

  auto mvec = [&](int e) { return *am.m_pres.coords(e); };
  std::vector<std::vector<long long>> agens, bgens;
  for (int e : pol.l1_pres.generators) agens.push_back(mvec(e));
  for (int e : pol.l2_pres.generators) bgens.push_back(mvec(e));
  mu.mu.assign(agens.size(), std::vector<std::vector<long long>>(bgens.size()));
  for (size_t i = 0; i < agens.size(); i++)
    for (size_t j = 0; j < bgens.size(); j++)
      mu.mu[i][j] = {omega_eval(am, agens[i], bgens[j]) * (pol.l_hat / pol.m) % pol.l_hat};
  kc.mu_hat = mu;
  kc.h = make_heisenberg(std::move(mu));

  for (int x = 0; x < pol.group->order(); x++) {
    auto dec = decompose_element(pol, x);
    auto [u, v] = pol.lambda_inv[am.projection(x)];
    long long d3 = (pol.zeta_j(2, dec.g2) + pol.zeta(dec.c) + pol.zeta_j(1, dec.g1)) % pol.l_hat;
    kc.delta.push_back(
        h_element(kc.h, *pol.l1_pres.coords(u), *pol.l2_pres.coords(v), {d3}));
  }
  return kc;
}

namespace {

void add_div(CertificateChecks& c, std::string label, long long a, long long b) {
  require(a != 0 && b % a == 0, "Internal", "divisibility check failed: " + label);
  c.div_chain.emplace_back(std::move(label), a, b);
}

void add_eq(CertificateChecks& c, std::string label, long long a, long long b) {
  require(a == b, "Internal", "equality check failed: " + label);
  c.equalities.emplace_back(std::move(label), a, b);
}

// hom + mono, through a Cayley table when H fits under the bound and by
// coordinate arithmetic otherwise; normality of the image is only decidable
// in table mode.
void verify_delta(EmbeddingCertificate& cert, bool check_normal) {
  const auto& g = *cert.source;
  if (cert.h.order <= table_bound()) {
    auto t = to_cayley(cert.h);
    GroupMap f;
    f.domain = cert.source;
    f.codomain = t.group;
    for (int x = 0; x < g.order(); x++) f.images.push_back(t.index_of(cert.h, cert.delta[x]));
    f = verify_map(std::move(f), MapKind::monomorphism);
    cert.checks.hom = cert.checks.mono = true;
    std::vector<int> img(f.images.begin(), f.images.end());
    std::sort(img.begin(), img.end());
    auto handle = make_subgroup_unchecked(t.group, std::move(img));
    bool normal = !normality_witness(handle).has_value();
    if (check_normal) require(normal, "Internal", "image is not normal");
    cert.checks.normal_image = normal;
    cert.checks.mode = "full";
  } else {
    for (int x = 0; x < g.order(); x++)
      for (int y = 0; y < g.order(); y++)
        require(cert.delta[g.mul(x, y)] ==
                    h_multiply(cert.h, cert.delta[x], cert.delta[y]),
                "Internal", "delta is not a homomorphism");
    std::set<std::pair<std::vector<long long>, std::pair<std::vector<long long>,
                                                         std::vector<long long>>>>
        seen;
    for (auto& d : cert.delta) seen.insert({d.a, {d.b, d.c}});
    require((int)seen.size() == g.order(), "Internal", "delta is not injective");
    cert.checks.hom = cert.checks.mono = true;
    cert.checks.normal_image = std::nullopt;
    cert.checks.mode = "partial";
  }
}

}  // namespace

EmbeddingCertificate embed_cyclic_centre(const GroupPtr& g) {
  auto cls = nilpotency_class_le2(g);
  require(cls.has_value(), "ClassTooHigh", "nilpotency class exceeds 2");
  auto z = centre(g);
  auto zp = abelian_invariants(z);
  require(zp.d() <= 1, "CentreNotCyclic",
          "centre needs " + std::to_string(zp.d()) + " generators");

  EmbeddingCertificate cert;
  cert.source = g;

  if (*cls <= 1) {
    // abelian with cyclic centre: G itself is cyclic and already central
    auto gp = abelian_invariants_group(g);
    BilinearMap mu{{}, {}, gp.factors, {}};
    cert.mu_hat = mu;
    cert.h = make_heisenberg(std::move(mu));
    for (int x = 0; x < g->order(); x++)
      cert.delta.push_back(h_element(cert.h, {}, {}, *gp.coords(x)));
    cert.centre_members = z.members;
    for (int zm : z.members) cert.zeta.push_back(*gp.coords(zm));
    verify_delta(cert, true);
    add_eq(cert.checks, "exp(A) = |G'|", 1, 1);
    add_div(cert.checks, "|G'| | |Z(G)|", 1, z.size());
    add_div(cert.checks, "|Z(G)| | |C|", z.size(), g->order());
    add_div(cert.checks, "|C| | exp(G)", g->order(), exponent(*g));
    cert.checks.d_counts = {{"d(A)", 0}, {"d(B)", 0}, {"d(C)", gp.d()}, {"d(Z(G))", zp.d()}};
    add_eq(cert.checks, "d(C) = d(Z(G))", gp.d(), zp.d());
    require(is_nondegenerate_mu(cert.mu_hat), "Internal", "mu is degenerate");
    cert.checks.nondegenerate = true;
    return cert;
  }

  auto pol = build_polarisation(g);
  auto kc = key_completion(pol);
  cert.mu_hat = std::move(kc.mu_hat);
  cert.h = std::move(kc.h);
  cert.delta = std::move(kc.delta);
  cert.centre_members = z.members;
  for (int zm : z.members) cert.zeta.push_back({pol.zeta(zm)});
  for (size_t i = 0; i < cert.centre_members.size(); i++)
    require(cert.delta[cert.centre_members[i]].c == cert.zeta[i] &&
                all_zero(cert.delta[cert.centre_members[i]].a) &&
                all_zero(cert.delta[cert.centre_members[i]].b),
            "Internal", "centre image disagrees with zeta");

  verify_delta(cert, true);
  auto der = derived_subgroup(g);
  add_eq(cert.checks, "exp(A) = |G'|", pol.l1_pres.exp(), der.size());
  add_eq(cert.checks, "exp(B) = |G'|", pol.l2_pres.exp(), der.size());
  add_div(cert.checks, "|G'| | |Z(G)|", der.size(), pol.m);
  add_div(cert.checks, "|Z(G)| | |C|", pol.m, pol.l_hat);
  add_div(cert.checks, "|C| | exp(G)", pol.l_hat, exponent(*g));
  cert.checks.d_counts = {{"d(A)", pol.l1_pres.d()},
                          {"d(B)", pol.l2_pres.d()},
                          {"d(C)", 1},
                          {"d(Z(G))", 1},
                          {"d(G/Z)", pol.am.m_pres.d()}};
  add_eq(cert.checks, "d(C) = d(Z(G))", 1, zp.d());
  require(is_nondegenerate_mu(cert.mu_hat), "Internal", "mu is degenerate");
  cert.checks.nondegenerate = true;
  return cert;
}

EmbeddingCertificate embed_general(const GroupPtr& g, bool allow_partial) {
  auto cls = nilpotency_class_le2(g);
  require(cls.has_value(), "ClassTooHigh", "nilpotency class exceeds 2");
  auto dec = c_decomposition_min(g);
  auto emb = subdirect_embedding(dec);
  std::vector<EmbeddingCertificate> parts;
  for (auto& q : emb.quotients) parts.push_back(embed_cyclic_centre(q.group));

  // block-diagonal product of the per-factor maps
  BilinearMap mb;
  std::vector<size_t> aoff, boff, coff;
  for (auto& p : parts) {
    aoff.push_back(mb.a_factors.size());
    boff.push_back(mb.b_factors.size());
    coff.push_back(mb.c_factors.size());
    auto& m = p.mu_hat;
    mb.a_factors.insert(mb.a_factors.end(), m.a_factors.begin(), m.a_factors.end());
    mb.b_factors.insert(mb.b_factors.end(), m.b_factors.begin(), m.b_factors.end());
    mb.c_factors.insert(mb.c_factors.end(), m.c_factors.begin(), m.c_factors.end());
  }
  mb.mu.assign(mb.a_factors.size(),
               std::vector<std::vector<long long>>(
                   mb.b_factors.size(), std::vector<long long>(mb.c_factors.size(), 0)));
  for (size_t p = 0; p < parts.size(); p++) {
    auto& m = parts[p].mu_hat;
    for (size_t i = 0; i < m.a_factors.size(); i++)
      for (size_t j = 0; j < m.b_factors.size(); j++)
        for (size_t k = 0; k < m.c_factors.size(); k++)
          mb.mu[aoff[p] + i][boff[p] + j][coff[p] + k] = m.mu[i][j][k];
  }
  auto hbar = make_heisenberg(mb);

  std::vector<HeisenbergElement> dbar;
  for (int x = 0; x < g->order(); x++) {
    HeisenbergElement e;
    for (size_t p = 0; p < parts.size(); p++) {
      const auto& d = parts[p].delta[emb.quotients[p].projection(x)];
      e.a.insert(e.a.end(), d.a.begin(), d.a.end());
      e.b.insert(e.b.end(), d.b.begin(), d.b.end());
      e.c.insert(e.c.end(), d.c.begin(), d.c.end());
    }
    dbar.push_back(std::move(e));
  }

  // restrict to the subgroups actually hit: A and B are the coordinate images
  // of G, C is generated by the centre image together with mu(A, B)
  std::vector<std::vector<long long>> avecs, bvecs;
  for (auto& e : dbar) {
    avecs.push_back(e.a);
    bvecs.push_back(e.b);
  }
  auto suba = span_subgroup(avecs, mb.a_factors);
  auto subb = span_subgroup(bvecs, mb.b_factors);

  auto z = centre(g);
  for (int zm : z.members)
    require(all_zero(dbar[zm].a) && all_zero(dbar[zm].b), "Internal",
            "centre image is not central");
  // C must contain the central coordinates of the whole image (not just of
  // the centre) for H(mu) to be closed around it, plus mu(A, B) for the
  // group law; it stays inside the product of the C_i, so d(C) = d(Z(G))
  // still comes out of the sandwich below
  std::vector<std::vector<long long>> cgens;
  for (auto& e : dbar) cgens.push_back(e.c);
  auto agens = suba.generator_vectors();
  auto bgens = subb.generator_vectors();
  for (auto& a : agens)
    for (auto& b : bgens) cgens.push_back(mu_eval(mb, a, b));
  auto subc = span_subgroup(cgens, mb.c_factors);

  BilinearMap mu;
  mu.a_factors = suba.pres.factors;
  mu.b_factors = subb.pres.factors;
  mu.c_factors = subc.pres.factors;
  mu.mu.assign(agens.size(), std::vector<std::vector<long long>>(bgens.size()));
  for (size_t i = 0; i < agens.size(); i++)
    for (size_t j = 0; j < bgens.size(); j++) {
      auto c = subc.coords(mu_eval(mb, agens[i], bgens[j]));
      require(c.has_value(), "Internal", "mu value escapes C");
      mu.mu[i][j] = *c;
    }

  EmbeddingCertificate cert;
  cert.source = g;
  cert.mu_hat = mu;
  cert.h = make_heisenberg(std::move(mu));
  for (auto& e : dbar) {
    auto a = suba.coords(e.a), b = subb.coords(e.b), c = subc.coords(e.c);
    require(a && b && c, "Internal", "delta image escapes the restricted group");
    cert.delta.push_back(h_element(cert.h, *a, *b, *c));
  }
  cert.centre_members = z.members;
  for (int zm : z.members) cert.zeta.push_back(*subc.coords(dbar[zm].c));

  if (cert.h.order > table_bound() && !allow_partial)
    fail("TooLargeToVerify", "|H| = " + std::to_string(cert.h.order) +
                                 " exceeds the table bound and partial mode is disabled");
  verify_delta(cert, false);

  auto zpres = abelian_invariants(z);
  auto gz = quotient(g, z);
  auto gzp = abelian_invariants_group(gz.group);
  auto derp = abelian_invariants(derived_subgroup(g));
  long long exp_ab = std::lcm(suba.pres.exp(), subb.pres.exp());
  add_div(cert.checks, "exp(G/Z) | exp(AxB)", gzp.exp(), exp_ab);
  add_div(cert.checks, "exp(AxB) | exp(G')", exp_ab, derp.exp());
  add_div(cert.checks, "exp(G') | exp(Z(G))", derp.exp(), zpres.exp());
  add_div(cert.checks, "exp(Z(G)) | exp(C)", zpres.exp(), subc.pres.exp());
  add_div(cert.checks, "exp(C) | exp(G)", subc.pres.exp(), exponent(*g));
  cert.checks.d_counts = {{"d(A)", suba.pres.d()},
                          {"d(B)", subb.pres.d()},
                          {"d(C)", subc.pres.d()},
                          {"d(Z(G))", zpres.d()},
                          {"d(G/Z)", gzp.d()}};
  add_eq(cert.checks, "d(C) = d(Z(G))", subc.pres.d(), zpres.d());
  require(suba.pres.d() <= gzp.d() && subb.pres.d() <= gzp.d(), "Internal",
          "A or B needs more generators than G/Z");
  require(is_nondegenerate_mu(cert.mu_hat), "Internal", "restricted mu is degenerate");
  cert.checks.nondegenerate = true;
  for (long long p : prime_factors(cert.h.order))
    require(g->order() % p == 0, "Internal", "H introduces a new prime");
  return cert;
}

}  // namespace nilheis
