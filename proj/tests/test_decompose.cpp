#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nilheis/decompose.hpp"
#include "nilheis/heisenberg.hpp"
#include "test_util.hpp"

using namespace nilheis;
namespace tu = nilheis::testutil;

namespace {

GroupPtr es32() {  // extraspecial of order 32: H(identity pairing on (Z/2)^2)
  BilinearMap m{{2, 2}, {2, 2}, {2}, {{{1}, {0}}, {{0}, {1}}}};
  return to_cayley(make_heisenberg(m)).group;
}

}  // namespace

TEST_CASE("existence decomposition") {
  auto q8 = tu::quaternion8();
  auto dec = c_decomposition_exists(q8);
  CHECK(dec.kernels.size() == 1);
  CHECK(dec.kernels[0].size() == 1);

  auto v4 = direct_product(tu::cyclic(2), tu::cyclic(2));
  dec = c_decomposition_exists(v4);
  check_c_decomposition(dec);  // validity is the contract; size may be larger
  CHECK(dec.kernels.size() >= 2);

  auto g = direct_product(tu::quaternion8(), tu::cyclic(2));
  check_c_decomposition(c_decomposition_exists(g));
}

TEST_CASE("p-minimal decomposition sizes") {
  CHECK(c_decomposition_p_minimal(tu::quaternion8()).kernels.size() == 1);
  CHECK(c_decomposition_p_minimal(tu::heisenberg_mod(3)).kernels.size() == 1);

  auto e8 = direct_product(direct_product(tu::cyclic(2), tu::cyclic(2)), tu::cyclic(2));
  auto dec = c_decomposition_p_minimal(e8);
  CHECK(dec.kernels.size() == 3);

  auto g = direct_product(tu::quaternion8(), tu::cyclic(2));
  dec = c_decomposition_p_minimal(g);
  CHECK(dec.kernels.size() == 2);
  CHECK(abelian_invariants(centre(g)).d() == 2);

  CHECK_THROWS_WITH_AS(c_decomposition_p_minimal(tu::cyclic(6)),
                       doctest::Contains("NotPGroup"), Error);
}

TEST_CASE("minimal decomposition for nilpotent groups") {
  // cyclic centre: single kernel
  CHECK(c_decomposition_min(tu::quaternion8()).kernels.size() == 1);
  CHECK(c_decomposition_min(tu::cyclic(12)).kernels.size() == 1);

  // Z/6 x Z/2: Sylow-2 is (Z/2)^2 needing 2, Sylow-3 cyclic needing 1
  auto g = direct_product(tu::cyclic(6), tu::cyclic(2));
  CHECK(c_decomposition_min(g).kernels.size() == 2);

  // Q8 x Z/9: centre Z/2 x Z/9 = Z/18 cyclic
  auto q89 = direct_product(tu::quaternion8(), tu::cyclic(9));
  CHECK(c_decomposition_min(q89).kernels.size() == 1);

  CHECK_THROWS_WITH_AS(c_decomposition_min(tu::dihedral(3)), doctest::Contains("NotNilpotent"),
                       Error);
}

TEST_CASE("minimal decomposition matches d(Z(G)) across small nilpotent groups") {
  std::vector<GroupPtr> gs = {
      tu::quaternion8(),
      tu::dihedral(4),
      tu::heisenberg_mod(3),
      es32(),
      direct_product(tu::quaternion8(), tu::cyclic(2)),
      direct_product(tu::dihedral(4), tu::cyclic(4)),
      direct_product(tu::cyclic(6), tu::cyclic(2)),
      direct_product(tu::quaternion8(), tu::cyclic(3)),
  };
  for (auto& g : gs) {
    auto dec = c_decomposition_min(g);
    check_c_decomposition(dec);
    int dz = abelian_invariants(centre(g)).d();
    CHECK((int)dec.kernels.size() == std::max(dz, 1));
  }
}

TEST_CASE("subdirect embedding") {
  // single kernel = 1: isomorphism onto the lone factor
  auto q8 = tu::quaternion8();
  auto emb = subdirect_embedding(c_decomposition_min(q8));
  CHECK(emb.product->order() == 8);
  CHECK(emb.map.kind == MapKind::monomorphism);

  // Klein four-group with the two factor kernels: bijective
  auto v4 = direct_product(tu::cyclic(2), tu::cyclic(2));
  CDecomposition dec{v4, {generate_subgroup(v4, {1}), generate_subgroup(v4, {2})}};
  emb = subdirect_embedding(dec);
  CHECK(emb.product->order() == 4);
  std::set<int> images(emb.map.images.begin(), emb.map.images.end());
  CHECK(images.size() == 4);

  // Q8 x Z/2: injective, both projections surjective, centre lands in centres
  auto g = direct_product(tu::quaternion8(), tu::cyclic(2));
  auto mdec = c_decomposition_min(g);
  emb = subdirect_embedding(mdec);
  CHECK(emb.map.kind == MapKind::monomorphism);
  for (auto& q : emb.quotients) {
    std::set<int> seen;
    for (int x = 0; x < g->order(); x++) seen.insert(q.projection(x));
    CHECK((int)seen.size() == q.group->order());
    auto zq = centre(q.group);
    for (int z : centre(g).members) CHECK(zq.contains(q.projection(z)));
  }
}

TEST_CASE("central product decomposition of Q8") {
  auto cpd = central_product_decomposition(tu::quaternion8());
  CHECK(cpd.t == 1);
  CHECK(cpd.abelian_part.size() == 1);
  CHECK(cpd.factors.size() == 1);
  CHECK(cpd.factors[0].size() == 8);
  CHECK(cpd.derived_chain[0].size() == 2);
}

TEST_CASE("central product decomposition of the extraspecial groups of order 27") {
  for (auto g : {tu::heisenberg_mod(3), tu::extraspecial_exp_p2(3)}) {
    auto cpd = central_product_decomposition(g);
    CHECK(cpd.t == 1);
    CHECK(cpd.abelian_part.size() == 1);
    CHECK(cpd.factors[0].size() == 27);
  }
}

TEST_CASE("central product decomposition of the extraspecial group of order 32") {
  auto cpd = central_product_decomposition(es32());
  CHECK(cpd.t == 2);
  CHECK(cpd.abelian_part.size() == 1);
  for (auto& e : cpd.factors) CHECK(e.size() == 8);
  for (auto& d : cpd.derived_chain) CHECK(d.size() == 2);  // all equal G' = Z/2
  // reconstruction and commutation were asserted internally; spot-check the
  // central product covers G
  SubgroupHandle prod = cpd.abelian_part;
  for (auto& e : cpd.factors) prod = product_subgroup(prod, e);
  CHECK(prod.size() == 32);
}

TEST_CASE("central product decomposition of D4 x Z/4") {
  auto g = direct_product(tu::dihedral(4), tu::cyclic(4));
  auto cpd = central_product_decomposition(g);
  CHECK(cpd.t == 1);
  CHECK(abelian_invariants(cpd.abelian_part).d() == 1);
  CHECK(d_nilpotent(g) == 3);  // 2t + d(A) = 2 + 1
}

TEST_CASE("central product decomposition precondition failures") {
  CHECK_THROWS_WITH_AS(central_product_decomposition(tu::cyclic(8)),
                       doctest::Contains("AbelianInput"), Error);
  CHECK_THROWS_WITH_AS(central_product_decomposition(tu::dihedral(8)),
                       doctest::Contains("ClassTooHigh"), Error);
  // D4 x Q8 has derived subgroup Z/2 x Z/2
  auto g = direct_product(tu::dihedral(4), tu::quaternion8());
  CHECK_THROWS_WITH_AS(central_product_decomposition(g),
                       doctest::Contains("DerivedNotCyclic"), Error);
}

TEST_CASE("derived subgroup helper agrees with the whole-group computation") {
  for (auto g : {tu::quaternion8(), tu::dihedral(4), tu::heisenberg_mod(3)}) {
    CHECK(derived_of_subgroup(full_subgroup(g)).members == derived_subgroup(g).members);
    CHECK(derived_of_subgroup(centre(g)).size() == 1);
  }
}
