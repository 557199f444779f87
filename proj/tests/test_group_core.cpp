#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nilheis/group.hpp"
#include "test_util.hpp"

using namespace nilheis;
namespace tu = nilheis::testutil;

TEST_CASE("validate accepts classical small groups") {
  CHECK(tu::cyclic(1)->order() == 1);
  CHECK(tu::cyclic(12)->order() == 12);
  CHECK(tu::dihedral(4)->order() == 8);
  CHECK(tu::quaternion8()->order() == 8);
  CHECK(tu::heisenberg_mod(3)->order() == 27);
}

TEST_CASE("validate finds identity not at index 0") {
  // Z/3 with elements relabelled so the identity sits at index 2
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = CayleyGroup::validate(t);
  CHECK(g->identity() == 2);
}

TEST_CASE("validate rejects broken tables with witnesses") {
  CHECK_THROWS_WITH_AS(CayleyGroup::validate({}), doctest::Contains("empty"), Error);
  CHECK_THROWS_WITH_AS(CayleyGroup::validate({{0, 1}, {1}}), doctest::Contains("wrong length"),
                       Error);
  CHECK_THROWS_WITH_AS(CayleyGroup::validate({{0, 5}, {1, 0}}), doctest::Contains("out of range"),
                       Error);
  // no identity row/column
  CHECK_THROWS_WITH_AS(CayleyGroup::validate({{0, 0}, {1, 1}}), doctest::Contains("identity"),
                       Error);
  // identity exists but a row repeats an entry
  CHECK_THROWS_WITH_AS(CayleyGroup::validate({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}),
                       doctest::Contains("repeats"), Error);
  // a loop of order 5: identity and Latin square hold, associativity fails
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  CHECK_THROWS_WITH_AS(CayleyGroup::validate(loop), doctest::Contains("non-associative"), Error);
}

TEST_CASE("light's test agrees with the full associativity scan") {
  // force the generating-set path with a tiny scan bound
  auto t = tu::dihedral_table(6);
  CHECK(CayleyGroup::validate(t, "", /*assoc_scan_bound=*/1)->order() == 12);
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  CHECK_THROWS_WITH_AS(CayleyGroup::validate(loop, "", 1), doctest::Contains("non-associative"),
                       Error);
}

TEST_CASE("powers orders and commutators in Q8") {
  auto q8 = tu::quaternion8();
  int i = 2, j = 4, minus1 = 1;
  CHECK(q8->element_order(i) == 4);
  CHECK(q8->element_order(minus1) == 2);
  CHECK(q8->power(i, 2) == minus1);
  CHECK(q8->power(i, -1) == 3);   // i^-1 = -i
  CHECK(q8->power(i, 0) == q8->identity());
  CHECK(q8->commutator(i, j) == minus1);  // [i,j] = -1
  CHECK(exponent(*q8) == 4);
}

TEST_CASE("centre and derived subgroup") {
  auto q8 = tu::quaternion8();
  CHECK(centre(q8).members == std::vector<int>{0, 1});
  CHECK(derived_subgroup(q8).members == std::vector<int>{0, 1});

  auto d4 = tu::dihedral(4);
  CHECK(centre(d4).size() == 2);
  CHECK(derived_subgroup(d4).size() == 2);

  auto s3 = tu::dihedral(3);
  CHECK(centre(s3).size() == 1);
  CHECK(derived_subgroup(s3).size() == 3);

  auto h27 = tu::heisenberg_mod(3);
  CHECK(centre(h27).size() == 3);
  CHECK(derived_subgroup(h27).members == centre(h27).members);
}

TEST_CASE("subgroup lattice operations") {
  auto d4 = tu::dihedral(4);
  auto rot = generate_subgroup(d4, {1});
  CHECK(rot.members == std::vector<int>{0, 1, 2, 3});
  auto refl = generate_subgroup(d4, {4});
  CHECK(refl.size() == 2);
  CHECK(intersect(rot, refl).members == std::vector<int>{0});
  CHECK(product_subgroup(rot, refl).size() == 8);
  CHECK(trivial_subgroup(d4).size() == 1);
  CHECK(full_subgroup(d4).size() == 8);

  auto z = centre(d4);
  CHECK(centralizer(d4, z).size() == 8);
  CHECK(centralizer(d4, full_subgroup(d4)).members == z.members);
}

TEST_CASE("normality witnesses") {
  auto s3 = tu::dihedral(3);
  auto rot = generate_subgroup(s3, {1});
  CHECK(!normality_witness(rot));
  auto refl = generate_subgroup(s3, {3});
  auto w = normality_witness(refl);
  REQUIRE(w);
  // the witness really conjugates the subgroup out of itself
  bool moves = false;
  for (int m : refl.members)
    if (!refl.contains(s3->mul(s3->mul(*w, m), s3->inv(*w)))) moves = true;
  CHECK(moves);
}

TEST_CASE("nilpotency class classification") {
  CHECK(nilpotency_class_le2(tu::cyclic(1)) == 0);
  CHECK(nilpotency_class_le2(tu::cyclic(6)) == 1);
  CHECK(nilpotency_class_le2(tu::quaternion8()) == 2);
  CHECK(nilpotency_class_le2(tu::dihedral(4)) == 2);
  CHECK(nilpotency_class_le2(tu::heisenberg_mod(3)) == 2);
  CHECK(!nilpotency_class_le2(tu::dihedral(3)));   // S3 is not nilpotent
  CHECK(!nilpotency_class_le2(tu::dihedral(8)));   // D16 has class 3
}

TEST_CASE("quotients") {
  auto q8 = tu::quaternion8();
  auto q = quotient(q8, centre(q8));
  CHECK(q.group->order() == 4);
  CHECK(exponent(*q.group) == 2);  // Q8/Z = Klein four-group
  // projection is a verified surjective homomorphism onto the quotient
  verify_map(q.projection, MapKind::unverified);
  // coset representatives are minimal in their cosets
  for (int c = 0; c < q.group->order(); c++)
    for (int x = 0; x < q8->order(); x++)
      if (q.projection(x) == c) CHECK(q.coset_reps[c] <= x);

  auto s3 = tu::dihedral(3);
  CHECK(quotient(s3, generate_subgroup(s3, {1})).group->order() == 2);
  CHECK_THROWS_WITH_AS(quotient(s3, generate_subgroup(s3, {3})), doctest::Contains("NotNormal"),
                       Error);
}

TEST_CASE("nilpotence and sylow splitting") {
  CHECK(is_nilpotent(*tu::cyclic(12)));
  CHECK(is_nilpotent(*tu::quaternion8()));
  CHECK(!is_nilpotent(*tu::dihedral(3)));
  CHECK(!is_nilpotent(*tu::dihedral(6)));

  auto z12 = tu::cyclic(12);
  auto syl = sylow_split(z12);
  REQUIRE(syl.size() == 2);
  CHECK(syl[0].size() == 4);
  CHECK(syl[1].size() == 3);
  CHECK(intersect(syl[0], syl[1]).size() == 1);
  CHECK(product_subgroup(syl[0], syl[1]).size() == 12);

  CHECK_THROWS_WITH_AS(sylow_split(tu::dihedral(3)), doctest::Contains("NotNilpotent"), Error);
}

TEST_CASE("map verification") {
  auto z4 = tu::cyclic(4);
  auto z2 = tu::cyclic(2);
  GroupMap f{z4, z2, {0, 1, 0, 1}, MapKind::unverified};
  CHECK(verify_map(f, MapKind::unverified).kind == MapKind::homomorphism);
  GroupMap bad{z4, z2, {0, 1, 1, 0}, MapKind::unverified};
  CHECK_THROWS_WITH_AS(verify_map(bad, MapKind::unverified), doctest::Contains("NotHomomorphism"),
                       Error);
  CHECK_THROWS_WITH_AS(verify_map(f, MapKind::monomorphism), doctest::Contains("NotInjective"),
                       Error);
  GroupMap inc{z2, z4, {0, 2}, MapKind::unverified};
  CHECK(verify_map(inc, MapKind::monomorphism).kind == MapKind::monomorphism);
  CHECK_THROWS_WITH_AS(verify_map(inc, MapKind::isomorphism), doctest::Contains("NotSurjective"),
                       Error);
  GroupMap id{z4, z4, {0, 1, 2, 3}, MapKind::unverified};
  CHECK(verify_map(id, MapKind::isomorphism).kind == MapKind::isomorphism);
}

TEST_CASE("subgroup as standalone group round-trips") {
  auto d4 = tu::dihedral(4);
  auto rot = generate_subgroup(d4, {1});
  auto sub = subgroup_as_group(rot);
  CHECK(sub.group->order() == 4);
  CHECK(exponent(*sub.group) == 4);
  for (int i = 0; i < 4; i++) CHECK(sub.from_parent[sub.to_parent[i]] == i);
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++)
      CHECK(sub.to_parent[sub.group->mul(i, j)] ==
            d4->mul(sub.to_parent[i], sub.to_parent[j]));

  auto refl = make_subgroup_unchecked(d4, {0, 4, 5});
  CHECK_THROWS_WITH_AS(subgroup_as_group(refl), doctest::Contains("not closed"), Error);
}

TEST_CASE("direct products") {
  auto g = direct_product(tu::cyclic(2), tu::cyclic(3));
  CHECK(g->order() == 6);
  CHECK(is_abelian(*g));
  CHECK(exponent(*g) == 6);

  auto h = direct_product(tu::quaternion8(), tu::cyclic(3));
  CHECK(h->order() == 24);
  CHECK(centre(h).size() == 6);
  CHECK(nilpotency_class_le2(h) == 2);
}

TEST_CASE("prime factorisation helper") {
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(12) == std::vector<long long>{2, 3});
  CHECK(prime_factors(97) == std::vector<long long>{97});
  CHECK(prime_factors(360) == std::vector<long long>{2, 3, 5});
}
