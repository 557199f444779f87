#pragma once

#include <optional>
#include <vector>

#include "nilheis/group.hpp"

namespace nilheis {

// A finite abelian group as an invariant-factor chain n_1 | n_2 | ... with
// chosen generator elements in a parent Cayley group. The coordinate
// dictionary makes (e_1,...,e_k) -> prod g_i^{e_i} explicitly invertible.
struct AbelianPresentation {
  std::vector<long long> factors;  // each >= 2, divisibility chain
  std::vector<int> generators;     // parent element indices, generators[i] has order factors[i]
  GroupPtr parent;
  std::vector<int> members;        // sorted member list of the presented subgroup
  std::vector<std::vector<long long>> member_coords;  // aligned with members

  long long order() const {
    long long o = 1;
    for (long long f : factors) o *= f;
    return o;
  }
  long long exp() const { return factors.empty() ? 1 : factors.back(); }
  int d() const { return (int)factors.size(); }

  std::optional<std::vector<long long>> coords(int parent_element) const;
  int element_at(const std::vector<long long>& coords) const;
};

// Invariant factors with explicit generators, by primary decomposition.
// Throws NotAbelian with a witness pair.
AbelianPresentation abelian_invariants(const SubgroupHandle& a);
AbelianPresentation abelian_invariants_group(const GroupPtr& g);

// Lemma-2.3 style selection: a sublist Y of X with |Y| <= d(A) and trivial
// intersection. A must be an abelian p-group, X subgroups of A with trivial
// intersection. Returns indices into X.
std::vector<int> trivially_intersecting_subset(const SubgroupHandle& a,
                                               const std::vector<SubgroupHandle>& x);

// Smallest e >= 0 with c^e = x, or NotMember.
long long discrete_log_cyclic(const GroupPtr& g, int c, int x);

}  // namespace nilheis
