#pragma once

#include <utility>
#include <vector>

#include "nilheis/abelian.hpp"
#include "nilheis/group.hpp"
#include "nilheis/normal_forms.hpp"

namespace nilheis {

// A finite abelian module M = ⊕ Z/m_i with an alternating bilinear pairing
// omega into a cyclic group C = Z/c. Elements of M are coordinate vectors
// over m_orders. When built from a group extension, enough provenance is kept
// to move between module coordinates and group elements.
struct AlternatingModule {
  std::vector<long long> m_orders;               // invariant factors of M
  long long c_order = 1;                         // |C|; 1 encodes trivial C
  std::vector<std::vector<long long>> omega;     // omega[i][j] mod c_order

  // provenance (set by module_from_extension, empty otherwise)
  GroupPtr source;                 // G
  int c_gen = -1;                  // generator of C in G
  SubgroupHandle c_sub;            // C as subgroup of G
  GroupPtr m_group;                // G/C
  GroupMap projection;             // G -> G/C
  std::vector<int> coset_reps;     // per G/C element, minimal-index rep in G
  AbelianPresentation m_pres;      // presentation of G/C
  std::vector<int> lifts;          // chosen lift of each module generator into G

  int rank() const { return (int)m_orders.size(); }
  bool has_source() const { return source != nullptr; }
};

std::vector<long long> reduce_coords(std::vector<long long> v,
                                     const std::vector<long long>& moduli);

// omega extended bilinearly to coordinate vectors, least nonnegative mod c.
long long omega_eval(const AlternatingModule& am, const std::vector<long long>& u,
                     const std::vector<long long>& v);

// Module coordinates of a source-group element (must map into M), and the
// chosen lift of a coordinate vector back into the source group.
std::vector<long long> project_to_module(const AlternatingModule& am, int g);
int lift_to_source(const AlternatingModule& am, const std::vector<long long>& v);

// The pairing induced on M = G/C by the commutator, for central cyclic C
// containing the derived subgroup. Errors: NotCyclic, NotCentral,
// DerivedNotContained.
AlternatingModule module_from_extension(const GroupPtr& g, const SubgroupHandle& c, int c_gen);

// Generators of {m : omega(m, g) = 0 for all g in gens}. Empty gens means all
// of M (unit vectors).
std::vector<std::vector<long long>> orthogonal_complement(
    const AlternatingModule& am, const std::vector<std::vector<long long>>& gens);

// True iff the radical M^perp is trivial.
bool is_nondegenerate(const AlternatingModule& am);

struct DarbouxBasis {
  IntMatrix basis_matrix;                         // column j = new generator j, det = 1
  std::vector<std::vector<long long>> generators; // columns reduced mod m_orders
  std::vector<std::pair<int, int>> pairs;         // (x_i, y_i) indices, i < t
  std::vector<int> residual;                      // indices pairing to zero
  std::vector<long long> hyperbolic_values;       // omega(x_i, y_i) mod c, nonzero
  int t = 0;
};

// New generating tuple in which omega is hyperbolic-block diagonal with
// values forming a chain of subgroups of C. The result is checked by direct
// re-evaluation of omega, never trusted from the integer lift
// (DegenerateLift if both the nonnegative and the symmetric lift fail).
DarbouxBasis darboux_generators(const AlternatingModule& am);

struct IsotropicStructure {
  DarbouxBasis darboux;
  std::vector<std::vector<long long>> mq_basis;   // the x_i
  std::vector<std::vector<long long>> imq_basis;  // the y_i = i*x_i
  IntMatrix i_action;      // matrix of the automorphism i on M's generators
  long long q_order = 1;   // |omega(M,M)| as a subgroup of C
  long long phi_mult = 1;  // embedding Q -> C is multiplication by c/q
  std::vector<long long> alpha;  // x_1 (empty for trivial M)
};

// Complex structure i with M = M_Q (+) iM_Q, both isotropic, from a Darboux
// basis of a non-degenerate module. Error: Degenerate.
IsotropicStructure isotropic_structure(const AlternatingModule& am);

// i applied to a coordinate vector.
std::vector<long long> apply_i(const AlternatingModule& am, const IsotropicStructure& is,
                               const std::vector<long long>& v);

// omega_Q(u,v) = omega(u,v) / phi_mult, a residue mod q.
long long omega_q(const AlternatingModule& am, const IsotropicStructure& is,
                  const std::vector<long long>& u, const std::vector<long long>& v);

// Hermitian form h(m,m') = omega_Q(i m, m') + i omega_Q(m, m') as (Re, Im)
// residues mod q with i^2 = -1.
std::pair<long long, long long> hermitian(const AlternatingModule& am,
                                          const IsotropicStructure& is,
                                          const std::vector<long long>& u,
                                          const std::vector<long long>& v);

}  // namespace nilheis
