#pragma once

#include <vector>

#include "nilheis/abelian.hpp"
#include "nilheis/altmod.hpp"
#include "nilheis/group.hpp"

namespace nilheis {

// A family of normal subgroups with cyclic-centre quotients and trivial
// intersection: G embeds subdirectly into the product of the quotients.
struct CDecomposition {
  GroupPtr group;
  std::vector<SubgroupHandle> kernels;
};

// Asserts normality, cyclic centre of every quotient, trivial intersection.
void check_c_decomposition(const CDecomposition& dec);

// Existence by recursion on the cyclic invariant factors of the centre; the
// result is valid but may use more kernels than necessary.
CDecomposition c_decomposition_exists(const GroupPtr& g);

// Exactly d(Z(P)) kernels for a p-group, by refining the existence result
// through a trivially-intersecting selection inside Z(P). Error: NotPGroup.
CDecomposition c_decomposition_p_minimal(const GroupPtr& p);

// Exactly d(Z(G)) kernels for nilpotent G: per-Sylow minimal decompositions
// merged slot-by-slot (missing slots padded with the whole Sylow subgroup).
// Error: NotNilpotent.
CDecomposition c_decomposition_min(const GroupPtr& g);

struct SubdirectEmbedding {
  GroupPtr product;                      // external direct product of the quotients
  std::vector<QuotientResult> quotients; // aligned with dec.kernels
  GroupMap map;                          // monomorphism G -> product
};

// The embedding g -> (g N_1, ..., g N_k), verified injective, with every
// projection surjective by construction.
SubdirectEmbedding subdirect_embedding(const CDecomposition& dec);

struct CentralProductDecomposition {
  GroupPtr group;
  SubgroupHandle abelian_part;             // A <= Z(G)
  std::vector<SubgroupHandle> factors;     // E_1, ..., E_t
  int t = 0;
  std::vector<SubgroupHandle> derived_chain;  // E_i', descending, non-strict
};

// G = A E_1 ... E_t as a central product, from Darboux generators of the
// commutator pairing on G/G'. Every structural claim is verified before
// returning. Errors: AbelianInput, DerivedNotCyclic, ClassTooHigh.
CentralProductDecomposition central_product_decomposition(const GroupPtr& g);

// Subgroup generated by all commutators of members of h, inside the parent.
SubgroupHandle derived_of_subgroup(const SubgroupHandle& h);

}  // namespace nilheis
