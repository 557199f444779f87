#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nilheis/abelian.hpp"
#include "nilheis/altmod.hpp"
#include "nilheis/group.hpp"
#include "nilheis/heisenberg.hpp"

namespace nilheis {

// Completion of the square
//     Z/n --iota--> K
//      |kappa       |phi
//     Z/m --theta-> Z/l,   l = lcm(m, exp(K)), theta injective.
struct ZExtensionResult {
  long long l = 1;
  long long theta_mult = 1;               // theta(i) = i * (l/m)
  std::vector<long long> phi_gen_images;  // phi on K's generators, mod l
};

// iota_one: the element iota(1) of K's parent group (must have order n);
// kappa_one: kappa(1) in Z/m. The commuting square is re-checked by full
// enumeration of Z/n before returning. Error: NotInjective.
ZExtensionResult z_extension(long long n, const AbelianPresentation& k, int iota_one,
                             long long m, long long kappa_one);

long long phi_eval(const ZExtensionResult& ze, const AbelianPresentation& k, int elem);

// A subgroup of a coordinate module presented with its own invariant factors;
// bridge between ambient vectors and subgroup coordinates.
struct CoordSubgroup {
  std::vector<long long> ambient_moduli;
  std::vector<std::vector<long long>> members;  // sorted; position = table index
  GroupPtr table;
  AbelianPresentation pres;  // over table

  std::optional<std::vector<long long>> coords(const std::vector<long long>& v) const;
  std::vector<long long> vector_at(const std::vector<long long>& coords) const;
  std::vector<std::vector<long long>> generator_vectors() const;
};
CoordSubgroup span_subgroup(const std::vector<std::vector<long long>>& gens,
                            std::vector<long long> moduli);

// Everything needed to run the delta-construction on a nonabelian group with
// cyclic centre: the commutator module, its isotropic splitting M = L1 (+) L2,
// the abelian preimages, and the two chained cyclic extensions giving
// zeta: Z(G) -> Z/l_hat with compatible zeta_j on the preimages.
struct ExtendedPolarisation {
  GroupPtr group;
  AlternatingModule am;   // over C = Z(G)
  IsotropicStructure iso;
  long long m = 1;        // |Z(G)|
  int z_gen = -1;

  SubgroupHandle pre1, pre2;            // preimages of L1, L2 in G
  AbelianPresentation pre1_pres, pre2_pres;
  AbelianPresentation l1_pres, l2_pres; // presentations of L_j inside G/Z

  ZExtensionResult ze1, ze2;
  long long l1 = 1, l_hat = 1;
  long long zeta_mult = 1;  // zeta(z_gen^t) = t * zeta_mult mod l_hat
  std::vector<long long> zeta1_gen_images, zeta2_gen_images;  // mod l_hat

  std::vector<int> rep1, rep2;  // minimal G-rep per L_j element (G/Z index), -1 outside
  std::vector<std::pair<int, int>> lambda_inv;  // per G/Z element: (L1 part, L2 part)

  long long zeta(int z) const;          // Z(G) -> Z/l_hat
  long long zeta_j(int which, int g) const;  // preimage_j -> Z/l_hat
};

// Errors: CentreNotCyclic, ClassTooHigh, AbelianInput.
ExtendedPolarisation build_polarisation(const GroupPtr& g);

struct ElementDecomposition {
  int g2, c, g1;  // g = g2 * c * g1 with g2 in pre2, c in Z(G), g1 in pre1
};
ElementDecomposition decompose_element(const ExtendedPolarisation& pol, int g);

struct KeyCompletion {
  BilinearMap mu_hat;  // L1 x L2 -> Z/l_hat
  HeisenbergGroup h;
  std::vector<HeisenbergElement> delta;  // per G element
};
KeyCompletion key_completion(const ExtendedPolarisation& pol);

struct CertificateChecks {
  bool hom = false, mono = false;
  std::optional<bool> normal_image;  // only certified in full table mode
  std::vector<std::tuple<std::string, long long, long long>> div_chain;  // label, a, b: a|b
  std::vector<std::tuple<std::string, long long, long long>> equalities;
  bool nondegenerate = false;
  std::vector<std::pair<std::string, long long>> d_counts;
  std::string mode = "full";  // "partial" when H exceeds the table bound
};

struct EmbeddingCertificate {
  GroupPtr source;
  BilinearMap mu_hat;
  HeisenbergGroup h;
  std::vector<HeisenbergElement> delta;         // per source element
  std::vector<int> centre_members;
  std::vector<std::vector<long long>> zeta;     // C-coordinates per centre member
  CertificateChecks checks;
};

// Cyclic-centre embedding (abelian G takes the degenerate A = B = 0 route).
// Errors: ClassTooHigh, CentreNotCyclic.
EmbeddingCertificate embed_cyclic_centre(const GroupPtr& g);

// General class-2 embedding: minimal subdirect decomposition, per-factor
// cyclic-centre embeddings, product map, restriction to the images.
// Errors: ClassTooHigh; TooLargeToVerify when full table verification is
// impossible and allow_partial is false.
EmbeddingCertificate embed_general(const GroupPtr& g, bool allow_partial = true);

}  // namespace nilheis
