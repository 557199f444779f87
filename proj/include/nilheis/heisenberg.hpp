#pragma once

#include <vector>

#include "nilheis/group.hpp"
#include "nilheis/normal_forms.hpp"

namespace nilheis {

// mu: A x B -> C on finite abelian groups given by invariant factors; values
// on generator pairs are C-coordinate vectors.
struct BilinearMap {
  std::vector<long long> a_factors, b_factors, c_factors;
  std::vector<std::vector<std::vector<long long>>> mu;  // mu[i][j] in C
};

struct HeisenbergElement {
  std::vector<long long> a, b, c;
  bool operator==(const HeisenbergElement& o) const = default;
};

// H(mu) = A x B x C with (a,b,c)(a',b',c') = (a+a', b+b', c + mu(a,b') + c').
// Elements stay coordinate vectors; a Cayley table exists only through
// to_cayley and only below the materialization bound.
struct HeisenbergGroup {
  BilinearMap map;
  long long order = 1;

  HeisenbergElement identity() const;
  bool contains(const HeisenbergElement& x) const;  // coordinates reduced & sized
};

// Validates the order-compatibility invariant of mu.
HeisenbergGroup make_heisenberg(BilinearMap m);

// Bilinear expansion of mu on coordinate vectors.
std::vector<long long> mu_eval(const BilinearMap& m, const std::vector<long long>& a,
                               const std::vector<long long>& b);

HeisenbergElement h_element(const HeisenbergGroup& h, std::vector<long long> a,
                            std::vector<long long> b, std::vector<long long> c);

HeisenbergElement h_multiply(const HeisenbergGroup& h, const HeisenbergElement& x,
                             const HeisenbergElement& y);
HeisenbergElement h_inverse(const HeisenbergGroup& h, const HeisenbergElement& x);
HeisenbergElement h_commutator(const HeisenbergGroup& h, const HeisenbergElement& x,
                               const HeisenbergElement& y);
HeisenbergElement h_power(const HeisenbergGroup& h, const HeisenbergElement& x, long long e);

// Z(H) = {(a,b,c) : mu(a,B) = 0, mu(A,b) = 0}: generators of both kernels
// plus all of C, and the cardinality.
struct HeisenbergCentre {
  std::vector<std::vector<long long>> a_kernel_gens;
  std::vector<std::vector<long long>> b_kernel_gens;
  long long size = 1;  // |ker_A| * |ker_B| * |C|
};
HeisenbergCentre h_centre(const HeisenbergGroup& h);

// Both kernels trivial.
bool is_nondegenerate_mu(const BilinearMap& m);

// Cayley-table bridge with the coordinate dictionary. Allowed only up to the
// bound (default 4096, overridable via the NILHEIS_TABLE_BOUND environment
// variable); throws TooLarge beyond it.
struct HeisenbergTable {
  GroupPtr group;
  std::vector<HeisenbergElement> elements;  // index -> element
  int index_of(const HeisenbergGroup& h, const HeisenbergElement& x) const;
};
long long table_bound();
HeisenbergTable to_cayley(const HeisenbergGroup& h);

// For non-degenerate mu with A = B (same factors) and cyclic C with
// exp(A) | |C|: the isomorphism (a,a',c) -> (x -> mu(a,x), a', c) onto the
// evaluation Heisenberg group H(A,C), verified exhaustively on tables.
struct CanonicalHomForm {
  HeisenbergGroup target;
  HeisenbergTable domain_table, target_table;
  GroupMap iso;
};
CanonicalHomForm canonical_hom_form(const BilinearMap& m);

}  // namespace nilheis
