#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilheis/errors.hpp"

namespace nilheis {

class CayleyGroup;
using GroupPtr = std::shared_ptr<const CayleyGroup>;

// A concrete finite group as a full multiplication table. Immutable after
// validation; every operation on it is a pure function.
class CayleyGroup {
public:
  // Validates group axioms. Associativity is checked by the full n^3 scan up
  // to assoc_scan_bound and by Light's test on a generating set beyond that.
  // Throws NotAGroup with a witness otherwise.
  static GroupPtr validate(std::vector<std::vector<int>> table, std::string label = "",
                           int assoc_scan_bound = 512);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return table_[size_t(g) * n_ + h]; }
  int inv(int g) const { return inverses_[g]; }
  const std::string& label() const { return label_; }
  const std::vector<int>& inverses() const { return inverses_; }

  // [g,h] = g^-1 h^-1 g h
  int commutator(int g, int h) const {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }
  int power(int g, long long e) const;
  int element_order(int g) const;
  std::vector<std::vector<int>> table_rows() const;

private:
  CayleyGroup() = default;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::string label_;
};

// Subgroup as a sorted member list plus a membership bitset.
struct SubgroupHandle {
  GroupPtr parent;
  std::vector<int> members;  // sorted
  std::vector<char> mask;

  bool contains(int g) const { return mask[g]; }
  int size() const { return (int)members.size(); }
  bool operator==(const SubgroupHandle& o) const {
    return parent == o.parent && members == o.members;
  }
};

enum class MapKind { unverified, homomorphism, monomorphism, isomorphism };

struct GroupMap {
  GroupPtr domain, codomain;
  std::vector<int> images;  // total on domain elements
  MapKind kind = MapKind::unverified;

  int operator()(int g) const { return images[g]; }
};

struct QuotientResult {
  GroupPtr group;
  GroupMap projection;           // kind homomorphism
  std::vector<int> coset_reps;   // minimal-index representative per class
};

struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<int> to_parent;    // element index -> parent element
  std::vector<int> from_parent;  // parent element -> index or -1
};

SubgroupHandle make_subgroup_unchecked(GroupPtr g, std::vector<int> members);
SubgroupHandle trivial_subgroup(const GroupPtr& g);
SubgroupHandle full_subgroup(const GroupPtr& g);
SubgroupHandle generate_subgroup(const GroupPtr& g, const std::vector<int>& gens);
SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b);
// Setwise product AB; the caller is responsible for it being a subgroup.
SubgroupHandle product_subgroup(const SubgroupHandle& a, const SubgroupHandle& b);

SubgroupHandle centre(const GroupPtr& g);
SubgroupHandle derived_subgroup(const GroupPtr& g);
SubgroupHandle centralizer(const GroupPtr& g, const SubgroupHandle& h);

bool is_abelian(const CayleyGroup& g);
// Returns a conjugating witness g with gNg^-1 != N, or nullopt if normal.
std::optional<int> normality_witness(const SubgroupHandle& n);

// 0 = trivial, 1 = abelian nontrivial, 2 = class two; nullopt = class >= 3.
std::optional<int> nilpotency_class_le2(const GroupPtr& g);

QuotientResult quotient(const GroupPtr& g, const SubgroupHandle& n);
long long exponent(const CayleyGroup& g);
bool is_nilpotent(const CayleyGroup& g);
std::vector<SubgroupHandle> sylow_split(const GroupPtr& g);

// Full pairwise verification; upgrades kind or throws NotHomomorphism /
// NotInjective / NotSurjective with a witness.
GroupMap verify_map(GroupMap f, MapKind expect);

// d(G) for nilpotent G, via the abelianization. Defined in abelian.cpp.
int d_nilpotent(const GroupPtr& g);

SubgroupAsGroup subgroup_as_group(const SubgroupHandle& h);

// Direct product with index encoding a * |B| + b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

std::vector<long long> prime_factors(long long n);

}  // namespace nilheis
