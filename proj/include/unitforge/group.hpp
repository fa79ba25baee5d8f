#ifndef UNITFORGE_GROUP_HPP
#define UNITFORGE_GROUP_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitforge {

// Element of a finite group, encoded as an index into the Cayley table.
// Index 0 is always the identity.
using Elt = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct NotAGroup : std::runtime_error {
  // witness triple for an associativity failure, or (x,-1,-1) for a
  // missing inverse / identity defect
  Elt a = -1, b = -1, c = -1;
  NotAGroup(const std::string &msg, Elt a_ = -1, Elt b_ = -1, Elt c_ = -1)
      : std::runtime_error(msg), a(a_), b(b_), c(c_) {}
};

struct ClosureTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCentral : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite group given by its full multiplication table. Immutable after
// construction; all queries are pure.
class FiniteGroup {
public:
  int order() const { return n_; }
  Elt mul(Elt x, Elt y) const { return mul_[static_cast<size_t>(x) * n_ + y]; }
  Elt inv(Elt x) const { return inv_[x]; }
  const std::string &name(Elt x) const { return names_[x]; }
  const std::vector<std::string> &names() const { return names_; }

  // index of a named element, or -1
  Elt find_name(const std::string &name) const;

  // x^t for any integer t (negative exponents use the inverse)
  Elt power(Elt x, long t) const;

  friend GroupPtr from_cayley_table(const std::vector<std::vector<Elt>> &table, bool validate,
                                    std::vector<std::string> names);

private:
  FiniteGroup() = default;
  int n_ = 0;
  std::vector<Elt> mul_; // row-major, mul_[x*n+y] = x*y
  std::vector<Elt> inv_;
  std::vector<std::string> names_;
};

// Subgroup as a sorted element set; keeps its parent alive.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> elements; // sorted, contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elt x) const;
};

// ---- construction ----

// Builds a group from a square multiplication table. The identity is
// relabeled to index 0 if it sits elsewhere. Latin-square, identity and
// inverse defects are always detected; associativity is O(n^3) and only
// checked when `validate` is set.
GroupPtr from_cayley_table(const std::vector<std::vector<Elt>> &table, bool validate = false,
                           std::vector<std::string> names = {});

// One permutation of {1..degree}, given as image list (perm[i] = image of i+1, 1-based values).
using Permutation = std::vector<int>;

struct PermGroupResult {
  GroupPtr group;
  std::vector<Permutation> element_perms; // element index -> permutation
};

// Closure of the generators by breadth-first multiplication. Element names
// are shortest generator words ("1", "a", "ab2", ...) unless generator
// names are supplied.
PermGroupResult from_permutation_generators(int degree, const std::vector<Permutation> &generators,
                                            const std::vector<std::string> &generator_names = {},
                                            int cap = 20000);

// ---- queries ----

int element_order(const FiniteGroup &G, Elt x);

// fixed conventions: [a,b] = a^-1 b^-1 a b,  x^y = y^-1 x y
Elt commutator(const FiniteGroup &G, Elt a, Elt b);
Elt conjugate(const FiniteGroup &G, Elt x, Elt y);

Subgroup cyclic_subgroup(const GroupPtr &G, Elt h);
Subgroup generated_subgroup(const GroupPtr &G, const std::vector<Elt> &gens);
Subgroup normalizer_of(const Subgroup &S);
bool is_in_normalizer(const FiniteGroup &G, Elt g, Elt h);

// smallest m >= 1 with g in N_G(<h^m>); always divides o(h)
int min_normalized_power(const FiniteGroup &G, Elt g, Elt h);

Subgroup center(const GroupPtr &G);
bool is_abelian(const FiniteGroup &G);

// nilpotency class via the lower central series; nullopt if the series
// stabilizes above the trivial subgroup
std::optional<int> nilpotency_class(const GroupPtr &G);

struct Quotient {
  GroupPtr group;
  std::vector<Elt> proj; // element of parent -> element of quotient
};

// Quotient by a central subgroup Z (throws NotCentral otherwise).
Quotient quotient_by_central(const GroupPtr &G, const Subgroup &Z);

// All subgroups of an abelian subgroup, by incremental closure enumeration.
std::vector<Subgroup> subgroups_of_abelian(const Subgroup &A, int cap = 256);

// A subgroup repackaged as a standalone FiniteGroup with index maps.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Elt> to_parent;   // subgroup index -> parent index
  std::vector<Elt> from_parent; // parent index -> subgroup index, -1 outside
};
SubgroupGroup subgroup_as_group(const Subgroup &S);

// GroupPtr conveniences
inline int element_order(const GroupPtr &G, Elt x) { return element_order(*G, x); }
inline Elt commutator(const GroupPtr &G, Elt a, Elt b) { return commutator(*G, a, b); }
inline Elt conjugate(const GroupPtr &G, Elt x, Elt y) { return conjugate(*G, x, y); }
inline bool is_in_normalizer(const GroupPtr &G, Elt g, Elt h) {
  return is_in_normalizer(*G, g, h);
}
inline int min_normalized_power(const GroupPtr &G, Elt g, Elt h) {
  return min_normalized_power(*G, g, h);
}
inline bool is_abelian(const GroupPtr &G) { return is_abelian(*G); }

} // namespace unitforge

#endif
