#ifndef UNITFORGE_GROUP_RING_HPP
#define UNITFORGE_GROUP_RING_HPP

#include "unitforge/group.hpp"
#include "unitforge/rational.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace unitforge {

struct GroupMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of QG as a dense exact-rational coefficient vector indexed by
// group elements. ZG is the subcase where is_integral() holds.
class GroupRingElement {
public:
  GroupRingElement() = default;
  GroupRingElement(GroupPtr G, std::vector<Rational> coeffs);

  static GroupRingElement zero(GroupPtr G);
  static GroupRingElement one(GroupPtr G);
  static GroupRingElement from_element(GroupPtr G, Elt x);

  const GroupPtr &group() const { return group_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  const Rational &coeff(Elt x) const { return coeffs_[x]; }
  void set_coeff(Elt x, const Rational &q) { coeffs_[x] = q; }

  bool is_zero() const;
  bool is_integral() const;
  bool is_one() const;

  GroupRingElement operator+(const GroupRingElement &o) const;
  GroupRingElement operator-(const GroupRingElement &o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement &o) const; // convolution
  bool operator==(const GroupRingElement &o) const;
  bool operator!=(const GroupRingElement &o) const { return !(*this == o); }

  friend GroupRingElement operator*(const Rational &q, const GroupRingElement &a);

  GroupRingElement power(unsigned long t) const;

  Rational augmentation() const;
  GroupRingElement involution() const; // coefficient at x moves to x^-1
  std::set<Elt> support() const;

  // digest over the canonical coefficient vector; equal elements hash equal
  std::uint64_t canonical_hash() const;

  // exact linear solve for x a = 1, double-checked by a x = 1
  std::optional<GroupRingElement> try_invert() const;

  // image in a central quotient: coefficients summed along fibers
  GroupRingElement project(const Quotient &q) const;

  // "c0*name0 + c1*name1", zero coefficients suppressed
  std::string to_string() const;

private:
  void check_same_group(const GroupRingElement &o) const;
  GroupPtr group_;
  std::vector<Rational> coeffs_;
};

// sum over a subgroup (or any element list)
GroupRingElement tilde(const Subgroup &S);
GroupRingElement tilde(const GroupPtr &G, const std::vector<Elt> &elements);
// tilde(S) / |S|; idempotent when S is a subgroup
GroupRingElement hat(const Subgroup &S);

} // namespace unitforge

#endif
