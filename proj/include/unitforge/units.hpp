#ifndef UNITFORGE_UNITS_HPP
#define UNITFORGE_UNITS_HPP

#include "unitforge/group_ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace unitforge {

struct BadBassParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAUnitOfCyclicRing : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TrivialCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class UnitKind {
  BICYCLIC_LEFT,
  BICYCLIC_RIGHT,
  BASS,
  BOVDI_LEFT,
  BOVDI_RIGHT,
  GENERALIZED_BOVDI,
  S_UNIT
};

std::string unit_kind_name(UnitKind k);

struct PredictedOrder {
  enum Tag { FINITE, INFINITE_ORDER, UNKNOWN } tag = UNKNOWN;
  long value = 0; // meaningful when FINITE
  static PredictedOrder finite(long v) { return {FINITE, v}; }
  static PredictedOrder infinite() { return {INFINITE_ORDER, 0}; }
  static PredictedOrder unknown() { return {UNKNOWN, 0}; }
  bool operator==(const PredictedOrder &o) const {
    return tag == o.tag && (tag != FINITE || value == o.value);
  }
  std::string to_string() const;
};

struct UnitDescriptor {
  UnitKind kind;
  GroupPtr group;
  // printable parameter record in deterministic order
  std::vector<std::pair<std::string, std::string>> params;
  Elt g = -1; // -1 when not applicable
  Elt h = -1;
  long k = 0; // Bovdi/Bass exponent parameter
  long m = 0; // Bass power
  GroupRingElement element;
  GroupRingElement inverse; // verified at construction, both sides
  PredictedOrder predicted_order;
  bool trivial = false;    // bicyclic/Bovdi: g normalizes <h>; Bass: k = 1
  bool degenerate = false; // s_unit: s = 1
};

UnitDescriptor bicyclic_left(const GroupPtr &G, Elt g, Elt h);
UnitDescriptor bicyclic_right(const GroupPtr &G, Elt h, Elt g);

UnitDescriptor bass(const GroupPtr &G, Elt g, long k, long m);

UnitDescriptor bovdi_left(const GroupPtr &G, long k, Elt g, Elt h);
UnitDescriptor bovdi_right(const GroupPtr &G, long k, Elt h, Elt g);

enum class Side { LEFT, RIGHT };
UnitDescriptor generalized_bovdi(const GroupPtr &G, const GroupRingElement &uh,
                                 Elt g, Elt h, Side side);

UnitDescriptor s_unit(const GroupPtr &G, Elt h, const GroupRingElement &alpha,
                      const Subgroup &H);

// Order of b_k(g, h~) under the minimal-normalized-power criterion:
// o(h^k) when gcd(k, m) = 1, infinite otherwise, m minimal with
// g in N_G(<h^m>). Requires 1 <= k < o(h) and g outside N_G(<h>).
PredictedOrder predicted_bovdi_order(const GroupPtr &G, long k, Elt g, Elt h);

struct OrderVerification {
  enum Kind { CONFIRMED_FINITE, CONFIRMED_INFINITE, EXCEEDED_BOUND } kind;
  long order = 0; // minimal exponent when CONFIRMED_FINITE
  std::string certificate; // human-readable justification
};

// exact powering; for Bovdi/bicyclic kinds u^{o(h^k)} != 1 certifies
// infinite order (finite order would force u^{o(h^k)} = 1)
OrderVerification verify_order(const UnitDescriptor &u, long bound);

} // namespace unitforge

#endif
