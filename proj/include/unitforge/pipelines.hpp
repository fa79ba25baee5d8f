#pragma once

// Per-theorem pipelines: construct the units, run the applicable condition
// checker, run the exact oracle, and cross-validate the results.  Shared by
// the CLI and the acceptance suite.

#include "unitforge/freeness.hpp"
#include "unitforge/group.hpp"
#include "unitforge/reps.hpp"
#include "unitforge/units.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unitforge {

enum class TheoremTag { LEMMA31, PROP32, THM33, THM41, THM42, COR43 };

std::string tag_name(TheoremTag t);
std::optional<TheoremTag> tag_from_string(const std::string &s);

// hypothesis predicate for scan; purely group-theoretic
bool satisfies_tag(const GroupPtr &G, Elt g, Elt h, TheoremTag tag);

struct ScanResult {
  Elt g = -1, h = -1;
  std::vector<TheoremTag> tags;
  std::string notes;
};

// all ordered pairs (g, h), g != 1, o(h) >= 2, with at least one tag
std::vector<ScanResult> scan_group(const GroupPtr &G);
std::vector<ScanResult> scan_group(const GroupPtr &G, TheoremTag only);

// order prediction vs certificate for one (g, h, k)
struct OrderCheckResult {
  UnitDescriptor unit;
  PredictedOrder predicted;
  OrderVerification verified;
  bool agree = false;
};
OrderCheckResult lemma31_case(const GroupPtr &G, Elt g, Elt h, long k);

struct Prop32Result {
  UnitDescriptor u;       // b_k(g, h~)
  UnitDescriptor w;       // bicyclic b(g, h~)
  GroupRingElement e;     // hat(<h>)
  PierceBlocks blocks_u;  // Pierce blocks of u w.r.t. e
  PierceBlocks blocks_uw; // Pierce blocks of u^w
  bool pattern_ok = false; // lower-left exactly 0, bottom-right exactly e
  MorphismReport morphism;
  MetabelianReport metabelian;
};
Prop32Result prop32_pipeline(const GroupPtr &G, Elt g, Elt h, long k,
                             int max_len = 3, unsigned long seed = 1);

struct Thm33Result {
  UnitDescriptor bass1, bass2; // u_{k1,m1}(h), u_{k2,m2}(h)
  UnitDescriptor unit1, unit2; // b(u_i(h), g, h~)
  FreenessReport condition;    // thm33_check at n = o(h)
  FreenessReport oracle;       // free_monoid_oracle
};
Thm33Result thm33_pipeline(const GroupPtr &G, Elt g, Elt h,
                           std::pair<long, long> km1,
                           std::pair<long, long> km2, long max_length = 10);

struct Thm41Result {
  MatrixUnitSystem sys;
  UnitDescriptor u; // b_l(g, h~)
  UnitDescriptor v; // b_t(h~, g^-1)
  CycMatrix A, B;   // images permuted to the triangular normal form
  long n = 0, k_n = 0, m = 0, k_m = 0; // second-diagonal root data
  std::optional<long> matrix_order_u, matrix_order_v; // nullopt = infinite
  FreenessReport condition; // lemma25_check (degree > 2) or prop24_check
  std::optional<FreenessReport> oracle; // only when both orders finite
};
Thm41Result thm41_pipeline(const GroupPtr &G, Elt g, Elt h, long l, long t,
                           long max_syllables = 8);

struct Thm42Result {
  UnitDescriptor u;         // b_k(g, h~)
  GroupRingElement v;       // involution of b_l(g, h~)
  GroupRingElement v_inv;
  long p = 0;               // common exact order
  FreenessReport oracle;    // free_product_oracle, C_p * C_p
};
Thm42Result thm42_pipeline(const GroupPtr &G, Elt g, Elt h, long k, long l,
                           long max_syllables = 10);

struct Cor43Result {
  GroupRingElement a, b; // b_k * (b_l)^* and (b_l)^* * b_k
  FreenessReport oracle; // free_group_oracle
};
Cor43Result cor43_pipeline(const GroupPtr &G, Elt g, Elt h, long k, long l,
                           long max_length = 12);

} // namespace unitforge
