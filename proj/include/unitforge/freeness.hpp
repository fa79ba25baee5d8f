#pragma once

#include "unitforge/cyclotomic.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/reps.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unitforge {

// shape / parameter errors for the condition checkers
struct ShapeViolation : std::runtime_error {
  explicit ShapeViolation(const std::string &what_, std::string entry_ = "")
      : std::runtime_error(what_), entry(std::move(entry_)) {}
  std::string entry; // which entry breaks the pattern, when known
};

struct BadParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotTorsion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Verdict { CERTIFIED_CONDITION, PASSED_TO_BOUND, VIOLATION, INCONCLUSIVE };

std::string verdict_name(Verdict v);

// Outcome of a condition checker or brute-force oracle.  A VIOLATION always
// carries a witness word that re-evaluates to the identity (or, for monoid
// checks, to a duplicate of an earlier word named in `notes`).
struct FreenessReport {
  Verdict verdict = Verdict::INCONCLUSIVE;
  long bound_reached = 0;
  std::vector<std::pair<std::string, long>> witness; // (generator, exponent)
  long words_checked = 0;
  std::string notes;
};

// 2x2 Sanov-like criterion on [[zeta_n^{k_n}, u],[0,1]] and
// [[zeta_m^{k_m}, 0],[v,1]]: certified when |uv| >= 4|z_{k_n} z_{k_m}|
// (boundary included), or when n = m = 2 and u or v is nonzero (exact).
// Conclusion: C_{i_n} * C_{i_m} with i_t = t for t != 1 and i_1 = infinity.
FreenessReport prop24_check(long n, long k_n, long m, long k_m,
                            const CyclotomicNumber &u,
                            const CyclotomicNumber &v);

// r x r reduction (r != 2): A lower triangular of order i_n with A_11 = 1 and
// A_22 = zeta_n^{k_n}; B = D + d E_12 with D diagonal, D_11 = 1, second
// diagonal entry zeta_m^{k_m}, of order i_m.  Certified when
// |A_21 d| >= 4|z_{k_n} z_{k_m}|.
FreenessReport lemma25_check(const CycMatrix &A, const CycMatrix &B, long n,
                             long k_n, long m, long k_m);

// scaling-factor test: both certified modulus bounds <= 1/3 (boundary allowed)
bool affine_monoid_check(const Rational &x1, const Rational &x2);

// Bass-pair free monoid condition at conductor n: for each (k_i, m_i),
// |mu_i| > 1 with mu_i = 1 + zeta + ... + zeta^{k_i - 1}, |mu_i^{m_i}| >= 3
// with certified margin, and mu_1^{m_1} != mu_2^{m_2} exactly.
FreenessReport thm33_check(long n, std::pair<long, long> km1,
                           std::pair<long, long> km2);

// Exact brute-force oracles.  PASSED_TO_BOUND is evidence, not a proof.
FreenessReport free_product_oracle(const GroupRingElement &u, long ord_u,
                                   const GroupRingElement &v, long ord_v,
                                   long max_syllables = 8);
FreenessReport free_product_oracle(const CycMatrix &u, long ord_u,
                                   const CycMatrix &v, long ord_v,
                                   long max_syllables = 8);
FreenessReport free_group_oracle(const GroupRingElement &a,
                                 const GroupRingElement &b,
                                 long max_length = 12);
FreenessReport free_monoid_oracle(const GroupRingElement &A,
                                  const GroupRingElement &B,
                                  long max_length = 10);

} // namespace unitforge
