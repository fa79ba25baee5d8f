#ifndef UNITFORGE_REPS_HPP
#define UNITFORGE_REPS_HPP

#include "unitforge/cyclotomic.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/units.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unitforge {

struct SupportViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MorphismFailure : std::runtime_error {
  std::string witness_x, witness_y;
  MorphismFailure(const std::string &msg, std::string x = {}, std::string y = {})
      : std::runtime_error(msg), witness_x(std::move(x)), witness_y(std::move(y)) {}
};
struct NotIdempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HypothesisViolation : std::runtime_error {
  std::string hypothesis;
  HypothesisViolation(const std::string &msg, std::string hyp = {})
      : std::runtime_error(msg), hypothesis(std::move(hyp)) {}
};
struct CenterDecompositionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EntryResolutionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// image of u1 + u2*a under Eq.-style triangular morphism:
// [[u1 f, u2 f], [0, w(u1)]] with f the primitive idempotent of Q<h>
// mapping h to zeta_n
struct TriangularImage {
  long conductor;
  CyclotomicNumber a11, a12;
  Rational a22;
  TriangularImage(long n, CyclotomicNumber x11, CyclotomicNumber x12, Rational x22)
      : conductor(n), a11(std::move(x11)), a12(std::move(x12)), a22(std::move(x22)) {}
  TriangularImage operator*(const TriangularImage &o) const;
  bool operator==(const TriangularImage &o) const;
  std::string to_string() const;
};

// u1, u2 supported on <h> with o(h) = n
TriangularImage phi_triangular(const GroupRingElement &u1,
                               const GroupRingElement &u2, Elt h, long n);

struct MorphismReport {
  long samples_checked = 0;
  std::string notes;
};
// samples x = u1 + u2 a, y = v1 + v2 a with a = (1-h) alpha H~ and verifies
// phi(xy) = phi(x) phi(y); throws MorphismFailure with a witness pair
MorphismReport morphism_check(const GroupPtr &G, Elt h,
                              const GroupRingElement &alpha, const Subgroup &H,
                              long samples, unsigned long seed = 1);

struct PierceBlocks {
  GroupRingElement b11; // (1-e) x (1-e)
  GroupRingElement b12; // (1-e) x e
  GroupRingElement b21; // e x (1-e)
  GroupRingElement b22; // e x e
};
PierceBlocks pierce_blocks(const GroupRingElement &x, const GroupRingElement &e);

struct MetabelianReport {
  bool passed = false;
  long words = 0;
  long commutators = 0;
  long pairs_checked = 0;
  std::string witness; // empty when passed
};
// enumerates reduced words in {u, u^w and inverses} up to max_len and checks
// that all double commutators vanish (pairwise-commuting commutators)
MetabelianReport metabelian_sample_check(const GroupRingElement &u,
                                         const GroupRingElement &u_inv,
                                         const GroupRingElement &w,
                                         const GroupRingElement &w_inv,
                                         int max_len, long pair_cap = 200000,
                                         unsigned long seed = 1);
MetabelianReport metabelian_sample_check(const UnitDescriptor &u,
                                         const UnitDescriptor &w, int max_len,
                                         long pair_cap = 200000,
                                         unsigned long seed = 1);

// ---- exact matrices over Q(zeta) ----

class CycMatrix {
public:
  CycMatrix(long degree, long conductor); // zero matrix
  static CycMatrix identity(long degree, long conductor);

  long degree() const { return deg_; }
  long conductor() const { return n_; }
  CyclotomicNumber &at(long i, long j);             // 0-based
  const CyclotomicNumber &at(long i, long j) const; // 0-based

  CycMatrix operator*(const CycMatrix &o) const;
  CycMatrix operator+(const CycMatrix &o) const;
  CycMatrix operator-(const CycMatrix &o) const;
  bool operator==(const CycMatrix &o) const;
  bool operator!=(const CycMatrix &o) const { return !(*this == o); }
  CycMatrix pow(long t) const; // t >= 0
  CycMatrix lift(long L) const;
  bool is_lower_triangular() const;
  bool is_upper_triangular() const;
  std::string to_string() const;

private:
  long deg_, n_;
  std::vector<CyclotomicNumber> e_; // row-major
};

// exact multiplicative order of a (lower or upper) triangular matrix;
// nullopt certifies infinite order (nontrivial unipotent part)
std::optional<long> root_of_unity_order(const CyclotomicNumber &x);
std::optional<long> cyc_matrix_order(const CycMatrix &A);

// new_basis[i] = old index; entries A'[i][j] = A[new_basis[i]][new_basis[j]]
CycMatrix permute_basis(const CycMatrix &A, const std::vector<long> &new_basis);

// ---- class-2 matrix-unit machinery ----

struct MatrixUnitSystem {
  GroupPtr parent;              // the group handed to class2_rep
  GroupPtr group;               // <g,h> when proper, else parent
  bool restricted = false;      // group != parent
  std::vector<Elt> to_parent;   // group index -> parent index
  std::vector<Elt> from_parent; // parent index -> group index, -1 outside
  Elt g = -1, h = -1;
  Elt c = -1;                 // [h^{-1}, g], central; inverse of [g, h^{-1}]
  long degree = 0;            // o(c)
  long field_conductor = 0;   // p^alpha = |Z(group)/K|
  Elt z0 = -1;                // image generates Z(group)/K; z0*eps ~ zeta
  long c_exponent = 0;        // c*eps = (z0*eps)^{c_exponent}
  Subgroup K, H;              // central subgroups of `group`
  GroupRingElement epsilon;   // hat(K) - hat(H)
  std::vector<std::vector<GroupRingElement>> E; // degree x degree, over `group`
};

// Full Theorem-4.1-style construction. Hypotheses: parent nilpotent of class
// 2, o(h) = p^n, g outside N(<h^{p^i}>) for all 0 <= i < n. Internally
// restricts to <g,h> when it is a proper subgroup.
MatrixUnitSystem class2_rep(const GroupPtr &G, Elt g, Elt h);

// exact matrix-unit axioms + field isomorphism; throws on any violation
void verify_matrix_units(const MatrixUnitSystem &sys);

// map an element over sys.parent into sys.group coefficients
GroupRingElement to_system_ring(const MatrixUnitSystem &sys,
                                const GroupRingElement &x);

// entry (i,j) with E_ii x E_jj = entry * E_ij, resolved by exact linear
// solve in the basis {z0^t E_ii}; x given over sys.group
CycMatrix to_matrix(const MatrixUnitSystem &sys, const GroupRingElement &x);

} // namespace unitforge

#endif
