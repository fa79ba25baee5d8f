#ifndef UNITFORGE_CYCLOTOMIC_HPP
#define UNITFORGE_CYCLOTOMIC_HPP

#include "unitforge/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitforge {

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConductorMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long euler_phi(long n);

// Phi_n as integer coefficients, low degree first, via recursive exact
// division of x^n - 1 by the Phi_d of proper divisors d. Memoized.
const std::vector<Integer> &cyclotomic_polynomial(long n);

// Element of Q(zeta_n): residue in the power basis {1, z, ..., z^{phi(n)-1}}
// modulo Phi_n. Arithmetic never changes the conductor; use lift() to move
// into Q(zeta_L) for a multiple L of n.
class CyclotomicNumber {
public:
  explicit CyclotomicNumber(long n); // zero of conductor n
  CyclotomicNumber(long n, const Rational &q);
  // arbitrary-degree coefficient vector; reduced mod Phi_n
  CyclotomicNumber(long n, std::vector<Rational> raw_coeffs);

  static CyclotomicNumber zeta(long n);

  long conductor() const { return n_; }
  const std::vector<Rational> &coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const; // residue has degree 0
  Rational rational_value() const;

  CyclotomicNumber operator+(const CyclotomicNumber &o) const;
  CyclotomicNumber operator-(const CyclotomicNumber &o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber operator*(const CyclotomicNumber &o) const;
  bool operator==(const CyclotomicNumber &o) const;
  bool operator!=(const CyclotomicNumber &o) const { return !(*this == o); }

  CyclotomicNumber inv() const; // extended gcd with Phi_n
  CyclotomicNumber pow(long t) const; // t may be negative
  CyclotomicNumber conj() const; // zeta -> zeta^{n-1}
  CyclotomicNumber lift(long L) const; // zeta_n -> zeta_L^{L/n}

  std::string to_string() const; // polynomial in z with exact fractions

private:
  void check_conductor(const CyclotomicNumber &o) const;
  long n_;
  std::vector<Rational> c_; // length phi(n)
};

// rigorous enclosure: the true complex value lies within `radius` of `center`
struct ComplexBound {
  std::complex<double> center;
  double radius = 0.0;
};

// numeric evaluation at zeta_n -> e^{2*pi*i*k/n}; requires gcd(k, n) = 1
ComplexBound embed(const CyclotomicNumber &a, long k = 1);

enum class AbsCompare { GREATER, LESS, INCONCLUSIVE };

// compares |a| (at embedding k) against a rational c >= 0 via the exact real
// number a*conj(a); INCONCLUSIVE at exact equality or unresolved interval
AbsCompare abs_compare(const CyclotomicNumber &a, long k, const Rational &c);

// sign of a real cyclotomic number (x == conj(x)) at embedding k
enum class RealSign { NEGATIVE, ZERO, POSITIVE, UNKNOWN };
RealSign real_sign(const CyclotomicNumber &x, long k = 1);

enum class Tri { YES, NO, UNKNOWN };
// certified |a| >= |b| (boundary allowed), decided through |a|^2 - |b|^2
Tri certified_abs_ge(const CyclotomicNumber &a, const CyclotomicNumber &b,
                     long k = 1);

// z_k = sum_{i<k} zeta_n^i
CyclotomicNumber geometric_sum(long n, long k);

enum class GeomBound { GE_ONE_STRICT, EQ_ONE, ZERO };
GeomBound geometric_sum_bound(long n, long k);

} // namespace unitforge

#endif
