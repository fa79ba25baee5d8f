#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitforge/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace unitforge;

namespace {

CyclotomicNumber random_cyc(long n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Rational> c(static_cast<size_t>(euler_phi(n)));
  for (auto &q : c) q = coeff(rng);
  return CyclotomicNumber(n, std::move(c));
}

} // namespace

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(16) == 8);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>({1, 1}));
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(5) == std::vector<Integer>({1, 1, 1, 1, 1}));
}

TEST_CASE("roots of unity and inverses") {
  for (long n : {3L, 4L, 5L, 8L, 9L, 12L}) {
    CyclotomicNumber z = CyclotomicNumber::zeta(n);
    CHECK(z.pow(n) == CyclotomicNumber(n, Rational(1)));
    CHECK(z.inv() == z.pow(n - 1));
    CHECK(z.pow(-1) == z.inv());
  }
  // (zeta5^2 - 1) / (zeta5 - 1) = 1 + zeta5
  CyclotomicNumber z = CyclotomicNumber::zeta(5);
  CyclotomicNumber one(5, Rational(1));
  CHECK((z * z - one) * (z - one).inv() == one + z);
}

TEST_CASE("field axioms at several conductors") {
  for (long n : {3L, 4L, 5L, 8L, 9L, 12L}) {
    std::mt19937_64 rng(static_cast<unsigned long>(100 + n));
    for (int t = 0; t < 6; ++t) {
      CyclotomicNumber a = random_cyc(n, rng);
      CyclotomicNumber b = random_cyc(n, rng);
      CyclotomicNumber c = random_cyc(n, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      if (!a.is_zero()) {
        REQUIRE(a * a.inv() == CyclotomicNumber(n, Rational(1)));
      }
    }
  }
}

TEST_CASE("rational detection") {
  CyclotomicNumber z = CyclotomicNumber::zeta(4);
  CHECK((z * z).is_rational());
  CHECK((z * z).rational_value() == -1);
  CHECK_FALSE(z.is_rational());
  CHECK(CyclotomicNumber(7, Rational(5, 3)).rational_value() == Rational(5, 3));
}

TEST_CASE("embed") {
  ComplexBound i4 = embed(CyclotomicNumber::zeta(4));
  CHECK(std::abs(i4.center - std::complex<double>(0, 1)) < 1e-12);
  CHECK(i4.radius < 1e-12);

  // |1 + zeta5| = golden ratio
  CyclotomicNumber g = CyclotomicNumber(5, Rational(1)) + CyclotomicNumber::zeta(5);
  ComplexBound cb = embed(g);
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(std::abs(cb.center) - phi) < 1e-9);

  ComplexBound zero = embed(CyclotomicNumber(6));
  CHECK(zero.center == std::complex<double>(0, 0));
  CHECK(zero.radius < 1e-100); // conservative enclosure, effectively exact

  // ring homomorphism up to interval width
  std::mt19937_64 rng(23);
  for (int t = 0; t < 8; ++t) {
    CyclotomicNumber a = random_cyc(12, rng);
    CyclotomicNumber b = random_cyc(12, rng);
    ComplexBound pa = embed(a), pb = embed(b), pab = embed(a * b);
    double slack = pab.radius + pa.radius * std::abs(pb.center) +
                   pb.radius * std::abs(pa.center) + pa.radius * pb.radius + 1e-9;
    REQUIRE(std::abs(pab.center - pa.center * pb.center) <= slack);
  }
}

TEST_CASE("abs_compare") {
  CyclotomicNumber one5(5, Rational(1));
  CyclotomicNumber g = one5 + CyclotomicNumber::zeta(5);
  CHECK(abs_compare(g, 1, Rational(1)) == AbsCompare::GREATER);
  CHECK(abs_compare(g, 1, Rational(2)) == AbsCompare::LESS);
  // |zeta| = 1 exactly: boundary is INCONCLUSIVE
  CHECK(abs_compare(CyclotomicNumber::zeta(5), 1, Rational(1)) ==
        AbsCompare::INCONCLUSIVE);

  // |3(1 - zeta3^-1)| = 3*sqrt(3) > 4
  CyclotomicNumber z3 = CyclotomicNumber::zeta(3);
  CyclotomicNumber v =
      CyclotomicNumber(3, Rational(3)) * (CyclotomicNumber(3, Rational(1)) - z3.inv());
  CHECK(abs_compare(v, 1, Rational(4)) == AbsCompare::GREATER);
  CHECK((v * v.conj()).rational_value() == 27);
}

TEST_CASE("real_sign") {
  CyclotomicNumber z = CyclotomicNumber::zeta(5);
  CHECK(real_sign(CyclotomicNumber(5, Rational(2))) == RealSign::POSITIVE);
  CHECK(real_sign(CyclotomicNumber(5, Rational(-2))) == RealSign::NEGATIVE);
  CHECK(real_sign(CyclotomicNumber(5)) == RealSign::ZERO);
  // z + conj(z) = 2 cos(2 pi / 5) > 0
  CHECK(real_sign(z + z.conj()) == RealSign::POSITIVE);
  // z^2 + conj(z^2) = 2 cos(4 pi / 5) < 0
  CHECK(real_sign(z.pow(2) + z.pow(2).conj()) == RealSign::NEGATIVE);
}

TEST_CASE("conjugation") {
  std::mt19937_64 rng(29);
  for (long n : {5L, 8L, 12L}) {
    for (int t = 0; t < 6; ++t) {
      CyclotomicNumber a = random_cyc(n, rng);
      REQUIRE(a.conj().conj() == a);
      RealSign s = real_sign(a * a.conj());
      REQUIRE((s == RealSign::ZERO || s == RealSign::POSITIVE));
    }
  }
}

TEST_CASE("certified_abs_ge including the boundary") {
  CyclotomicNumber two3(3, Rational(2));
  CyclotomicNumber z3 = CyclotomicNumber::zeta(3);
  // |2 zeta3| = |2|: exact equality certifies >= (boundary inclusive)
  CHECK(certified_abs_ge(two3 * z3, two3) == Tri::YES);
  CHECK(certified_abs_ge(two3, CyclotomicNumber(3, Rational(1))) == Tri::YES);
  CHECK(certified_abs_ge(CyclotomicNumber(3, Rational(1)), two3) == Tri::NO);
}

TEST_CASE("lift between conductors") {
  CyclotomicNumber z3 = CyclotomicNumber::zeta(3);
  CyclotomicNumber z12 = CyclotomicNumber::zeta(12);
  CHECK(z3.lift(12) == z12.pow(4));
  CHECK((z3 + z3).lift(12) == z12.pow(4) + z12.pow(4));
  // lift is a ring homomorphism
  std::mt19937_64 rng(31);
  for (int t = 0; t < 6; ++t) {
    CyclotomicNumber a = random_cyc(6, rng);
    CyclotomicNumber b = random_cyc(6, rng);
    REQUIRE((a * b).lift(12) == a.lift(12) * b.lift(12));
    REQUIRE((a + b).lift(12) == a.lift(12) + b.lift(12));
  }
}

TEST_CASE("geometric sums") {
  CyclotomicNumber one5(5, Rational(1));
  CHECK(geometric_sum(5, 1) == one5);
  CHECK(geometric_sum_bound(5, 1) == GeomBound::EQ_ONE);
  CHECK(geometric_sum_bound(5, 2) == GeomBound::GE_ONE_STRICT);
  CHECK(geometric_sum_bound(4, 4) == GeomBound::ZERO);
  CHECK(geometric_sum(4, 4).is_zero());

  // |z_2| at n=5 is the golden ratio
  ComplexBound cb = embed(geometric_sum(5, 2));
  CHECK(std::abs(std::abs(cb.center) - 1.6180339887498949) < 1e-9);

  // n = 1: z_k = k, so only k = 1 has modulus one
  CHECK(geometric_sum_bound(1, 1) == GeomBound::EQ_ONE);
  CHECK(geometric_sum_bound(1, 2) == GeomBound::GE_ONE_STRICT);
  CHECK(geometric_sum(1, 3).rational_value() == 3);

  // k = n - 1 and k = n + 1 both give modulus exactly one
  for (long n : {3L, 7L, 12L}) {
    CHECK(geometric_sum_bound(n, n - 1) == GeomBound::EQ_ONE);
    CHECK(geometric_sum_bound(n, n + 1) == GeomBound::EQ_ONE);
    CHECK(geometric_sum_bound(n, n) == GeomBound::ZERO);
    CyclotomicNumber z = geometric_sum(n, n - 1);
    CHECK((z * z.conj()).rational_value() == 1);
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(CyclotomicNumber(5).inv(), DivisionByZero);
  CyclotomicNumber a = CyclotomicNumber::zeta(3);
  CyclotomicNumber b = CyclotomicNumber::zeta(4);
  CHECK_THROWS_AS((void)(a + b), ConductorMismatch);
  CHECK_THROWS_AS((void)(a * b), ConductorMismatch);
}
