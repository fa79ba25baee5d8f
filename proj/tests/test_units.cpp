#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitforge/catalog.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/units.hpp"

#include <numeric>
#include <vector>

using namespace unitforge;

namespace {

GroupPtr cyclic(int n) {
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return from_cayley_table(t, true);
}

void check_unit(const UnitDescriptor &u) {
  REQUIRE(u.element.is_integral());
  REQUIRE((u.element * u.inverse).is_one());
  REQUIRE((u.inverse * u.element).is_one());
}

} // namespace

TEST_CASE("bicyclic units") {
  GroupPtr G = catalog_group("d8");
  Elt r = G->find_name("r"), s = G->find_name("s");

  // g in <h> gives the trivial unit 1
  UnitDescriptor triv = bicyclic_left(G, G->find_name("r2"), r);
  CHECK(triv.trivial);
  CHECK(triv.element.is_one());

  UnitDescriptor u = bicyclic_left(G, r, s);
  CHECK_FALSE(u.trivial);
  check_unit(u);
  CHECK(u.element.augmentation() == 1);
  std::set<Elt> expect;
  for (const char *n : {"1", "r", "rs", "r3s", "r3"}) expect.insert(G->find_name(n));
  CHECK(u.element.support() == expect);

  // mirrored version
  UnitDescriptor v = bicyclic_right(G, s, r);
  check_unit(v);
  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement se = GroupRingElement::from_element(G, s);
  GroupRingElement re = GroupRingElement::from_element(G, r);
  CHECK(v.element == one + (one + se) * re * (one - se));
}

TEST_CASE("bass units") {
  GroupPtr C5 = cyclic(5);
  Elt h = 1;

  UnitDescriptor triv = bass(C5, h, 1, 3);
  CHECK(triv.trivial);
  CHECK(triv.element.is_one());

  UnitDescriptor u = bass(C5, h, 2, 4);
  check_unit(u);
  CHECK(u.element.augmentation() == 1);
  std::vector<Rational> expect = {-2, 1, 3, 1, -2};
  CHECK(u.element.coeffs() == expect);

  // multiplicativity in the exponent
  UnitDescriptor u8 = bass(C5, h, 2, 8);
  CHECK(u.element * u.element == u8.element);

  // congruence failures rejected
  CHECK_THROWS_AS(bass(C5, h, 2, 3), BadBassParams);
  CHECK_THROWS_AS(bass(C5, h, 5, 4), BadBassParams);

  // k = o(g)-1 is congruent to -1: trivial family
  UnitDescriptor w = bass(C5, h, 4, 2);
  CHECK(w.trivial);
  check_unit(w);
}

TEST_CASE("bass identity across small cyclic orders") {
  for (int n = 2; n <= 16; ++n) {
    GroupPtr G = cyclic(n);
    Elt g = 1;
    for (long k = 1; k < n; ++k) {
      if (std::gcd(k, static_cast<long>(n)) != 1) continue;
      long d = 1, kp = k % n;
      while (kp != 1) {
        kp = (kp * k) % n;
        ++d;
      }
      UnitDescriptor a = bass(G, g, k, d);
      UnitDescriptor b = bass(G, g, k, 2 * d);
      REQUIRE(a.element.augmentation() == 1);
      REQUIRE(a.element * a.element == b.element);
      REQUIRE(a.element * b.element == bass(G, g, k, 3 * d).element);
    }
  }
}

TEST_CASE("bovdi units") {
  GroupPtr G = catalog_group("d8");
  Elt r = G->find_name("r"), s = G->find_name("s");

  UnitDescriptor b1 = bovdi_left(G, 1, r, s);
  check_unit(b1);
  CHECK(b1.element.augmentation() == 1);
  // frozen expansion: b_1(r, s~) = s + r + rs - r3s - r3
  GroupRingElement expect = GroupRingElement::zero(G);
  expect.set_coeff(G->find_name("s"), 1);
  expect.set_coeff(G->find_name("r"), 1);
  expect.set_coeff(G->find_name("rs"), 1);
  expect.set_coeff(G->find_name("r3s"), -1);
  expect.set_coeff(G->find_name("r3"), -1);
  CHECK(b1.element == expect);
  CHECK(b1.predicted_order == PredictedOrder::finite(2));

  // k = o(h) recovers the bicyclic unit
  UnitDescriptor bo = bovdi_left(G, element_order(G, s), r, s);
  CHECK(bo.element == bicyclic_left(G, r, s).element);

  // g in N(<h>) collapses to the trivial unit h^k
  UnitDescriptor triv = bovdi_left(G, 1, G->find_name("r2"), s);
  CHECK(triv.trivial);
  CHECK(triv.element == GroupRingElement::from_element(G, s));

  // right-handed identity b_k(h~, g) = h^k b(h~, g)
  for (long k = 1; k <= 2; ++k) {
    UnitDescriptor bk = bovdi_right(G, k, s, r);
    GroupRingElement hk = GroupRingElement::from_element(G, G->power(s, k));
    CHECK(bk.element == hk * bicyclic_right(G, s, r).element);
    check_unit(bk);
  }
}

TEST_CASE("generalized bovdi units") {
  GroupPtr G = catalog_group("c11xc5");
  Elt g = G->find_name("a"), h = G->find_name("b");
  GroupRingElement one = GroupRingElement::one(G);

  // uh = h^k reduces to bovdi_left
  GroupRingElement hk = GroupRingElement::from_element(G, G->power(h, 2));
  UnitDescriptor red = generalized_bovdi(G, hk, g, h, Side::LEFT);
  CHECK(red.element == bovdi_left(G, 2, g, h).element);

  // uh = 1 reduces to the bicyclic unit
  UnitDescriptor bic = generalized_bovdi(G, one, g, h, Side::LEFT);
  CHECK(bic.element == bicyclic_left(G, g, h).element);

  // uh = a Bass unit on <h>: the Thm 3.3 generator
  GroupRingElement uh = GroupRingElement::zero(G);
  {
    GroupPtr C5 = cyclic(5);
    UnitDescriptor bass5 = bass(C5, 1, 2, 4);
    for (int i = 0; i < 5; ++i) {
      Elt hi = G->power(h, i);
      uh.set_coeff(hi, bass5.element.coeff(i));
    }
  }
  UnitDescriptor t = generalized_bovdi(G, uh, g, h, Side::LEFT);
  check_unit(t);
  CHECK(t.element.augmentation() == 1);
  GroupRingElement he = GroupRingElement::from_element(G, h);
  GroupRingElement ge = GroupRingElement::from_element(G, g);
  CHECK(t.element == uh + (one - he) * ge * tilde(cyclic_subgroup(G, h)));

  // right-handed mirror
  UnitDescriptor tr = generalized_bovdi(G, uh, g, h, Side::RIGHT);
  check_unit(tr);
  CHECK(tr.element == uh + tilde(cyclic_subgroup(G, h)) * ge * (one - he));

  // error paths: support off <h>, non-integral, non-invertible
  CHECK_THROWS_AS(generalized_bovdi(G, ge, g, h, Side::LEFT),
                  NotAUnitOfCyclicRing);
  CHECK_THROWS_AS(generalized_bovdi(G, Rational(1, 2) * one, g, h, Side::LEFT),
                  NotAUnitOfCyclicRing);
  CHECK_THROWS_AS(generalized_bovdi(G, one + he, g, h, Side::LEFT),
                  NotAUnitOfCyclicRing);
}

TEST_CASE("s-units") {
  // H normal forces s = 1 (degenerate), seen in D10
  GroupPtr D10 = catalog_group("d10");
  Elt r = D10->find_name("r"), s = D10->find_name("s");
  Subgroup R = cyclic_subgroup(D10, r);
  UnitDescriptor degen =
      s_unit(D10, r, GroupRingElement::from_element(D10, s), R);
  CHECK(degen.degenerate);
  CHECK(degen.element.is_one());

  // alpha = 0 degenerates too
  UnitDescriptor z = s_unit(D10, r, GroupRingElement::zero(D10), R);
  CHECK(z.degenerate);

  // C11xC5 with H = <h> non-normal and alpha = g gives s != 1
  GroupPtr G = catalog_group("c11xc5");
  Elt g = G->find_name("a"), h = G->find_name("b");
  Subgroup H = cyclic_subgroup(G, h);
  UnitDescriptor su = s_unit(G, h, GroupRingElement::from_element(G, g), H);
  CHECK_FALSE(su.degenerate);
  CHECK_FALSE(su.element.is_one());
  check_unit(su);
}

TEST_CASE("predicted bovdi orders") {
  GroupPtr d8 = catalog_group("d8");
  Elt r = d8->find_name("r"), s = d8->find_name("s");
  CHECK(predicted_bovdi_order(d8, 1, r, s) == PredictedOrder::finite(2));
  CHECK_THROWS_AS(predicted_bovdi_order(d8, 1, d8->find_name("r2"), s),
                  TrivialCase);

  GroupPtr H = catalog_group("heis27");
  Elt g = H->find_name("g"), h = H->find_name("h");
  CHECK(predicted_bovdi_order(H, 1, g, h) == PredictedOrder::finite(3));
  CHECK(predicted_bovdi_order(H, 2, g, h) == PredictedOrder::finite(3));

  // minimal normalized power 4 with k = 2: infinite order.  No catalog group
  // realizes this, so use the order-64 Heisenberg group over Z/4.
  GroupPtr H4 = heisenberg_group(4);
  Elt g4 = H4->find_name("g"), h4 = H4->find_name("h");
  REQUIRE(element_order(H4, h4) == 4);
  REQUIRE(min_normalized_power(H4, g4, h4) == 4);
  CHECK(predicted_bovdi_order(H4, 2, g4, h4) == PredictedOrder::infinite());
  CHECK(predicted_bovdi_order(H4, 1, g4, h4) == PredictedOrder::finite(4));
  CHECK(predicted_bovdi_order(H4, 3, g4, h4) == PredictedOrder::finite(4));
}

TEST_CASE("verify_order certificates") {
  GroupPtr d8 = catalog_group("d8");
  Elt r = d8->find_name("r"), s = d8->find_name("s");

  // trivial unit h^k: exact order o(h^k)
  UnitDescriptor triv = bovdi_left(d8, 1, d8->find_name("r2"), s);
  OrderVerification vt = verify_order(triv, 16);
  CHECK(vt.kind == OrderVerification::CONFIRMED_FINITE);
  CHECK(vt.order == 2);

  UnitDescriptor b1 = bovdi_left(d8, 1, r, s);
  OrderVerification v1 = verify_order(b1, 16);
  CHECK(v1.kind == OrderVerification::CONFIRMED_FINITE);
  CHECK(v1.order == 2);
  CHECK(b1.predicted_order == PredictedOrder::finite(2));

  // nontrivial bicyclic units are unipotent: infinite order certificate
  UnitDescriptor bc = bicyclic_left(d8, r, s);
  OrderVerification vb = verify_order(bc, 50);
  CHECK(vb.kind == OrderVerification::CONFIRMED_INFINITE);
  CHECK_FALSE(vb.certificate.empty());

  // heisenberg-over-Z/4 infinite case agrees with its certificate
  GroupPtr H4 = heisenberg_group(4);
  Elt g4 = H4->find_name("g"), h4 = H4->find_name("h");
  UnitDescriptor binf = bovdi_left(H4, 2, g4, h4);
  CHECK(binf.predicted_order == PredictedOrder::infinite());
  OrderVerification vi = verify_order(binf, 64);
  CHECK(vi.kind == OrderVerification::CONFIRMED_INFINITE);
}

TEST_CASE("descriptor metadata") {
  GroupPtr d8 = catalog_group("d8");
  UnitDescriptor u = bovdi_left(d8, 1, d8->find_name("r"), d8->find_name("s"));
  CHECK(unit_kind_name(u.kind) == "BOVDI_LEFT");
  CHECK(u.k == 1);
  CHECK_FALSE(u.params.empty());
  CHECK(PredictedOrder::finite(2).to_string() == "2");
  CHECK(PredictedOrder::infinite().to_string() == "INFINITE");
}
