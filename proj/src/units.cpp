#include "unitforge/units.hpp"

#include <numeric>

namespace unitforge {

std::string unit_kind_name(UnitKind k) {
  switch (k) {
  case UnitKind::BICYCLIC_LEFT:
    return "BICYCLIC_LEFT";
  case UnitKind::BICYCLIC_RIGHT:
    return "BICYCLIC_RIGHT";
  case UnitKind::BASS:
    return "BASS";
  case UnitKind::BOVDI_LEFT:
    return "BOVDI_LEFT";
  case UnitKind::BOVDI_RIGHT:
    return "BOVDI_RIGHT";
  case UnitKind::GENERALIZED_BOVDI:
    return "GENERALIZED_BOVDI";
  case UnitKind::S_UNIT:
    return "S_UNIT";
  }
  return "?";
}

std::string PredictedOrder::to_string() const {
  switch (tag) {
  case FINITE:
    return std::to_string(value);
  case INFINITE_ORDER:
    return "INFINITE";
  default:
    return "UNKNOWN";
  }
}

namespace {

void verify_inverse(UnitDescriptor &d) {
  if (!(d.element * d.inverse).is_one() || !(d.inverse * d.element).is_one())
    throw std::logic_error("unit construction: inverse verification failed");
}

// predicted order of b_k (k taken mod o(h); k = 0 covers the bicyclic case)
PredictedOrder bovdi_prediction(const GroupPtr &G, long k, Elt g, Elt h) {
  long oh = element_order(G, h);
  long kr = ((k % oh) + oh) % oh;
  Elt hk = G->power(h, kr);
  long target = element_order(G, hk);
  if (is_in_normalizer(G, g, h))
    return PredictedOrder::finite(target); // element is the trivial unit h^k
  long m = min_normalized_power(G, g, h);
  if (std::gcd(kr, m) == 1)
    return PredictedOrder::finite(target);
  return PredictedOrder::infinite();
}

} // namespace

UnitDescriptor bicyclic_left(const GroupPtr &G, Elt g, Elt h) {
  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement a = (GroupRingElement::one(G) - GroupRingElement::from_element(G, h)) *
                       GroupRingElement::from_element(G, g) *
                       tilde(cyclic_subgroup(G, h));
  UnitDescriptor d;
  d.kind = UnitKind::BICYCLIC_LEFT;
  d.group = G;
  d.g = g;
  d.h = h;
  d.k = element_order(G, h); // b(g,h~) = b_{o(h)}(g,h~)
  d.params = {{"g", G->name(g)}, {"h", G->name(h)}};
  d.element = one + a;
  d.inverse = one - a;
  d.trivial = is_in_normalizer(G, g, h);
  d.predicted_order = bovdi_prediction(G, 0, g, h);
  verify_inverse(d);
  if (d.trivial && !d.element.is_one())
    throw std::logic_error("bicyclic: trivial case must collapse to 1");
  return d;
}

UnitDescriptor bicyclic_right(const GroupPtr &G, Elt h, Elt g) {
  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement a = tilde(cyclic_subgroup(G, h)) *
                       GroupRingElement::from_element(G, g) *
                       (GroupRingElement::one(G) - GroupRingElement::from_element(G, h));
  UnitDescriptor d;
  d.kind = UnitKind::BICYCLIC_RIGHT;
  d.group = G;
  d.g = g;
  d.h = h;
  d.k = element_order(G, h);
  d.params = {{"h", G->name(h)}, {"g", G->name(g)}};
  d.element = one + a;
  d.inverse = one - a;
  d.trivial = is_in_normalizer(G, g, h);
  d.predicted_order = bovdi_prediction(G, 0, g, h);
  verify_inverse(d);
  return d;
}

UnitDescriptor bass(const GroupPtr &G, Elt g, long k, long m) {
  long og = element_order(G, g);
  if (k < 1 || k >= og)
    throw BadBassParams("bass: requires 1 <= k < o(g) = " + std::to_string(og) +
                        ", got k = " + std::to_string(k));
  if (m < 1)
    throw BadBassParams("bass: requires m >= 1");
  Integer km;
  mpz_powm_ui(km.get_mpz_t(), Integer(k).get_mpz_t(),
              static_cast<unsigned long>(m), Integer(og).get_mpz_t());
  if (km != 1)
    throw BadBassParams("bass: k^m = " + std::to_string(k) + "^" +
                        std::to_string(m) + " is not 1 mod o(g) = " +
                        std::to_string(og));
  Integer km_full;
  mpz_pow_ui(km_full.get_mpz_t(), Integer(k).get_mpz_t(),
             static_cast<unsigned long>(m));
  Integer coeff_num = 1 - km_full; // divisible by o(g) by the congruence
  Integer coeff;
  mpz_divexact(coeff.get_mpz_t(), coeff_num.get_mpz_t(),
               Integer(og).get_mpz_t());

  GroupRingElement base = GroupRingElement::zero(G);
  for (long i = 0; i < k; ++i) {
    Elt gi = G->power(g, i);
    base.set_coeff(gi, base.coeff(gi) + 1);
  }
  GroupRingElement u =
      base.power(static_cast<unsigned long>(m)) +
      Rational(coeff) * tilde(cyclic_subgroup(G, g));

  UnitDescriptor d;
  d.kind = UnitKind::BASS;
  d.group = G;
  d.g = g;
  d.k = k;
  d.m = m;
  d.params = {{"g", G->name(g)}, {"k", std::to_string(k)}, {"m", std::to_string(m)}};
  d.element = u;
  d.trivial = (k == 1) || ((k + 1) % og == 0);
  d.predicted_order =
      (k == 1) ? PredictedOrder::finite(1) : PredictedOrder::unknown();

  // closed-form inverse u_{k',m}(g^k) with k k' = 1 mod o(g); fall back to
  // the linear solve if the formula ever fails to verify
  long kp = 1;
  for (long t = 1; t < og; ++t)
    if ((k * t) % og == 1) {
      kp = t;
      break;
    }
  Elt gk = G->power(g, k);
  long ogk = element_order(G, gk);
  bool closed_form_ok = false;
  if (kp >= 1 && kp < ogk) {
    Integer kpm;
    mpz_powm_ui(kpm.get_mpz_t(), Integer(kp).get_mpz_t(),
                static_cast<unsigned long>(m), Integer(ogk).get_mpz_t());
    if (kpm == 1) {
      Integer kpm_full;
      mpz_pow_ui(kpm_full.get_mpz_t(), Integer(kp).get_mpz_t(),
                 static_cast<unsigned long>(m));
      Integer c2;
      mpz_divexact(c2.get_mpz_t(), Integer(1 - kpm_full).get_mpz_t(),
                   Integer(ogk).get_mpz_t());
      GroupRingElement base2 = GroupRingElement::zero(G);
      for (long i = 0; i < kp; ++i) {
        Elt xi = G->power(gk, i);
        base2.set_coeff(xi, base2.coeff(xi) + 1);
      }
      GroupRingElement v = base2.power(static_cast<unsigned long>(m)) +
                           Rational(c2) * tilde(cyclic_subgroup(G, gk));
      if ((u * v).is_one() && (v * u).is_one()) {
        d.inverse = v;
        closed_form_ok = true;
      }
    }
  }
  if (!closed_form_ok) {
    auto v = u.try_invert();
    if (!v)
      throw std::logic_error("bass: constructed element is not invertible");
    d.inverse = *v;
  }
  verify_inverse(d);
  return d;
}

UnitDescriptor bovdi_left(const GroupPtr &G, long k, Elt g, Elt h) {
  if (k < 1)
    throw std::invalid_argument("bovdi_left: k must be >= 1");
  long oh = element_order(G, h);
  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement hk = GroupRingElement::from_element(G, G->power(h, k));
  GroupRingElement a = (one - GroupRingElement::from_element(G, h)) *
                       GroupRingElement::from_element(G, g) *
                       tilde(cyclic_subgroup(G, h));
  UnitDescriptor d;
  d.kind = UnitKind::BOVDI_LEFT;
  d.group = G;
  d.g = g;
  d.h = h;
  d.k = k;
  d.params = {{"k", std::to_string(k)}, {"g", G->name(g)}, {"h", G->name(h)}};
  d.element = hk + a;
  d.trivial = is_in_normalizer(G, g, h);
  d.predicted_order = bovdi_prediction(G, k, g, h);

  // b_k(g,h~) = h^k b(h^{-k} g, h~), so the inverse is b(h^{-k}g,h~)^{-1} h^{-k}
  Elt hmk = G->power(h, -k);
  GroupRingElement a2 = (one - GroupRingElement::from_element(G, h)) *
                        GroupRingElement::from_element(G, G->mul(hmk, g)) *
                        tilde(cyclic_subgroup(G, h));
  if (d.element != hk * (one + a2))
    throw std::logic_error("bovdi_left: factorization identity failed");
  if (k % oh == 0 && d.element != bicyclic_left(G, g, h).element)
    throw std::logic_error("bovdi_left: b_{o(h)} must equal the bicyclic unit");
  d.inverse = (one - a2) * GroupRingElement::from_element(G, hmk);
  verify_inverse(d);
  return d;
}

UnitDescriptor bovdi_right(const GroupPtr &G, long k, Elt h, Elt g) {
  if (k < 1)
    throw std::invalid_argument("bovdi_right: k must be >= 1");
  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement hk = GroupRingElement::from_element(G, G->power(h, k));
  GroupRingElement a = tilde(cyclic_subgroup(G, h)) *
                       GroupRingElement::from_element(G, g) *
                       (one - GroupRingElement::from_element(G, h));
  UnitDescriptor d;
  d.kind = UnitKind::BOVDI_RIGHT;
  d.group = G;
  d.g = g;
  d.h = h;
  d.k = k;
  d.params = {{"k", std::to_string(k)}, {"h", G->name(h)}, {"g", G->name(g)}};
  d.element = hk + a;
  d.trivial = is_in_normalizer(G, g, h);
  d.predicted_order = bovdi_prediction(G, k, g, h);

  // b_k(h~,g) = h^k b(h~,g) since h^k h~ = h~
  GroupRingElement bic = one + a;
  if (d.element != hk * bic)
    throw std::logic_error("bovdi_right: factorization identity failed");
  d.inverse = (one - a) * GroupRingElement::from_element(G, G->power(h, -k));
  verify_inverse(d);
  return d;
}

UnitDescriptor generalized_bovdi(const GroupPtr &G, const GroupRingElement &uh,
                                 Elt g, Elt h, Side side) {
  if (uh.group().get() != G.get())
    throw GroupMismatch("generalized_bovdi: u(h) lives in a different group");
  Subgroup H = cyclic_subgroup(G, h);
  for (Elt x : uh.support())
    if (!H.contains(x))
      throw NotAUnitOfCyclicRing("generalized_bovdi: u(h) not supported on <h>");
  if (!uh.is_integral())
    throw NotAUnitOfCyclicRing("generalized_bovdi: u(h) not integral");
  auto uh_inv_opt = uh.try_invert();
  if (!uh_inv_opt)
    throw NotAUnitOfCyclicRing("generalized_bovdi: u(h) is not invertible");
  GroupRingElement uh_inv = *uh_inv_opt;
  for (Elt x : uh_inv.support())
    if (!H.contains(x))
      throw NotAUnitOfCyclicRing(
          "generalized_bovdi: inverse of u(h) leaves Q<h>");
  if (!uh_inv.is_integral())
    throw NotAUnitOfCyclicRing(
        "generalized_bovdi: u(h) is not a unit of Z<h> (inverse not integral)");

  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement ge = GroupRingElement::from_element(G, g);
  GroupRingElement he = GroupRingElement::from_element(G, h);
  GroupRingElement ht = tilde(H);

  UnitDescriptor d;
  d.kind = UnitKind::GENERALIZED_BOVDI;
  d.group = G;
  d.g = g;
  d.h = h;
  d.params = {{"u(h)", uh.to_string()},
              {"g", G->name(g)},
              {"h", G->name(h)},
              {"side", side == Side::LEFT ? "left" : "right"}};
  if (side == Side::LEFT) {
    GroupRingElement a = (one - he) * ge * ht;
    d.element = uh + a;
    d.inverse = (one - (one - he) * uh_inv * ge * ht) * uh_inv;
  } else {
    GroupRingElement a = ht * ge * (one - he);
    d.element = uh + a;
    d.inverse = uh_inv * (one - ht * ge * uh_inv * (one - he));
  }
  d.trivial = is_in_normalizer(G, g, h);
  d.predicted_order = PredictedOrder::unknown();
  verify_inverse(d);
  return d;
}

UnitDescriptor s_unit(const GroupPtr &G, Elt h, const GroupRingElement &alpha,
                      const Subgroup &H) {
  if (alpha.group().get() != G.get())
    throw GroupMismatch("s_unit: alpha lives in a different group");
  if (H.parent.get() != G.get())
    throw GroupMismatch("s_unit: H lives in a different group");
  if (!H.contains(h))
    throw std::invalid_argument("s_unit: requires h in H");
  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement a =
      (one - GroupRingElement::from_element(G, h)) * alpha * tilde(H);
  if (!(a * a).is_zero())
    throw std::logic_error("s_unit: ((1-h) alpha H~)^2 must vanish for h in H");
  UnitDescriptor d;
  d.kind = UnitKind::S_UNIT;
  d.group = G;
  d.h = h;
  d.params = {{"h", G->name(h)}, {"alpha", alpha.to_string()},
              {"|H|", std::to_string(H.order())}};
  d.element = one + a;
  d.inverse = one - a;
  d.degenerate = a.is_zero();
  d.trivial = d.degenerate;
  d.predicted_order =
      d.degenerate ? PredictedOrder::finite(1) : PredictedOrder::infinite();
  verify_inverse(d);
  return d;
}

PredictedOrder predicted_bovdi_order(const GroupPtr &G, long k, Elt g, Elt h) {
  long oh = element_order(G, h);
  if (k < 1 || k >= oh)
    throw std::invalid_argument("predicted_bovdi_order: requires 1 <= k < o(h)");
  if (is_in_normalizer(G, g, h))
    throw TrivialCase("predicted_bovdi_order: g in N_G(<h>), unit is trivial");
  return bovdi_prediction(G, k, g, h);
}

OrderVerification verify_order(const UnitDescriptor &u, long bound) {
  const GroupPtr &G = u.group;
  bool certificate_kind =
      u.kind == UnitKind::BOVDI_LEFT || u.kind == UnitKind::BOVDI_RIGHT ||
      u.kind == UnitKind::BICYCLIC_LEFT || u.kind == UnitKind::BICYCLIC_RIGHT;
  if (certificate_kind) {
    long oh = element_order(G, u.h);
    long kr = ((u.k % oh) + oh) % oh;
    long T = element_order(G, G->power(u.h, kr)); // o(h^k)
    GroupRingElement w = u.element.power(static_cast<unsigned long>(T));
    if (!w.is_one())
      return {OrderVerification::CONFIRMED_INFINITE, 0,
              "u^" + std::to_string(T) +
                  " != 1 where " + std::to_string(T) +
                  " = o(h^k); a finite-order Bovdi unit must satisfy "
                  "u^{o(h^k)} = 1"};
    // order divides T; report the minimal divisor
    for (long d = 1; d <= T; ++d) {
      if (T % d != 0)
        continue;
      if (u.element.power(static_cast<unsigned long>(d)).is_one())
        return {OrderVerification::CONFIRMED_FINITE, d,
                "u^" + std::to_string(d) + " = 1, minimal"};
    }
  }
  GroupRingElement pow = GroupRingElement::one(G);
  for (long t = 1; t <= bound; ++t) {
    pow = pow * u.element;
    if (pow.is_one())
      return {OrderVerification::CONFIRMED_FINITE, t,
              "u^" + std::to_string(t) + " = 1, minimal"};
  }
  return {OrderVerification::EXCEEDED_BOUND, 0,
          "no power up to " + std::to_string(bound) + " equals 1"};
}

} // namespace unitforge
