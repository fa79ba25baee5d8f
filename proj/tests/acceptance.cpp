// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all pass.

#include "unitforge/catalog.hpp"
#include "unitforge/cyclotomic.hpp"
#include "unitforge/freeness.hpp"
#include "unitforge/group.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/pipelines.hpp"
#include "unitforge/reps.hpp"
#include "unitforge/units.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace unitforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

GroupPtr cyclic(int n) {
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return from_cayley_table(t, true);
}

// 1. order prediction vs certificate, exhaustively over the catalog
Outcome criterion1() {
  long cases = 0;
  for (const std::string &key : catalog_keys()) {
    GroupPtr G = catalog_group(key);
    if (G->order() > 64)
      continue;
    for (Elt h = 0; h < G->order(); ++h) {
      long oh = element_order(G, h);
      if (oh < 2)
        continue;
      for (Elt g = 0; g < G->order(); ++g) {
        if (is_in_normalizer(G, g, h))
          continue;
        for (long k = 1; k < oh; ++k) {
          OrderCheckResult r = lemma31_case(G, g, h, k);
          ++cases;
          if (!r.agree)
            return {false, "prediction/certificate mismatch in " + key +
                               " at g=" + G->name(g) + ", h=" + G->name(h) +
                               ", k=" + std::to_string(k) + " (predicted " +
                               r.predicted.to_string() + ")"};
        }
      }
    }
  }
  return {true, std::to_string(cases) +
                    " (g,h,k) cases over all catalog groups of order <= 64; "
                    "every predicted order matches its certificate"};
}

// 2. D8: order-2 Bovdi pair generating C_2 * C_2 up to 10 syllables
Outcome criterion2() {
  GroupPtr G = catalog_group("d8");
  Elt r = G->find_name("r"), s = G->find_name("s");
  UnitDescriptor u = bovdi_left(G, 1, r, s);
  GroupRingElement v = u.element.involution();
  if (u.element.is_one() || !(u.element * u.element).is_one())
    return {false, "u = b_1(r,s~) does not have exact order 2"};
  if (v.is_one() || !(v * v).is_one())
    return {false, "v = u* does not have exact order 2"};
  FreenessReport rep = free_product_oracle(u.element, 2, v, 2, 10);
  if (rep.verdict != Verdict::PASSED_TO_BOUND || rep.bound_reached != 10)
    return {false, "free product oracle: " + verdict_name(rep.verdict) +
                       " at bound " + std::to_string(rep.bound_reached)};
  return {true, "u and u* have exact order 2; oracle passed to 10 syllables (" +
                    std::to_string(rep.words_checked) + " words checked)"};
}

// 3. Heisenberg-27: degree-3 matrix-unit system with the frozen corner entry
Outcome criterion3() {
  GroupPtr G = catalog_group("heis27");
  Elt g = G->find_name("g"), h = G->find_name("h");
  Thm41Result res = thm41_pipeline(G, g, h, 1, 1, 8);
  if (res.sys.degree != 3 || res.sys.field_conductor != 3)
    return {false, "expected a degree-3 system over conductor 3, got degree " +
                       std::to_string(res.sys.degree) + ", conductor " +
                       std::to_string(res.sys.field_conductor)};
  verify_matrix_units(res.sys); // throws on any axiom failure

  CycMatrix M = to_matrix(res.sys, res.u.element * res.sys.epsilon);
  CyclotomicNumber z = CyclotomicNumber::zeta(3);
  CyclotomicNumber corner = CyclotomicNumber(3, Rational(3)) *
                            (CyclotomicNumber(3, Rational(1)) - z.inv());
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      if (i == 2 && j == 0) {
        if (!(M.at(i, j) == corner))
          return {false, "entry (3,1) is " + M.at(i, j).to_string() +
                             ", expected 3(1 - zeta^-1) = " +
                             corner.to_string()};
      } else if (!M.at(i, j).is_zero()) {
        return {false, "unexpected nonzero off-diagonal entry at (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")"};
      }
    }
  CyclotomicNumber norm = corner * corner.conj();
  if (!norm.is_rational() || norm.rational_value() != Rational(27))
    return {false, "|corner|^2 != 27"};
  if (res.condition.verdict != Verdict::CERTIFIED_CONDITION)
    return {false, "Lemma 2.5 condition not certified: " + res.condition.notes};
  if (!res.oracle || res.oracle->verdict != Verdict::PASSED_TO_BOUND ||
      res.oracle->bound_reached != 8)
    return {false, "free product oracle did not pass to 8 syllables"};
  return {true, "degree-3 system over Q(zeta_3), axioms exact; unique "
                "exceptional entry (3,1) = 3(1 - zeta^-1) with |entry|^2 = 27; "
                "condition certified (27 >= 4); oracle passed to 8 syllables"};
}

// 4. C11:C5: Bass-pair monoid condition certified with margin, oracle to 10
Outcome criterion4() {
  GroupPtr G = catalog_group("c11xc5");
  Elt a = G->find_name("a"), b = G->find_name("b");
  Thm33Result res = thm33_pipeline(G, a, b, {2, 4}, {3, 4}, 10);
  if (res.condition.verdict != Verdict::CERTIFIED_CONDITION)
    return {false, "thm33_check not certified: " + res.condition.notes};

  double min_margin = 1e300;
  for (long k : {2L, 3L}) {
    CyclotomicNumber mu4 = geometric_sum(5, k).pow(4);
    if (certified_abs_ge(mu4, CyclotomicNumber(5, Rational(3))) != Tri::YES)
      return {false, "|mu^4| >= 3 not certified for k = " + std::to_string(k)};
    ComplexBound cb =
        embed(mu4 * mu4.conj() - CyclotomicNumber(5, Rational(9)));
    min_margin = std::min(min_margin, cb.center.real() - cb.radius);
  }
  if (!(min_margin > 1e-6))
    return {false, "certified margin too small: " + std::to_string(min_margin)};
  if (geometric_sum(5, 2).pow(4) == geometric_sum(5, 3).pow(4))
    return {false, "mu_1^4 equals mu_2^4"};
  if (res.oracle.verdict != Verdict::PASSED_TO_BOUND ||
      res.oracle.bound_reached != 10)
    return {false, "free monoid oracle: " + verdict_name(res.oracle.verdict)};
  std::ostringstream os;
  os << "pairs (2,4),(3,4) at n = 5 certified, |mu^4|^2 - 9 >= "
     << std::setprecision(6) << min_margin
     << "; mu powers distinct exactly; monoid oracle passed to length 10 ("
     << res.oracle.words_checked << " words)";
  return {true, os.str()};
}

// 5. D8: Pierce block pattern for u and u^w, metabelian sampling to length 3
Outcome criterion5() {
  GroupPtr G = catalog_group("d8");
  Prop32Result res =
      prop32_pipeline(G, G->find_name("r"), G->find_name("s"), 1, 3);
  if (!res.pattern_ok)
    return {false, "Pierce block pattern violated"};
  if (!res.metabelian.passed)
    return {false, "metabelian witness found: " + res.metabelian.witness};
  return {true, "blocks of u and u^w match the pattern (lower-left 0, "
                "bottom-right e); metabelian check passed for " +
                    std::to_string(res.metabelian.pairs_checked) +
                    " commutator pairs to length 3"};
}

// 6. Bass identities on cyclic groups of order <= 16
Outcome criterion6() {
  long identities = 0, units = 0;
  for (int n = 2; n <= 16; ++n) {
    GroupPtr G = cyclic(n);
    for (long k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1)
        continue;
      long d = 1, pw = k % n;
      while (pw != 1 % n) {
        pw = (pw * k) % n;
        ++d;
      }
      auto make = [&](long m) {
        UnitDescriptor u = bass(G, 1, k, m);
        if (u.element.augmentation() != Rational(1))
          throw std::logic_error("augmentation != 1 for u_{" +
                                 std::to_string(k) + "," + std::to_string(m) +
                                 "} at n = " + std::to_string(n));
        ++units;
        return u;
      };
      for (long m1 : {d, 2 * d})
        for (long m2 : {d, 2 * d}) {
          UnitDescriptor u1 = make(m1), u2 = make(m2), u12 = make(m1 + m2);
          ++identities;
          if (u1.element * u2.element != u12.element)
            return {false, "u_{k,m}u_{k,n} != u_{k,m+n} at order " +
                               std::to_string(n) + ", k = " +
                               std::to_string(k)};
        }
    }
  }
  return {true, std::to_string(identities) +
                    " product identities verified exactly on cyclic groups of "
                    "order 2..16; all " +
                    std::to_string(units) + " Bass units have augmentation 1"};
}

// 7. geometric_sum_bound vs certified numeric modulus, n <= 30, k <= 2n
Outcome criterion7() {
  long cases = 0;
  for (long n = 1; n <= 30; ++n)
    for (long k = 1; k <= 2 * n; ++k) {
      ++cases;
      CyclotomicNumber zk = geometric_sum(n, k);
      GeomBound bnd = geometric_sum_bound(n, k);
      auto where = [&] {
        return " at (n, k) = (" + std::to_string(n) + ", " +
               std::to_string(k) + ")";
      };
      switch (bnd) {
      case GeomBound::ZERO:
        if (!zk.is_zero() || k % n != 0)
          return Outcome{false, "ZERO misclassified" + where()};
        break;
      case GeomBound::EQ_ONE: {
        bool pos = (n == 1) ? (k == 1)
                            : (k % n == 1 % n || k % n == (n - 1) % n);
        CyclotomicNumber nrm = zk * zk.conj();
        if (!pos || !nrm.is_rational() || nrm.rational_value() != Rational(1))
          return Outcome{false, "EQ_ONE misclassified" + where()};
        break;
      }
      case GeomBound::GE_ONE_STRICT:
        if (abs_compare(zk, 1, Rational(1)) != AbsCompare::GREATER)
          return Outcome{false,
                         "GE_ONE_STRICT not certified numerically" + where()};
        break;
      }
    }
  return {true, std::to_string(cases) +
                    " classifications agree with the certified modulus, "
                    "including exact EQ_ONE at k = +-1 mod n"};
}

// 8. negative controls: self-certifying violation and empty q8 scan
Outcome criterion8() {
  GroupPtr G = catalog_group("d8");
  UnitDescriptor u = bovdi_left(G, 1, G->find_name("r"), G->find_name("s"));
  FreenessReport rep = free_product_oracle(u.element, 2, u.element, 2, 10);
  if (rep.verdict != Verdict::VIOLATION || rep.witness.empty())
    return {false, "v = u did not produce a violation"};
  GroupRingElement acc = GroupRingElement::one(G);
  for (const auto &[name, e] : rep.witness) {
    if (name != "u" && name != "v")
      return {false, "unexpected witness letter " + name};
    acc = acc * u.element.power(e);
  }
  if (!acc.is_one())
    return {false, "witness word does not evaluate to the identity"};
  if (rep.bound_reached != static_cast<long>(rep.witness.size()))
    return {false, "bound_reached does not equal the witness length"};
  auto q8scan = scan_group(catalog_group("q8"), TheoremTag::THM42);
  if (!q8scan.empty())
    return {false, "q8 scan for Thm 4.2 hypotheses is not empty"};
  return {true, "v = u yields VIOLATION with a witness replaying to 1 "
                "(length " +
                    std::to_string(rep.witness.size()) +
                    "); q8 Thm 4.2 scan is empty"};
}

// 9. quotient coherence of the Heisenberg-27 Bovdi pair
Outcome criterion9() {
  GroupPtr G = catalog_group("heis27");
  Elt g = G->find_name("g"), h = G->find_name("h");
  UnitDescriptor u = bovdi_left(G, 1, g, h);
  UnitDescriptor v = bovdi_right(G, 1, h, G->inv(g));
  Quotient q = quotient_by_central(G, center(G));
  UnitDescriptor qu = bovdi_left(q.group, 1, q.proj[g], q.proj[h]);
  UnitDescriptor qv = bovdi_right(q.group, 1, q.proj[h],
                                  q.group->inv(q.proj[g]));
  if (u.element.project(q) != qu.element)
    return {false, "projection of b_1(g,h~) is not the quotient Bovdi unit"};
  if (v.element.project(q) != qv.element)
    return {false, "projection of b_1(h~,g^-1) is not the quotient Bovdi unit"};
  return {true, "both Bovdi units project exactly to the corresponding "
                "Bovdi units over G/Z(G) (order " +
                    std::to_string(q.group->order()) + ")"};
}

} // namespace

int main() {
  struct Entry {
    int num;
    std::function<Outcome()> fn;
    double limit_seconds; // 0 = no stated limit
  };
  const std::vector<Entry> entries = {
      {1, criterion1, 120.0}, {2, criterion2, 10.0}, {3, criterion3, 60.0},
      {4, criterion4, 120.0}, {5, criterion5, 30.0}, {6, criterion6, 30.0},
      {7, criterion7, 0.0},   {8, criterion8, 10.0}, {9, criterion9, 10.0},
  };

  int failures = 0;
  for (const Entry &e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.fn();
    } catch (const std::exception &ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (out.pass && e.limit_seconds > 0 && secs > e.limit_seconds) {
      out.pass = false;
      out.detail = "completed but exceeded the stated time limit of " +
                   std::to_string(e.limit_seconds) + "s";
    }
    std::ostringstream line;
    line << (out.pass ? "PASS" : "FAIL") << ": criterion " << e.num << " - "
         << out.detail << " [" << std::fixed << std::setprecision(1) << secs
         << "s]";
    std::cout << line.str() << std::endl;
    if (!out.pass)
      ++failures;
  }
  return failures == 0 ? 0 : 1;
}
