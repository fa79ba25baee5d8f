#include "unitforge/freeness.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

namespace unitforge {

std::string verdict_name(Verdict v) {
  switch (v) {
  case Verdict::CERTIFIED_CONDITION:
    return "CERTIFIED_CONDITION";
  case Verdict::PASSED_TO_BOUND:
    return "PASSED_TO_BOUND";
  case Verdict::VIOLATION:
    return "VIOLATION";
  case Verdict::INCONCLUSIVE:
    return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

std::string cyclic_name(long t) {
  return t == 1 ? std::string("C_inf") : "C_" + std::to_string(t);
}

std::string conclusion_text(long n, long m) {
  return cyclic_name(n) + " * " + cyclic_name(m);
}

// 4 * z_{k_n} * z_{k_m} at conductor lcm(n, m)
CyclotomicNumber sanov_threshold(long n, long k_n, long m, long k_m) {
  long L = std::lcm(n, m);
  CyclotomicNumber zz =
      geometric_sum(n, k_n).lift(L) * geometric_sum(m, k_m).lift(L);
  return CyclotomicNumber(L, Rational(4)) * zz;
}

} // namespace

FreenessReport prop24_check(long n, long k_n, long m, long k_m,
                            const CyclotomicNumber &u,
                            const CyclotomicNumber &v) {
  if (n < 1 || m < 1 || k_n < 1 || k_n > n || k_m < 1 || k_m > m)
    throw BadParams("prop24_check: need 1 <= k_n <= n and 1 <= k_m <= m");
  if (std::gcd(k_n, n) != 1 || std::gcd(k_m, m) != 1)
    throw BadParams("prop24_check: zeta^k must be a primitive root "
                    "(gcd(k, order) = 1)");
  FreenessReport rep;
  std::string conclusion = conclusion_text(n, m);
  if (n == 2 && m == 2) {
    if (!u.is_zero() || !v.is_zero()) {
      rep.verdict = Verdict::CERTIFIED_CONDITION;
      rep.notes = "n = m = 2 and u or v nonzero (exact): <A,B> = " + conclusion +
                  " (infinite dihedral)";
    } else {
      rep.verdict = Verdict::INCONCLUSIVE;
      rep.notes = "condition unmet: n = m = 2 with u = v = 0";
    }
    return rep;
  }
  long Lu = std::lcm(u.conductor(), v.conductor());
  CyclotomicNumber uv = u.lift(Lu) * v.lift(Lu);
  CyclotomicNumber rhs = sanov_threshold(n, k_n, m, k_m);
  switch (certified_abs_ge(uv, rhs)) {
  case Tri::YES:
    rep.verdict = Verdict::CERTIFIED_CONDITION;
    rep.notes = "|uv| >= 4|z_{k_n} z_{k_m}| certified: <A,B> = " + conclusion;
    break;
  case Tri::NO:
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.notes = "condition unmet (certified): |uv| < 4|z_{k_n} z_{k_m}|";
    break;
  case Tri::UNKNOWN:
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.notes = "certified interval straddles the threshold";
    break;
  }
  return rep;
}

FreenessReport lemma25_check(const CycMatrix &A, const CycMatrix &B, long n,
                             long k_n, long m, long k_m) {
  if (n < 1 || m < 1 || k_n < 1 || k_n > n || k_m < 1 || k_m > m ||
      std::gcd(k_n, n) != 1 || std::gcd(k_m, m) != 1)
    throw BadParams("lemma25_check: invalid (n, k_n, m, k_m)");
  const long r = A.degree();
  if (B.degree() != r)
    throw ShapeViolation("lemma25_check: A and B have different degrees");
  if (r == 2)
    throw ShapeViolation("lemma25_check: degree r must differ from 2");

  long L = std::lcm(std::lcm(A.conductor(), B.conductor()), std::lcm(n, m));
  CycMatrix Al = A.lift(L), Bl = B.lift(L);
  CyclotomicNumber one_L(L, Rational(1));

  if (!Al.is_lower_triangular())
    throw ShapeViolation("A is not lower triangular");
  if (!(Al.at(0, 0) == one_L))
    throw ShapeViolation("A_11 != 1", "A(1,1)");
  CyclotomicNumber zn = CyclotomicNumber::zeta(n).pow(k_n).lift(L);
  if (!(Al.at(1, 1) == zn))
    throw ShapeViolation("A_22 != zeta_n^{k_n}", "A(2,2)");

  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      if (i == j || (i == 0 && j == 1))
        continue;
      if (!Bl.at(i, j).is_zero())
        throw ShapeViolation("B is not of the form D + d E_12",
                             "B(" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
    }
  if (!(Bl.at(0, 0) == one_L))
    throw ShapeViolation("B_11 != 1", "B(1,1)");
  CyclotomicNumber zm = CyclotomicNumber::zeta(m).pow(k_m).lift(L);
  if (!(Bl.at(1, 1) == zm))
    throw ShapeViolation("second diagonal entry of B != zeta_m^{k_m}",
                         "B(2,2)");

  // exact order hypotheses: o(A) = i_n, o(B) = i_m (i_1 = infinity)
  auto ordA = cyc_matrix_order(A);
  if (n == 1 ? ordA.has_value() : (!ordA || *ordA != n))
    throw ShapeViolation("A does not have order i_n");
  auto ordB = cyc_matrix_order(B);
  if (m == 1 ? ordB.has_value() : (!ordB || *ordB != m))
    throw ShapeViolation("B does not have order i_m");

  CyclotomicNumber lhs = Al.at(1, 0) * Bl.at(0, 1); // A_21 * d
  CyclotomicNumber rhs = sanov_threshold(n, k_n, m, k_m);
  FreenessReport rep;
  switch (certified_abs_ge(lhs, rhs)) {
  case Tri::YES:
    rep.verdict = Verdict::CERTIFIED_CONDITION;
    rep.notes = "|A_21 d| >= 4|z_{k_n} z_{k_m}| certified: <A,B> = " +
                conclusion_text(n, m);
    break;
  case Tri::NO:
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.notes = "condition unmet (certified): |A_21 d| < 4|z_{k_n} z_{k_m}|";
    break;
  case Tri::UNKNOWN:
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.notes = "certified interval straddles the threshold";
    break;
  }
  return rep;
}

bool affine_monoid_check(const Rational &x1, const Rational &x2) {
  Rational third(1, 3);
  return x1 <= third && x2 <= third;
}

FreenessReport thm33_check(long n, std::pair<long, long> km1,
                           std::pair<long, long> km2) {
  FreenessReport rep;
  std::ostringstream notes;
  CyclotomicNumber mu_pow[2] = {CyclotomicNumber(1), CyclotomicNumber(1)};
  std::pair<long, long> kms[2] = {km1, km2};
  for (int i = 0; i < 2; ++i) {
    long k = kms[i].first, m = kms[i].second;
    if (!(1 < k && k < n - 1))
      throw BadBassParams("thm33_check: need 1 < k < n-1 (k = " +
                          std::to_string(k) + ", n = " + std::to_string(n) +
                          ")");
    if (std::gcd(k, n) != 1)
      throw BadBassParams("thm33_check: gcd(k, n) != 1");
    if (m < 1)
      throw BadBassParams("thm33_check: m must be positive");
    Integer kz(k), nz(n), r;
    mpz_powm_ui(r.get_mpz_t(), kz.get_mpz_t(), static_cast<unsigned long>(m),
                nz.get_mpz_t());
    // k^m != 1 mod n means no integral Bass unit exists for (k, m); the
    // cyclotomic condition is still well defined, so report instead of throw.
    const bool bass_valid = (r == 1);

    // (a) |mu| > 1, needed for the logarithmic condition to make sense
    if (geometric_sum_bound(n, k) != GeomBound::GE_ONE_STRICT) {
      rep.verdict = Verdict::INCONCLUSIVE;
      rep.notes = "condition unmet: |mu_" + std::to_string(i + 1) + "| = 1";
      return rep;
    }
    CyclotomicNumber mu = geometric_sum(n, k);
    mu_pow[i] = mu.pow(m);
    // (b) |mu^m| >= 3, the log_{|mu|} 3 <= m condition restated
    CyclotomicNumber three(n, Rational(3));
    Tri ge = certified_abs_ge(mu_pow[i], three);
    if (ge == Tri::NO) {
      rep.verdict = Verdict::INCONCLUSIVE;
      rep.notes = "condition unmet (certified): |mu_" + std::to_string(i + 1) +
                  "^m| < 3";
      return rep;
    }
    if (ge == Tri::UNKNOWN) {
      rep.verdict = Verdict::INCONCLUSIVE;
      rep.notes = "certified interval straddles |mu^m| = 3";
      return rep;
    }
    if (!bass_valid) {
      rep.verdict = Verdict::INCONCLUSIVE;
      rep.notes = "k^m != 1 mod n for (k, m) = (" + std::to_string(k) + ", " +
                  std::to_string(m) + "): no integral Bass unit";
      return rep;
    }
    // numeric margin on |mu^m|^2 - 9, for reporting only
    CyclotomicNumber margin_elt =
        mu_pow[i] * mu_pow[i].conj() - CyclotomicNumber(n, Rational(9));
    ComplexBound cb = embed(margin_elt);
    double margin = cb.center.real() - cb.radius;
    notes << (i ? "; " : "") << "|mu_" << (i + 1) << "^" << m
          << "|^2 - 9 >= " << std::setprecision(12) << margin;
  }
  // (c) exact inequality of the two mu powers
  if (mu_pow[0] == mu_pow[1]) {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.notes = "condition unmet: mu_1^{m_1} = mu_2^{m_2} exactly";
    return rep;
  }
  rep.verdict = Verdict::CERTIFIED_CONDITION;
  rep.notes = "all three conditions hold (" + notes.str() +
              "; mu powers distinct exactly): free monoid of rank 2";
  return rep;
}

// ---- oracles ----

namespace {

// Arena-based breadth-first enumeration; parent links keep witnesses
// reconstructible without storing a word per node.
template <class Elem>
struct Arena {
  struct Entry {
    Elem val;
    long parent; // -1 for roots
    int letter;
    long exponent;
  };
  std::vector<Entry> entries;

  std::vector<std::pair<std::string, long>>
  word_of(long idx, const std::vector<std::string> &names) const {
    std::vector<std::pair<std::string, long>> w;
    for (long i = idx; i >= 0; i = entries[static_cast<std::size_t>(i)].parent)
      w.emplace_back(names[static_cast<std::size_t>(
                         entries[static_cast<std::size_t>(i)].letter)],
                     entries[static_cast<std::size_t>(i)].exponent);
    std::reverse(w.begin(), w.end());
    return w;
  }
};

template <class Elem, class IsId>
FreenessReport product_oracle_impl(const Elem &u, long ord_u, const Elem &v,
                                   long ord_v, long max_syllables,
                                   IsId is_id) {
  if (ord_u < 2 || ord_v < 2)
    throw NotTorsion("free_product_oracle: orders must be at least 2");
  auto power_list = [&](const Elem &x, long ord, const char *name) {
    std::vector<Elem> p;
    p.push_back(x);
    for (long e = 2; e < ord; ++e)
      p.push_back(p.back() * x);
    if (!is_id(p.back() * x))
      throw NotTorsion(std::string("free_product_oracle: ") + name + "^" +
                       std::to_string(ord) + " != 1");
    return p;
  };
  std::vector<Elem> upow = power_list(u, ord_u, "u");
  std::vector<Elem> vpow = power_list(v, ord_v, "v");
  const std::vector<Elem> *pows[2] = {&upow, &vpow};
  const std::vector<std::string> names = {"u", "v"};

  Arena<Elem> arena;
  FreenessReport rep;
  rep.verdict = Verdict::PASSED_TO_BOUND;
  long checked = 0;

  auto push = [&](Elem val, long parent, int letter, long expo) -> bool {
    ++checked;
    bool id = is_id(val);
    arena.entries.push_back({std::move(val), parent, letter, expo});
    if (id) {
      rep.verdict = Verdict::VIOLATION;
      rep.witness =
          arena.word_of(static_cast<long>(arena.entries.size()) - 1, names);
      return true;
    }
    return false;
  };

  // syllable 1, letters in order u then v, exponents ascending
  long level_begin = 0;
  for (int letter = 0; letter < 2 && rep.verdict != Verdict::VIOLATION;
       ++letter)
    for (long e = 1; e < static_cast<long>(pows[letter]->size()) + 1; ++e)
      if (push((*pows[letter])[static_cast<std::size_t>(e - 1)], -1, letter, e))
        break;

  long s = 1;
  while (rep.verdict != Verdict::VIOLATION && s < max_syllables) {
    long level_end = static_cast<long>(arena.entries.size());
    for (long idx = level_begin;
         idx < level_end && rep.verdict != Verdict::VIOLATION; ++idx) {
      int next_letter = 1 - arena.entries[static_cast<std::size_t>(idx)].letter;
      const auto &pl = *pows[next_letter];
      for (long e = 1; e <= static_cast<long>(pl.size()); ++e)
        if (push(arena.entries[static_cast<std::size_t>(idx)].val *
                     pl[static_cast<std::size_t>(e - 1)],
                 idx, next_letter, e))
          break;
    }
    level_begin = level_end;
    ++s;
  }
  rep.bound_reached = s;
  rep.words_checked = checked;

  if (rep.verdict == Verdict::PASSED_TO_BOUND) {
    // closed-form count of alternating words, guards enumeration bugs
    long long expect = 0, eu = ord_u - 1, ev = ord_v - 1;
    for (long len = 1; len <= max_syllables; ++len) {
      // starting with u: ceil(len/2) u-syllables, floor(len/2) v-syllables
      long long a = 1, b = 1;
      for (long t = 0; t < (len + 1) / 2; ++t) {
        a *= eu;
        b *= ev;
      }
      for (long t = 0; t < len / 2; ++t) {
        a *= ev;
        b *= eu;
      }
      expect += a + b;
    }
    if (expect != checked)
      throw std::logic_error("free_product_oracle: word count mismatch (" +
                             std::to_string(checked) + " checked, " +
                             std::to_string(expect) + " expected)");
    rep.notes = "no alternating word equals 1 up to " +
                std::to_string(max_syllables) +
                " syllables; not a proof of freeness";
  } else {
    rep.bound_reached = static_cast<long>(rep.witness.size());
    rep.words_checked = checked;
    rep.notes = "witness word evaluates to the identity";
  }
  return rep;
}

} // namespace

FreenessReport free_product_oracle(const GroupRingElement &u, long ord_u,
                                   const GroupRingElement &v, long ord_v,
                                   long max_syllables) {
  if (u.group().get() != v.group().get())
    throw GroupMismatch("free_product_oracle: mismatched groups");
  return product_oracle_impl(
      u, ord_u, v, ord_v, max_syllables,
      [](const GroupRingElement &x) { return x.is_one(); });
}

FreenessReport free_product_oracle(const CycMatrix &u, long ord_u,
                                   const CycMatrix &v, long ord_v,
                                   long max_syllables) {
  CycMatrix id = CycMatrix::identity(u.degree(), u.conductor());
  return product_oracle_impl(u, ord_u, v, ord_v, max_syllables,
                             [&id](const CycMatrix &x) { return x == id; });
}

FreenessReport free_group_oracle(const GroupRingElement &a,
                                 const GroupRingElement &b, long max_length) {
  if (a.group().get() != b.group().get())
    throw GroupMismatch("free_group_oracle: mismatched groups");
  auto ia = a.try_invert();
  auto ib = b.try_invert();
  if (!ia || !ib)
    throw std::invalid_argument("free_group_oracle: generators must be units");
  const GroupRingElement letters[4] = {a, b, *ia, *ib};
  const std::vector<std::string> names = {"a", "b", "a", "b"};
  const long expo[4] = {1, 1, -1, -1};
  auto inverse_letter = [](int l) { return (l + 2) % 4; };

  Arena<GroupRingElement> arena;
  FreenessReport rep;
  rep.verdict = Verdict::PASSED_TO_BOUND;
  long checked = 0;
  auto push = [&](GroupRingElement val, long parent, int letter) -> bool {
    ++checked;
    bool id = val.is_one();
    arena.entries.push_back({std::move(val), parent, letter, expo[letter]});
    if (id) {
      rep.verdict = Verdict::VIOLATION;
      rep.witness =
          arena.word_of(static_cast<long>(arena.entries.size()) - 1, names);
      return true;
    }
    return false;
  };

  long level_begin = 0;
  for (int l = 0; l < 4 && rep.verdict != Verdict::VIOLATION; ++l)
    if (push(letters[l], -1, l))
      break;
  long len = 1;
  while (rep.verdict != Verdict::VIOLATION && len < max_length) {
    long level_end = static_cast<long>(arena.entries.size());
    for (long idx = level_begin;
         idx < level_end && rep.verdict != Verdict::VIOLATION; ++idx)
      for (int l = 0; l < 4; ++l) {
        if (inverse_letter(arena.entries[static_cast<std::size_t>(idx)].letter) ==
            l)
          continue;
        if (push(arena.entries[static_cast<std::size_t>(idx)].val * letters[l],
                 idx, l))
          break;
      }
    level_begin = level_end;
    ++len;
  }
  rep.bound_reached = len;
  rep.words_checked = checked;
  if (rep.verdict == Verdict::PASSED_TO_BOUND) {
    long long expect = 0, lvl = 4;
    for (long t = 1; t <= max_length; ++t) {
      expect += lvl;
      lvl *= 3;
    }
    if (expect != checked)
      throw std::logic_error("free_group_oracle: word count mismatch");
    rep.notes = "no nonempty reduced word equals 1 up to length " +
                std::to_string(max_length) + "; not a proof of freeness";
  } else {
    rep.bound_reached = static_cast<long>(rep.witness.size());
    rep.notes = "witness reduced word evaluates to the identity";
  }
  return rep;
}

FreenessReport free_monoid_oracle(const GroupRingElement &A,
                                  const GroupRingElement &B, long max_length) {
  if (A.group().get() != B.group().get())
    throw GroupMismatch("free_monoid_oracle: mismatched groups");
  const GroupRingElement letters[2] = {A, B};
  const std::vector<std::string> names = {"A", "B"};

  struct Entry {
    GroupRingElement val;
    long parent;
    int letter;
  };
  std::vector<Entry> arena;
  std::map<std::uint64_t, std::vector<long>> by_hash;
  auto word_str = [&](long idx) {
    std::string s;
    for (long i = idx; i >= 0; i = arena[static_cast<std::size_t>(i)].parent)
      if (arena[static_cast<std::size_t>(i)].letter >= 0)
        s += names[static_cast<std::size_t>(
            arena[static_cast<std::size_t>(i)].letter)];
    std::reverse(s.begin(), s.end());
    return s.empty() ? std::string("(empty)") : s;
  };
  auto word_vec = [&](long idx) {
    std::vector<std::pair<std::string, long>> w;
    for (long i = idx; i >= 0; i = arena[static_cast<std::size_t>(i)].parent)
      if (arena[static_cast<std::size_t>(i)].letter >= 0)
        w.emplace_back(names[static_cast<std::size_t>(
                           arena[static_cast<std::size_t>(i)].letter)],
                       1);
    std::reverse(w.begin(), w.end());
    return w;
  };

  FreenessReport rep;
  rep.verdict = Verdict::PASSED_TO_BOUND;
  long checked = 0;

  auto push = [&](GroupRingElement val, long parent, int letter) -> bool {
    ++checked;
    std::uint64_t h = val.canonical_hash();
    long self = static_cast<long>(arena.size());
    for (long other : by_hash[h])
      if (arena[static_cast<std::size_t>(other)].val == val) {
        arena.push_back({std::move(val), parent, letter});
        rep.verdict = Verdict::VIOLATION;
        rep.witness = word_vec(self);
        rep.notes = "word " + word_str(self) + " equals earlier word " +
                    word_str(other) + " exactly";
        return true;
      }
    by_hash[h].push_back(self);
    arena.push_back({std::move(val), parent, letter});
    return false;
  };

  // include the empty word (letter -1, skipped in reconstruction): catches
  // words evaluating to 1
  push(GroupRingElement::one(A.group()), -1, -1);

  long level_begin = 0;
  long len = 0;
  while (rep.verdict != Verdict::VIOLATION && len < max_length) {
    long level_end = static_cast<long>(arena.size());
    for (long idx = level_begin;
         idx < level_end && rep.verdict != Verdict::VIOLATION; ++idx)
      for (int l = 0; l < 2; ++l)
        if (push(arena[static_cast<std::size_t>(idx)].val * letters[l], idx, l))
          break;
    level_begin = level_end;
    ++len;
  }
  rep.bound_reached = len;
  rep.words_checked = checked;
  if (rep.verdict == Verdict::PASSED_TO_BOUND)
    rep.notes = "all words over {A,B} up to length " +
                std::to_string(max_length) +
                " (and the empty word) are pairwise distinct; not a proof of "
                "freeness";
  return rep;
}

} // namespace unitforge
