#include "unitforge/reps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace unitforge {

// ---- triangular morphism ----

TriangularImage TriangularImage::operator*(const TriangularImage &o) const {
  if (conductor != o.conductor)
    throw ConductorMismatch("TriangularImage product across conductors");
  CyclotomicNumber b22(conductor, o.a22);
  return TriangularImage(conductor, a11 * o.a11, a11 * o.a12 + a12 * b22,
                         a22 * o.a22);
}

bool TriangularImage::operator==(const TriangularImage &o) const {
  return conductor == o.conductor && a11 == o.a11 && a12 == o.a12 &&
         a22 == o.a22;
}

std::string TriangularImage::to_string() const {
  return "[[" + a11.to_string() + ", " + a12.to_string() + "], [0, " +
         a22.get_str() + "]]";
}

namespace {

// discrete log table j -> h^j within <h>
std::map<Elt, long> power_index(const GroupPtr &G, Elt h) {
  std::map<Elt, long> dlog;
  Elt x = 0;
  long j = 0;
  do {
    dlog.emplace(x, j);
    x = G->mul(x, h);
    ++j;
  } while (x != 0);
  return dlog;
}

CyclotomicNumber evaluate_at_zeta(const GroupRingElement &u,
                                  const std::map<Elt, long> &dlog, long n) {
  std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
  for (Elt x : u.support()) {
    auto it = dlog.find(x);
    if (it == dlog.end())
      throw SupportViolation("element supported outside <h>");
    raw[static_cast<std::size_t>(it->second % n)] += u.coeff(x);
  }
  return CyclotomicNumber(n, std::move(raw));
}

} // namespace

TriangularImage phi_triangular(const GroupRingElement &u1,
                               const GroupRingElement &u2, Elt h, long n) {
  const GroupPtr &G = u1.group();
  if (u2.group().get() != G.get())
    throw GroupMismatch("phi_triangular: operands over distinct groups");
  if (element_order(G, h) != n)
    throw std::invalid_argument("phi_triangular: o(h) != conductor n");
  auto dlog = power_index(G, h);
  return TriangularImage(n, evaluate_at_zeta(u1, dlog, n),
                         evaluate_at_zeta(u2, dlog, n), u1.augmentation());
}

MorphismReport morphism_check(const GroupPtr &G, Elt h,
                              const GroupRingElement &alpha, const Subgroup &H,
                              long samples, unsigned long seed) {
  if (alpha.group().get() != G.get() || H.parent.get() != G.get())
    throw GroupMismatch("morphism_check: mismatched group");
  const long n = element_order(G, h);
  GroupRingElement one = GroupRingElement::one(G);
  GroupRingElement a =
      (one - GroupRingElement::from_element(G, h)) * alpha * tilde(H);
  auto dlog = power_index(G, h);
  Subgroup hgrp = cyclic_subgroup(G, h);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_in_h = [&]() {
    GroupRingElement r = GroupRingElement::zero(G);
    for (Elt x : hgrp.elements)
      r.set_coeff(x, Rational(coeff(rng)));
    return r;
  };

  long checked = 0;
  auto check_pair = [&](const GroupRingElement &u1, const GroupRingElement &u2,
                        const GroupRingElement &v1, const GroupRingElement &v2) {
    GroupRingElement x = u1 + u2 * a;
    GroupRingElement y = v1 + v2 * a;
    // formal product in Q<h> + Q<h>a, using a*beta = w(beta)*a and a^2 = 0
    GroupRingElement w1 = u1 * v1;
    GroupRingElement w2 = u1 * v2 + v1.augmentation() * u2;
    if (x * y != w1 + w2 * a)
      throw MorphismFailure(
          "product does not decompose as w1 + w2*a (is a^2 = 0?)",
          x.to_string(), y.to_string());
    TriangularImage px = phi_triangular(u1, u2, h, n);
    TriangularImage py = phi_triangular(v1, v2, h, n);
    TriangularImage pxy = phi_triangular(w1, w2, h, n);
    if (!(px * py == pxy))
      throw MorphismFailure("phi(xy) != phi(x)phi(y)", x.to_string(),
                            y.to_string());
    ++checked;
  };

  GroupRingElement zero = GroupRingElement::zero(G);
  check_pair(one, zero, one, zero);
  check_pair(zero, one, zero, one); // exercises a*a = 0
  check_pair(one, one, one, one);
  for (long s = 0; s < samples; ++s)
    check_pair(random_in_h(), random_in_h(), random_in_h(), random_in_h());

  MorphismReport rep;
  rep.samples_checked = checked;
  rep.notes = "phi multiplicative on all sampled pairs";
  return rep;
}

PierceBlocks pierce_blocks(const GroupRingElement &x,
                           const GroupRingElement &e) {
  if (x.group().get() != e.group().get())
    throw GroupMismatch("pierce_blocks: mismatched group");
  if (e * e != e)
    throw NotIdempotent("pierce_blocks: e^2 != e");
  GroupRingElement f = GroupRingElement::one(x.group()) - e;
  PierceBlocks b{f * x * f, f * x * e, e * x * f, e * x * e};
  if (b.b11 + b.b12 + b.b21 + b.b22 != x)
    throw std::logic_error("pierce_blocks: blocks do not sum to x");
  return b;
}

// ---- metabelian sample check ----

namespace {
struct WordEntry {
  GroupRingElement elt, inv;
  std::string desc;
};
} // namespace

MetabelianReport metabelian_sample_check(const GroupRingElement &u,
                                         const GroupRingElement &u_inv,
                                         const GroupRingElement &w,
                                         const GroupRingElement &w_inv,
                                         int max_len, long pair_cap,
                                         unsigned long seed) {
  const GroupPtr &G = u.group();
  if (!(u * u_inv).is_one() || !(w * w_inv).is_one())
    throw std::invalid_argument("metabelian_sample_check: bad inverses");
  GroupRingElement v = w_inv * u * w;      // u^w
  GroupRingElement v_inv = w_inv * u_inv * w;

  struct Letter {
    const GroupRingElement *e, *i;
    int inverse_letter;
    const char *name;
  };
  const Letter letters[4] = {{&u, &u_inv, 2, "u"},
                             {&v, &v_inv, 3, "u^w"},
                             {&u_inv, &u, 0, "u^-1"},
                             {&v_inv, &v, 1, "(u^w)^-1"}};

  std::vector<WordEntry> words;
  std::map<std::uint64_t, std::vector<std::size_t>> seen;
  auto add_distinct = [&](GroupRingElement e, GroupRingElement i,
                          std::string desc) {
    std::uint64_t hsh = e.canonical_hash();
    for (std::size_t idx : seen[hsh])
      if (words[idx].elt == e)
        return;
    seen[hsh].push_back(words.size());
    words.push_back(WordEntry{std::move(e), std::move(i), std::move(desc)});
  };

  struct Node {
    GroupRingElement e, i;
    std::string desc;
    int last;
  };
  std::vector<Node> frontier;
  for (int l = 0; l < 4; ++l) {
    Node nd{*letters[l].e, *letters[l].i, letters[l].name, l};
    add_distinct(nd.e, nd.i, nd.desc);
    frontier.push_back(std::move(nd));
  }
  for (int len = 2; len <= max_len; ++len) {
    std::vector<Node> next;
    for (const auto &nd : frontier)
      for (int l = 0; l < 4; ++l) {
        if (letters[nd.last].inverse_letter == l)
          continue; // reduced words only
        Node ext{nd.e * *letters[l].e, *letters[l].i * nd.i,
                 nd.desc + "." + letters[l].name, l};
        add_distinct(ext.e, ext.i, ext.desc);
        next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }

  // distinct commutators [x_i, x_j]
  std::vector<WordEntry> comms;
  std::map<std::uint64_t, std::vector<std::size_t>> cseen;
  auto add_comm = [&](GroupRingElement e, GroupRingElement i, std::string d) {
    if (e.is_one())
      return;
    std::uint64_t hsh = e.canonical_hash();
    for (std::size_t idx : cseen[hsh])
      if (comms[idx].elt == e)
        return;
    cseen[hsh].push_back(comms.size());
    comms.push_back(WordEntry{std::move(e), std::move(i), std::move(d)});
  };
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      GroupRingElement c = words[i].inv * words[j].inv * words[i].elt * words[j].elt;
      GroupRingElement ci = words[j].inv * words[i].inv * words[j].elt * words[i].elt;
      add_comm(std::move(c), std::move(ci),
               "[" + words[i].desc + ", " + words[j].desc + "]");
    }

  MetabelianReport rep;
  rep.words = static_cast<long>(words.size());
  rep.commutators = static_cast<long>(comms.size());
  rep.passed = true;

  auto check_pair = [&](std::size_t a, std::size_t b) -> bool {
    if (comms[a].elt * comms[b].elt == comms[b].elt * comms[a].elt)
      return true;
    rep.passed = false;
    rep.witness = "[" + comms[a].desc + ", " + comms[b].desc + "] != 1";
    return false;
  };

  const std::size_t m = comms.size();
  const long total = m < 2 ? 0 : static_cast<long>(m * (m - 1) / 2);
  if (total <= pair_cap) {
    for (std::size_t a = 0; a < m && rep.passed; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        ++rep.pairs_checked;
        if (!check_pair(a, b))
          break;
      }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (long s = 0; s < pair_cap; ++s) {
      std::size_t a = pick(rng), b = pick(rng);
      if (a == b)
        continue;
      ++rep.pairs_checked;
      if (!check_pair(a, b))
        break;
    }
  }
  return rep;
}

MetabelianReport metabelian_sample_check(const UnitDescriptor &u,
                                         const UnitDescriptor &w, int max_len,
                                         long pair_cap, unsigned long seed) {
  return metabelian_sample_check(u.element, u.inverse, w.element, w.inverse,
                                 max_len, pair_cap, seed);
}

// ---- CycMatrix ----

CycMatrix::CycMatrix(long degree, long conductor)
    : deg_(degree), n_(conductor),
      e_(static_cast<std::size_t>(degree * degree), CyclotomicNumber(conductor)) {
  if (degree < 1)
    throw std::invalid_argument("CycMatrix: degree must be >= 1");
}

CycMatrix CycMatrix::identity(long degree, long conductor) {
  CycMatrix m(degree, conductor);
  for (long i = 0; i < degree; ++i)
    m.at(i, i) = CyclotomicNumber(conductor, Rational(1));
  return m;
}

CyclotomicNumber &CycMatrix::at(long i, long j) {
  return e_[static_cast<std::size_t>(i * deg_ + j)];
}
const CyclotomicNumber &CycMatrix::at(long i, long j) const {
  return e_[static_cast<std::size_t>(i * deg_ + j)];
}

CycMatrix CycMatrix::operator*(const CycMatrix &o) const {
  if (deg_ != o.deg_ || n_ != o.n_)
    throw ConductorMismatch("CycMatrix product: degree/conductor mismatch");
  CycMatrix r(deg_, n_);
  for (long i = 0; i < deg_; ++i)
    for (long k = 0; k < deg_; ++k) {
      if (at(i, k).is_zero())
        continue;
      for (long j = 0; j < deg_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix &o) const {
  if (deg_ != o.deg_ || n_ != o.n_)
    throw ConductorMismatch("CycMatrix sum: degree/conductor mismatch");
  CycMatrix r(deg_, n_);
  for (long i = 0; i < deg_ * deg_; ++i)
    r.e_[static_cast<std::size_t>(i)] =
        e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix &o) const {
  if (deg_ != o.deg_ || n_ != o.n_)
    throw ConductorMismatch("CycMatrix diff: degree/conductor mismatch");
  CycMatrix r(deg_, n_);
  for (long i = 0; i < deg_ * deg_; ++i)
    r.e_[static_cast<std::size_t>(i)] =
        e_[static_cast<std::size_t>(i)] - o.e_[static_cast<std::size_t>(i)];
  return r;
}

bool CycMatrix::operator==(const CycMatrix &o) const {
  return deg_ == o.deg_ && n_ == o.n_ && e_ == o.e_;
}

CycMatrix CycMatrix::pow(long t) const {
  if (t < 0)
    throw std::invalid_argument("CycMatrix::pow: negative exponent");
  CycMatrix acc = identity(deg_, n_);
  CycMatrix base = *this;
  unsigned long e = static_cast<unsigned long>(t);
  while (e > 0) {
    if (e & 1UL)
      acc = acc * base;
    e >>= 1UL;
    if (e > 0)
      base = base * base;
  }
  return acc;
}

CycMatrix CycMatrix::lift(long L) const {
  CycMatrix r(deg_, L);
  for (long i = 0; i < deg_; ++i)
    for (long j = 0; j < deg_; ++j)
      r.at(i, j) = at(i, j).lift(L);
  return r;
}

bool CycMatrix::is_lower_triangular() const {
  for (long i = 0; i < deg_; ++i)
    for (long j = i + 1; j < deg_; ++j)
      if (!at(i, j).is_zero())
        return false;
  return true;
}

bool CycMatrix::is_upper_triangular() const {
  for (long i = 0; i < deg_; ++i)
    for (long j = 0; j < i; ++j)
      if (!at(i, j).is_zero())
        return false;
  return true;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  for (long i = 0; i < deg_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (long j = 0; j < deg_; ++j)
      os << at(i, j).to_string() << (j + 1 < deg_ ? ", " : "");
    os << "]" << (i + 1 < deg_ ? ",\n" : "]");
  }
  return os.str();
}

std::optional<long> root_of_unity_order(const CyclotomicNumber &x) {
  if (x.is_zero())
    return std::nullopt;
  long M = x.conductor();
  long L = (M % 2 == 0) ? M : 2 * M; // all roots of unity in Q(zeta_M)
  CyclotomicNumber one(M, Rational(1));
  if (!(x.pow(L) == one))
    return std::nullopt;
  for (long d = 1; d <= L; ++d)
    if (L % d == 0 && x.pow(d) == one)
      return d;
  return std::nullopt; // unreachable
}

std::optional<long> cyc_matrix_order(const CycMatrix &A) {
  if (!A.is_lower_triangular() && !A.is_upper_triangular())
    throw std::invalid_argument(
        "cyc_matrix_order: matrix must be triangular for exact order");
  long t0 = 1;
  for (long i = 0; i < A.degree(); ++i) {
    auto d = root_of_unity_order(A.at(i, i));
    if (!d)
      return std::nullopt; // a diagonal entry is not a root of unity
    t0 = std::lcm(t0, *d);
  }
  // order must be a multiple of t0; A^{t0} is unipotent, so either it is the
  // identity (order exactly t0) or the order is infinite
  if (A.pow(t0) == CycMatrix::identity(A.degree(), A.conductor()))
    return t0;
  return std::nullopt;
}

CycMatrix permute_basis(const CycMatrix &A, const std::vector<long> &new_basis) {
  const long d = A.degree();
  if (static_cast<long>(new_basis.size()) != d)
    throw std::invalid_argument("permute_basis: wrong permutation size");
  std::vector<bool> hit(static_cast<std::size_t>(d), false);
  for (long x : new_basis) {
    if (x < 0 || x >= d || hit[static_cast<std::size_t>(x)])
      throw std::invalid_argument("permute_basis: not a permutation");
    hit[static_cast<std::size_t>(x)] = true;
  }
  CycMatrix r(d, A.conductor());
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      r.at(i, j) = A.at(new_basis[static_cast<std::size_t>(i)],
                        new_basis[static_cast<std::size_t>(j)]);
  return r;
}

// ---- class-2 construction ----

namespace {

// exact rank of the coefficient-row matrix
long rational_rank(std::vector<std::vector<Rational>> rows) {
  long rank = 0;
  if (rows.empty())
    return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
    Rational inv_p = Rational(1) / rows[static_cast<std::size_t>(rank)][c];
    for (std::size_t cc = c; cc < cols; ++cc)
      rows[static_cast<std::size_t>(rank)][cc] *= inv_p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0)
        continue;
      Rational f = rows[r][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        rows[r][cc] -= f * rows[static_cast<std::size_t>(rank)][cc];
    }
    ++rank;
  }
  return rank;
}

// solve sum_t q_t * cols[t] = y exactly; unique solution required
std::vector<Rational> solve_in_span(const std::vector<GroupRingElement> &cols,
                                    const GroupRingElement &y) {
  const std::size_t N = y.coeffs().size();
  const std::size_t T = cols.size();
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(T + 1, Rational(0)));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t t = 0; t < T; ++t)
      M[r][t] = cols[t].coeffs()[r];
    M[r][T] = y.coeffs()[r];
  }
  std::vector<long> pivot_row(T, -1);
  long rank = 0;
  for (std::size_t c = 0; c < T; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < N && M[piv][c] == 0)
      ++piv;
    if (piv == N)
      throw EntryResolutionFailure(
          "basis {z0^t E_ii} is linearly dependent");
    std::swap(M[static_cast<std::size_t>(rank)], M[piv]);
    Rational inv_p = Rational(1) / M[static_cast<std::size_t>(rank)][c];
    for (std::size_t cc = 0; cc <= T; ++cc)
      M[static_cast<std::size_t>(rank)][cc] *= inv_p;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == static_cast<std::size_t>(rank) || M[r][c] == 0)
        continue;
      Rational f = M[r][c];
      for (std::size_t cc = 0; cc <= T; ++cc)
        M[r][cc] -= f * M[static_cast<std::size_t>(rank)][cc];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (std::size_t r = static_cast<std::size_t>(rank); r < N; ++r)
    if (M[r][T] != 0)
      throw EntryResolutionFailure("entry not in the span of {z0^t E_ii}");
  std::vector<Rational> q(T, Rational(0));
  for (std::size_t c = 0; c < T; ++c)
    q[c] = M[static_cast<std::size_t>(pivot_row[c])][T];
  return q;
}

long smallest_prime_factor(long n) {
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return p;
  return n;
}

} // namespace

GroupRingElement to_system_ring(const MatrixUnitSystem &sys,
                                const GroupRingElement &x) {
  if (x.group().get() == sys.group.get())
    return x;
  if (x.group().get() != sys.parent.get())
    throw GroupMismatch("to_system_ring: element over unrelated group");
  GroupRingElement r = GroupRingElement::zero(sys.group);
  for (int p = 0; p < sys.parent->order(); ++p) {
    if (x.coeff(p) == 0)
      continue;
    Elt q = sys.from_parent[static_cast<std::size_t>(p)];
    if (q < 0)
      throw SupportViolation("element supported outside <g,h>");
    r.set_coeff(q, x.coeff(p));
  }
  return r;
}

void verify_matrix_units(const MatrixUnitSystem &sys) {
  const GroupPtr &W = sys.group;
  const GroupRingElement &eps = sys.epsilon;
  if (eps * eps != eps)
    throw NotIdempotent("epsilon^2 != epsilon");
  for (int x = 0; x < W->order(); ++x) {
    GroupRingElement gx = GroupRingElement::from_element(W, x);
    if (gx * eps != eps * gx)
      throw CenterDecompositionFailure("epsilon is not central (witness " +
                                       W->name(x) + ")");
  }
  const long d = sys.degree;
  GroupRingElement diag_sum = GroupRingElement::zero(W);
  for (long i = 0; i < d; ++i) {
    if (sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].is_zero())
      throw CenterDecompositionFailure("E_{" + std::to_string(i + 1) + "," +
                                       std::to_string(i + 1) + "} vanishes");
    diag_sum = diag_sum +
               sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  if (diag_sum != eps)
    throw CenterDecompositionFailure("sum of E_ii != epsilon");
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k)
        for (long l = 0; l < d; ++l) {
          GroupRingElement prod =
              sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
              sys.E[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
          GroupRingElement expect =
              (j == k)
                  ? sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]
                  : GroupRingElement::zero(W);
          if (prod != expect)
            throw CenterDecompositionFailure(
                "matrix-unit product E_" + std::to_string(i + 1) +
                std::to_string(j + 1) + " E_" + std::to_string(k + 1) +
                std::to_string(l + 1) + " violates the delta rule");
        }

  // field isomorphism Q[z0 eps] = Q(zeta_{p^alpha}): minimal polynomial and
  // dimension both verified exactly
  const long pa = sys.field_conductor;
  const long phi_deg = euler_phi(pa);
  GroupRingElement z0eps = GroupRingElement::from_element(W, sys.z0) * eps;
  std::vector<GroupRingElement> powers;
  powers.push_back(eps);
  for (long t = 1; t <= pa; ++t)
    powers.push_back(powers.back() * z0eps);
  const auto &phi = cyclotomic_polynomial(pa);
  GroupRingElement acc = GroupRingElement::zero(W);
  for (std::size_t t = 0; t < phi.size(); ++t)
    acc = acc + Rational(phi[t]) * powers[t];
  if (!acc.is_zero())
    throw CenterDecompositionFailure("Phi_{p^alpha}(z0 eps) != 0");
  std::vector<std::vector<Rational>> rows;
  for (long t = 0; t < phi_deg; ++t)
    rows.push_back(powers[static_cast<std::size_t>(t)].coeffs());
  if (rational_rank(std::move(rows)) != phi_deg)
    throw CenterDecompositionFailure(
        "powers of z0 eps span less than phi(p^alpha) dimensions");
  // c's image must be a primitive o(c)-th root of unity
  if (pa / std::gcd(sys.c_exponent, pa) != d)
    throw CenterDecompositionFailure("image of c is not a primitive o(c)-th root");
}

MatrixUnitSystem class2_rep(const GroupPtr &G, Elt g, Elt h) {
  auto cls = nilpotency_class(G);
  if (!cls)
    throw HypothesisViolation("group is not nilpotent", "class");
  if (*cls != 2)
    throw HypothesisViolation(
        "nilpotency class is " + std::to_string(*cls) + ", need exactly 2",
        "class");
  const long oh = element_order(G, h);
  if (oh == 1)
    throw HypothesisViolation("o(h) = 1 is not a nontrivial prime power",
                              "order");
  const long p = smallest_prime_factor(oh);
  long n = 0;
  for (long t = oh; t % p == 0; t /= p)
    ++n;
  long pn = 1;
  for (long i = 0; i < n; ++i)
    pn *= p;
  if (pn != oh)
    throw HypothesisViolation("o(h) = " + std::to_string(oh) +
                                  " is not a prime power",
                              "order");
  for (long i = 0, q = 1; i < n; ++i, q *= p)
    if (is_in_normalizer(G, g, G->power(h, q)))
      throw HypothesisViolation("g normalizes <h^{p^" + std::to_string(i) +
                                    "}>",
                                "normalizer");

  MatrixUnitSystem sys;
  sys.parent = G;
  Subgroup gen = generated_subgroup(G, {g, h});
  if (gen.order() < G->order()) {
    SubgroupGroup sg = subgroup_as_group(gen);
    sys.group = sg.group;
    sys.restricted = true;
    sys.to_parent = sg.to_parent;
    sys.from_parent = sg.from_parent;
    g = sys.from_parent[static_cast<std::size_t>(g)];
    h = sys.from_parent[static_cast<std::size_t>(h)];
  } else {
    sys.group = G;
    sys.restricted = false;
    sys.to_parent.resize(static_cast<std::size_t>(G->order()));
    std::iota(sys.to_parent.begin(), sys.to_parent.end(), 0);
    sys.from_parent = sys.to_parent;
  }
  const GroupPtr &W = sys.group;
  sys.g = g;
  sys.h = h;

  // Orientation [h^-1, g] (the inverse of [g, h^-1]) is chosen so that when
  // z0 = c the conjugation character satisfies lambda([g, h^-1]) = zeta^-1,
  // which pins the exceptional corner entries to o(h)(1 - zeta^-1).
  Elt c = commutator(W, W->inv(h), g);
  sys.c = c;
  const long oc = element_order(W, c);
  if (oc != oh)
    throw CenterDecompositionFailure(
        "derived fact o(c) = o(h) fails: o(c) = " + std::to_string(oc));
  Subgroup Ch = cyclic_subgroup(W, c);
  for (long t = 1; t < oh; ++t)
    if (Ch.contains(W->power(h, t)))
      throw CenterDecompositionFailure("derived fact <h> ^ <c> = 1 fails");
  sys.degree = oc;

  Subgroup Z = center(W);
  SubgroupGroup Zg = subgroup_as_group(Z);
  auto candidates = subgroups_of_abelian(Z);

  bool found = false;
  Subgroup Ksel;
  Quotient qsel;
  long palpha = 0;
  for (const Subgroup &K : candidates) {
    bool meets_c = false;
    for (long t = 1; t < oc; ++t)
      if (K.contains(W->power(c, t)))
        meets_c = true;
    if (meets_c)
      continue;
    long qsize = Z.order() / K.order();
    if (qsize < oc)
      continue;
    long tt = qsize;
    while (tt % p == 0)
      tt /= p;
    if (tt != 1)
      continue;
    std::vector<Elt> kmapped;
    for (Elt x : K.elements)
      kmapped.push_back(Zg.from_parent[static_cast<std::size_t>(x)]);
    Quotient q = quotient_by_central(Zg.group, Subgroup{Zg.group, kmapped});
    bool cyclic = false;
    for (int i = 0; i < q.group->order(); ++i)
      if (element_order(q.group, i) == qsize) {
        cyclic = true;
        break;
      }
    if (!cyclic)
      continue;
    Ksel = K;
    qsel = q;
    palpha = qsize;
    found = true;
    break; // candidates ordered by (|K| asc, lex): first hit maximizes |Z/K|
  }
  if (!found)
    throw CenterDecompositionFailure(
        "no central subgroup K with cyclic p-power quotient avoiding <c>");

  sys.K = Ksel;
  sys.field_conductor = palpha;

  // z0: prefer c itself when its image already generates Z/K
  Elt z0_zg = -1;
  Elt c_zg = Zg.from_parent[static_cast<std::size_t>(c)];
  if (element_order(qsel.group, qsel.proj[static_cast<std::size_t>(c_zg)]) ==
      palpha) {
    z0_zg = c_zg;
  } else {
    for (int i = 0; i < Zg.group->order(); ++i)
      if (element_order(qsel.group, qsel.proj[static_cast<std::size_t>(i)]) ==
          palpha) {
        z0_zg = i;
        break;
      }
  }
  if (z0_zg < 0)
    throw CenterDecompositionFailure("no generator of Z/K found");
  sys.z0 = Zg.to_parent[static_cast<std::size_t>(z0_zg)];

  // H: preimage of the order-p subgroup of Z/K
  Elt sbar = qsel.group->power(qsel.proj[static_cast<std::size_t>(z0_zg)],
                               palpha / p);
  std::set<Elt> order_p_subgroup;
  for (long t = 0; t < p; ++t)
    order_p_subgroup.insert(qsel.group->power(sbar, t));
  std::vector<Elt> helems;
  for (int i = 0; i < Zg.group->order(); ++i)
    if (order_p_subgroup.count(qsel.proj[static_cast<std::size_t>(i)]))
      helems.push_back(Zg.to_parent[static_cast<std::size_t>(i)]);
  std::sort(helems.begin(), helems.end());
  sys.H = Subgroup{W, helems};

  sys.epsilon = hat(sys.K) - hat(sys.H);

  sys.E.assign(static_cast<std::size_t>(oc),
               std::vector<GroupRingElement>(static_cast<std::size_t>(oc),
                                             GroupRingElement::zero(W)));
  for (long i = 0; i < oc; ++i) {
    Elt hi = conjugate(W, h, W->power(g, i)); // h^{g^i}, 0-based row i
    sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        hat(cyclic_subgroup(W, hi)) * sys.epsilon;
  }
  for (long i = 0; i < oc; ++i)
    for (long j = 0; j < oc; ++j) {
      if (i == j)
        continue;
      sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] *
          GroupRingElement::from_element(W, W->power(g, j - i)) *
          sys.E[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    }

  // discrete log of c's image: c eps = (z0 eps)^{t_c}
  GroupRingElement ceps = GroupRingElement::from_element(W, c) * sys.epsilon;
  long tc = -1;
  for (long t = 0; t < palpha; ++t)
    if (ceps ==
        GroupRingElement::from_element(W, W->power(sys.z0, t)) * sys.epsilon) {
      tc = t;
      break;
    }
  if (tc < 0)
    throw CenterDecompositionFailure("image of c not a power of z0 eps");
  sys.c_exponent = tc;

  verify_matrix_units(sys);
  return sys;
}

CycMatrix to_matrix(const MatrixUnitSystem &sys, const GroupRingElement &x) {
  const GroupPtr &W = sys.group;
  if (x.group().get() != W.get())
    throw GroupMismatch("to_matrix: element not over the system's group");
  if (x * sys.epsilon != sys.epsilon * x)
    throw std::invalid_argument("to_matrix: x does not commute with epsilon");
  const long d = sys.degree;
  const long phi_deg = euler_phi(sys.field_conductor);

  std::vector<GroupRingElement> z0pow;
  for (long t = 0; t < phi_deg; ++t)
    z0pow.push_back(
        GroupRingElement::from_element(W, W->power(sys.z0, t)));

  CycMatrix M(d, sys.field_conductor);
  GroupRingElement recon = GroupRingElement::zero(W);
  for (long i = 0; i < d; ++i) {
    const GroupRingElement &Eii =
        sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    std::vector<GroupRingElement> basis;
    for (long t = 0; t < phi_deg; ++t)
      basis.push_back(z0pow[static_cast<std::size_t>(t)] * Eii);
    for (long j = 0; j < d; ++j) {
      GroupRingElement y =
          Eii * x *
          sys.E[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
      if (i != j)
        y = y * sys.E[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      std::vector<Rational> q = solve_in_span(basis, y);
      M.at(i, j) = CyclotomicNumber(sys.field_conductor, q);
      GroupRingElement term = GroupRingElement::zero(W);
      for (long t = 0; t < phi_deg; ++t)
        term = term +
               q[static_cast<std::size_t>(t)] *
                   (z0pow[static_cast<std::size_t>(t)] *
                    sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      recon = recon + term;
    }
  }
  if (recon != sys.epsilon * x * sys.epsilon)
    throw EntryResolutionFailure(
        "reconstruction sum_{ij} entry_{ij} E_ij != eps x eps");
  return M;
}

} // namespace unitforge
