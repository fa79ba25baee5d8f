#include "unitforge/cyclotomic.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace unitforge {

long euler_phi(long n) {
  if (n < 1)
    throw std::invalid_argument("euler_phi: n must be positive");
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0)
        m /= p;
    }
  }
  if (m > 1)
    result -= result / m;
  return result;
}

namespace {

// ---- integer polynomial helpers (low degree first) ----

std::vector<Integer> int_poly_div_exact(const std::vector<Integer> &num,
                                        const std::vector<Integer> &den) {
  // den monic; remainder must vanish
  std::vector<Integer> r = num;
  const long dn = static_cast<long>(den.size()) - 1;
  const long dq = static_cast<long>(r.size()) - 1 - dn;
  std::vector<Integer> q(dq + 1, Integer(0));
  for (long i = dq; i >= 0; --i) {
    Integer f = r[i + dn];
    q[i] = f;
    if (f != 0)
      for (long j = 0; j <= dn; ++j)
        r[i + j] -= f * den[j];
  }
  for (const auto &c : r)
    if (c != 0)
      throw std::logic_error("cyclotomic_polynomial: inexact division");
  return q;
}

// ---- rational polynomial helpers ----

using RPoly = std::vector<Rational>;

long rp_deg(const RPoly &p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0)
      return i;
  return -1;
}

void rp_trim(RPoly &p) { p.resize(static_cast<std::size_t>(rp_deg(p) + 1)); }

// returns quotient, leaves remainder in num
RPoly rp_divmod(RPoly &num, const RPoly &den) {
  long dd = rp_deg(den);
  if (dd < 0)
    throw std::logic_error("rp_divmod: zero divisor");
  long dn = rp_deg(num);
  if (dn < dd)
    return {};
  RPoly q(dn - dd + 1, Rational(0));
  for (long i = dn - dd; i >= 0; --i) {
    if (num[i + dd] == 0)
      continue;
    Rational f = num[i + dd] / den[dd];
    q[i] = f;
    for (long j = 0; j <= dd; ++j)
      num[i + j] -= f * den[j];
  }
  rp_trim(num);
  return q;
}

RPoly rp_mul(const RPoly &a, const RPoly &b) {
  if (a.empty() || b.empty())
    return {};
  RPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

RPoly rp_sub(const RPoly &a, const RPoly &b) {
  RPoly r = a;
  if (r.size() < b.size())
    r.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] -= b[i];
  return r;
}

} // namespace

const std::vector<Integer> &cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Integer>> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = memo.find(n);
  if (it != memo.end())
    return it->second;
  if (n < 1)
    throw std::invalid_argument("cyclotomic_polynomial: n must be positive");

  std::function<const std::vector<Integer> &(long)> build =
      [&](long m) -> const std::vector<Integer> & {
    auto found = memo.find(m);
    if (found != memo.end())
      return found->second;
    std::vector<Integer> poly;
    if (m == 1) {
      poly = {Integer(-1), Integer(1)};
    } else {
      std::vector<Integer> num(m + 1, Integer(0)); // x^m - 1
      num[0] = -1;
      num[m] = 1;
      poly = std::move(num);
      for (long d = 1; d < m; ++d)
        if (m % d == 0)
          poly = int_poly_div_exact(poly, build(d));
    }
    return memo.emplace(m, std::move(poly)).first->second;
  };
  return build(n);
}

// ---- CyclotomicNumber ----

namespace {
RPoly phi_as_rational(long n) {
  const auto &phi = cyclotomic_polynomial(n);
  RPoly r(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i)
    r[i] = Rational(phi[i]);
  return r;
}

// reduce raw coefficients modulo the monic integer polynomial Phi_n
std::vector<Rational> reduce_mod_phi(long n, std::vector<Rational> raw) {
  const auto &phi = cyclotomic_polynomial(n);
  const long d = static_cast<long>(phi.size()) - 1; // = euler_phi(n)
  if (static_cast<long>(raw.size()) < d)
    raw.resize(d, Rational(0));
  for (long i = static_cast<long>(raw.size()) - 1; i >= d; --i) {
    if (raw[i] == 0)
      continue;
    Rational q = raw[i];
    raw[i] = 0;
    for (long j = 0; j < d; ++j)
      raw[i - d + j] -= q * Rational(phi[j]);
  }
  raw.resize(d);
  for (auto &c : raw)
    c.canonicalize();
  return raw;
}
} // namespace

CyclotomicNumber::CyclotomicNumber(long n)
    : n_(n), c_(static_cast<std::size_t>(euler_phi(n)), Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(long n, const Rational &q)
    : CyclotomicNumber(n) {
  c_[0] = q;
  c_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(long n, std::vector<Rational> raw_coeffs)
    : n_(n), c_(reduce_mod_phi(n, std::move(raw_coeffs))) {}

CyclotomicNumber CyclotomicNumber::zeta(long n) {
  std::vector<Rational> raw{Rational(0), Rational(1)};
  return CyclotomicNumber(n, std::move(raw));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto &c : c_)
    if (c != 0)
      return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0)
      return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational())
    throw std::logic_error("rational_value: residue has positive degree");
  return c_[0];
}

void CyclotomicNumber::check_conductor(const CyclotomicNumber &o) const {
  if (n_ != o.n_)
    throw ConductorMismatch("conductors " + std::to_string(n_) + " and " +
                            std::to_string(o.n_) + "; lift explicitly");
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber &o) const {
  check_conductor(o);
  auto r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r.c_[i] += o.c_[i];
    r.c_[i].canonicalize();
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber &o) const {
  check_conductor(o);
  auto r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r.c_[i] -= o.c_[i];
    r.c_[i].canonicalize();
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  auto r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber &o) const {
  check_conductor(o);
  if (c_.empty())
    return *this;
  std::vector<Rational> raw(2 * c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      raw[i + j] += c_[i] * o.c_[j];
  }
  return CyclotomicNumber(n_, std::move(raw));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber &o) const {
  return n_ == o.n_ && c_ == o.c_;
}

CyclotomicNumber CyclotomicNumber::inv() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(n_) +
                         ")");
  // extended gcd of the residue with Phi_n over Q; gcd is a nonzero constant
  RPoly r0 = phi_as_rational(n_);
  RPoly r1 = c_;
  rp_trim(r1);
  RPoly s0, s1{Rational(1)};
  while (rp_deg(r1) > 0) {
    RPoly num = r0;
    RPoly q = rp_divmod(num, r1);
    r0 = std::move(r1);
    r1 = std::move(num);
    RPoly snew = rp_sub(s0, rp_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (rp_deg(r1) < 0)
    throw std::logic_error("cyclotomic inv: nonconstant gcd with Phi_n");
  Rational lead = r1[0];
  for (auto &c : s1)
    c /= lead;
  CyclotomicNumber result(n_, std::move(s1));
  if (!((*this) * result == CyclotomicNumber(n_, Rational(1))))
    throw std::logic_error("cyclotomic inv: verification failed");
  return result;
}

CyclotomicNumber CyclotomicNumber::pow(long t) const {
  if (t < 0)
    return inv().pow(-t);
  CyclotomicNumber acc(n_, Rational(1));
  CyclotomicNumber base = *this;
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

CyclotomicNumber CyclotomicNumber::conj() const {
  std::vector<Rational> raw(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j)
    raw[static_cast<std::size_t>((static_cast<long>(j) * (n_ - 1)) % n_)] +=
        c_[j];
  return CyclotomicNumber(n_, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::lift(long L) const {
  if (L % n_ != 0)
    throw ConductorMismatch("lift: " + std::to_string(L) +
                            " is not a multiple of " + std::to_string(n_));
  const long step = L / n_;
  std::vector<Rational> raw(static_cast<std::size_t>(L), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j)
    raw[static_cast<std::size_t>((static_cast<long>(j) * step) % L)] += c_[j];
  return CyclotomicNumber(L, std::move(raw));
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    if (!first)
      os << " + ";
    os << c_[i].get_str();
    if (i == 1)
      os << "*z";
    else if (i > 1)
      os << "*z^" << i;
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

// ---- rigorous numeric embedding ----

namespace {

template <class F> struct CB {
  std::complex<F> c;
  F r;
};

template <class F> constexpr F f_eps() { return std::numeric_limits<F>::epsilon(); }

template <class F> CB<F> cb_add(const CB<F> &a, const CB<F> &b) {
  std::complex<F> c = a.c + b.c;
  return {c, a.r + b.r + 4 * f_eps<F>() * std::abs(c) + F(1e-300)};
}

template <class F> CB<F> cb_mul(const CB<F> &a, const CB<F> &b) {
  std::complex<F> c = a.c * b.c;
  F r = a.r * std::abs(b.c) + b.r * std::abs(a.c) + a.r * b.r +
        8 * f_eps<F>() * std::abs(c) + F(1e-300);
  return {c, r * (1 + 8 * f_eps<F>())};
}

template <class F> CB<F> cb_from_rational(const Rational &q) {
  // double-double split so higher F precision is actually used
  double d0 = q.get_d();
  Rational rem = q - Rational(d0);
  double d1 = rem.get_d();
  Rational rem2 = rem - Rational(d1);
  double tail = std::abs(rem2.get_d());
  F center = static_cast<F>(d0) + static_cast<F>(d1);
  F rad = static_cast<F>(tail) * F(1.000001) + F(5e-324) +
          4 * f_eps<F>() * std::abs(center) + F(1e-300);
  return {std::complex<F>(center, F(0)), rad};
}

template <class F> CB<F> cb_root_of_unity(long n, long k) {
  const long double pi = 3.141592653589793238462643383279502884L;
  F theta = static_cast<F>(2.0L * pi * static_cast<long double>(k) /
                           static_cast<long double>(n));
  std::complex<F> c(std::cos(theta), std::sin(theta));
  F rad = 16 * f_eps<F>() * (F(1) + std::abs(theta));
  return {c, rad};
}

template <class F> CB<F> embed_f(const CyclotomicNumber &a, long k) {
  CB<F> omega = cb_root_of_unity<F>(a.conductor(), k);
  CB<F> acc{std::complex<F>(0, 0), F(0)};
  const auto &c = a.coeffs();
  for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i) {
    acc = cb_mul(acc, omega);
    if (c[static_cast<std::size_t>(i)] != 0)
      acc = cb_add(acc, cb_from_rational<F>(c[static_cast<std::size_t>(i)]));
  }
  return acc;
}

int precision_mode() {
  const char *env = std::getenv("UNITFORGE_PRECISION");
  if (!env)
    return 0;
  std::string v(env);
  if (v == "double")
    return 1;
  if (v == "extended" || v == "long" || v == "longdouble")
    return 2;
  return 0; // auto: double, escalate to long double
}

template <class F> RealSign real_sign_f(const CyclotomicNumber &x, long k) {
  CB<F> e = embed_f<F>(x, k);
  F cr = e.c.real();
  F reach = e.r + std::abs(e.c.imag());
  if (cr - reach > 0)
    return RealSign::POSITIVE;
  if (cr + reach < 0)
    return RealSign::NEGATIVE;
  return RealSign::UNKNOWN;
}

} // namespace

ComplexBound embed(const CyclotomicNumber &a, long k) {
  if (std::gcd(k, a.conductor()) != 1)
    throw std::invalid_argument("embed: k must be coprime to the conductor");
  CB<double> e = embed_f<double>(a, k);
  return ComplexBound{e.c, e.r};
}

RealSign real_sign(const CyclotomicNumber &x, long k) {
  if (std::gcd(k, x.conductor()) != 1)
    throw std::invalid_argument("real_sign: k must be coprime to conductor");
  if (!(x == x.conj()))
    throw std::invalid_argument("real_sign: value is not real");
  if (x.is_zero())
    return RealSign::ZERO;
  if (x.is_rational()) {
    int s = sgn(x.rational_value());
    return s > 0 ? RealSign::POSITIVE : RealSign::NEGATIVE;
  }
  int mode = precision_mode();
  if (mode != 2) {
    RealSign s = real_sign_f<double>(x, k);
    if (s != RealSign::UNKNOWN || mode == 1)
      return s;
  }
  return real_sign_f<long double>(x, k);
}

AbsCompare abs_compare(const CyclotomicNumber &a, long k, const Rational &c) {
  if (c < 0)
    return AbsCompare::GREATER;
  if (c == 0)
    return a.is_zero() ? AbsCompare::INCONCLUSIVE : AbsCompare::GREATER;
  CyclotomicNumber norm = a * a.conj(); // |a|^2 under any coprime embedding
  CyclotomicNumber diff = norm - CyclotomicNumber(a.conductor(), c * c);
  switch (real_sign(diff, k)) {
  case RealSign::POSITIVE:
    return AbsCompare::GREATER;
  case RealSign::NEGATIVE:
    return AbsCompare::LESS;
  case RealSign::ZERO: // exact equality: caller must resolve symbolically
  case RealSign::UNKNOWN:
  default:
    return AbsCompare::INCONCLUSIVE;
  }
}

Tri certified_abs_ge(const CyclotomicNumber &a, const CyclotomicNumber &b,
                     long k) {
  long L = std::lcm(a.conductor(), b.conductor());
  CyclotomicNumber al = a.lift(L), bl = b.lift(L);
  CyclotomicNumber diff = al * al.conj() - bl * bl.conj();
  switch (real_sign(diff, k)) {
  case RealSign::POSITIVE:
  case RealSign::ZERO:
    return Tri::YES;
  case RealSign::NEGATIVE:
    return Tri::NO;
  default:
    return Tri::UNKNOWN;
  }
}

CyclotomicNumber geometric_sum(long n, long k) {
  if (k < 1)
    throw std::invalid_argument("geometric_sum: k must be >= 1");
  std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
  for (long i = 0; i < k; ++i)
    raw[static_cast<std::size_t>(i % n)] += 1;
  return CyclotomicNumber(n, std::move(raw));
}

GeomBound geometric_sum_bound(long n, long k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("geometric_sum_bound: n, k must be >= 1");
  if (n == 1) // z_k = k: never zero, equals one only at k = 1
    return k == 1 ? GeomBound::EQ_ONE : GeomBound::GE_ONE_STRICT;
  long r = k % n;
  if (r == 0)
    return GeomBound::ZERO;
  if (r == 1 || r == n - 1)
    return GeomBound::EQ_ONE;
  return GeomBound::GE_ONE_STRICT;
}

} // namespace unitforge
