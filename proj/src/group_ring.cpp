#include "unitforge/group_ring.hpp"

#include <algorithm>
#include <sstream>

namespace unitforge {

GroupRingElement::GroupRingElement(GroupPtr G, std::vector<Rational> coeffs)
    : group_(std::move(G)), coeffs_(std::move(coeffs)) {
  if (!group_)
    throw std::invalid_argument("GroupRingElement: null group");
  if (static_cast<int>(coeffs_.size()) != group_->order())
    throw std::invalid_argument("GroupRingElement: coefficient count " +
                                std::to_string(coeffs_.size()) + " != group order " +
                                std::to_string(group_->order()));
  for (auto &c : coeffs_)
    c.canonicalize();
}

GroupRingElement GroupRingElement::zero(GroupPtr G) {
  int n = G->order();
  return GroupRingElement(std::move(G), std::vector<Rational>(n, Rational(0)));
}

GroupRingElement GroupRingElement::one(GroupPtr G) {
  return from_element(std::move(G), 0);
}

GroupRingElement GroupRingElement::from_element(GroupPtr G, Elt x) {
  auto r = zero(std::move(G));
  r.coeffs_[x] = 1;
  return r;
}

bool GroupRingElement::is_zero() const {
  for (const auto &c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

bool GroupRingElement::is_integral() const {
  for (const auto &c : coeffs_)
    if (!is_integer(c))
      return false;
  return true;
}

bool GroupRingElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1)
    return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return false;
  return true;
}

void GroupRingElement::check_same_group(const GroupRingElement &o) const {
  if (group_.get() != o.group_.get())
    throw GroupMismatch("group ring operation across distinct groups");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement &o) const {
  check_same_group(o);
  auto r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] += o.coeffs_[i];
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement &o) const {
  check_same_group(o);
  auto r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  auto r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement &o) const {
  check_same_group(o);
  auto r = zero(group_);
  const int n = group_->order();
  for (int g = 0; g < n; ++g) {
    if (coeffs_[g] == 0)
      continue;
    for (int h = 0; h < n; ++h) {
      if (o.coeffs_[h] == 0)
        continue;
      r.coeffs_[group_->mul(g, h)] += coeffs_[g] * o.coeffs_[h];
    }
  }
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement &o) const {
  if (group_.get() != o.group_.get())
    return false;
  return coeffs_ == o.coeffs_;
}

GroupRingElement operator*(const Rational &q, const GroupRingElement &a) {
  auto r = a;
  for (auto &c : r.coeffs_)
    c *= q;
  return r;
}

GroupRingElement GroupRingElement::power(unsigned long t) const {
  auto acc = one(group_);
  auto base = *this;
  while (t > 0) {
    if (t & 1UL)
      acc = acc * base;
    t >>= 1UL;
    if (t > 0)
      base = base * base;
  }
  return acc;
}

Rational GroupRingElement::augmentation() const {
  Rational s(0);
  for (const auto &c : coeffs_)
    s += c;
  return s;
}

GroupRingElement GroupRingElement::involution() const {
  auto r = zero(group_);
  for (int g = 0; g < group_->order(); ++g)
    r.coeffs_[group_->inv(g)] = coeffs_[g];
  return r;
}

std::set<Elt> GroupRingElement::support() const {
  std::set<Elt> s;
  for (int g = 0; g < group_->order(); ++g)
    if (coeffs_[g] != 0)
      s.insert(g);
  return s;
}

std::uint64_t GroupRingElement::canonical_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string &s) { h = hash_bytes(s.data(), s.size(), h); };
  mix("n=" + std::to_string(group_->order()));
  for (int g = 0; g < group_->order(); ++g) {
    if (coeffs_[g] == 0)
      continue;
    mix("|" + std::to_string(g) + ":" + coeffs_[g].get_str());
  }
  return h;
}

std::optional<GroupRingElement> GroupRingElement::try_invert() const {
  const int n = group_->order();
  // solve x a = 1: row k of the system is sum_g x_g a_{g^{-1} k} = [k == e]
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1, Rational(0)));
  for (int k = 0; k < n; ++k) {
    for (int g = 0; g < n; ++g)
      M[k][g] = coeffs_[group_->mul(group_->inv(g), k)];
    M[k][n] = (k == 0) ? 1 : 0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0)
      return std::nullopt; // singular: not a unit of QG
    std::swap(M[col], M[piv]);
    Rational inv_p = Rational(1) / M[col][col];
    for (int c = col; c <= n; ++c)
      M[col][c] *= inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0)
        continue;
      Rational f = M[r][col];
      for (int c = col; c <= n; ++c)
        M[r][c] -= f * M[col][c];
    }
  }
  std::vector<Rational> xs(n);
  for (int g = 0; g < n; ++g)
    xs[g] = M[g][n];
  GroupRingElement x(group_, std::move(xs));
  if (!(x * *this).is_one() || !(*this * x).is_one())
    return std::nullopt;
  return x;
}

GroupRingElement GroupRingElement::project(const Quotient &q) const {
  if (static_cast<int>(q.proj.size()) != group_->order())
    throw GroupMismatch("quotient projection does not match element's group");
  auto r = GroupRingElement::zero(q.group);
  for (int g = 0; g < group_->order(); ++g)
    r.set_coeff(q.proj[g], r.coeff(q.proj[g]) + coeffs_[g]);
  return r;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < group_->order(); ++g) {
    if (coeffs_[g] == 0)
      continue;
    if (!first)
      os << " + ";
    os << coeffs_[g].get_str() << "*" << group_->name(g);
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

GroupRingElement tilde(const GroupPtr &G, const std::vector<Elt> &elements) {
  auto r = GroupRingElement::zero(G);
  for (Elt x : elements)
    r.set_coeff(x, r.coeff(x) + 1);
  return r;
}

GroupRingElement tilde(const Subgroup &S) { return tilde(S.parent, S.elements); }

GroupRingElement hat(const Subgroup &S) {
  return Rational(1, S.order()) * tilde(S);
}

} // namespace unitforge

