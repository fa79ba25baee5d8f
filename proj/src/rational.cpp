#include "unitforge/rational.hpp"

#include <cmath>
#include <limits>

namespace unitforge {

double to_double_lower(const Rational &q) {
  double d = q.get_d();
  // get_d truncates toward zero; step one ulp outward to be safe on both signs.
  return std::nextafter(std::nextafter(d, -std::numeric_limits<double>::infinity()),
                        -std::numeric_limits<double>::infinity());
}

double to_double_upper(const Rational &q) {
  double d = q.get_d();
  return std::nextafter(std::nextafter(d, std::numeric_limits<double>::infinity()),
                        std::numeric_limits<double>::infinity());
}

std::uint64_t hash_bytes(const void *data, std::size_t len, std::uint64_t seed) {
  const unsigned char *p = static_cast<const unsigned char *>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t hash_rational(const Rational &q, std::uint64_t seed) {
  // mpq_class is canonical, so the decimal string is a canonical form.
  std::string s = q.get_str();
  std::uint64_t h = hash_bytes(s.data(), s.size(), seed);
  return hash_bytes("/", 1, h);
}

} // namespace unitforge
