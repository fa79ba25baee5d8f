#ifndef UNITFORGE_RATIONAL_HPP
#define UNITFORGE_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace unitforge {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced fraction, positive denominator), which the whole library relies
// on for coefficient-wise equality and hashing.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline std::string to_string(const Rational &q) { return q.get_str(); }

// Lower/upper double bounds on an exact rational. mpq_get_d truncates
// toward zero, so widen by one ulp on each side.
double to_double_lower(const Rational &q);
double to_double_upper(const Rational &q);

// FNV-1a over a canonical byte serialization; equal values hash equal.
std::uint64_t hash_bytes(const void *data, std::size_t len, std::uint64_t seed = 1469598103934665603ULL);
std::uint64_t hash_rational(const Rational &q, std::uint64_t seed);

} // namespace unitforge

#endif
