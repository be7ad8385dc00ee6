#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace torelli {

/// Exact integer used by every lattice computation. Entries of long
/// transvection words grow quickly, so there is no fixed-width fast path.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline int sign(const Integer& x) { return x.sign(); }

/// Floor-free mod 2 for possibly negative values.
inline unsigned parity(const Integer& x) {
  return boost::multiprecision::bit_test(abs(x), 0) ? 1u : 0u;
}

/// Nearest integer to n / d with ties broken toward zero. d != 0.
Integer round_div(const Integer& n, const Integer& d);

inline std::optional<std::int64_t> to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace torelli
