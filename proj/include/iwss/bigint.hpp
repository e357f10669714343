#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace iwss {

// Arbitrary-precision signed integer. Value semantics, canonical zero,
// round-trips through decimal strings.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt parse_bigint(const std::string& s) { return BigInt(s); }
inline std::string to_string(const BigInt& n) { return n.str(); }

inline BigInt abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

// Floor of the integer square root.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

}  // namespace iwss
