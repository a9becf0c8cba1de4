#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace taut {

// All counts in this project are exact; sequences like b_n grow as q^n, so
// everything user-visible is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// JSON value for an exact integer: plain literal while it fits in a double
// without loss (|v| <= 2^53), quoted string beyond that.
inline std::string json_int(const BigInt& v) {
    static const BigInt kSafe = BigInt(1) << 53;
    if (v <= kSafe && v >= -kSafe) return v.str();
    return "\"" + v.str() + "\"";
}

// Checked power for grid sizes; q^e as uint64 or throws.
std::uint64_t checked_pow_u64(std::uint64_t q, unsigned e);

BigInt pow_big(const BigInt& base, unsigned e);

}  // namespace taut
