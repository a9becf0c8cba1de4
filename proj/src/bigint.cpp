#include "taut/bigint.hpp"

#include <limits>

#include "taut/errors.hpp"

namespace taut {

std::uint64_t checked_pow_u64(std::uint64_t q, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q)
            throw InvalidInput("grid size q^n overflows 64 bits");
        r *= q;
    }
    return r;
}

BigInt pow_big(const BigInt& base, unsigned e) {
    BigInt r = 1;
    BigInt b = base;
    while (e != 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace taut
