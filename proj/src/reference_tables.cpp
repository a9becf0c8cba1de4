#include "taut/reference_tables.hpp"

#include <sstream>

#include "taut/errors.hpp"

namespace taut::census {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

const Rows kTableQ3 = {
    {1},
    {1, 1},
    {3, 1, 1},
    {7, 6, 0, 1},
    {21, 16, 3, 0, 1},
    {57, 51, 13, 0, 0, 1},
    {171, 149, 39, 5, 0, 0, 1},
    {499, 454, 117, 23, 0, 0, 0, 1},
    {1497, 1348, 360, 66, 9, 0, 0, 0, 1},
    {4449, 4083, 1061, 207, 41, 0, 0, 0, 0, 1},
    {13347, 12191, 3252, 591, 126, 17, 0, 0, 0, 0, 1},
    {39927, 36658, 9738, 1799, 370, 81, 0, 0, 0, 0, 0, 1},
    {119781, 109898, 29292, 5351, 1125, 240, 33, 0, 0, 0, 0, 0, 1},
};

const Rows kTableQ4 = {
    {1},
    {2, 1},
    {8, 2, 1},
    {28, 14, 0, 1},
    {112, 52, 6, 0, 1},
    {432, 220, 30, 0, 0, 1},
    {1728, 872, 120, 10, 0, 0, 1},
    {6856, 3540, 472, 54, 0, 0, 0, 1},
    {27424, 14120, 1924, 204, 18, 0, 0, 0, 1},
    {109472, 56744, 7620, 828, 98, 0, 0, 0, 0, 1},
    {437888, 226768, 30752, 3212, 396, 34, 0, 0, 0, 0, 1},
    {1750688, 908040, 122852, 12872, 1556, 194, 0, 0, 0, 0, 0, 1},
};

const Rows kTableQ5 = {
    {1},
    {3, 1},
    {15, 3, 1},
    {69, 24, 0, 1},
    {345, 114, 9, 0, 1},
    {1695, 597, 51, 0, 0, 1},
    {8475, 2973, 255, 15, 0, 0, 1},
    {42237, 15018, 1245, 93, 0, 0, 0, 1},
    {211185, 75012, 6306, 438, 27, 0, 0, 0, 1},
    {1055235, 375951, 31287, 2199, 171, 0, 0, 0, 0, 1},
    {5276175, 1879269, 157098, 10767, 858, 51, 0, 0, 0, 0, 1},
    {26377485, 9400644, 784596, 53799, 4230, 339, 0, 0, 0, 0, 0, 1},
};

}  // namespace

bool has_reference(int q) { return q >= 3 && q <= 5; }

int reference_max_n(int q) {
    return static_cast<int>(reference_rows(q).size()) - 1;
}

const Rows& reference_rows(int q) {
    switch (q) {
        case 3: return kTableQ3;
        case 4: return kTableQ4;
        case 5: return kTableQ5;
        default: throw InvalidInput("no reference table for q = " +
                                    std::to_string(q));
    }
}

CensusTable reference_table(int q, int n) {
    const Rows& rows = reference_rows(q);
    if (n < 0 || n >= static_cast<int>(rows.size()))
        throw InvalidInput("reference table row out of range");
    CensusTable t(q, n);
    for (std::size_t m = 0; m < rows[n].size(); ++m) t.counts[m] = rows[n][m];
    return t;
}

std::uint64_t reference_checksum(int q) {
    std::ostringstream os;
    const Rows& rows = reference_rows(q);
    for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t m = 0; m < rows[n].size(); ++m)
            os << q << ',' << n << ',' << m << ',' << rows[n][m] << '\n';
    const std::string bytes = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace taut::census
