#include "taut/census_table.hpp"

#include <sstream>

namespace taut {

BigInt CensusTable::total_components() const {
    BigInt s = 0;
    for (const BigInt& c : counts) s += c;
    return s;
}

BigInt CensusTable::total_weighted_length() const {
    BigInt s = 0;
    for (std::size_t m = 0; m < counts.size(); ++m)
        s += counts[m] << static_cast<unsigned>(m);
    return s;
}

bool CensusTable::length_identity_ok() const {
    return total_weighted_length() == pow_big(BigInt(q), static_cast<unsigned>(n));
}

bool CensusTable::count_identity_ok() const {
    const BigInt qn = pow_big(BigInt(q), static_cast<unsigned>(n));
    return total_components() * (q - 1) == (q - 1) + (q - 2) * (qn - 1);
}

bool CensusTable::gap_ok() const {
    if (static_cast<int>(counts.size()) != n + 1) return false;
    if (counts[n] != 1) return false;
    for (int m = n / 2 + 1; m < n; ++m)
        if (counts[m] != 0) return false;
    return true;
}

std::string census_csv_rows(const CensusTable& t) {
    std::ostringstream os;
    for (std::size_t m = 0; m < t.counts.size(); ++m)
        os << t.q << ',' << t.n << ',' << m << ',' << t.counts[m].str() << '\n';
    return os.str();
}

std::string census_json(const CensusTable& t) {
    std::ostringstream os;
    os << "{\"q\":" << t.q << ",\"n\":" << t.n << ",\"counts\":{";
    for (std::size_t m = 0; m < t.counts.size(); ++m) {
        if (m != 0) os << ',';
        os << '"' << m << "\":" << json_int(t.counts[m]);
    }
    os << "}}";
    return os.str();
}

std::string census_row_text(const CensusTable& t) {
    std::ostringstream os;
    for (std::size_t m = 0; m < t.counts.size(); ++m) {
        if (m != 0) os << ' ';
        os << t.counts[m].str();
    }
    return os.str();
}

}  // namespace taut
