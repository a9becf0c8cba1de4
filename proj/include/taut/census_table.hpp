#pragma once

// N_q(n,m): the number of components of the pinched circle with length
// 2^m q^-n.  Shared output type of the lamination engine, the tree engine
// and (column m = 0) the word recursion.

#include <string>
#include <vector>

#include "taut/bigint.hpp"

namespace taut {

struct CensusTable {
    int q = 2;
    int n = 0;
    std::vector<BigInt> counts;  // counts[m] for m = 0..n

    CensusTable() = default;
    CensusTable(int q_, int n_) : q(q_), n(n_), counts(n_ + 1) {}

    bool operator==(const CensusTable&) const = default;

    BigInt total_components() const;
    BigInt total_weighted_length() const;  // sum of counts[m] * 2^m

    // Sum of lengths is the whole circle: sum counts[m] 2^m = q^n.
    bool length_identity_ok() const;
    // Component count: sum counts[m] = 1 + (q-2)(q^n - 1)/(q - 1).
    bool count_identity_ok() const;
    // counts[m] = 0 for floor(n/2) < m < n and counts[n] = 1.
    bool gap_ok() const;
};

// CSV rows `q,n,m,count` for m = 0..n (no header).
std::string census_csv_rows(const CensusTable& t);
inline const char* census_csv_header() { return "q,n,m,count"; }

// {"q":..,"n":..,"counts":{"0":..,...}}; counts above 2^53 are quoted.
std::string census_json(const CensusTable& t);

// Space-separated counts, the row layout of the reference tables.
std::string census_row_text(const CensusTable& t);

}  // namespace taut
