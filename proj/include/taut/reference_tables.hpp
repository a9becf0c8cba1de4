#pragma once

// The published census values shipped with the artifact for q = 3, 4, 5.
// Transcribed once; guarded by the row identities (sum of counts[m] 2^m
// must be q^n) and a content checksum in the test suite.

#include <cstdint>
#include <vector>

#include "taut/census_table.hpp"

namespace taut::census {

bool has_reference(int q);

// Largest n covered for this q (12 for q = 3, 11 for q = 4 and 5).
int reference_max_n(int q);

// Row n holds the n+1 published counts for m = 0..n.
const std::vector<std::vector<std::int64_t>>& reference_rows(int q);

CensusTable reference_table(int q, int n);

// FNV-1a over the canonical CSV serialization of all rows for this q.
std::uint64_t reference_checksum(int q);

}  // namespace taut::census
