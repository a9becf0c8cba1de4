#pragma once

// Runs the enabled census engines side by side, compares every cell, runs
// the structural identity and gap checks, and matches the published tables
// where they apply.

#include <optional>
#include <string>
#include <vector>

#include "taut/census_table.hpp"
#include "taut/words.hpp"

namespace taut::census {

struct EngineSet {
    bool lamination = true;
    bool trees = true;
    bool words = true;
};

struct CellMismatch {
    int n = 0;
    int m = 0;
    std::string detail;
};

// Test hook: adds 1 to one lamination cell so the mismatch path can be
// exercised end to end.
struct FaultInjection {
    int n = 0;
    int m = 0;
};

struct ReconciliationReport {
    int q = 3;
    int n_max = 0;
    EngineSet engines;
    std::vector<CensusTable> lamination;  // per n, when enabled
    std::vector<CensusTable> trees;       // per n, when enabled
    std::vector<BigInt> words_column;     // N_q(n,0), when enabled
    std::vector<CellMismatch> mismatches;
    std::vector<std::string> failed_checks;
    double lamination_seconds = 0;
    double trees_seconds = 0;
    double words_seconds = 0;

    bool consistent() const {
        return mismatches.empty() && failed_checks.empty();
    }
    // The reconciled table for row n (first available full engine).
    const CensusTable& row(int n) const;
    bool has_rows() const { return !lamination.empty() || !trees.empty(); }
};

ReconciliationReport reconcile(
    int q, int n_max, EngineSet engines = {}, int shards = 1,
    std::optional<FaultInjection> fault = std::nullopt);

// Deterministic writers (timings deliberately excluded).
std::string report_csv(const ReconciliationReport& r);
std::string report_json(const ReconciliationReport& r);
std::string report_text(const ReconciliationReport& r);

}  // namespace taut::census
