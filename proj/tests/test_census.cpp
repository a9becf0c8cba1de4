#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "taut/reconcile.hpp"
#include "taut/reference_tables.hpp"

using namespace taut;
using namespace taut::census;

namespace {

// Pinned at transcription time; any edit to the shipped tables must be
// deliberate.
constexpr std::uint64_t kChecksumQ3 = 5251042974993039947ull;
constexpr std::uint64_t kChecksumQ4 = 18367341117799890608ull;
constexpr std::uint64_t kChecksumQ5 = 11975319322121062167ull;

}  // namespace

TEST_CASE("reference tables satisfy the row identities") {
    for (int q : {3, 4, 5}) {
        REQUIRE(has_reference(q));
        for (int n = 0; n <= reference_max_n(q); ++n) {
            const CensusTable t = reference_table(q, n);
            CAPTURE(q);
            CAPTURE(n);
            CHECK(t.length_identity_ok());
            CHECK(t.count_identity_ok());
            CHECK(t.gap_ok());
        }
    }
    CHECK(reference_max_n(3) == 12);
    CHECK(reference_max_n(4) == 11);
    CHECK(reference_max_n(5) == 11);
    CHECK_FALSE(has_reference(6));
}

TEST_CASE("reference table checksums") {
    CHECK(reference_checksum(3) == kChecksumQ3);
    CHECK(reference_checksum(4) == kChecksumQ4);
    CHECK(reference_checksum(5) == kChecksumQ5);
}

TEST_CASE("reconcile small ranges") {
    const ReconciliationReport r = reconcile(3, 5);
    CHECK(r.consistent());
    CHECK(r.lamination.size() == 6);
    CHECK(r.trees.size() == 6);
    CHECK(r.words_column.size() == 6);
    CHECK(r.row(3).counts[0] == 7);

    const ReconciliationReport single = reconcile(3, 0);
    CHECK(single.consistent());
    CHECK(single.row(0).counts == std::vector<BigInt>{1});
}

TEST_CASE("reconcile with an engine subset") {
    EngineSet tw{false, true, true};
    const ReconciliationReport r = reconcile(4, 6, tw);
    CHECK(r.consistent());
    CHECK(r.lamination.empty());
    CHECK(r.trees.size() == 7);
    for (int n = 0; n <= 6; ++n)
        CHECK(r.words_column[n] == reference_table(4, n).counts[0]);

    EngineSet words_only{false, false, true};
    const ReconciliationReport w = reconcile(5, 8, words_only);
    CHECK(w.consistent());
    CHECK_FALSE(w.has_rows());
}

TEST_CASE("fault injection trips the mismatch path") {
    const ReconciliationReport r =
        reconcile(3, 4, {}, 1, FaultInjection{3, 1});
    CHECK_FALSE(r.consistent());
    CHECK_FALSE(r.mismatches.empty());
    bool found = false;
    for (const auto& mm : r.mismatches)
        if (mm.n == 3 && mm.m == 1) found = true;
    CHECK(found);
}

TEST_CASE("report writers are deterministic and well-formed") {
    const ReconciliationReport r = reconcile(3, 4);
    const std::string csv = report_csv(r);
    CHECK(csv.substr(0, 14) == "q,n,m,count\n3,");
    CHECK(csv == report_csv(r));
    const std::string json = report_json(r);
    CHECK(json.find("\"consistent\":true") != std::string::npos);
    CHECK(json.find("\"q\":3") != std::string::npos);
    const std::string text = report_text(r);
    CHECK(text.find("n\\m") == 0);
    CHECK(text.find("21 16 3 0 1") != std::string::npos);
}

TEST_CASE("census json quotes only huge counts") {
    CensusTable t(3, 1);
    t.counts[0] = BigInt("123456789123456789123456789");
    t.counts[1] = 7;
    const std::string json = census_json(t);
    CHECK(json.find("\"0\":\"123456789123456789123456789\"") !=
          std::string::npos);
    CHECK(json.find("\"1\":7") != std::string::npos);
}

TEST_CASE("reconcile input validation") {
    CHECK_THROWS_AS(reconcile(2, 3), InvalidInput);
    CHECK_THROWS_AS(reconcile(3, -1), InvalidInput);
}
