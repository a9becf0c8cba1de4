#include "taut/reconcile.hpp"

#include <chrono>
#include <sstream>

#include "taut/gamma.hpp"
#include "taut/lamination.hpp"
#include "taut/reference_tables.hpp"

namespace taut::census {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

const CensusTable& ReconciliationReport::row(int n) const {
    if (!lamination.empty()) return lamination.at(n);
    if (!trees.empty()) return trees.at(n);
    throw InvalidInput("no full census engine was enabled");
}

ReconciliationReport reconcile(int q, int n_max, EngineSet engines, int shards,
                               std::optional<FaultInjection> fault) {
    if (q < 3) throw InvalidInput("reconcile requires q >= 3");
    if (n_max < 0) throw InvalidInput("reconcile requires n_max >= 0");
    ReconciliationReport rep;
    rep.q = q;
    rep.n_max = n_max;
    rep.engines = engines;

    if (engines.lamination) {
        const auto t0 = std::chrono::steady_clock::now();
        for (int n = 0; n <= n_max; ++n)
            rep.lamination.push_back(
                lamination::census(q, n, {.shards = shards}));
        rep.lamination_seconds = seconds_since(t0);
        if (fault && fault->n <= n_max && fault->m <= fault->n)
            rep.lamination[fault->n].counts[fault->m] += 1;
    }
    if (engines.trees) {
        const auto t0 = std::chrono::steady_clock::now();
        for (int n = 0; n <= n_max; ++n)
            rep.trees.push_back(treepoly::census_trees(q, n));
        rep.trees_seconds = seconds_since(t0);
    }
    if (engines.words) {
        const auto t0 = std::chrono::steady_clock::now();
        rep.words_column = words::short_column(q, n_max).values;
        rep.words_seconds = seconds_since(t0);
    }

    auto mismatch = [&](int n, int m, const std::string& detail) {
        rep.mismatches.push_back({n, m, detail});
    };

    for (int n = 0; n <= n_max; ++n) {
        if (!rep.lamination.empty() && !rep.trees.empty()) {
            const CensusTable& a = rep.lamination[n];
            const CensusTable& b = rep.trees[n];
            for (int m = 0; m <= n; ++m)
                if (a.counts[m] != b.counts[m])
                    mismatch(n, m,
                             "lamination " + a.counts[m].str() + " vs trees " +
                                 b.counts[m].str());
        }
        if (!rep.words_column.empty() && rep.has_rows()) {
            const BigInt& cell0 = rep.row(n).counts[0];
            if (rep.words_column[n] != cell0)
                mismatch(n, 0,
                         "words " + rep.words_column[n].str() + " vs census " +
                             cell0.str());
        }
        if (rep.has_rows()) {
            const CensusTable& t = rep.row(n);
            if (!t.length_identity_ok())
                rep.failed_checks.push_back(
                    "length identity fails at n = " + std::to_string(n));
            if (!t.count_identity_ok())
                rep.failed_checks.push_back(
                    "component count identity fails at n = " +
                    std::to_string(n));
            if (!t.gap_ok())
                rep.failed_checks.push_back("gap property fails at n = " +
                                            std::to_string(n));
            if (has_reference(q) && n <= reference_max_n(q)) {
                const CensusTable ref = reference_table(q, n);
                for (int m = 0; m <= n; ++m)
                    if (ref.counts[m] != t.counts[m])
                        mismatch(n, m,
                                 "computed " + t.counts[m].str() +
                                     " vs published " + ref.counts[m].str());
            }
        } else if (!rep.words_column.empty() && has_reference(q) &&
                   n <= reference_max_n(q)) {
            const CensusTable ref = reference_table(q, n);
            if (rep.words_column[n] != ref.counts[0])
                mismatch(n, 0,
                         "words " + rep.words_column[n].str() +
                             " vs published " + ref.counts[0].str());
        }
    }
    return rep;
}

std::string report_csv(const ReconciliationReport& r) {
    std::ostringstream os;
    os << census_csv_header() << '\n';
    if (r.has_rows()) {
        for (int n = 0; n <= r.n_max; ++n) os << census_csv_rows(r.row(n));
    } else {
        for (int n = 0; n <= r.n_max; ++n)
            os << r.q << ',' << n << ",0," << r.words_column[n].str() << '\n';
    }
    return os.str();
}

std::string report_json(const ReconciliationReport& r) {
    std::ostringstream os;
    os << "{\"q\":" << r.q << ",\"n_max\":" << r.n_max << ",\"engines\":[";
    bool first = true;
    for (const auto& [on, name] :
         {std::pair{r.engines.lamination, "lamination"},
          std::pair{r.engines.trees, "trees"},
          std::pair{r.engines.words, "words"}}) {
        if (!on) continue;
        if (!first) os << ',';
        os << '"' << name << '"';
        first = false;
    }
    os << "],\"consistent\":" << (r.consistent() ? "true" : "false");
    os << ",\"rows\":[";
    if (r.has_rows()) {
        for (int n = 0; n <= r.n_max; ++n) {
            if (n != 0) os << ',';
            os << census_json(r.row(n));
        }
    } else {
        for (int n = 0; n <= r.n_max; ++n) {
            if (n != 0) os << ',';
            os << "{\"n\":" << n << ",\"short\":" << json_int(r.words_column[n])
               << '}';
        }
    }
    os << "],\"mismatches\":[";
    for (std::size_t i = 0; i < r.mismatches.size(); ++i) {
        if (i != 0) os << ',';
        os << "{\"n\":" << r.mismatches[i].n << ",\"m\":" << r.mismatches[i].m
           << ",\"detail\":\"" << r.mismatches[i].detail << "\"}";
    }
    os << "],\"failed_checks\":[";
    for (std::size_t i = 0; i < r.failed_checks.size(); ++i) {
        if (i != 0) os << ',';
        os << '"' << r.failed_checks[i] << '"';
    }
    os << "]}";
    return os.str();
}

std::string report_text(const ReconciliationReport& r) {
    std::ostringstream os;
    os << "n\\m";
    if (r.has_rows()) {
        // Column widths over the whole triangle keep rows aligned.
        std::vector<std::size_t> width(r.n_max + 1, 1);
        for (int n = 0; n <= r.n_max; ++n)
            for (int m = 0; m <= n; ++m)
                width[m] = std::max(width[m], r.row(n).counts[m].str().size());
        for (int m = 0; m <= r.n_max; ++m) {
            os << ' ';
            const std::string head = std::to_string(m);
            os << std::string(width[m] > head.size() ? width[m] - head.size()
                                                     : 0,
                              ' ')
               << head;
        }
        os << '\n';
        for (int n = 0; n <= r.n_max; ++n) {
            os << std::to_string(n)
               << std::string(3 - std::min<std::size_t>(
                                      3, std::to_string(n).size()),
                              ' ');
            for (int m = 0; m <= n; ++m) {
                const std::string cell = r.row(n).counts[m].str();
                os << ' '
                   << std::string(width[m] > cell.size() ? width[m] - cell.size()
                                                         : 0,
                                  ' ')
                   << cell;
            }
            os << '\n';
        }
    } else {
        os << " 0\n";
        for (int n = 0; n <= r.n_max; ++n)
            os << n << "   " << r.words_column[n].str() << '\n';
    }
    if (!r.consistent()) {
        os << "mismatches: " << r.mismatches.size()
           << ", failed checks: " << r.failed_checks.size() << '\n';
        for (const auto& mm : r.mismatches)
            os << "  n=" << mm.n << " m=" << mm.m << ": " << mm.detail << '\n';
        for (const auto& fc : r.failed_checks) os << "  " << fc << '\n';
    }
    return os.str();
}

}  // namespace taut::census
