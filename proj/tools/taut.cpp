// Command-line surface: exact censuses of tautological laminations computed
// by three independent engines, plus word-level counts, figures and tree
// exports.  All outputs are byte-deterministic for a given configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "taut/gamma.hpp"
#include "taut/lamination.hpp"
#include "taut/reconcile.hpp"
#include "taut/render.hpp"
#include "taut/treepoly.hpp"
#include "taut/words.hpp"

namespace {

struct Config {
    int q = 3;
    int depth = 0;
    int max_n = 0;
    std::string kind = "one-unbordered";
    std::string method = "recursion";
    bool check = false;
    std::string format = "csv";
    std::string out_path;
    std::string svg_path;
    bool svg_components = false;
    std::string dot_path;
    std::string chord_style = "geodesic";
    int svg_size = 800;
    int shards = 1;
    std::uint64_t word_budget = taut::words::kDefaultWordBudget;
    std::uint64_t chord_cap = 10'000'000;
    std::uint64_t tree_budget = taut::treepoly::kDefaultTreeBudget;
    std::string engines = "lam,trees,words";
    std::string fault_cell;
};

void write_output(const Config& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw taut::Error("cannot open output file " + cfg.out_path);
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw taut::Error("cannot open output file " + path);
    f << text;
}

std::string error_kind(const taut::Error& e) {
    if (dynamic_cast<const taut::BudgetError*>(&e)) return "budget-exceeded";
    if (dynamic_cast<const taut::InvalidInput*>(&e)) return "invalid-input";
    if (dynamic_cast<const taut::InternalError*>(&e)) return "internal";
    return "error";
}

void report_error(const Config& cfg, const std::string& kind,
                  const std::string& msg) {
    if (cfg.format == "json")
        std::cerr << "{\"error\":\"" << msg << "\",\"kind\":\"" << kind
                  << "\"}\n";
    else
        std::cerr << "taut: error: " << msg << '\n';
}

std::string sequence_csv(const std::vector<taut::BigInt>& values) {
    std::ostringstream os;
    os << "n,count\n";
    for (std::size_t n = 0; n < values.size(); ++n)
        os << n << ',' << values[n].str() << '\n';
    return os.str();
}

std::string sequence_json(const Config& cfg,
                          const std::vector<taut::BigInt>& values) {
    std::ostringstream os;
    os << "{\"q\":" << cfg.q << ",\"kind\":\"" << cfg.kind << "\",\"method\":\""
       << cfg.method << "\",\"values\":[";
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (n != 0) os << ',';
        os << taut::json_int(values[n]);
    }
    os << "]}";
    return os.str();
}

int cmd_words(const Config& cfg) {
    using namespace taut::words;
    const bool one = cfg.kind == "one-unbordered";

    auto recursion = [&] {
        return one ? count_one_unbordered_recursive(cfg.q, cfg.max_n)
                   : count_unbordered_recursive(cfg.q, cfg.max_n);
    };
    auto closed = [&] {
        const SeriesCoefficients s = one ? beta_closed_form(cfg.q, cfg.max_n)
                                         : alpha_series(cfg.q, cfg.max_n);
        return CountSequence{s.q, s.coeffs};
    };
    auto brute_at = [&](int n) {
        return one ? count_one_unbordered_brute(cfg.q, n, cfg.word_budget,
                                                cfg.shards)
                   : count_unbordered_brute(cfg.q, n, cfg.word_budget,
                                            cfg.shards);
    };

    if (cfg.check) {
        const CountSequence rec = recursion();
        const CountSequence cf = closed();
        int mismatches = 0;
        for (int n = 0; n <= cfg.max_n; ++n) {
            if (rec.values[n] != cf.values[n]) {
                std::cerr << "mismatch at n=" << n << ": recursion "
                          << rec.values[n].str() << " vs closed-form "
                          << cf.values[n].str() << '\n';
                ++mismatches;
            }
            // Brute force only while the budget allows it.
            bool in_budget = true;
            std::uint64_t total = 1;
            for (int i = 0; i < n && in_budget; ++i) {
                if (total > cfg.word_budget / cfg.q) in_budget = false;
                total *= cfg.q;
            }
            if (!in_budget || total > cfg.word_budget) continue;
            const taut::BigInt b = brute_at(n);
            if (b != rec.values[n]) {
                std::cerr << "mismatch at n=" << n << ": brute " << b.str()
                          << " vs recursion " << rec.values[n].str() << '\n';
                ++mismatches;
            }
        }
        write_output(cfg, cfg.format == "json"
                              ? sequence_json(cfg, rec.values)
                              : sequence_csv(rec.values));
        return mismatches == 0 ? 0 : 2;
    }

    std::vector<taut::BigInt> values;
    if (cfg.method == "recursion") {
        values = recursion().values;
    } else if (cfg.method == "closed-form") {
        values = closed().values;
    } else {
        for (int n = 0; n <= cfg.max_n; ++n) values.push_back(brute_at(n));
    }
    write_output(cfg, cfg.format == "json" ? sequence_json(cfg, values)
                                           : sequence_csv(values));
    return 0;
}

int cmd_lam(const Config& cfg) {
    using namespace taut::lamination;

    taut::CensusTable table;
    if (cfg.q == 2) {
        // The lamination is empty in degree 2: the circle never splits, so
        // the census is reported with its depth-0 meaning.
        std::cerr << "note: the degree-2 lamination is empty; reporting the "
                     "full circle as the depth-0 census\n";
        table = taut::CensusTable(2, 0);
        table.counts[0] = 1;
    } else {
        table = census(cfg.q, cfg.depth, {.shards = cfg.shards});
    }

    std::string text;
    if (cfg.format == "json") {
        text = taut::census_json(table) + "\n";
    } else if (cfg.format == "table") {
        text = taut::census_row_text(table) + "\n";
    } else {
        text = std::string(taut::census_csv_header()) + "\n" +
               taut::census_csv_rows(table);
    }
    write_output(cfg, text);

    if (!cfg.svg_path.empty()) {
        LaminationOptions lopts;
        lopts.chord_cap = cfg.chord_cap;
        lopts.shards = cfg.shards;
        const Lamination lam = build_lamination(cfg.q, cfg.depth, lopts);
        RenderOptions ropts;
        ropts.style = cfg.chord_style == "straight" ? ChordStyle::straight
                                                    : ChordStyle::geodesic;
        ropts.size_px = cfg.svg_size;
        if (cfg.svg_components) {
            const PinchResult res = pinch(cfg.q, cfg.depth, lam.chords, true);
            write_file(cfg.svg_path, render_svg(lam, &res, ropts));
        } else {
            write_file(cfg.svg_path, render_svg(lam, nullptr, ropts));
        }
    }
    return 0;
}

int cmd_trees(const Config& cfg) {
    using namespace taut::treepoly;
    const taut::CensusTable table = census_trees(cfg.q, cfg.depth);
    std::string text;
    if (cfg.format == "json") {
        text = taut::census_json(table) + "\n";
    } else if (cfg.format == "table") {
        text = taut::census_row_text(table) + "\n";
    } else {
        text = std::string(taut::census_csv_header()) + "\n" +
               taut::census_csv_rows(table);
    }
    write_output(cfg, text);
    if (!cfg.dot_path.empty())
        write_file(cfg.dot_path,
                   tautological_tree_dot(cfg.q, cfg.depth, cfg.tree_budget));
    return 0;
}

int cmd_census(const Config& cfg) {
    using namespace taut::census;
    EngineSet engines{false, false, false};
    std::stringstream ss(cfg.engines);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "lam" || item == "lamination")
            engines.lamination = true;
        else if (item == "trees")
            engines.trees = true;
        else if (item == "words")
            engines.words = true;
        else
            throw taut::InvalidInput("unknown engine: " + item);
    }
    std::optional<FaultInjection> fault;
    if (!cfg.fault_cell.empty()) {
        FaultInjection f;
        if (std::sscanf(cfg.fault_cell.c_str(), "%d,%d", &f.n, &f.m) != 2)
            throw taut::InvalidInput("--fault-cell expects \"n,m\"");
        fault = f;
    }

    const ReconciliationReport rep =
        reconcile(cfg.q, cfg.depth, engines, cfg.shards, fault);
    std::cerr << "engine seconds: lamination=" << rep.lamination_seconds
              << " trees=" << rep.trees_seconds
              << " words=" << rep.words_seconds << '\n';

    std::string text;
    if (cfg.format == "json")
        text = report_json(rep) + "\n";
    else if (cfg.format == "table")
        text = report_text(rep);
    else
        text = report_csv(rep);
    write_output(cfg, text);

    if (rep.consistent()) return 0;
    report_error(cfg, "mismatch",
                 "census engines disagree or checks failed (" +
                     std::to_string(rep.mismatches.size()) + " mismatches, " +
                     std::to_string(rep.failed_checks.size()) +
                     " failed checks)");
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact census of tautological laminations"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "degree (alphabet size)")
            ->envname("TAUT_Q")
            ->check(CLI::Range(2, 64));
        sub->add_option("--format", cfg.format, "csv|json|table")
            ->envname("TAUT_FORMAT")
            ->check(CLI::IsMember({"csv", "json", "table"}));
        sub->add_option("--out", cfg.out_path, "write output to a file");
        sub->add_option("--shards", cfg.shards,
                        "data-parallel shards (never changes output bytes)")
            ->envname("TAUT_SHARDS")
            ->check(CLI::Range(1, 256));
    };

    CLI::App* words = app.add_subcommand("words", "count (1-)unbordered words");
    add_common(words);
    words->add_option("--max-n", cfg.max_n, "largest word length")
        ->required()
        ->check(CLI::Range(0, 1 << 20));
    words->add_option("--kind", cfg.kind, "unbordered|one-unbordered")
        ->check(CLI::IsMember({"unbordered", "one-unbordered"}));
    words->add_option("--method", cfg.method, "brute|recursion|closed-form")
        ->check(CLI::IsMember({"brute", "recursion", "closed-form"}));
    words->add_flag("--check", cfg.check, "cross-validate all methods");
    words->add_option("--word-budget", cfg.word_budget,
                      "cap on exhaustive enumeration")
        ->envname("TAUT_WORD_BUDGET");

    CLI::App* lam = app.add_subcommand("lam", "lamination census and figures");
    add_common(lam);
    lam->add_option("--depth", cfg.depth, "lamination depth n")
        ->required()
        ->check(CLI::Range(0, 64));
    lam->add_option("--svg", cfg.svg_path, "write an SVG figure here");
    lam->add_flag("--svg-components", cfg.svg_components,
                  "tint circle arcs by pinched component");
    lam->add_option("--chord-style", cfg.chord_style, "geodesic|straight")
        ->check(CLI::IsMember({"geodesic", "straight"}));
    lam->add_option("--svg-size", cfg.svg_size, "figure size in pixels")
        ->check(CLI::Range(64, 8192));
    lam->add_option("--chord-cap", cfg.chord_cap,
                    "cap on materialized chords")
        ->envname("TAUT_CHORD_CAP");

    CLI::App* trees = app.add_subcommand("trees", "tree census and exports");
    add_common(trees);
    trees->add_option("--depth", cfg.depth, "census row n / export depth")
        ->required()
        ->check(CLI::Range(0, 64));
    trees->add_option("--dot", cfg.dot_path,
                      "write the extension tree as Graphviz DOT");
    trees->add_option("--tree-budget", cfg.tree_budget,
                      "cap on enumerated trees")
        ->envname("TAUT_TREE_BUDGET");

    CLI::App* cen = app.add_subcommand("census", "reconcile the engines");
    add_common(cen);
    cen->add_option("--depth", cfg.depth, "largest n")
        ->required()
        ->check(CLI::Range(0, 64));
    cen->add_option("--engines", cfg.engines,
                    "comma list of lam,trees,words");
    cen->add_option("--fault-cell", cfg.fault_cell,
                    "test hook: corrupt lamination cell \"n,m\"")
        ->envname("TAUT_FAULT_CELL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(words)) return cmd_words(cfg);
        if (app.got_subcommand(lam)) return cmd_lam(cfg);
        if (app.got_subcommand(trees)) return cmd_trees(cfg);
        if (app.got_subcommand(cen)) return cmd_census(cfg);
    } catch (const taut::Error& e) {
        report_error(cfg, error_kind(e), e.what());
        return 1;
    } catch (const std::exception& e) {
        report_error(cfg, "error", e.what());
        return 1;
    }
    return 0;
}
