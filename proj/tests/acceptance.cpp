// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. All checks are exact except the published-comparison
// arithmetic, which uses the +/-0.1 tolerance.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "wimax_il/burst.hpp"
#include "wimax_il/cli.hpp"
#include "wimax_il/config.hpp"
#include "wimax_il/cost_model.hpp"
#include "wimax_il/incremental_generator.hpp"
#include "wimax_il/io.hpp"
#include "wimax_il/permutation.hpp"

using namespace wimax_il;

namespace {

const std::vector<InterleaverConfig>& acceptance_configs() {
    static const std::vector<InterleaverConfig> cfgs = {
        validate_config(32, 16, 1),  validate_config(192, 16, 1), validate_config(384, 16, 2),
        validate_config(576, 16, 3), validate_config(768, 16, 2), validate_config(1152, 16, 3),
    };
    return cfgs;
}

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

Verdict mutual_inverse() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checked = 0;
    for (const auto& cfg : acceptance_configs()) {
        for (Index k = 0; k < cfg.n_cbps(); ++k) {
            v.require(deinterleave_index(cfg, interleave_index(cfg, k)) == k,
                      to_triple(cfg) + " k=" + std::to_string(k));
            ++checked;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    if (v.ok) v.detail = std::to_string(checked) + " indices, " + std::to_string(secs * 1000.0) + " ms";
    return v;
}

Verdict bijectivity() {
    Verdict v;
    for (const auto& cfg : acceptance_configs()) {
        for (auto dir : {Direction::Interleave, Direction::Deinterleave}) {
            v.require(is_permutation(build_table(cfg, dir).map), to_triple(cfg) + " " + std::string(to_string(dir)));
        }
        v.require(is_permutation(run(cfg).map), to_triple(cfg) + " incremental");
    }
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    std::uint64_t ops = 0;
    for (const auto& cfg : acceptance_configs()) {
        const RunTrace trace = run_with_census(cfg);
        v.require(trace.table == build_table(cfg, Direction::Deinterleave), to_triple(cfg) + " table differs");
        v.require(trace.steps == cfg.n_cbps(), to_triple(cfg) + " step count");
        // Per-step census, not just the total.
        GeneratorState st = init_state(cfg);
        for (Index j = 0; j < cfg.n_cbps(); ++j) {
            const StepResult res = step(st);
            if (res.census.div != 0 || res.census.mul != 0) {
                v.require(false, to_triple(cfg) + " div/mul at j=" + std::to_string(j));
                break;
            }
            st = res.next;
        }
        ops += trace.census.total();
    }
    if (v.ok) v.detail = "div=0 mul=0, " + std::to_string(ops) + " add/sub/compare/select ops";
    return v;
}

Verdict worked_values() {
    Verdict v;
    const auto c32 = validate_config(32, 16, 1);
    const auto c384 = validate_config(384, 16, 2);
    const auto dil = build_table(c32, Direction::Deinterleave);
    v.require(std::vector<Index>(dil.map.begin(), dil.map.begin() + 4) == std::vector<Index>{0, 16, 1, 17},
              "(32,16,1) prefix");
    const auto inc = run(c32);
    v.require(std::vector<Index>(inc.map.begin(), inc.map.begin() + 4) == std::vector<Index>{0, 16, 1, 17},
              "(32,16,1) incremental prefix");
    v.require(interleave_index(c384, 1) == 25, "(384,16,2) k=1 -> 25");
    v.require(deinterleave_index(c384, 25) == 1, "(384,16,2) j=25 -> 1");
    return v;
}

Verdict burst_dispersal() {
    Verdict v;
    for (const auto& cfg : acceptance_configs()) {
        if (cfg.s() != 1) continue;
        for (std::uint32_t b = 1; b <= cfg.rows(); ++b) {
            const auto sweep = burst_sweep(cfg, b);
            v.require(sweep.worst_max_run_length == 1, to_triple(cfg) + " b=" + std::to_string(b));
        }
    }
    const auto s3 = burst_sweep(validate_config(32, 16, 1), 3);
    v.require(s3.worst_max_run_length >= 2, "(32,16,1) b=3 worst < 2");
    if (v.ok) v.detail = "(32,16,1) b=3 worst run " + std::to_string(s3.worst_max_run_length);
    return v;
}

Verdict table6_arithmetic() {
    Verdict v;
    const auto rows = recompute_table6(paper_reference());
    const double printed[] = {-71.34, -69.4, -70.14, 6.9};
    v.require(rows.size() == 4, "row count");
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
        v.require(rows[i].printed_pct == printed[i], rows[i].resource + " printed value");
        v.require(std::abs(rows[i].recomputed_pct - printed[i]) <= 0.1, rows[i].resource);
        os << rows[i].resource << " " << rows[i].recomputed_pct << " ";
    }
    if (v.ok) v.detail = os.str();
    return v;
}

Verdict tradeoff_ordering() {
    Verdict v;
    for (const auto& cfg : acceptance_configs()) {
        const auto rep = compare_variants(cfg);
        v.require(rep.speed.critical_path_depth < rep.area.critical_path_depth, to_triple(cfg) + " depth");
        v.require(rep.speed.register_count == rep.area.register_count + 1, to_triple(cfg) + " registers");
        const auto j = nlohmann::json::parse(tradeoff_json(rep));
        const auto& p = j.at("paper_reference");
        v.require(p["area"]["fmax_mhz"] == 107.41 && p["speed"]["fmax_mhz"] == 130.2, "fmax constants");
        v.require(p["area"]["flip_flops"] == 15 && p["speed"]["flip_flops"] == 16, "flip-flop constants");
        v.require(p["area"]["luts"] == 116 && p["speed"]["luts"] == 120, "LUT constants");
        v.require(p["area"]["power_mw"] == 56 && p["speed"]["power_mw"] == 56, "power constants");
    }
    return v;
}

cli::CommandOutcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "wimax-il");
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

Verdict cli_contract() {
    namespace fs = std::filesystem;
    Verdict v;
    const fs::path dir = fs::temp_directory_path() / ("wimax_il_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string table = (dir / "t.csv").string();

    auto expect = [&](int want, std::vector<std::string> args, const std::string& name) {
        v.require(invoke(std::move(args)).exit_code == want, name);
    };
    expect(0, {"gen", "--config", "384,16,2", "--dir", "interleave", "-o", table}, "gen success");
    expect(2, {"gen", "--ncbps", "100", "--d", "16", "--s", "1"}, "gen bad config");
    expect(0, {"verify", "--all-presets"}, "verify presets");
    expect(0, {"verify", "--table", table}, "verify good table");
    expect(2, {"verify"}, "verify without config");
    expect(0, {"burst", "--preset", "qpsk", "--b", "12", "--format", "summary"}, "burst success");
    expect(2, {"burst", "--preset", "qpsk", "--b", "0"}, "burst b=0");
    expect(0, {"tradeoff", "--preset", "qpsk"}, "tradeoff success");
    expect(2, {"tradeoff", "--ncbps", "100", "--s", "1"}, "tradeoff bad config");

    std::string text;
    {
        std::ifstream in(table, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto corrupt = text;
    corrupt.replace(corrupt.find("\n1,25\n"), 6, "\n1,26\n");
    std::ofstream(table, std::ios::binary | std::ios::trunc) << corrupt;
    expect(1, {"verify", "--table", table}, "verify corrupted table");
    fs::remove_all(dir);

    // Byte-identical round trip for every acceptance table, both directions.
    for (const auto& cfg : acceptance_configs()) {
        for (auto d : {Direction::Interleave, Direction::Deinterleave}) {
            const auto csv = serialize_table_csv(build_table(cfg, d));
            v.require(serialize_table_csv(parse_table_csv(csv)) == csv, to_triple(cfg) + " round trip");
        }
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"1 mutual inverse (exhaustive)", mutual_inverse},
        {"2 bijectivity", bijectivity},
        {"3 oracle equivalence + divider-free census", oracle_equivalence},
        {"4 worked values", worked_values},
        {"5 burst dispersal", burst_dispersal},
        {"6 published comparison arithmetic (+/-0.1)", table6_arithmetic},
        {"7 area/speed ordering + carried constants", tradeoff_ordering},
        {"8 CLI exit codes + byte-identical round trip", cli_contract},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.ok ? "PASS  " : "FAIL  ") << name;
        if (!v.detail.empty()) std::cout << "  [" << v.detail << "]";
        std::cout << "\n";
        failed += !v.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
