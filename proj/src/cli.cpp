#include "wimax_il/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wimax_il/burst.hpp"
#include "wimax_il/config.hpp"
#include "wimax_il/cost_model.hpp"
#include "wimax_il/errors.hpp"
#include "wimax_il/incremental_generator.hpp"
#include "wimax_il/io.hpp"
#include "wimax_il/permutation.hpp"

namespace wimax_il::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct ConfigOptions {
    std::optional<std::int64_t> ncbps;
    std::int64_t d = kDefaultColumns;
    std::optional<std::int64_t> s;
    std::string preset;
    std::string triple;
    std::string json_path;

    void attach(CLI::App& cmd) {
        cmd.add_option("--ncbps", ncbps, "Coded bits per OFDM symbol");
        cmd.add_option("--d", d, "Column count (12 or 16)")->capture_default_str();
        cmd.add_option("--s", s, "Significance parameter (1, 2 or 3)");
        cmd.add_option("--preset", preset, "qpsk (192,16,1) | qam16 (384,16,2) | qam64 (576,16,3)");
        cmd.add_option("--config", triple, "Config as 'Ncbps,d,s'");
        cmd.add_option("--config-json", json_path, "Config as a JSON file {\"ncbps\":..,\"d\":..,\"s\":..}");
    }

    bool given() const { return ncbps || s || !preset.empty() || !triple.empty() || !json_path.empty(); }

    InterleaverConfig resolve() const {
        const int sources = (ncbps || s ? 1 : 0) + !preset.empty() + !triple.empty() + !json_path.empty();
        if (sources == 0) throw UsageError("no configuration given (use --ncbps/--s, --preset or --config)");
        if (sources > 1) throw UsageError("give exactly one of --ncbps/--d/--s, --preset, --config, --config-json");
        if (!preset.empty()) {
            const auto scheme = parse_modulation(preset);
            if (!scheme) throw UsageError("unknown preset '" + preset + "'");
            return wimax_il::preset(*scheme);
        }
        if (!triple.empty()) return parse_triple(triple);
        if (!json_path.empty()) {
            std::ifstream in(json_path);
            if (!in) throw UsageError("cannot read " + json_path);
            std::stringstream ss;
            ss << in.rdbuf();
            return parse_config_json(ss.str());
        }
        if (!ncbps || !s) throw UsageError("--ncbps and --s are both required");
        return validate_config(*ncbps, d, *s);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out, CommandOutcome& outcome) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << content) || !f.flush()) throw UsageError("cannot write " + path);
    outcome.artifacts.push_back(path);
}

CommandOutcome finish(int code, const std::string& summary, std::ostream& os, CommandOutcome outcome = {}) {
    outcome.exit_code = code;
    outcome.summary = summary;
    if (!summary.empty()) os << summary << "\n";
    return outcome;
}

// --- gen ---------------------------------------------------------------

struct GenOptions {
    ConfigOptions cfg;
    std::string dir = "deinterleave";
    std::string engine = "reference";
    std::string format = "csv";
    std::string out;
};

CommandOutcome cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    const InterleaverConfig cfg = o.cfg.resolve();
    const Direction dir = parse_direction(o.dir);
    // The generator produces the deinterleave order; the interleave table is
    // its inverse.
    const AddressTable table = o.engine == "reference"     ? build_table(cfg, dir)
                               : dir == Direction::Deinterleave ? run(cfg)
                                                                : invert_table(run(cfg));
    const std::string text = o.format == "json" ? serialize_table_json(table) : serialize_table_csv(table);
    CommandOutcome outcome;
    write_output(o.out, text, out, outcome);
    if (o.out.empty() || o.out == "-") return finish(kSuccess, "", err, outcome);
    return finish(kSuccess,
                  "wrote " + std::string(to_string(dir)) + " table " + to_triple(cfg) + " (" + o.engine +
                      " engine) to " + o.out,
                  out, outcome);
}

// --- verify ------------------------------------------------------------

struct VerifyOptions {
    ConfigOptions cfg;
    bool all_presets = false;
    std::string table_path;
};

struct ConfigVerdict {
    InterleaverConfig cfg;
    bool bijective = false;
    std::uint32_t inverse_passed = 0;
    bool inverse_table = false;
    bool oracle = false;
    bool census = false;

    bool ok() const { return bijective && inverse_passed == cfg.n_cbps() && inverse_table && oracle && census; }
};

ConfigVerdict verify_config(const InterleaverConfig& cfg) {
    ConfigVerdict v{cfg};
    const AddressTable il = build_table(cfg, Direction::Interleave);
    const AddressTable dil = build_table(cfg, Direction::Deinterleave);
    v.bijective = is_permutation(il.map) && is_permutation(dil.map);
    for (Index k = 0; k < cfg.n_cbps(); ++k) {
        if (deinterleave_index(cfg, interleave_index(cfg, k)) == k) ++v.inverse_passed;
    }
    v.inverse_table = v.bijective && invert_table(il) == dil;
    const RunTrace trace = run_with_census(cfg);
    v.oracle = trace.table == dil;
    v.census = trace.census.div == 0 && trace.census.mul == 0 && trace.census.floor == 0;
    return v;
}

std::string pass(bool ok) {
    return ok ? "pass" : "FAIL";
}

CommandOutcome verify_table_file(const std::string& path, std::ostream& out) {
    const std::string text = read_file(path);
    std::optional<AddressTable> parsed;
    try {
        const auto first = text.find_first_not_of(" \t\r\n");
        parsed = first != std::string::npos && text[first] == '{' ? parse_table_json(text) : parse_table_csv(text);
    } catch (const Error& e) {
        return finish(kVerificationFailed, "table " + path + ": corrupt (" + e.what() + ")", out);
    }
    const AddressTable& table = *parsed;
    const bool perm = is_permutation(table.map);
    const AddressTable ref = build_table(table.config, table.direction);
    std::uint32_t matches = 0;
    for (std::size_t i = 0; i < table.map.size(); ++i) matches += table.map[i] == ref.map[i];
    out << "table " << path << ": config " << to_triple(table.config) << " " << to_string(table.direction) << "\n";
    out << "  permutation: " << pass(perm) << "\n";
    out << "  reference match: " << matches << "/" << table.map.size() << " " << pass(matches == table.map.size())
        << "\n";
    const bool ok = perm && matches == table.map.size();
    return finish(ok ? kSuccess : kVerificationFailed, ok ? "verify: all checks passed" : "verify: FAILED", out);
}

CommandOutcome cmd_verify(const VerifyOptions& o, std::ostream& out) {
    if (!o.table_path.empty()) {
        if (o.all_presets || o.cfg.given()) throw UsageError("--table cannot be combined with a configuration");
        return verify_table_file(o.table_path, out);
    }
    std::vector<InterleaverConfig> configs;
    if (o.all_presets) {
        if (o.cfg.given()) throw UsageError("--all-presets cannot be combined with a configuration");
        for (const auto& p : all_presets()) configs.push_back(p);
        configs.push_back(validate_config(32, 16, 1));
    } else {
        configs.push_back(o.cfg.resolve());
    }

    std::vector<std::future<ConfigVerdict>> jobs;
    for (const auto& cfg : configs) jobs.push_back(std::async(std::launch::async, verify_config, cfg));
    bool all_ok = true;
    out << "config        bijective  inverse          inverse-table  oracle  census\n";
    for (auto& job : jobs) {
        const ConfigVerdict v = job.get();
        all_ok = all_ok && v.ok();
        std::ostringstream row;
        row << std::left << std::setw(14) << to_triple(v.cfg) << std::setw(11) << pass(v.bijective)
            << std::setw(17)
            << (std::to_string(v.inverse_passed) + "/" + std::to_string(v.cfg.n_cbps()) + " " +
                pass(v.inverse_passed == v.cfg.n_cbps()))
            << std::setw(15) << pass(v.inverse_table) << std::setw(8) << pass(v.oracle) << pass(v.census);
        out << row.str() << "\n";
        out << "  " << v.inverse_passed << "/" << v.cfg.n_cbps() << " inverse checks passed\n";
    }
    return finish(all_ok ? kSuccess : kVerificationFailed,
                  all_ok ? "verify: all checks passed" : "verify: FAILED", out);
}

// --- burst -------------------------------------------------------------

struct BurstOptions {
    ConfigOptions cfg;
    std::optional<std::int64_t> b;
    std::optional<std::int64_t> sweep_max;
    std::string format = "csv";
    std::string out;
};

CommandOutcome cmd_burst(const BurstOptions& o, std::ostream& out) {
    const InterleaverConfig cfg = o.cfg.resolve();
    if (o.b.has_value() == o.sweep_max.has_value()) throw UsageError("give exactly one of --b or --sweep-max");
    const std::int64_t hi = o.b ? *o.b : *o.sweep_max;
    if (hi < 1 || hi > cfg.n_cbps()) {
        throw UsageError("burst length must lie in [1, " + std::to_string(cfg.n_cbps()) + "], got " +
                         std::to_string(hi));
    }
    const std::int64_t lo = o.b ? *o.b : 1;

    bool guarantee_ok = true;
    std::string artifact;
    std::ostringstream summary;
    for (std::int64_t b = lo; b <= hi; ++b) {
        const BurstSweep sweep = burst_sweep(cfg, static_cast<std::uint32_t>(b));
        const bool guaranteed = dispersal_guaranteed(cfg, sweep.burst_length);
        if (guaranteed && sweep.worst_max_run_length != 1) guarantee_ok = false;
        summary << "b=" << b << " worst-case run " << sweep.worst_max_run_length << " over "
                << sweep.reports.size() << " starts; rs_correctable(all)="
                << (sweep.all_rs_correctable ? "yes" : "no") << "; s=1 dispersal guarantee: "
                << (guaranteed ? (sweep.worst_max_run_length == 1 ? "holds" : "VIOLATED") : "n/a") << "\n";
        if (o.format == "json") {
            artifact += burst_json(sweep);
        } else if (o.format == "csv") {
            artifact += burst_csv(sweep);
        }
    }
    CommandOutcome outcome;
    if (!o.out.empty()) {
        write_output(o.out, artifact, out, outcome);
    } else if (o.format != "summary") {
        out << artifact;
    }
    out << summary.str();
    return finish(guarantee_ok ? kSuccess : kVerificationFailed,
                  guarantee_ok ? "burst: done" : "burst: dispersal guarantee violated", out, outcome);
}

// --- tradeoff ----------------------------------------------------------

struct TradeoffOptions {
    ConfigOptions cfg;
    std::string out;
};

CommandOutcome cmd_tradeoff(const TradeoffOptions& o, std::ostream& out) {
    const InterleaverConfig cfg = o.cfg.given() ? o.cfg.resolve() : preset(ModulationScheme::QPSK);
    const TradeoffReport rep = compare_variants(cfg, CostModelParams::from_env());
    CommandOutcome outcome;
    if (!o.out.empty()) write_output(o.out, tradeoff_json(rep), out, outcome);
    out << tradeoff_text(rep);
    bool ok = rep.speed.critical_path_depth < rep.area.critical_path_depth &&
              rep.speed.register_count == rep.area.register_count + 1;
    for (const auto& row : recompute_table6(rep.paper)) ok = ok && row.within(kTable6Tolerance);
    return finish(ok ? kSuccess : kVerificationFailed, ok ? "tradeoff: all checks passed" : "tradeoff: FAILED", out,
                  outcome);
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"WiMAX channel interleaver/deinterleaver address tables, burst and trade-off analysis",
                 args.empty() ? "wimax-il" : args.front()};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write an address table");
    gen.cfg.attach(*gen_cmd);
    gen_cmd->add_option("--dir", gen.dir, "interleave | deinterleave")
        ->check(CLI::IsMember({"interleave", "deinterleave"}))
        ->capture_default_str();
    gen_cmd->add_option("--engine", gen.engine, "reference | incremental")
        ->check(CLI::IsMember({"reference", "incremental"}))
        ->capture_default_str();
    gen_cmd->add_option("--format", gen.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    gen_cmd->add_option("--out,-o", gen.out, "Output path (default: stdout)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check bijectivity, mutual inverse and engine equivalence");
    verify.cfg.attach(*verify_cmd);
    verify_cmd->add_flag("--all-presets", verify.all_presets, "Verify every shipped preset and (32,16,1)");
    verify_cmd->add_option("--table", verify.table_path, "Verify a table file against the reference");

    BurstOptions burst;
    auto* burst_cmd = app.add_subcommand("burst", "Sweep burst errors through the deinterleaver");
    burst.cfg.attach(*burst_cmd);
    burst_cmd->add_option("--b", burst.b, "Burst length");
    burst_cmd->add_option("--sweep-max", burst.sweep_max, "Sweep burst lengths 1..N");
    burst_cmd->add_option("--format", burst.format, "csv | json | summary")
        ->check(CLI::IsMember({"csv", "json", "summary"}))
        ->capture_default_str();
    burst_cmd->add_option("--out,-o", burst.out, "Report path (default: stdout)");

    TradeoffOptions tradeoff;
    auto* tradeoff_cmd = app.add_subcommand("tradeoff", "Area vs speed datapath model and published figures");
    tradeoff.cfg.attach(*tradeoff_cmd);
    tradeoff_cmd->add_option("--out,-o", tradeoff.out, "Write the JSON report here");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {kSuccess, "help", {}};
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return {kSuccess, "help", {}};
    } catch (const CLI::ParseError& e) {
        return finish(kUsageError, std::string("usage error: ") + e.what(), err);
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify, out);
        if (burst_cmd->parsed()) return cmd_burst(burst, out);
        return cmd_tradeoff(tradeoff, out);
    } catch (const Error& e) {
        return finish(kUsageError, std::string("error: ") + e.what(), err);
    }
}

}  // namespace wimax_il::cli
