#include "wimax_il/io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wimax_il/errors.hpp"

namespace wimax_il {

using nlohmann::ordered_json;

namespace {

constexpr std::string_view kTableTitle = "# wimax-il address table";
constexpr std::string_view kConvention = "scatter: output[address] = input[index]";

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            throw ParseError("table file must end with a newline");
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::string_view expect_prefix(std::string_view line, std::string_view prefix, std::size_t lineno) {
    if (line.substr(0, prefix.size()) != prefix) {
        throw ParseError("line " + std::to_string(lineno) + ": expected '" + std::string(prefix) + "...'");
    }
    return line.substr(prefix.size());
}

std::uint32_t parse_uint(std::string_view field, std::size_t lineno) {
    std::uint32_t v = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("line " + std::to_string(lineno) + ": '" + std::string(field) + "' is not an unsigned integer");
    }
    return v;
}

ordered_json config_json(const InterleaverConfig& cfg) {
    return ordered_json{{"ncbps", cfg.n_cbps()}, {"d", cfg.d()}, {"s", cfg.s()}};
}

std::string fixed(double v, int prec = 2) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(prec) << v;
    return os.str();
}

// Shortest round-trippable form for the published constants (107.41, 130.2).
std::string shortest(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

std::string serialize_table_csv(const AddressTable& table) {
    std::string out;
    out.reserve(table.map.size() * 10 + 160);
    out += kTableTitle;
    out += "\n# version=" + std::to_string(kTableFormatVersion) + "\n";
    out += "# config=" + to_triple(table.config) + "\n";
    out += "# direction=" + std::string(to_string(table.direction)) + "\n";
    out += "# convention=" + std::string(kConvention) + "\n";
    out += "index,address\n";
    for (std::size_t i = 0; i < table.map.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(table.map[i]);
        out += '\n';
    }
    return out;
}

AddressTable parse_table_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.size() < 6) throw ParseError("table file is truncated");
    if (lines[0] != kTableTitle) throw ParseError("line 1: not a wimax-il address table");
    const auto version = parse_uint(expect_prefix(lines[1], "# version=", 2), 2);
    if (version != kTableFormatVersion) {
        throw ParseError("unsupported table format version " + std::to_string(version));
    }
    InterleaverConfig cfg = [&] {
        try {
            return parse_triple(expect_prefix(lines[2], "# config=", 3));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(std::string("line 3: ") + e.what());
        }
    }();
    const Direction dir = parse_direction(expect_prefix(lines[3], "# direction=", 4));
    if (expect_prefix(lines[4], "# convention=", 5) != kConvention) {
        throw ParseError("line 5: unknown convention");
    }
    if (lines[5] != "index,address") throw ParseError("line 6: expected column header 'index,address'");

    const std::size_t rows = lines.size() - 6;
    if (rows != cfg.n_cbps()) {
        throw ParseError("table has " + std::to_string(rows) + " rows, config needs " + std::to_string(cfg.n_cbps()));
    }
    AddressTable t{cfg, dir, std::vector<Index>(rows)};
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t lineno = i + 7;
        const auto line = lines[i + 6];
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) throw ParseError("line " + std::to_string(lineno) + ": missing comma");
        if (parse_uint(line.substr(0, comma), lineno) != i) {
            throw ParseError("line " + std::to_string(lineno) + ": rows must be in index order");
        }
        t.map[i] = parse_uint(line.substr(comma + 1), lineno);
    }
    // Anything the canonical writer would not emit (leading zeros, '+', ...)
    // is rejected so that parse/serialize is byte-identical.
    if (serialize_table_csv(t) != text) throw ParseError("table file is not in canonical form");
    return t;
}

std::string serialize_table_json(const AddressTable& table) {
    ordered_json j;
    j["format"] = "wimax-il-table";
    j["version"] = kTableFormatVersion;
    j["config"] = config_json(table.config);
    j["direction"] = to_string(table.direction);
    j["convention"] = kConvention;
    j["map"] = table.map;
    return j.dump(2) + "\n";
}

AddressTable parse_table_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("format") != "wimax-il-table" || j.at("version") != kTableFormatVersion) {
            throw ParseError("not a version " + std::to_string(kTableFormatVersion) + " wimax-il table");
        }
        const auto& c = j.at("config");
        const InterleaverConfig cfg = validate_config(c.at("ncbps").get<std::int64_t>(), c.at("d").get<std::int64_t>(),
                                                      c.at("s").get<std::int64_t>());
        AddressTable t{cfg, parse_direction(j.at("direction").get<std::string>()),
                       j.at("map").get<std::vector<Index>>()};
        if (t.map.size() != cfg.n_cbps()) {
            throw ParseError("table has " + std::to_string(t.map.size()) + " entries, config needs " +
                             std::to_string(cfg.n_cbps()));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("table JSON: ") + e.what());
    }
}

std::string burst_csv(const BurstSweep& sweep) {
    std::string out;
    out += "# config=" + to_triple(sweep.config) + "\n";
    out += "# worst_max_run=" + std::to_string(sweep.worst_max_run_length) + "\n";
    out += "start,b,max_run,min_spacing,rs_correctable\n";
    for (const auto& r : sweep.reports) {
        out += std::to_string(r.start_position) + "," + std::to_string(r.burst_length) + "," +
               std::to_string(r.max_run_length) + "," + std::to_string(r.min_pairwise_spacing) + "," +
               (r.rs_correctable ? "1" : "0") + "\n";
    }
    return out;
}

std::string burst_json(const BurstSweep& sweep) {
    ordered_json j;
    j["config"] = config_json(sweep.config);
    j["burst_length"] = sweep.burst_length;
    j["worst_max_run_length"] = sweep.worst_max_run_length;
    j["all_rs_correctable"] = sweep.all_rs_correctable;
    j["dispersal_guaranteed"] = dispersal_guaranteed(sweep.config, sweep.burst_length);
    j["rs_criterion"] = "at most " + std::to_string(paper_reference().rs_correctable_run_bits) +
                        " consecutive bit errors (simplification of symbol-level Reed-Solomon correction)";
    ordered_json reports = ordered_json::array();
    for (const auto& r : sweep.reports) {
        reports.push_back({{"start", r.start_position},
                           {"b", r.burst_length},
                           {"max_run", r.max_run_length},
                           {"min_spacing", r.min_pairwise_spacing},
                           {"rs_correctable", r.rs_correctable},
                           {"positions", r.post_deinterleave_positions}});
    }
    j["reports"] = std::move(reports);
    return j.dump(2) + "\n";
}

namespace {

ordered_json cost_json(const CostReport& c) {
    return {{"register_count", c.register_count},
            {"adder_count", c.adder_count},
            {"subtractor_count", c.subtractor_count},
            {"comparator_count", c.comparator_count},
            {"mux_count", c.mux_count},
            {"constant_count", c.constant_count},
            {"lut_equiv", c.lut_equiv},
            {"critical_path_depth", c.critical_path_depth},
            {"fmax_proxy_mhz", c.fmax_proxy_mhz}};
}

constexpr std::string_view kFlipFlopNote =
    "published comparison lists flip-flops at 0.153% although 16/7168 = 0.223%; kept as printed";

}  // namespace

std::string tradeoff_json(const TradeoffReport& rep) {
    const PaperReference& p = rep.paper;
    ordered_json j;
    j["config"] = config_json(rep.config);

    ordered_json model;
    model["label"] = "structural estimate from the modelled datapath, not synthesis output";
    model["width_bits"] = datapath_width(rep.config);
    model["unit_delay_ns"] = rep.params.unit_delay_ns;
    model["area"] = cost_json(rep.area);
    model["speed"] = cost_json(rep.speed);
    model["deltas_pct"] = {{"fmax", rep.deltas.fmax_pct},
                           {"registers", rep.deltas.register_pct},
                           {"lut_equiv", rep.deltas.lut_equiv_pct},
                           {"critical_path", rep.deltas.critical_path_pct}};
    model["ordering"] = {
        {"speed_critical_path_shorter", rep.speed.critical_path_depth < rep.area.critical_path_depth},
        {"speed_registers_area_plus_one", rep.speed.register_count == rep.area.register_count + 1}};
    j["model"] = std::move(model);

    ordered_json paper;
    paper["label"] = "published synthesis results, carried verbatim";
    paper["area"] = {{"fmax_mhz", p.area_fmax_mhz}, {"flip_flops", p.area_ff}, {"luts", p.area_lut},
                     {"slices", p.slices},          {"power_mw", p.power_mw}};
    paper["speed"] = {{"fmax_mhz", p.speed_fmax_mhz}, {"flip_flops", p.speed_ff}, {"luts", p.speed_lut},
                      {"slices", p.slices},           {"power_mw", p.power_mw}};
    paper["fmax_gap_pct"] = rep.paper_fmax_gap_pct;
    paper["device"] = {{"family", p.device_family}, {"device", p.device}, {"package", p.package},
                       {"speed_grade", p.speed_grade}};
    paper["available"] = {{"slices", p.available_slices}, {"flip_flops", p.available_ff}, {"luts", p.available_lut}};
    paper["note"] = kFlipFlopNote;
    j["paper_reference"] = std::move(paper);

    ordered_json cmp = ordered_json::array();
    for (const auto& row : recompute_table6(p)) {
        cmp.push_back({{"resource", row.resource},
                       {"ours", row.ours},
                       {"theirs", row.theirs},
                       {"recomputed_pct", row.recomputed_pct},
                       {"printed_pct", row.printed_pct},
                       {"pass", row.within(kTable6Tolerance)}});
    }
    j["published_comparison"] = {{"tolerance", kTable6Tolerance}, {"rows", std::move(cmp)}};
    return j.dump(2) + "\n";
}

std::string tradeoff_text(const TradeoffReport& rep) {
    const PaperReference& p = rep.paper;
    std::ostringstream os;
    auto line3 = [&](std::string_view label, const std::string& a, const std::string& b) {
        os << std::left << std::setw(34) << label << std::right << std::setw(10) << a << std::setw(10) << b << "\n";
    };
    auto line4 = [&](std::string_view label, const std::string& a, const std::string& b, const std::string& c) {
        os << std::left << std::setw(34) << label << std::right << std::setw(10) << a << std::setw(10) << b
           << std::setw(11) << c << "\n";
    };
    auto u = [](auto v) { return std::to_string(v); };

    os << "Config Ncbps=" << rep.config.n_cbps() << " d=" << rep.config.d() << " s=" << rep.config.s()
       << ", datapath width " << datapath_width(rep.config) << " bits\n\n";

    os << "[model] structural estimate, not synthesis (unit delay " << fixed(rep.params.unit_delay_ns, 3)
       << " ns)\n";
    line3("Logic Utilization", "Area", "Speed");
    line3("Registers", u(rep.area.register_count), u(rep.speed.register_count));
    line3("Adders", u(rep.area.adder_count), u(rep.speed.adder_count));
    line3("Subtractors", u(rep.area.subtractor_count), u(rep.speed.subtractor_count));
    line3("Comparators", u(rep.area.comparator_count), u(rep.speed.comparator_count));
    line3("Multiplexers", u(rep.area.mux_count), u(rep.speed.mux_count));
    line3("LUT equivalents", fixed(rep.area.lut_equiv, 1), fixed(rep.speed.lut_equiv, 1));
    line3("Critical path (primitives)", u(rep.area.critical_path_depth), u(rep.speed.critical_path_depth));
    line3("Fmax proxy (MHz)", fixed(rep.area.fmax_proxy_mhz), fixed(rep.speed.fmax_proxy_mhz));
    os << "Speed vs area: fmax " << fixed(rep.deltas.fmax_pct) << "%, registers " << fixed(rep.deltas.register_pct)
       << "%, LUT equivalents " << fixed(rep.deltas.lut_equiv_pct) << "%\n";
    const bool depth_ok = rep.speed.critical_path_depth < rep.area.critical_path_depth;
    const bool regs_ok = rep.speed.register_count == rep.area.register_count + 1;
    os << "Ordering: speed depth < area depth: " << (depth_ok ? "pass" : "FAIL")
       << "; speed registers = area + 1: " << (regs_ok ? "pass" : "FAIL") << "\n\n";

    os << "[paper_reference] published synthesis results (" << p.device_family << " " << p.device << " "
       << p.package << " " << p.speed_grade << ")\n";
    line4("Logic Utilization", "Area", "Speed", "Available");
    line4("Number of Slices", u(p.slices), u(p.slices), u(p.available_slices));
    line4("Number of Slice Flip Flops", u(p.area_ff), u(p.speed_ff), u(p.available_ff));
    line4("Number of 4 input LUTs", u(p.area_lut), u(p.speed_lut), u(p.available_lut));
    line4("Number of bonded IOBs", u(p.bonded_iobs), u(p.bonded_iobs), "");
    line4("Number of MULT18X18s", u(p.mult18x18), u(p.mult18x18), "");
    line4("Number of GCLKs", u(p.gclks), u(p.gclks), "");
    line4("Max. Frequency (MHz)", shortest(p.area_fmax_mhz), shortest(p.speed_fmax_mhz), "");
    line4("Power Consumption (mW)", u(static_cast<int>(p.power_mw)), u(static_cast<int>(p.power_mw)), "");
    os << "Published fmax gap: " << fixed(rep.paper_fmax_gap_pct) << "%; model fmax gap: "
       << fixed(rep.deltas.fmax_pct) << "% (reported, not matched)\n\n";

    os << "[published_comparison] % change vs Upadhyaya & Sanyal (tolerance +/-" << fixed(kTable6Tolerance, 1)
       << ")\n";
    os << std::left << std::setw(12) << "resource" << std::right << std::setw(10) << "ours" << std::setw(10)
       << "theirs" << std::setw(12) << "recomputed" << std::setw(10) << "printed" << std::setw(8) << "check"
       << "\n";
    for (const auto& row : recompute_table6(p)) {
        os << std::left << std::setw(12) << row.resource << std::right << std::setw(10) << fixed(row.ours, 3)
           << std::setw(10) << fixed(row.theirs, 2) << std::setw(12) << fixed(row.recomputed_pct)
           << std::setw(10) << fixed(row.printed_pct) << std::setw(8) << (row.within(kTable6Tolerance) ? "pass" : "FAIL")
           << "\n";
    }
    os << "Note: " << kFlipFlopNote << "\n";
    return os.str();
}

}  // namespace wimax_il
