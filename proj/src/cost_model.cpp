#include "wimax_il/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "wimax_il/errors.hpp"

namespace wimax_il {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Register:
            return "register";
        case NodeKind::Adder:
            return "adder";
        case NodeKind::Subtractor:
            return "subtractor";
        case NodeKind::Comparator:
            return "comparator";
        case NodeKind::Mux:
            return "mux";
        case NodeKind::Constant:
            return "constant";
    }
    return "?";
}

bool is_combinational(NodeKind kind) {
    return kind != NodeKind::Register && kind != NodeKind::Constant;
}

std::string_view to_string(Variant v) {
    return v == Variant::Area ? "area" : "speed";
}

std::size_t DatapathGraph::add_node(std::string name, NodeKind kind, std::uint32_t stage) {
    nodes_.push_back({std::move(name), kind, stage});
    fanout_.emplace_back();
    return nodes_.size() - 1;
}

void DatapathGraph::connect(std::size_t from, std::size_t to) {
    if (from >= nodes_.size() || to >= nodes_.size()) {
        throw InvalidGraph("edge refers to a node that does not exist");
    }
    fanout_[from].push_back(to);
}

void DatapathGraph::connect(std::initializer_list<std::size_t> from, std::size_t to) {
    for (std::size_t f : from) connect(f, to);
}

std::optional<std::size_t> DatapathGraph::find(std::string_view name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].name == name) return i;
    }
    return std::nullopt;
}

std::size_t DatapathGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& f : fanout_) n += f.size();
    return n;
}

std::uint32_t datapath_width(const InterleaverConfig& cfg) {
    const std::uint64_t span = std::uint64_t{cfg.n_cbps()} * cfg.d();
    std::uint32_t bits = 0;
    while ((std::uint64_t{1} << bits) < span) ++bits;
    return bits;
}

namespace {

using K = NodeKind;

// Counter section shared by both variants: j, q mod s and the s phase. The
// enable of each register is modelled as a clock-enable edge, not a mux.
struct Counters {
    std::size_t j, q, q_mod_s, s_phase;
};

Counters add_counters(DatapathGraph& g, std::size_t c_one, std::size_t c_s, std::size_t carry,
                      std::optional<std::size_t> enable) {
    Counters c{};
    c.j = g.add_node("j", K::Register);
    c.q = g.add_node("q", K::Register);
    c.q_mod_s = g.add_node("q_mod_s", K::Register);
    c.s_phase = g.add_node("s_phase", K::Register);

    const auto j_inc = g.add_node("j_inc", K::Adder);
    g.connect({c.j, c_one}, j_inc);
    g.connect(j_inc, c.j);

    const auto q_inc = g.add_node("q_inc", K::Adder);
    g.connect({c.q, c_one}, q_inc);
    g.connect({q_inc, carry}, c.q);

    const auto qs_inc = g.add_node("q_mod_s_inc", K::Adder);
    const auto qs_cmp = g.add_node("q_mod_s_wrap", K::Comparator);
    const auto qs_mux = g.add_node("q_mod_s_mux", K::Mux);
    g.connect({c.q_mod_s, c_one}, qs_inc);
    g.connect({qs_inc, c_s}, qs_cmp);
    g.connect({qs_inc, qs_cmp}, qs_mux);
    g.connect({qs_mux, carry}, c.q_mod_s);

    const auto ph_inc = g.add_node("s_phase_inc", K::Adder);
    const auto ph_cmp = g.add_node("s_phase_wrap", K::Comparator);
    const auto ph_mux = g.add_node("s_phase_mux", K::Mux);
    g.connect({c.s_phase, c_one}, ph_inc);
    g.connect({ph_inc, c_s}, ph_cmp);
    g.connect({ph_inc, ph_cmp}, ph_mux);
    g.connect(ph_mux, c.s_phase);

    if (enable) {
        g.connect(*enable, c.j);
        g.connect({*enable}, c.q);
        g.connect({*enable}, c.q_mod_s);
        g.connect({*enable}, c.s_phase);
    }
    return c;
}

// One ALU shared round-robin by three updates, one address every three cycles:
//   slot 0: addr <- r + Re, minus (N - 1) when r + Re >= N
//   slot 1: addr <- addr + q + Pe
//   slot 2: r <- r + d (mod N), counters advance
DatapathGraph build_area(std::uint32_t width) {
    DatapathGraph g(width);
    const auto c_d = g.add_node("d", K::Constant);
    const auto c_n = g.add_node("ncbps", K::Constant);
    const auto c_n1 = g.add_node("ncbps_minus_1", K::Constant);
    const auto c_one = g.add_node("one", K::Constant);
    const auto c_s = g.add_node("s", K::Constant);
    const auto c_slots = g.add_node("slot_count", K::Constant);
    const auto c_off = g.add_node("offset_table", K::Constant);

    const auto r = g.add_node("r", K::Register);
    const auto addr = g.add_node("addr", K::Register);
    const auto slot = g.add_node("alu_slot", K::Register);

    const auto slot_inc = g.add_node("alu_slot_inc", K::Adder);
    const auto slot_cmp = g.add_node("alu_slot_wrap", K::Comparator);
    const auto slot_mux = g.add_node("alu_slot_mux", K::Mux);
    g.connect({slot, c_one}, slot_inc);
    g.connect({slot_inc, c_slots}, slot_cmp);
    g.connect({slot_inc, slot_cmp}, slot_mux);
    g.connect(slot_mux, slot);

    const auto alu_cmp = g.add_node("alu_cmp", K::Comparator);
    const Counters c = add_counters(g, c_one, c_s, alu_cmp, slot);

    const auto off_mux = g.add_node("offset_mux", K::Mux);
    g.connect({c_off, c.s_phase, c.q_mod_s}, off_mux);

    const auto opa = g.add_node("alu_operand_a", K::Mux);
    g.connect({r, addr, slot}, opa);
    const auto opb = g.add_node("alu_operand_b", K::Mux);
    g.connect({c_d, off_mux, c.q, slot}, opb);

    const auto alu_add = g.add_node("alu_add", K::Adder);
    g.connect({opa, opb, off_mux}, alu_add);
    g.connect({alu_add, c_n}, alu_cmp);

    const auto corr = g.add_node("alu_correction", K::Mux);
    g.connect({c_n, c_n1, slot}, corr);
    const auto alu_sub = g.add_node("alu_sub", K::Subtractor);
    g.connect({alu_add, corr}, alu_sub);
    const auto alu_mux = g.add_node("alu_result", K::Mux);
    g.connect({alu_add, alu_sub, alu_cmp, slot}, alu_mux);

    g.connect({alu_mux, slot}, r);
    g.connect({alu_mux, slot}, addr);
    return g;
}

// Dedicated adders, one address per cycle, with a pipeline register bank
// between the m_j stage (residue/quotient of d*m_j) and the k_j stage.
DatapathGraph build_speed(std::uint32_t width) {
    DatapathGraph g(width);
    const auto c_d = g.add_node("d", K::Constant);
    const auto c_n = g.add_node("ncbps", K::Constant);
    const auto c_one = g.add_node("one", K::Constant);
    const auto c_s = g.add_node("s", K::Constant);
    const auto c_off = g.add_node("offset_table", K::Constant);

    const auto r = g.add_node("r", K::Register);
    const auto r_add = g.add_node("r_add", K::Adder);
    const auto r_cmp = g.add_node("r_cmp", K::Comparator);
    const auto r_sub = g.add_node("r_sub", K::Subtractor);
    const auto r_mux = g.add_node("r_mux", K::Mux);
    g.connect({r, c_d}, r_add);
    g.connect({r_add, c_n}, r_cmp);
    g.connect({r_add, c_n}, r_sub);
    g.connect({r_add, r_sub, r_cmp}, r_mux);
    g.connect(r_mux, r);

    const Counters c = add_counters(g, c_one, c_s, r_cmp, std::nullopt);

    const auto off_mux = g.add_node("offset_mux", K::Mux);
    g.connect({c_off, c.s_phase, c.q_mod_s}, off_mux);

    const auto acc_add = g.add_node("acc_add", K::Adder);
    const auto acc_cmp = g.add_node("acc_cmp", K::Comparator);
    const auto acc_sub = g.add_node("acc_sub", K::Subtractor);
    const auto acc_mux = g.add_node("acc_mux", K::Mux);
    g.connect({r, off_mux}, acc_add);
    g.connect({acc_add, c_n}, acc_cmp);
    g.connect({acc_add, c_n}, acc_sub);
    g.connect({acc_add, acc_sub, acc_cmp}, acc_mux);

    const auto kq_add = g.add_node("kq_add", K::Adder);
    g.connect({c.q, off_mux, acc_cmp}, kq_add);

    const auto pipe_acc = g.add_node("pipe_acc", K::Register, 1);
    const auto pipe_kq = g.add_node("pipe_kq", K::Register, 1);
    g.connect(acc_mux, pipe_acc);
    g.connect(kq_add, pipe_kq);

    const auto k_add = g.add_node("k_add", K::Adder, 1);
    const auto addr = g.add_node("addr", K::Register, 1);
    g.connect({pipe_acc, pipe_kq}, k_add);
    g.connect(k_add, addr);
    return g;
}

}  // namespace

DatapathGraph build_datapath(const InterleaverConfig& cfg, Variant variant) {
    const std::uint32_t width = datapath_width(cfg);
    return variant == Variant::Area ? build_area(width) : build_speed(width);
}

CostModelParams CostModelParams::from_env() {
    CostModelParams p;
    if (const char* raw = std::getenv("WIMAX_IL_UNIT_DELAY_NS"); raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        const double v = std::strtod(raw, &end);
        if (end == raw || *end != '\0' || !std::isfinite(v) || v <= 0) {
            throw RangeError(std::string("WIMAX_IL_UNIT_DELAY_NS must be a positive number, got '") + raw + "'");
        }
        p.unit_delay_ns = v;
    }
    return p;
}

CostReport estimate_cost(const DatapathGraph& g, const CostModelParams& params) {
    const auto& nodes = g.nodes();
    const auto& fanout = g.fanout();
    const std::size_t n = nodes.size();

    CostReport rep;
    for (const auto& node : nodes) {
        switch (node.kind) {
            case K::Register:
                ++rep.register_count;
                break;
            case K::Adder:
                ++rep.adder_count;
                break;
            case K::Subtractor:
                ++rep.subtractor_count;
                break;
            case K::Comparator:
                ++rep.comparator_count;
                break;
            case K::Mux:
                ++rep.mux_count;
                break;
            case K::Constant:
                ++rep.constant_count;
                break;
        }
    }

    // Reachability from sequential elements and constants.
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_combinational(nodes[i].kind)) {
            reached[i] = true;
            work.push_back(i);
        }
    }
    while (!work.empty()) {
        const std::size_t u = work.back();
        work.pop_back();
        for (std::size_t v : fanout[u]) {
            if (!reached[v]) {
                reached[v] = true;
                work.push_back(v);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!reached[i]) {
            throw InvalidGraph("node '" + nodes[i].name + "' is not driven by any register or constant");
        }
    }

    // Longest combinational path via Kahn's algorithm on combinational edges.
    std::vector<std::uint32_t> indegree(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        if (!is_combinational(nodes[u].kind)) continue;
        for (std::size_t v : fanout[u]) {
            if (is_combinational(nodes[v].kind)) ++indegree[v];
        }
    }
    std::vector<std::uint32_t> depth(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        if (is_combinational(nodes[u].kind)) continue;
        for (std::size_t v : fanout[u]) {
            if (is_combinational(nodes[v].kind)) depth[v] = std::max<std::uint32_t>(depth[v], 1);
        }
    }
    std::size_t comb_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_combinational(nodes[i].kind)) continue;
        ++comb_total;
        if (indegree[i] == 0) work.push_back(i);
    }
    std::size_t visited = 0;
    std::uint32_t longest = 0;
    while (!work.empty()) {
        const std::size_t u = work.back();
        work.pop_back();
        ++visited;
        longest = std::max(longest, depth[u]);
        for (std::size_t v : fanout[u]) {
            if (!is_combinational(nodes[v].kind)) continue;
            depth[v] = std::max(depth[v], depth[u] + 1);
            if (--indegree[v] == 0) work.push_back(v);
        }
    }
    if (visited != comb_total) {
        throw CyclicGraph("combinational loop: " + std::to_string(comb_total - visited) +
                          " node(s) lie on a cycle with no register");
    }

    // A bare register-to-register wire still costs one delay unit.
    rep.critical_path_depth = n == 0 ? 0 : std::max<std::uint32_t>(longest, 1);
    const double w = g.width_bits();
    rep.lut_equiv = w * (rep.adder_count + rep.subtractor_count + rep.comparator_count) + 0.5 * w * rep.mux_count;
    rep.fmax_proxy_mhz = rep.critical_path_depth == 0 ? 0 : 1000.0 / (rep.critical_path_depth * params.unit_delay_ns);
    return rep;
}

namespace {

double pct(double ours, double theirs) {
    return 100.0 * (ours - theirs) / theirs;
}

}  // namespace

TradeoffReport compare_variants(const InterleaverConfig& cfg, const CostModelParams& params) {
    TradeoffReport rep{cfg, params, {}, {}, {}, paper_reference(), 0};
    rep.area = estimate_cost(build_datapath(cfg, Variant::Area), params);
    rep.speed = estimate_cost(build_datapath(cfg, Variant::Speed), params);
    rep.deltas.fmax_pct = pct(rep.speed.fmax_proxy_mhz, rep.area.fmax_proxy_mhz);
    rep.deltas.register_pct = pct(rep.speed.register_count, rep.area.register_count);
    rep.deltas.lut_equiv_pct = pct(rep.speed.lut_equiv, rep.area.lut_equiv);
    rep.deltas.critical_path_pct = pct(rep.speed.critical_path_depth, rep.area.critical_path_depth);
    rep.paper_fmax_gap_pct = pct(rep.paper.speed_fmax_mhz, rep.paper.area_fmax_mhz);
    return rep;
}

bool Table6Row::within(double tol) const {
    return std::abs(recomputed_pct - printed_pct) <= tol;
}

std::vector<Table6Row> recompute_table6(const PaperReference& ref) {
    auto row = [](std::string name, double ours, double theirs, double printed) {
        return Table6Row{std::move(name), ours, theirs, pct(ours, theirs), printed};
    };
    return {
        row("slices", ref.table6_speed_slices_pct, ref.table6_upadhyaya_slices_pct, ref.table6_printed_slices_pct),
        row("flip_flops", ref.table6_speed_ff_pct, ref.table6_upadhyaya_ff_pct, ref.table6_printed_ff_pct),
        row("luts", ref.table6_speed_lut_pct, ref.table6_upadhyaya_lut_pct, ref.table6_printed_lut_pct),
        row("frequency", ref.table6_speed_fmax_mhz, ref.table6_upadhyaya_fmax_mhz, ref.table6_printed_fmax_pct),
    };
}

}  // namespace wimax_il
