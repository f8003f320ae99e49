#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wimax_il/config.hpp"

namespace wimax_il {

enum class NodeKind { Register, Adder, Subtractor, Comparator, Mux, Constant };

std::string_view to_string(NodeKind kind);
bool is_combinational(NodeKind kind);

enum class Variant { Area, Speed };

std::string_view to_string(Variant v);

struct DatapathNode {
    std::string name;
    NodeKind kind;
    std::uint32_t stage = 0;
};

/// Structural model of the address generator. Edges are data (or select /
/// clock-enable) dependencies; registers and constants are the sources.
class DatapathGraph {
public:
    DatapathGraph() = default;
    explicit DatapathGraph(std::uint32_t width_bits) : width_bits_(width_bits) {}

    std::size_t add_node(std::string name, NodeKind kind, std::uint32_t stage = 0);
    void connect(std::size_t from, std::size_t to);
    /// Convenience: connect every node in `from` to `to`.
    void connect(std::initializer_list<std::size_t> from, std::size_t to);

    std::optional<std::size_t> find(std::string_view name) const;

    const std::vector<DatapathNode>& nodes() const { return nodes_; }
    const std::vector<std::vector<std::size_t>>& fanout() const { return fanout_; }
    std::size_t edge_count() const;
    std::uint32_t width_bits() const { return width_bits_; }

private:
    std::uint32_t width_bits_ = 1;
    std::vector<DatapathNode> nodes_;
    std::vector<std::vector<std::size_t>> fanout_;
};

/// ceil(log2(Ncbps * d)).
std::uint32_t datapath_width(const InterleaverConfig& cfg);

DatapathGraph build_datapath(const InterleaverConfig& cfg, Variant variant);

struct CostModelParams {
    double unit_delay_ns = 1.0;

    /// Default parameters, with unit_delay_ns taken from
    /// WIMAX_IL_UNIT_DELAY_NS when it is set to a positive number.
    static CostModelParams from_env();
};

struct CostReport {
    std::uint32_t register_count = 0;
    std::uint32_t adder_count = 0;
    std::uint32_t subtractor_count = 0;
    std::uint32_t comparator_count = 0;
    std::uint32_t mux_count = 0;
    std::uint32_t constant_count = 0;
    double lut_equiv = 0;
    std::uint32_t critical_path_depth = 0;
    double fmax_proxy_mhz = 0;

    friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// Throws CyclicGraph on a combinational loop and InvalidGraph when a
/// combinational node has no path from a register or constant.
CostReport estimate_cost(const DatapathGraph& g, const CostModelParams& params = {});

/// Percentage differences, speed relative to area.
struct TradeoffDeltas {
    double fmax_pct = 0;
    double register_pct = 0;
    double lut_equiv_pct = 0;
    double critical_path_pct = 0;
};

struct TradeoffReport {
    InterleaverConfig config;
    CostModelParams params;
    CostReport area;
    CostReport speed;
    TradeoffDeltas deltas;
    PaperReference paper;
    /// Published fmax gap of the speed design over the area design, in %.
    double paper_fmax_gap_pct = 0;
};

TradeoffReport compare_variants(const InterleaverConfig& cfg, const CostModelParams& params = {});

struct Table6Row {
    std::string resource;
    double ours;
    double theirs;
    double recomputed_pct;
    double printed_pct;

    bool within(double tol) const;
};

/// 100 * (ours - theirs) / theirs for slices, flip-flops, LUTs and frequency.
std::vector<Table6Row> recompute_table6(const PaperReference& ref);

inline constexpr double kTable6Tolerance = 0.1;

}  // namespace wimax_il
