#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wimax_il {

using Index = std::uint32_t;

enum class ModulationScheme { QPSK, QAM16, QAM64 };

/// Constellation significance parameter: 1, 2 or 3.
std::uint32_t s_of(ModulationScheme scheme);

std::string_view to_string(ModulationScheme scheme);
std::optional<ModulationScheme> parse_modulation(std::string_view name);

/// A validated (Ncbps, d, s) triple. Only validate_config() can build one,
/// so holding an InterleaverConfig means every invariant has been checked:
///   d in {12, 16}, s in {1, 2, 3}, d | Ncbps, s | Ncbps/d, Ncbps >= 2d.
class InterleaverConfig {
public:
    std::uint32_t n_cbps() const { return n_cbps_; }
    std::uint32_t d() const { return d_; }
    std::uint32_t s() const { return s_; }
    /// Ncbps / d, the number of rows of the block.
    std::uint32_t rows() const { return n_cbps_ / d_; }

    friend bool operator==(const InterleaverConfig&, const InterleaverConfig&) = default;

private:
    InterleaverConfig(std::uint32_t n, std::uint32_t d, std::uint32_t s) : n_cbps_(n), d_(d), s_(s) {}
    friend InterleaverConfig validate_config(std::int64_t, std::int64_t, std::int64_t);

    std::uint32_t n_cbps_;
    std::uint32_t d_;
    std::uint32_t s_;
};

inline constexpr std::uint32_t kDefaultColumns = 16;

/// Throws RangeError or DivisibilityError when the triple is not admissible.
InterleaverConfig validate_config(std::int64_t n_cbps, std::int64_t d, std::int64_t s);

/// Shipped presets: 192 (QPSK), 384 (16-QAM), 576 (64-QAM), all with d = 16.
InterleaverConfig preset(ModulationScheme scheme);
std::array<InterleaverConfig, 3> all_presets();

// "Ncbps,d,s" text form.
std::string to_triple(const InterleaverConfig& cfg);
InterleaverConfig parse_triple(std::string_view text);

// {"ncbps": N, "d": d, "s": s} JSON form.
std::string to_json(const InterleaverConfig& cfg);
InterleaverConfig parse_config_json(std::string_view text);

/// Published figures carried verbatim. Nothing here is ever computed.
struct PaperReference {
    // Area- and speed-optimised synthesis of the generator.
    double area_fmax_mhz = 107.41;
    double speed_fmax_mhz = 130.2;
    double power_mw = 56;
    int area_ff = 15;
    int speed_ff = 16;
    int area_lut = 116;
    int speed_lut = 120;
    int slices = 65;
    int available_slices = 3584;
    int available_ff = 7168;
    int available_lut = 7168;
    int bonded_iobs = 27;
    int mult18x18 = 1;
    int gclks = 1;

    // Published comparison: speed-optimised design vs Upadhyaya & Sanyal and a
    // LUT-based generator. Utilisation in %, frequency in MHz.
    double table6_speed_slices_pct = 1.0;
    double table6_speed_ff_pct = 0.153;
    double table6_speed_lut_pct = 1.0;
    double table6_speed_fmax_mhz = 130.24;
    double table6_upadhyaya_slices_pct = 3.49;
    double table6_upadhyaya_ff_pct = 0.50;
    double table6_upadhyaya_lut_pct = 3.35;
    double table6_upadhyaya_fmax_mhz = 121.82;
    double table6_lut_slices_pct = 17.66;
    double table6_lut_ff_pct = 0.78;
    double table6_lut_lut_pct = 17.75;
    double table6_lut_fmax_mhz = 62.51;
    double table6_printed_slices_pct = -71.34;
    double table6_printed_ff_pct = -69.4;
    double table6_printed_lut_pct = -70.14;
    double table6_printed_fmax_pct = 6.9;

    /// Reed-Solomon run length the receiver is assumed to correct, in bits.
    int rs_correctable_run_bits = 8;

    // Synthesis target, metadata only.
    std::string_view device_family = "Spartan 3";
    std::string_view device = "XC3S400";
    std::string_view package = "PQ208";
    std::string_view speed_grade = "-5";
};

const PaperReference& paper_reference();

}  // namespace wimax_il
