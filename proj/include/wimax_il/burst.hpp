#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "wimax_il/config.hpp"

namespace wimax_il {

enum class MaskDomain { Channel, Original };

/// Erroneous bit positions within one block.
struct ErrorMask {
    std::uint32_t length = 0;
    std::set<Index> positions;
    MaskDomain domain = MaskDomain::Channel;

    friend bool operator==(const ErrorMask&, const ErrorMask&) = default;
};

/// Consecutive positions {start, ..., start + b - 1}. Bursts never wrap past
/// the end of the block; those are rejected with RangeError.
ErrorMask inject_burst(std::uint32_t n, std::uint32_t start, std::uint32_t b);

/// Maps every channel position through the deinterleaver.
ErrorMask deinterleave_errors(const InterleaverConfig& cfg, const ErrorMask& mask);

std::uint32_t max_run_length(const ErrorMask& mask);

/// Smallest gap between two distinct positions; 0 when fewer than two.
std::uint32_t min_pairwise_spacing(const ErrorMask& mask);

struct BurstReport {
    std::uint32_t burst_length = 0;
    std::uint32_t start_position = 0;
    std::vector<Index> post_deinterleave_positions;
    std::uint32_t max_run_length = 0;
    std::uint32_t min_pairwise_spacing = 0;
    /// max_run_length <= 8: the consecutive-bit criterion, a simplification of
    /// the symbol-level Reed-Solomon capability.
    bool rs_correctable = false;
};

BurstReport analyse_burst(const InterleaverConfig& cfg, std::uint32_t start, std::uint32_t b);

struct BurstSweep {
    InterleaverConfig config;
    std::uint32_t burst_length = 0;
    std::vector<BurstReport> reports;  ///< one per admissible start, in order
    std::uint32_t worst_max_run_length = 0;
    bool all_rs_correctable = true;
};

/// Exhaustive sweep over every start in [0, Ncbps - b].
BurstSweep burst_sweep(const InterleaverConfig& cfg, std::uint32_t b);

/// True when s = 1 and b <= Ncbps/d, where every burst is fully dispersed.
bool dispersal_guaranteed(const InterleaverConfig& cfg, std::uint32_t b);

}  // namespace wimax_il
