#pragma once

#include <array>
#include <cstdint>

#include "wimax_il/config.hpp"
#include "wimax_il/permutation.hpp"

namespace wimax_il {

/// Operations performed by one generator step. div, mul and floor exist only
/// so callers can assert they stay zero.
struct OpCensus {
    std::uint64_t add = 0;
    std::uint64_t sub = 0;
    std::uint64_t compare = 0;
    std::uint64_t select = 0;
    std::uint64_t div = 0;
    std::uint64_t mul = 0;
    std::uint64_t floor = 0;

    std::uint64_t total() const { return add + sub + compare + select + div + mul + floor; }
    OpCensus& operator+=(const OpCensus& other);
    friend bool operator==(const OpCensus&, const OpCensus&) = default;
};

/// Quotient/residue of d*e by Ncbps for a small offset e = m_j - j.
struct OffsetEntry {
    std::int32_t quotient = 0;  ///< -1 or 0
    std::uint32_t residue = 0;  ///< in [0, Ncbps)

    friend bool operator==(const OffsetEntry&, const OffsetEntry&) = default;
};

/// Counters of the divider-free deinterleave address generator.
///
/// With d*j = Ncbps*q + r, the row index m_j of the mod-s stage differs from
/// j by e = ((s_phase + q mod s) mod s) - s_phase, |e| < s. So
///   d*m_j = Ncbps*(q + Pe) + (r + Re),   (Pe, Re) = split of d*e,
/// and after one compare-and-subtract on r + Re the pair (kq, acc) holds
/// floor(d*m_j / Ncbps) and d*m_j mod Ncbps. The address is kq + acc.
/// (Pe, Re) come from an s-by-s table indexed by (s_phase, q mod s).
struct GeneratorState {
    InterleaverConfig config;
    std::uint32_t j = 0;        ///< index of the next address to emit
    std::uint32_t q = 0;        ///< floor(d*j / Ncbps)
    std::uint32_t r = 0;        ///< d*j mod Ncbps
    std::uint32_t q_mod_s = 0;  ///< q mod s
    std::uint32_t s_phase = 0;  ///< j mod s
    std::uint32_t s_base = 0;   ///< s*floor(j/s)
    std::uint32_t acc = 0;      ///< d*m mod Ncbps for the last emitted address
    std::uint32_t kq = 0;       ///< floor(d*m / Ncbps) for the last emitted address
    std::array<OffsetEntry, 9> offsets{};  ///< row-major [s_phase][q_mod_s], s*s used

    friend bool operator==(const GeneratorState&, const GeneratorState&) = default;
};

GeneratorState init_state(const InterleaverConfig& cfg);

struct StepResult {
    Index address;
    GeneratorState next;
    OpCensus census;
};

/// Emits k_j for the current j and advances every counter. Throws Exhausted
/// once all Ncbps addresses have been produced.
StepResult step(const GeneratorState& state);

/// Operations the next step() from this state would perform.
OpCensus step_op_trace(const GeneratorState& state);

/// Drives step() Ncbps times; the table is tagged Deinterleave.
AddressTable run(const InterleaverConfig& cfg);

struct RunTrace {
    AddressTable table;
    OpCensus census;
    std::uint64_t steps = 0;
};

RunTrace run_with_census(const InterleaverConfig& cfg);

}  // namespace wimax_il
