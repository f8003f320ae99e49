#include "wimax_il/incremental_generator.hpp"

#include <cassert>
#include <string>

#include "wimax_il/errors.hpp"

namespace wimax_il {

OpCensus& OpCensus::operator+=(const OpCensus& other) {
    add += other.add;
    sub += other.sub;
    compare += other.compare;
    select += other.select;
    div += other.div;
    mul += other.mul;
    floor += other.floor;
    return *this;
}

namespace {

// Builds the (s_phase, q mod s) -> d*e table by repeated addition. Runs once
// per configuration, so it stays outside the per-step census.
std::array<OffsetEntry, 9> build_offsets(const InterleaverConfig& cfg) {
    const std::uint32_t n = cfg.n_cbps();
    const std::uint32_t s = cfg.s();
    std::array<OffsetEntry, 9> table{};
    std::size_t slot = 0;
    for (std::uint32_t phase = 0; phase < s; ++phase) {
        for (std::uint32_t qm = 0; qm < s; ++qm) {
            std::uint32_t t = phase + qm;
            if (t >= s) t -= s;
            // |e| <= s - 1, and d*(s - 1) < d*s <= Ncbps because s | Ncbps/d.
            std::uint32_t magnitude = 0;
            const std::uint32_t steps = t >= phase ? t - phase : phase - t;
            for (std::uint32_t i = 0; i < steps; ++i) magnitude += cfg.d();
            if (t >= phase) {
                table[slot++] = {0, magnitude};
            } else {
                table[slot++] = {-1, n - magnitude};
            }
        }
    }
    return table;
}

// Wrapping +1 on a mod-s counter.
std::uint32_t bump_mod(std::uint32_t value, std::uint32_t modulus, OpCensus& ops) {
    ++value;
    ++ops.add;
    ++ops.compare;
    if (value == modulus) {
        value = 0;
        ++ops.select;
    }
    return value;
}

}  // namespace

GeneratorState init_state(const InterleaverConfig& cfg) {
    GeneratorState st{cfg};
    st.offsets = build_offsets(cfg);
    return st;
}

StepResult step(const GeneratorState& state) {
    const InterleaverConfig& cfg = state.config;
    const std::uint32_t n = cfg.n_cbps();
    const std::uint32_t s = cfg.s();
    if (state.j >= n) {
        throw Exhausted("generator already emitted all " + std::to_string(n) + " addresses");
    }

    OpCensus ops;
    GeneratorState next = state;

    // Emit k_j = floor(d*m/N) + (d*m mod N).
    const OffsetEntry& off = state.offsets[state.s_phase * s + state.q_mod_s];
    ++ops.select;
    std::uint32_t acc = state.r + off.residue;
    ++ops.add;
    std::uint32_t carry = 0;
    ++ops.compare;
    if (acc >= n) {
        acc -= n;
        ++ops.sub;
        carry = 1;
    }
    // q + Pe + carry is a single adder with carry-in; Pe is 0 or -1.
    const std::uint32_t kq = static_cast<std::uint32_t>(static_cast<std::int64_t>(state.q) + off.quotient + carry);
    ++ops.add;
    const Index address = kq + acc;
    ++ops.add;
    next.acc = acc;
    next.kq = kq;

    // Advance j and the (q, r) pair for d*j.
    next.j = state.j + 1;
    ++ops.add;
    next.r = state.r + cfg.d();
    ++ops.add;
    ++ops.compare;
    if (next.r >= n) {
        next.r -= n;
        ++ops.sub;
        next.q = state.q + 1;
        ++ops.add;
        next.q_mod_s = bump_mod(state.q_mod_s, s, ops);
    }

    next.s_phase = bump_mod(state.s_phase, s, ops);
    if (next.s_phase == 0) {
        next.s_base = state.s_base + s;
        ++ops.add;
    }

#ifndef NDEBUG
    {
        // m_j = s_base + t must stay within the s-group of j.
        std::uint32_t t = state.s_phase + state.q_mod_s;
        if (t >= s) t -= s;
        const std::uint32_t m = state.s_base + t;
        assert(m + s > state.j && m < state.j + s);
    }
#endif

    return {address, next, ops};
}

OpCensus step_op_trace(const GeneratorState& state) {
    return step(state).census;
}

RunTrace run_with_census(const InterleaverConfig& cfg) {
    RunTrace trace{AddressTable{cfg, Direction::Deinterleave, {}}, {}, 0};
    trace.table.map.reserve(cfg.n_cbps());
    GeneratorState st = init_state(cfg);
    for (std::uint32_t i = 0; i < cfg.n_cbps(); ++i) {
        StepResult res = step(st);
        trace.table.map.push_back(res.address);
        trace.census += res.census;
        ++trace.steps;
        st = res.next;
    }
    return trace;
}

AddressTable run(const InterleaverConfig& cfg) {
    return run_with_census(cfg).table;
}

}  // namespace wimax_il
