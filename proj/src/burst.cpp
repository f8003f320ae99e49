#include "wimax_il/burst.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "wimax_il/errors.hpp"
#include "wimax_il/permutation.hpp"

namespace wimax_il {

ErrorMask inject_burst(std::uint32_t n, std::uint32_t start, std::uint32_t b) {
    if (b < 1 || std::uint64_t{start} + b > n) {
        throw RangeError("burst [" + std::to_string(start) + ", " + std::to_string(std::uint64_t{start} + b) +
                         ") does not fit in a block of " + std::to_string(n) + " bits");
    }
    ErrorMask mask{n, {}, MaskDomain::Channel};
    for (std::uint32_t i = 0; i < b; ++i) mask.positions.insert(start + i);
    return mask;
}

ErrorMask deinterleave_errors(const InterleaverConfig& cfg, const ErrorMask& mask) {
    if (mask.domain != MaskDomain::Channel) {
        throw DomainMismatch("deinterleave_errors expects a channel-domain mask");
    }
    if (mask.length != cfg.n_cbps()) {
        throw LengthMismatch("mask length " + std::to_string(mask.length) + " does not match Ncbps " +
                             std::to_string(cfg.n_cbps()));
    }
    ErrorMask out{mask.length, {}, MaskDomain::Original};
    for (Index j : mask.positions) out.positions.insert(deinterleave_index(cfg, j));
    return out;
}

std::uint32_t max_run_length(const ErrorMask& mask) {
    std::uint32_t best = 0;
    std::uint32_t run = 0;
    std::optional<Index> prev;
    for (Index p : mask.positions) {
        run = (prev && p == *prev + 1) ? run + 1 : 1;
        best = std::max(best, run);
        prev = p;
    }
    return best;
}

std::uint32_t min_pairwise_spacing(const ErrorMask& mask) {
    if (mask.positions.size() < 2) return 0;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    auto it = mask.positions.begin();
    Index prev = *it;
    for (++it; it != mask.positions.end(); ++it) {
        best = std::min(best, *it - prev);
        prev = *it;
    }
    return best;
}

BurstReport analyse_burst(const InterleaverConfig& cfg, std::uint32_t start, std::uint32_t b) {
    const ErrorMask original = deinterleave_errors(cfg, inject_burst(cfg.n_cbps(), start, b));
    BurstReport rep;
    rep.burst_length = b;
    rep.start_position = start;
    rep.post_deinterleave_positions.assign(original.positions.begin(), original.positions.end());
    rep.max_run_length = max_run_length(original);
    rep.min_pairwise_spacing = min_pairwise_spacing(original);
    rep.rs_correctable = rep.max_run_length <= static_cast<std::uint32_t>(paper_reference().rs_correctable_run_bits);
    return rep;
}

BurstSweep burst_sweep(const InterleaverConfig& cfg, std::uint32_t b) {
    if (b < 1 || b > cfg.n_cbps()) {
        throw RangeError("burst length must lie in [1, " + std::to_string(cfg.n_cbps()) + "], got " +
                         std::to_string(b));
    }
    BurstSweep sweep{cfg, b, {}, 0, true};
    sweep.reports.reserve(cfg.n_cbps() - b + 1);
    for (std::uint32_t start = 0; start + b <= cfg.n_cbps(); ++start) {
        BurstReport rep = analyse_burst(cfg, start, b);
        sweep.worst_max_run_length = std::max(sweep.worst_max_run_length, rep.max_run_length);
        sweep.all_rs_correctable = sweep.all_rs_correctable && rep.rs_correctable;
        sweep.reports.push_back(std::move(rep));
    }
    return sweep;
}

bool dispersal_guaranteed(const InterleaverConfig& cfg, std::uint32_t b) {
    return cfg.s() == 1 && b >= 1 && b <= cfg.rows();
}

}  // namespace wimax_il
