#include <doctest.h>

#include "oracles.hpp"
#include "wimax_il/burst.hpp"
#include "wimax_il/errors.hpp"
#include "wimax_il/permutation.hpp"

using namespace wimax_il;

namespace {

const auto c32 = validate_config(32, 16, 1);

ErrorMask mask_of(std::uint32_t n, std::set<Index> pos, MaskDomain dom = MaskDomain::Original) {
    return ErrorMask{n, std::move(pos), dom};
}

// Worst run over every start, computed straight from the oracle map.
std::uint32_t brute_worst(const oracle::Triple& t, std::uint32_t b) {
    std::uint32_t worst = 0;
    for (std::uint32_t start = 0; start + b <= t.n; ++start) {
        std::vector<std::uint32_t> pos;
        for (std::uint32_t j = start; j < start + b; ++j) pos.push_back(oracle::deinterleave(t, j));
        worst = std::max(worst, oracle::longest_run(pos));
    }
    return worst;
}

}  // namespace

TEST_CASE("inject_burst") {
    CHECK(inject_burst(32, 0, 2).positions == std::set<Index>{0, 1});
    CHECK(inject_burst(32, 30, 2).positions == std::set<Index>{30, 31});
    CHECK(inject_burst(32, 0, 2).domain == MaskDomain::Channel);
    CHECK_THROWS_AS(inject_burst(32, 31, 2), RangeError);
    CHECK_THROWS_AS(inject_burst(32, 0, 0), RangeError);
    CHECK_THROWS_AS(inject_burst(32, 0, 33), RangeError);
}

TEST_CASE("deinterleave_errors") {
    const auto a = deinterleave_errors(c32, inject_burst(32, 0, 2));
    CHECK(a.positions == std::set<Index>{0, 16});
    CHECK(a.domain == MaskDomain::Original);
    CHECK(deinterleave_errors(c32, inject_burst(32, 0, 3)).positions == std::set<Index>{0, 1, 16});
    CHECK(deinterleave_errors(c32, mask_of(32, {}, MaskDomain::Channel)).positions.empty());

    CHECK_THROWS_AS(deinterleave_errors(c32, mask_of(32, {0})), DomainMismatch);
    CHECK_THROWS_AS(deinterleave_errors(c32, mask_of(64, {0}, MaskDomain::Channel)), LengthMismatch);
}

TEST_CASE("run length and spacing") {
    CHECK(max_run_length(mask_of(32, {0, 16})) == 1);
    CHECK(max_run_length(mask_of(32, {0, 1, 16})) == 2);
    CHECK(max_run_length(mask_of(32, {})) == 0);
    CHECK(max_run_length(mask_of(32, {3, 4, 5, 9, 10})) == 3);
    CHECK(min_pairwise_spacing(mask_of(32, {0, 16})) == 16);
    CHECK(min_pairwise_spacing(mask_of(32, {0, 1, 16})) == 1);
    CHECK(min_pairwise_spacing(mask_of(32, {7})) == 0);
}

TEST_CASE("burst_sweep on (32,16,1)") {
    const auto s2 = burst_sweep(c32, 2);
    CHECK(s2.reports.size() == 31);
    CHECK(s2.worst_max_run_length == 1);
    const auto s3 = burst_sweep(c32, 3);
    CHECK(s3.worst_max_run_length >= 2);
    CHECK(s3.reports.front().post_deinterleave_positions == std::vector<Index>{0, 1, 16});
    CHECK(s3.reports.front().max_run_length == 2);
    CHECK(s3.reports.front().rs_correctable);
    CHECK_THROWS_AS(burst_sweep(c32, 0), RangeError);
    CHECK_THROWS_AS(burst_sweep(c32, 33), RangeError);
    CHECK(burst_sweep(c32, 32).reports.size() == 1);
}

TEST_CASE("burst_sweep on (192,16,1) with b = 12") {
    const auto cfg = validate_config(192, 16, 1);
    CHECK(burst_sweep(cfg, 12).worst_max_run_length == 1);
    CHECK(dispersal_guaranteed(cfg, 12));
    CHECK_FALSE(dispersal_guaranteed(cfg, 13));
    CHECK_FALSE(dispersal_guaranteed(validate_config(384, 16, 2), 2));
}

TEST_CASE("s = 1 dispersal guarantee, exhaustive over admissible configs up to 768") {
    for (const auto& t : oracle::admissible_upto(768)) {
        if (t.s != 1) continue;
        const auto cfg = validate_config(t.n, t.d, t.s);
        const std::uint32_t b = cfg.rows();
        if (burst_sweep(cfg, b).worst_max_run_length != 1) FAIL("dispersal broken at " << to_triple(cfg));
    }
}

TEST_CASE("rs_correctable follows the 8-consecutive-bit criterion") {
    const auto sweep = burst_sweep(c32, 32);
    const auto& rep = sweep.reports.front();
    CHECK(rep.max_run_length == 32);
    CHECK_FALSE(rep.rs_correctable);
    CHECK_FALSE(sweep.all_rs_correctable);
    for (std::uint32_t b = 1; b <= 32; ++b) {
        for (const auto& r : burst_sweep(c32, b).reports) REQUIRE(r.rs_correctable == (r.max_run_length <= 8));
    }
}

TEST_CASE("cardinality is preserved") {
    for (const auto& cfg : {c32, validate_config(384, 16, 2), validate_config(576, 16, 3)}) {
        for (std::uint32_t b : {1u, 5u, 17u}) {
            for (const auto& r : burst_sweep(cfg, b).reports) REQUIRE(r.post_deinterleave_positions.size() == b);
        }
    }
}

TEST_CASE("s in {2,3}: worst-case runs pinned against a brute-force sweep") {
    struct Pin {
        oracle::Triple t;
        std::uint32_t b;
        std::uint32_t worst;
    };
    // Values from an independent brute-force enumeration.
    const Pin pins[] = {
        {{384, 16, 2}, 2, 1},   {{384, 16, 2}, 12, 1},  {{384, 16, 2}, 24, 2},
        {{576, 16, 3}, 3, 1},   {{576, 16, 3}, 12, 1},  {{576, 16, 3}, 36, 2},
        {{768, 16, 2}, 48, 2},  {{1152, 16, 3}, 72, 2},
    };
    for (const auto& p : pins) {
        const auto cfg = validate_config(p.t.n, p.t.d, p.t.s);
        CHECK(burst_sweep(cfg, p.b).worst_max_run_length == p.worst);
        CHECK(brute_worst(p.t, p.b) == p.worst);
    }
}
