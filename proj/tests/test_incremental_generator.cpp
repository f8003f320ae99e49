#include <doctest.h>

#include "oracles.hpp"
#include "wimax_il/errors.hpp"
#include "wimax_il/incremental_generator.hpp"

using namespace wimax_il;

namespace {

const auto c32 = validate_config(32, 16, 1);
const auto c384 = validate_config(384, 16, 2);

}  // namespace

TEST_CASE("init_state is a reset") {
    const auto st = init_state(c32);
    CHECK(st.j == 0);
    CHECK(st.q == 0);
    CHECK(st.r == 0);
    CHECK(st.q_mod_s == 0);
    CHECK(st.s_phase == 0);
    CHECK(st.s_base == 0);
    CHECK(st.acc == 0);
    CHECK(st.kq == 0);

    const auto st2 = init_state(c384);
    CHECK(st2.s_phase == 0);
    CHECK(st2.config.s() == 2);

    CHECK(step(init_state(c32)).address == 0);
    CHECK(step(init_state(c384)).address == 0);
}

TEST_CASE("first emitted addresses for (32,16,1)") {
    auto st = init_state(c32);
    std::vector<Index> got;
    for (int i = 0; i < 4; ++i) {
        auto res = step(st);
        got.push_back(res.address);
        st = res.next;
    }
    CHECK(got == std::vector<Index>{0, 16, 1, 17});
}

TEST_CASE("(384,16,2) emits 1 at j = 25") {
    auto st = init_state(c384);
    for (int i = 0; i < 25; ++i) st = step(st).next;
    CHECK(st.j == 25);
    CHECK(step(st).address == 1);
}

TEST_CASE("stepping past the block throws Exhausted") {
    auto st = init_state(c32);
    for (int i = 0; i < 32; ++i) st = step(st).next;
    CHECK(st.j == 32);
    CHECK_THROWS_AS(step(st), Exhausted);
}

TEST_CASE("offset table holds the split of d*e") {
    // (384,16,2): e = -1 -> (-1, 368), e = 0 -> (0, 0), e = +1 -> (0, 16).
    const auto st = init_state(c384);
    // [phase][q mod s]: (0,0): t=0,e=0  (0,1): t=1,e=1  (1,0): t=1,e=0  (1,1): t=0,e=-1
    CHECK(st.offsets[0] == OffsetEntry{0, 0});
    CHECK(st.offsets[1] == OffsetEntry{0, 16});
    CHECK(st.offsets[2] == OffsetEntry{0, 0});
    CHECK(st.offsets[3] == OffsetEntry{-1, 368});
}

TEST_CASE("exhaustive oracle equivalence and counter invariants (n <= 2048)") {
    for (const auto& t : oracle::admissible_upto(2048)) {
        const auto cfg = validate_config(t.n, t.d, t.s);
        auto st = init_state(cfg);
        for (std::uint32_t j = 0; j < t.n; ++j) {
            // Counters after j steps, checked against direct evaluation.
            const std::uint64_t dj = std::uint64_t{t.d} * j;
            if (st.j != j || st.q != dj / t.n || st.r != dj % t.n || st.s_base + st.s_phase != j ||
                st.s_phase >= t.s || st.r >= t.n || st.q_mod_s != st.q % t.s) {
                FAIL("counter drift at " << to_triple(cfg) << " j=" << j);
            }
            const auto res = step(st);
            if (res.address != oracle::deinterleave(t, j)) {
                FAIL("address mismatch at " << to_triple(cfg) << " j=" << j);
            }
            // kq/acc hold the quotient and residue of d*m_j.
            const std::uint64_t dm = std::uint64_t{res.next.kq} * t.n + res.next.acc;
            if (res.next.acc >= t.n || dm % t.d != 0) FAIL("acc/kq inconsistent at " << to_triple(cfg));
            st = res.next;
        }
        REQUIRE(run(cfg) == build_table(cfg, Direction::Deinterleave));
    }
}

TEST_CASE("census: no division, multiplication or floor") {
    for (const auto& t : oracle::admissible_upto(1200)) {
        const auto cfg = validate_config(t.n, t.d, t.s);
        auto st = init_state(cfg);
        for (std::uint32_t j = 0; j < t.n; ++j) {
            const auto res = step(st);
            REQUIRE(res.census.div == 0);
            REQUIRE(res.census.mul == 0);
            REQUIRE(res.census.floor == 0);
            REQUIRE(res.census.add >= 1);
            REQUIRE(step_op_trace(st) == res.census);
            st = res.next;
        }
    }
}

TEST_CASE("census over a full (384,16,2) run stays linear") {
    const auto trace = run_with_census(c384);
    CHECK(trace.steps == 384);
    CHECK(trace.census.div == 0);
    CHECK(trace.census.mul == 0);
    CHECK(trace.census.total() <= 12u * 384u);
    MESSAGE("ops per step: " << static_cast<double>(trace.census.total()) / 384.0);

    const auto one = step_op_trace(init_state(c32));
    CHECK(one.add >= 1);
    CHECK(one.div == 0);
    CHECK(one.mul == 0);
}

TEST_CASE("runs are deterministic and bijective") {
    for (const auto& cfg : {validate_config(192, 16, 1), validate_config(576, 16, 3)}) {
        const auto a = run(cfg);
        const auto b = run(cfg);
        CHECK(a == b);
        CHECK(is_permutation(a.map));
        CHECK(a.direction == Direction::Deinterleave);
        CHECK(a == build_table(cfg, Direction::Deinterleave));
    }
}
