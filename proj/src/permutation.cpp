#include "wimax_il/permutation.hpp"

#include <string>

#include "wimax_il/errors.hpp"

namespace wimax_il {

std::string_view to_string(Direction dir) {
    return dir == Direction::Interleave ? "interleave" : "deinterleave";
}

Direction parse_direction(std::string_view text) {
    if (text == "interleave") return Direction::Interleave;
    if (text == "deinterleave") return Direction::Deinterleave;
    throw ParseError("direction must be 'interleave' or 'deinterleave', got '" + std::string(text) + "'");
}

Direction flipped(Direction dir) {
    return dir == Direction::Interleave ? Direction::Deinterleave : Direction::Interleave;
}

namespace {

void check_index(const InterleaverConfig& cfg, Index i) {
    if (i >= cfg.n_cbps()) {
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [0, " + std::to_string(cfg.n_cbps()) + ")");
    }
}

}  // namespace

Index interleave_index(const InterleaverConfig& cfg, Index k) {
    check_index(cfg, k);
    const std::uint64_t n = cfg.n_cbps();
    const std::uint64_t d = cfg.d();
    const std::uint64_t s = cfg.s();
    // First stage: write row-wise, read column-wise.
    const std::uint64_t m = (n / d) * (k % d) + k / d;
    // Second stage: rotate within groups of s to alternate bit significance.
    const std::uint64_t j = s * (m / s) + (m + n - (d * m) / n) % s;
    return static_cast<Index>(j);
}

Index deinterleave_index(const InterleaverConfig& cfg, Index j) {
    check_index(cfg, j);
    const std::uint64_t n = cfg.n_cbps();
    const std::uint64_t d = cfg.d();
    const std::uint64_t s = cfg.s();
    const std::uint64_t m = s * (j / s) + (j + (d * j) / n) % s;
    const std::uint64_t k = d * m - (n - 1) * ((d * m) / n);
    return static_cast<Index>(k);
}

BitBlock::BitBlock(const InterleaverConfig& cfg, std::vector<Bit> bits) : config_(cfg), bits_(std::move(bits)) {
    if (bits_.size() != cfg.n_cbps()) {
        throw LengthMismatch("bit block has " + std::to_string(bits_.size()) + " bits, config needs " +
                             std::to_string(cfg.n_cbps()));
    }
}

BitBlock BitBlock::zeros(const InterleaverConfig& cfg) {
    return BitBlock(cfg, std::vector<Bit>(cfg.n_cbps(), 0));
}

AddressTable build_table(const InterleaverConfig& cfg, Direction dir) {
    AddressTable t{cfg, dir, std::vector<Index>(cfg.n_cbps())};
    for (Index i = 0; i < cfg.n_cbps(); ++i) {
        t.map[i] = dir == Direction::Interleave ? interleave_index(cfg, i) : deinterleave_index(cfg, i);
    }
    return t;
}

AddressTable identity_table(const InterleaverConfig& cfg, Direction dir) {
    AddressTable t{cfg, dir, std::vector<Index>(cfg.n_cbps())};
    for (Index i = 0; i < cfg.n_cbps(); ++i) t.map[i] = i;
    return t;
}

bool is_permutation(std::span<const Index> map) {
    std::vector<bool> seen(map.size(), false);
    for (Index v : map) {
        if (v >= map.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

AddressTable invert_table(const AddressTable& t) {
    if (t.map.size() != t.config.n_cbps() || !is_permutation(t.map)) {
        throw NotAPermutation("address table is not a permutation of [0, " + std::to_string(t.config.n_cbps()) + ")");
    }
    AddressTable inv{t.config, flipped(t.direction), std::vector<Index>(t.map.size())};
    for (Index i = 0; i < t.map.size(); ++i) inv.map[t.map[i]] = i;
    return inv;
}

BitBlock apply_permutation(const AddressTable& t, const BitBlock& block) {
    if (block.size() != t.map.size() || t.config != block.config()) {
        throw LengthMismatch("bit block of " + std::to_string(block.size()) + " bits does not match table of " +
                             std::to_string(t.map.size()));
    }
    if (!is_permutation(t.map)) {
        throw NotAPermutation("cannot apply a table that is not a permutation");
    }
    std::vector<Bit> out(block.size(), 0);
    const auto in = block.bits();
    for (std::size_t i = 0; i < in.size(); ++i) out[t.map[i]] = in[i];
    return BitBlock(t.config, std::move(out));
}

}  // namespace wimax_il
