#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wimax_il/config.hpp"

namespace wimax_il {

enum class Direction { Interleave, Deinterleave };

std::string_view to_string(Direction dir);
Direction parse_direction(std::string_view text);
Direction flipped(Direction dir);

// Closed-form index maps. All arithmetic is exact unsigned integer math.

/// Interleaver: input bit k lands at output position j_k.
Index interleave_index(const InterleaverConfig& cfg, Index k);

/// Deinterleaver: received bit j is restored to position k_j.
Index deinterleave_index(const InterleaverConfig& cfg, Index j);

/// map[i] is the output index of input index i for the given direction.
struct AddressTable {
    InterleaverConfig config;
    Direction direction;
    std::vector<Index> map;

    friend bool operator==(const AddressTable&, const AddressTable&) = default;
};

using Bit = std::uint8_t;

/// One whole symbol of hard bits; the length always equals the config's Ncbps.
class BitBlock {
public:
    BitBlock(const InterleaverConfig& cfg, std::vector<Bit> bits);
    static BitBlock zeros(const InterleaverConfig& cfg);

    const InterleaverConfig& config() const { return config_; }
    std::span<const Bit> bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }

    friend bool operator==(const BitBlock&, const BitBlock&) = default;

private:
    InterleaverConfig config_;
    std::vector<Bit> bits_;
};

AddressTable build_table(const InterleaverConfig& cfg, Direction dir);

/// Identity map tagged with the given direction.
AddressTable identity_table(const InterleaverConfig& cfg, Direction dir);

bool is_permutation(std::span<const Index> map);

/// result.map[t.map[i]] = i; direction flipped. Throws NotAPermutation.
AddressTable invert_table(const AddressTable& t);

/// Scatter: output[t.map[i]] = input[i], for both directions.
///
/// Each table maps an input position of its own stage to an output position,
/// so the deinterleave table applied to an interleaved block restores the
/// original order. Gathering instead is the same as scattering through the
/// inverted table.
BitBlock apply_permutation(const AddressTable& t, const BitBlock& block);

}  // namespace wimax_il
