#pragma once

#include <string>
#include <string_view>

#include "wimax_il/burst.hpp"
#include "wimax_il/cost_model.hpp"
#include "wimax_il/permutation.hpp"

namespace wimax_il {

inline constexpr int kTableFormatVersion = 1;

// Canonical table CSV:
//
//   # wimax-il address table
//   # version=1
//   # config=384,16,2
//   # direction=deinterleave
//   # convention=scatter: output[address] = input[index]
//   index,address
//   0,0
//   ...
//
// Rows appear in index order, one per line, '\n' line endings, final newline.
std::string serialize_table_csv(const AddressTable& table);

/// Strict parser for the canonical form. Throws ParseError on any deviation;
/// it does not check that the map is a permutation.
AddressTable parse_table_csv(std::string_view text);

std::string serialize_table_json(const AddressTable& table);
AddressTable parse_table_json(std::string_view text);

std::string burst_csv(const BurstSweep& sweep);
std::string burst_json(const BurstSweep& sweep);

std::string tradeoff_json(const TradeoffReport& report);
std::string tradeoff_text(const TradeoffReport& report);

}  // namespace wimax_il
