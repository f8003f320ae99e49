#include "wimax_il/config.hpp"

#include <charconv>
#include <limits>
#include <string>

#include <json.hpp>

#include "wimax_il/errors.hpp"

namespace wimax_il {

std::uint32_t s_of(ModulationScheme scheme) {
    switch (scheme) {
        case ModulationScheme::QPSK:
            return 1;
        case ModulationScheme::QAM16:
            return 2;
        case ModulationScheme::QAM64:
            return 3;
    }
    throw RangeError("unknown modulation scheme");
}

std::string_view to_string(ModulationScheme scheme) {
    switch (scheme) {
        case ModulationScheme::QPSK:
            return "qpsk";
        case ModulationScheme::QAM16:
            return "qam16";
        case ModulationScheme::QAM64:
            return "qam64";
    }
    return "?";
}

std::optional<ModulationScheme> parse_modulation(std::string_view name) {
    if (name == "qpsk") return ModulationScheme::QPSK;
    if (name == "qam16") return ModulationScheme::QAM16;
    if (name == "qam64") return ModulationScheme::QAM64;
    return std::nullopt;
}

InterleaverConfig validate_config(std::int64_t n_cbps, std::int64_t d, std::int64_t s) {
    const std::string triple = std::to_string(n_cbps) + "," + std::to_string(d) + "," + std::to_string(s);
    if (d != 12 && d != 16) {
        throw RangeError("d must be 12 or 16 (got " + triple + ")");
    }
    if (s < 1 || s > 3) {
        throw RangeError("s must be 1, 2 or 3 (got " + triple + ")");
    }
    // Upper bound keeps d * Ncbps comfortably inside 32 bits.
    if (n_cbps < 2 * d || n_cbps > (std::int64_t{1} << 24)) {
        throw RangeError("Ncbps must lie in [2d, 2^24] (got " + triple + ")");
    }
    if (n_cbps % d != 0) {
        throw DivisibilityError("d does not divide Ncbps (got " + triple + ")");
    }
    if ((n_cbps / d) % s != 0) {
        throw DivisibilityError("s does not divide Ncbps/d (got " + triple + ")");
    }
    return InterleaverConfig(static_cast<std::uint32_t>(n_cbps), static_cast<std::uint32_t>(d),
                             static_cast<std::uint32_t>(s));
}

InterleaverConfig preset(ModulationScheme scheme) {
    switch (scheme) {
        case ModulationScheme::QPSK:
            return validate_config(192, kDefaultColumns, 1);
        case ModulationScheme::QAM16:
            return validate_config(384, kDefaultColumns, 2);
        case ModulationScheme::QAM64:
            return validate_config(576, kDefaultColumns, 3);
    }
    throw RangeError("unknown modulation scheme");
}

std::array<InterleaverConfig, 3> all_presets() {
    return {preset(ModulationScheme::QPSK), preset(ModulationScheme::QAM16), preset(ModulationScheme::QAM64)};
}

std::string to_triple(const InterleaverConfig& cfg) {
    return std::to_string(cfg.n_cbps()) + "," + std::to_string(cfg.d()) + "," + std::to_string(cfg.s());
}

namespace {

std::int64_t parse_field(std::string_view field, std::string_view text) {
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("malformed config triple '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

InterleaverConfig parse_triple(std::string_view text) {
    const auto c1 = text.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos) {
        throw ParseError("config triple must be 'Ncbps,d,s', got '" + std::string(text) + "'");
    }
    return validate_config(parse_field(text.substr(0, c1), text), parse_field(text.substr(c1 + 1, c2 - c1 - 1), text),
                           parse_field(text.substr(c2 + 1), text));
}

std::string to_json(const InterleaverConfig& cfg) {
    nlohmann::ordered_json j;
    j["ncbps"] = cfg.n_cbps();
    j["d"] = cfg.d();
    j["s"] = cfg.s();
    return j.dump();
}

InterleaverConfig parse_config_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config JSON: ") + e.what());
    }
    auto field = [&](const char* key) -> std::int64_t {
        if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
            throw ParseError(std::string("config JSON needs integer field '") + key + "'");
        }
        return j[key].get<std::int64_t>();
    };
    return validate_config(field("ncbps"), field("d"), field("s"));
}

const PaperReference& paper_reference() {
    static const PaperReference ref{};
    return ref;
}

}  // namespace wimax_il
