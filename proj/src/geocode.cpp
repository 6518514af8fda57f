#include "sfcgeo/geocode.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sfc {

namespace {

// 'a', 'i', 'l', 'o' are absent from the alphabet.
constexpr int8_t kDigitOf(char c) {
    for (int i = 0; i < 32; ++i)
        if (kHashAlphabet[i] == c) return static_cast<int8_t>(i);
    return -1;
}

struct DigitTable {
    int8_t v[256];
    constexpr DigitTable() : v{} {
        for (int i = 0; i < 256; ++i) v[i] = kDigitOf(static_cast<char>(i));
    }
};
constexpr DigitTable kDigits{};

}  // namespace

void check_geopoint(GeoPoint g) {
    if (!std::isfinite(g.lat) || g.lat < -90.0f || g.lat > 90.0f)
        throw std::domain_error("latitude out of range: " + std::to_string(g.lat));
    if (!std::isfinite(g.lon) || g.lon < -180.0f || g.lon > 180.0f)
        throw std::domain_error("longitude out of range: " + std::to_string(g.lon));
}

GridPoint point_to_cell(GeoPoint g, int n) {
    check_granularity(n);
    check_geopoint(g);
    const double side = static_cast<double>(grid_side(n));
    const uint32_t last = grid_side(n) - 1;
    const auto clamp_cell = [last](double v) {
        if (v <= 0.0) return uint32_t{0};
        const auto c = static_cast<uint32_t>(v);
        return c > last ? last : c;
    };
    const uint32_t x = clamp_cell(std::floor((static_cast<double>(g.lon) + 180.0) / 360.0 * side));
    const uint32_t y = clamp_cell(std::floor((static_cast<double>(g.lat) + 90.0) / 180.0 * side));
    return {x, y};
}

GeoPoint cell_to_point(GridPoint p, int n) {
    check_point(p, n);
    const double side = static_cast<double>(grid_side(n));
    GeoPoint g;
    g.lon = static_cast<float>((p.x + 0.5) / side * 360.0 - 180.0);
    g.lat = static_cast<float>((p.y + 0.5) / side * 180.0 - 90.0);
    return g;
}

std::string index_to_hash(uint64_t index, int n) {
    check_index(index, n);
    const int len = hash_length(n);
    std::string text(static_cast<size_t>(len), '0');
    for (int k = 0; k < len; ++k)
        text[static_cast<size_t>(len - 1 - k)] = kHashAlphabet[(index >> (5 * k)) & 31];
    return text;
}

uint64_t hash_to_index(const std::string& text, int n) {
    check_granularity(n);
    const int len = hash_length(n);
    if (static_cast<int>(text.size()) != len)
        throw std::invalid_argument("hash \"" + text + "\" has length " +
                                    std::to_string(text.size()) + ", expected " +
                                    std::to_string(len) + " for n=" + std::to_string(n));
    uint64_t index = 0;
    for (char ch : text) {
        const int8_t d = kDigits.v[static_cast<unsigned char>(ch)];
        if (d < 0)
            throw std::invalid_argument(std::string("invalid character '") + ch + "' in hash \"" +
                                        text + "\"");
        index = (index << 5) | static_cast<uint64_t>(d);
    }
    if (index >= index_count(n))
        throw std::invalid_argument("hash \"" + text + "\" decodes to index " +
                                    std::to_string(index) + " outside [0, 4^" + std::to_string(n) +
                                    ")");
    return index;
}

Geohash encode_hash(GeoPoint g, CurveId c, int n) {
    return encode_hash(g, c, n, EvalMode::Plain, nullptr);
}

Geohash encode_hash(GeoPoint g, CurveId c, int n, EvalMode mode, const HTables* tables) {
    const uint64_t index = curve_index(c, point_to_cell(g, n), n, mode, tables);
    return {index_to_hash(index, n), c, n};
}

GeoPoint decode_hash(const Geohash& h) {
    const uint64_t index = hash_to_index(h.text, h.n);
    return cell_to_point(curve_point(h.curve, index, h.n), h.n);
}

}  // namespace sfc
