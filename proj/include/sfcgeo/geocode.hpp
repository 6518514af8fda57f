#pragma once

#include <string>

#include "sfcgeo/curves.hpp"

// Quantization of geographic coordinates to grid cells and the base-32
// geohash codec. Longitude maps to x and latitude to y, both with the
// south/west origin; +90 lat and +180 lon clamp into the last cell. The
// hash is the curve index in base 32, most-significant digit first,
// zero-padded to exactly ceil(2n/5) characters, so lexicographic order of
// hashes equals numeric order of indices. Curve identity and n travel as
// metadata next to the text, not inside it.

namespace sfc {

inline constexpr int kDefaultGranularity = 16;
inline constexpr char kHashAlphabet[] = "0123456789bcdefghjkmnpqrstuvwxyz";

struct GeoPoint {
    float lat = 0.0f;  // degrees in [-90, +90]
    float lon = 0.0f;  // degrees in [-180, +180]
};

struct Geohash {
    std::string text;
    CurveId curve = CurveId::Z;
    int n = kDefaultGranularity;
};

inline int hash_length(int n) { return (2 * n + 4) / 5; }

void check_geopoint(GeoPoint g);

GridPoint point_to_cell(GeoPoint g, int n);
GeoPoint cell_to_point(GridPoint p, int n);

std::string index_to_hash(uint64_t index, int n);
uint64_t hash_to_index(const std::string& text, int n);  // format errors -> std::invalid_argument

Geohash encode_hash(GeoPoint g, CurveId c, int n);
Geohash encode_hash(GeoPoint g, CurveId c, int n, EvalMode mode, const HTables* tables);
GeoPoint decode_hash(const Geohash& h);

}  // namespace sfc
