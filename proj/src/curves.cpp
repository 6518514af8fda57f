#include "sfcgeo/curves.hpp"

#include <stdexcept>
#include <string>

#include "sfcgeo/hcurve.hpp"

namespace sfc {

std::string_view curve_name(CurveId c) {
    switch (c) {
        case CurveId::Z: return "z";
        case CurveId::GrayZ: return "grayz";
        case CurveId::Hilbert: return "hilbert";
        case CurveId::H: return "h";
    }
    return "?";
}

CurveId curve_from_name(std::string_view name) {
    for (CurveId c : kAllCurves)
        if (name == curve_name(c)) return c;
    throw std::invalid_argument("unknown curve name: " + std::string(name));
}

void check_granularity(int n) {
    if (n < 1 || n > kMaxGranularity)
        throw std::domain_error("granularity n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxGranularity) + "]");
}

void check_point(GridPoint p, int n) {
    check_granularity(n);
    const uint32_t side = grid_side(n);
    if (p.x >= side)
        throw std::domain_error("cell x=" + std::to_string(p.x) + " outside [0, " +
                                std::to_string(side) + ") at n=" + std::to_string(n));
    if (p.y >= side)
        throw std::domain_error("cell y=" + std::to_string(p.y) + " outside [0, " +
                                std::to_string(side) + ") at n=" + std::to_string(n));
}

void check_index(uint64_t value, int n) {
    check_granularity(n);
    if (value >= index_count(n))
        throw std::domain_error("curve index " + std::to_string(value) + " outside [0, 4^" +
                                std::to_string(n) + ") at n=" + std::to_string(n));
}

namespace {

uint64_t spread_bits(uint32_t v) {
    uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

uint32_t compact_bits(uint64_t x) {
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
    return static_cast<uint32_t>(x);
}

// Inverse of the reflected Gray code g = i ^ (i >> 1).
uint64_t gray_decode(uint64_t g) {
    g ^= g >> 32;
    g ^= g >> 16;
    g ^= g >> 8;
    g ^= g >> 4;
    g ^= g >> 2;
    g ^= g >> 1;
    return g;
}

}  // namespace

uint64_t z_index(GridPoint p, int n) {
    check_point(p, n);
    return spread_bits(p.x) | (spread_bits(p.y) << 1);
}

GridPoint z_point(uint64_t value, int n) {
    check_index(value, n);
    return {compact_bits(value), compact_bits(value >> 1)};
}

uint64_t gray_z_index(GridPoint p, int n) {
    return gray_decode(z_index(p, n));
}

GridPoint gray_z_point(uint64_t value, int n) {
    check_index(value, n);
    return z_point(value ^ (value >> 1), n);
}

uint64_t hilbert_index(GridPoint p, int n) {
    check_point(p, n);
    uint32_t x = p.x, y = p.y;
    uint64_t d = 0;
    for (uint32_t s = grid_side(n) >> 1; s > 0; s >>= 1) {
        const uint32_t rx = (x & s) ? 1 : 0;
        const uint32_t ry = (y & s) ? 1 : 0;
        d += uint64_t{s} * s * ((3 * rx) ^ ry);
        if (ry == 0) {
            if (rx == 1) {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            const uint32_t t = x;
            x = y;
            y = t;
        }
    }
    return d;
}

GridPoint hilbert_point(uint64_t value, int n) {
    check_index(value, n);
    uint32_t x = 0, y = 0;
    uint64_t t = value;
    for (uint32_t s = 1; s < grid_side(n); s <<= 1) {
        const uint32_t rx = 1 & static_cast<uint32_t>(t / 2);
        const uint32_t ry = 1 & static_cast<uint32_t>(t ^ rx);
        if (ry == 0) {
            if (rx == 1) {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            const uint32_t tmp = x;
            x = y;
            y = tmp;
        }
        x += s * rx;
        y += s * ry;
        t /= 4;
    }
    return {x, y};
}

uint64_t curve_index(CurveId c, GridPoint p, int n) {
    switch (c) {
        case CurveId::Z: return z_index(p, n);
        case CurveId::GrayZ: return gray_z_index(p, n);
        case CurveId::Hilbert: return hilbert_index(p, n);
        case CurveId::H: return h_index(p, n);
    }
    throw std::invalid_argument("bad CurveId");
}

uint64_t curve_index(CurveId c, GridPoint p, int n, EvalMode mode, const HTables* tables) {
    if (mode == EvalMode::Plain) return curve_index(c, p, n);
    if (c != CurveId::H)
        throw std::invalid_argument("cached mode is only available for the H curve");
    if (tables == nullptr)
        throw std::invalid_argument("cached mode requested without prebuilt tables");
    if (tables->max_n() < n)
        throw std::invalid_argument("tables built for max_n=" + std::to_string(tables->max_n()) +
                                    " cannot serve n=" + std::to_string(n));
    return h_index_cached(*tables, p, n);
}

GridPoint curve_point(CurveId c, uint64_t value, int n) {
    switch (c) {
        case CurveId::Z: return z_point(value, n);
        case CurveId::GrayZ: return gray_z_point(value, n);
        case CurveId::Hilbert: return hilbert_point(value, n);
        case CurveId::H: return h_point(value, n);
    }
    throw std::invalid_argument("bad CurveId");
}

}  // namespace sfc
