#include "sfcgeo/hcurve.hpp"

#include <array>
#include <stdexcept>

namespace sfc {

namespace {

// Base 2x2 order (0,0),(1,0),(1,1),(0,1), keyed by (y<<1)|x.
constexpr uint64_t kBase[4] = {0, 1, 3, 2};
constexpr uint32_t kBaseX[4] = {0, 1, 1, 0};
constexpr uint32_t kBaseY[4] = {0, 0, 1, 1};

// Per-level gluing constants, derived from the positions of three corner
// cells in the child cycle (p1 = pos(s-1,0), p2 = pos(0,s-1),
// p3 = pos(s-2,s-1)). Both directions of the level step then take the
// branch-free form (constant +/- value) & mask: quadrants 1 and 3 are the
// diagonally reflected, orientation-reversed copies, hence the sign flip.
struct Levels {
    // c[m][q] + (q odd ? -v : v), masked to the child range, is the glued
    // cycle position; d[m][q] re-anchors it so that cell (0,0) stays at 0.
    std::array<std::array<uint64_t, 4>, kMaxGranularity + 1> c{}, d{};
    // e[m][q] inverts the step for h_point.
    std::array<std::array<uint64_t, 4>, kMaxGranularity + 1> e{};
};

uint64_t index_impl(const Levels& t, GridPoint p, int n);

const Levels& levels() {
    static const Levels tables = [] {
        Levels t;
        std::array<uint64_t, kMaxGranularity + 1> p1{}, p2{}, p3{};
        p1[1] = 1;
        p2[1] = 3;
        p3[1] = 3;
        for (int m = 2; m <= kMaxGranularity; ++m) {
            const uint64_t quarter = index_count(m - 1);
            const uint64_t qmask = quarter - 1;
            const uint64_t anchor = (0 - p3[m - 1]) & qmask;
            t.c[m] = {anchor, p1[m - 1], qmask, p2[m - 1]};
            t.e[m] = {p3[m - 1], p1[m - 1], 1, p2[m - 1]};
            for (uint64_t q = 0; q < 4; ++q)
                t.d[m][q] = (q * quarter - anchor) & (4 * quarter - 1);
            if (m < kMaxGranularity) {
                const uint32_t s = grid_side(m);
                p1[m] = index_impl(t, {s - 1, 0}, m);
                p2[m] = index_impl(t, {0, s - 1}, m);
                p3[m] = index_impl(t, {s - 2, s - 1}, m);
            }
        }
        return t;
    }();
    return tables;
}

// Top-down quadrant choice; reflected quadrants swap the local axes.
// bits -> quadrant is the inverse Gray code; everything is select-free.
inline int descend_step(int m, uint32_t& x, uint32_t& y) {
    const uint32_t bits = ((x >> (m - 1)) & 1u) | (((y >> (m - 1)) & 1u) << 1);
    const uint32_t q = bits ^ (bits >> 1);
    const uint32_t hmask = grid_side(m - 1) - 1;
    const uint32_t xm = x & hmask, ym = y & hmask;
    const uint32_t flip = (xm ^ ym) & (0 - (q & 1u));  // swap axes when q is odd
    x = xm ^ flip;
    y = ym ^ flip;
    return static_cast<int>(q);
}

inline uint64_t unwind_step(const Levels& t, int m, int q, uint64_t v) {
    const uint64_t qmask = index_count(m - 1) - 1;
    const uint64_t sign = 0 - static_cast<uint64_t>(q & 1);
    const uint64_t vv = (v ^ sign) - sign;  // negate when q is odd
    return (t.d[m][q] + ((t.c[m][q] + vv) & qmask)) & (4 * qmask + 3);
}

uint64_t index_impl(const Levels& t, GridPoint p, int n) {
    uint32_t x = p.x, y = p.y;
    uint64_t qs = 0;  // two bits per level
    for (int m = n; m >= 2; --m) qs = (qs << 2) | static_cast<uint64_t>(descend_step(m, x, y));
    uint64_t v = kBase[(y << 1) | x];
    for (int m = 2; m <= n; ++m, qs >>= 2) v = unwind_step(t, m, static_cast<int>(qs & 3), v);
    return v;
}

}  // namespace

uint64_t h_index(GridPoint p, int n) {
    check_point(p, n);
    return index_impl(levels(), p, n);
}

GridPoint h_point(uint64_t value, int n) {
    check_index(value, n);
    const Levels& t = levels();
    uint64_t qs = 0;
    uint64_t v = value;
    for (int m = n; m >= 2; --m) {
        const int shift = 2 * m - 2;
        const uint64_t qmask = (uint64_t{1} << shift) - 1;
        const uint64_t g = (v + t.c[m][0]) & (4 * qmask + 3);
        const uint64_t r = g & qmask;
        const uint64_t q = g >> shift;
        const uint64_t rr = (q & 1) ? 0 - r : r;
        v = (t.e[m][q] + rr) & qmask;
        qs = (qs << 2) | q;
    }
    uint32_t x = kBaseX[v], y = kBaseY[v];
    for (int m = 2; m <= n; ++m, qs >>= 2) {
        const uint32_t h = grid_side(m - 1);
        const uint32_t q = qs & 3;
        const bool swap = q & 1;
        const uint32_t lx = swap ? y : x, ly = swap ? x : y;
        x = lx + ((q == 1 || q == 2) ? h : 0);
        y = ly + (q >= 2 ? h : 0);
    }
    return {x, y};
}

HTables build_h_tables(int max_n) {
    check_granularity(max_n);
    HTables t;
    t.max_n_ = max_n;
    t.block_bits_ = max_n < 6 ? max_n : 6;
    t.levels_.resize(static_cast<size_t>(t.block_bits_) + 1);
    for (int m = 1; m <= t.block_bits_; ++m) {
        const uint32_t side = grid_side(m);
        std::vector<uint32_t>& map = t.levels_[static_cast<size_t>(m)];
        map.resize(size_t{side} * side);
        for (uint32_t y = 0; y < side; ++y)
            for (uint32_t x = 0; x < side; ++x)
                map[(size_t{y} << m) | x] = static_cast<uint32_t>(h_index({x, y}, m));
    }
    return t;
}

uint64_t h_index_cached(const HTables& tables, GridPoint p, int n) {
    check_point(p, n);
    if (n > tables.max_n())
        throw std::invalid_argument("h tables built for max_n=" + std::to_string(tables.max_n()) +
                                    ", asked for n=" + std::to_string(n));
    const int b = tables.block_bits();
    if (n <= b) return tables.block_index(n, p.x, p.y);

    const Levels& t = levels();
    uint32_t x = p.x, y = p.y;
    uint64_t qs = 0;
    for (int m = n; m > b; --m) qs = (qs << 2) | static_cast<uint64_t>(descend_step(m, x, y));
    uint64_t v = tables.block_index(b, x, y);
    for (int m = b + 1; m <= n; ++m, qs >>= 2) v = unwind_step(t, m, static_cast<int>(qs & 3), v);
    return v;
}

}  // namespace sfc
