#pragma once

#include <cstdint>
#include <vector>

#include "sfcgeo/curves.hpp"

// Closed H-curve over the 2^n x 2^n grid.
//
// The cycle is built per level from four copies of the previous level, one
// per quadrant, visited counterclockwise from the lower-left:
//
//   lower-left and upper-right carry the child cycle unchanged; lower-right
//   and upper-left carry it reflected about the main diagonal with reversed
//   orientation.
//
// Each quadrant's cycle is opened at a fixed corner edge and the four arcs
// are glued across the quadrant boundaries, then the whole cycle is
// re-anchored so that cell (0,0) has index 0. The base case is the 2x2
// order (0,0),(1,0),(1,1),(0,1). By induction every level keeps the corner
// edges the gluing needs ((0,0)->(1,0), (s-1,0)->(s-1,1),
// (s-1,s-1)->(s-2,s-1), (0,s-1)->(0,s-2)), so consecutive cells are always
// edge-adjacent and the cycle closes: cell 4^n-1 touches cell 0.
//
// h_index runs one descend/unwind pass over the levels (O(n)); the only
// level-dependent state is three per-level corner positions, computed once.
// HTables replaces the low levels of the walk with one lookup in a
// precomputed block map.

namespace sfc {

uint64_t h_index(GridPoint p, int n);
GridPoint h_point(uint64_t value, int n);

class HTables {
public:
    // Built by build_h_tables; immutable afterwards and safe to share.
    int max_n() const { return max_n_; }
    int block_bits() const { return block_bits_; }

    // Full cell->index map of the level-m curve, m <= block_bits.
    uint32_t block_index(int m, uint32_t cx, uint32_t cy) const {
        return levels_[m][(size_t{cy} << m) | cx];
    }

private:
    friend HTables build_h_tables(int max_n);
    int max_n_ = 0;
    int block_bits_ = 0;
    std::vector<std::vector<uint32_t>> levels_;
};

HTables build_h_tables(int max_n);

// Table-backed evaluation; bit-exact equal to h_index for every n <= max_n.
uint64_t h_index_cached(const HTables& tables, GridPoint p, int n);

}  // namespace sfc
