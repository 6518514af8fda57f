#pragma once

#include <cstdint>
#include <string_view>

// Forward and inverse maps between grid cells and curve positions for the
// four curve families: Z (Morton), Gray-coded Z, Hilbert, and the closed
// H-curve (see hcurve.hpp for the H kernels and its table fast path).
//
// Conventions, fixed for reproducible hashes:
//   - grid side is 2^n cells, 1 <= n <= 31; indices live in [0, 4^n)
//   - Z interleaving puts bit i of x at position 2i (low) and bit i of y
//     at position 2i+1
//   - Hilbert base orientation at n=1 visits (0,0),(0,1),(1,1),(1,0)
// All kernels are integer-only and pure; safe for concurrent use.

namespace sfc {

inline constexpr int kMaxGranularity = 31;

struct GridPoint {
    uint32_t x = 0;
    uint32_t y = 0;
    friend bool operator==(GridPoint a, GridPoint b) { return a.x == b.x && a.y == b.y; }
};

enum class CurveId { Z, GrayZ, Hilbert, H };

inline constexpr CurveId kAllCurves[] = {CurveId::Z, CurveId::GrayZ, CurveId::Hilbert,
                                         CurveId::H};

std::string_view curve_name(CurveId c);
CurveId curve_from_name(std::string_view name);  // accepts z, grayz, hilbert, h

// Validation helpers; throw std::domain_error naming the offending value.
void check_granularity(int n);
void check_point(GridPoint p, int n);
void check_index(uint64_t value, int n);

inline uint64_t index_count(int n) { return uint64_t{1} << (2 * n); }
inline uint32_t grid_side(int n) { return uint32_t{1} << n; }

uint64_t z_index(GridPoint p, int n);
GridPoint z_point(uint64_t value, int n);

uint64_t gray_z_index(GridPoint p, int n);
GridPoint gray_z_point(uint64_t value, int n);

uint64_t hilbert_index(GridPoint p, int n);
GridPoint hilbert_point(uint64_t value, int n);

class HTables;

// Uniform dispatch. The cached mode is valid only for CurveId::H with
// tables built for at least n; anything else is a usage error
// (std::invalid_argument).
enum class EvalMode { Plain, Cached };

uint64_t curve_index(CurveId c, GridPoint p, int n);
uint64_t curve_index(CurveId c, GridPoint p, int n, EvalMode mode, const HTables* tables);
GridPoint curve_point(CurveId c, uint64_t value, int n);

}  // namespace sfc
