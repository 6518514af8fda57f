#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "sfcgeo/geocode.hpp"
#include "sfcgeo/hcurve.hpp"
#include "sfcgeo/rng.hpp"

using namespace sfc;

TEST_CASE("quantization frozen examples") {
    // (0,0) lies exactly on both midlines; ties round up into the upper cell.
    CHECK(point_to_cell({0.0f, 0.0f}, 1) == GridPoint{1, 1});
    CHECK(point_to_cell({-90.0f, -180.0f}, 1) == GridPoint{0, 0});
    // the north/east edges clamp into the last cell instead of overflowing
    CHECK(point_to_cell({90.0f, 180.0f}, 1) == GridPoint{1, 1});
    CHECK(point_to_cell({90.0f, 180.0f}, 16) == GridPoint{65535, 65535});
    // cell centers
    const GeoPoint a = cell_to_point({0, 0}, 1);
    CHECK(a.lat == doctest::Approx(-45.0));
    CHECK(a.lon == doctest::Approx(-90.0));
    const GeoPoint b = cell_to_point({1, 1}, 1);
    CHECK(b.lat == doctest::Approx(45.0));
    CHECK(b.lon == doctest::Approx(90.0));
}

TEST_CASE("hash text frozen examples") {
    CHECK(hash_length(16) == 7);
    CHECK(index_to_hash(0, 16) == "0000000");
    CHECK(index_to_hash(1, 16) == "0000001");
    CHECK(index_to_hash(31, 16) == "000000z");
    CHECK(index_to_hash(32, 16) == "0000010");
    CHECK(hash_to_index("0000001", 16) == 1);
    CHECK(hash_to_index("000000z", 16) == 31);
}

TEST_CASE("hash text validation") {
    // 'z' repeated encodes 32^7-1 which exceeds the 2^32 cells of n=16
    CHECK_THROWS_AS(hash_to_index("zzzzzzz", 16), std::invalid_argument);
    CHECK_THROWS_AS(hash_to_index("000000a", 16), std::invalid_argument);  // no 'a' in alphabet
    CHECK_THROWS_AS(hash_to_index("000001", 16), std::invalid_argument);   // wrong length
    CHECK_THROWS_AS(hash_to_index("00000!0", 16), std::invalid_argument);
    CHECK_THROWS_AS(index_to_hash(index_count(16), 16), std::domain_error);
    CHECK_THROWS_AS(check_geopoint({91.0f, 0.0f}), std::domain_error);
    CHECK_THROWS_AS(check_geopoint({0.0f, -180.5f}), std::domain_error);
}

TEST_CASE("alphabet skips a, i, l, o and is strictly increasing") {
    const std::string ab = kHashAlphabet;
    CHECK(ab.size() == 32);
    CHECK(ab.find('a') == std::string::npos);
    CHECK(ab.find('i') == std::string::npos);
    CHECK(ab.find('l') == std::string::npos);
    CHECK(ab.find('o') == std::string::npos);
    CHECK(std::is_sorted(ab.begin(), ab.end()));
}

TEST_CASE("lexicographic order of hashes equals numeric order of indices") {
    SplitMix64 g(7);
    for (int trial = 0; trial < 3000; ++trial) {
        const uint64_t a = g.next() % index_count(16);
        const uint64_t b = g.next() % index_count(16);
        CHECK((a < b) == (index_to_hash(a, 16) < index_to_hash(b, 16)));
    }
}

TEST_CASE("encode/decode round trip is a fixed point for every curve") {
    const HTables tables = build_h_tables(16);
    SplitMix64 g(0x5FC0DE);
    for (int i = 0; i < 1000; ++i) {
        const GeoPoint p{static_cast<float>(g.next_unit() * 180.0 - 90.0),
                         static_cast<float>(g.next_unit() * 360.0 - 180.0)};
        for (CurveId c : kAllCurves) {
            const Geohash h = encode_hash(p, c, 16);
            CHECK(h.text.size() == 7);
            const GeoPoint center = decode_hash(h);
            const Geohash again = encode_hash(center, c, 16);
            CHECK(again.text == h.text);
            if (c == CurveId::H)
                CHECK(encode_hash(p, c, 16, EvalMode::Cached, &tables).text == h.text);
        }
    }
}

TEST_CASE("hash digits really are the base-32 expansion of the curve index") {
    for (CurveId c : kAllCurves) {
        const GeoPoint p{37.77f, -122.42f};
        const Geohash h = encode_hash(p, c, 16);
        const uint64_t idx = curve_index(c, point_to_cell(p, 16), 16);
        CHECK(h.text == index_to_hash(idx, 16));
        CHECK(hash_to_index(h.text, 16) == idx);
    }
}

TEST_CASE("decode returns the cell center") {
    const Geohash h = encode_hash({12.5f, 77.6f}, CurveId::Hilbert, 16);
    const GeoPoint center = decode_hash(h);
    const GridPoint cell = point_to_cell({12.5f, 77.6f}, 16);
    const GeoPoint expect = cell_to_point(cell, 16);
    CHECK(center.lat == doctest::Approx(expect.lat));
    CHECK(center.lon == doctest::Approx(expect.lon));
}
