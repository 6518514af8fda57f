#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfcgeo/curves.hpp"

// Microbenchmark of the full geohash computation (quantization + curve
// index + base-32 text) per curve variant. Each variant is timed
// independently over the same pre-generated point batch; the H and Hilbert
// timings therefore contain no hidden Z computation. Timing loops are
// single-threaded and pinned to one logical processor where the platform
// allows it.

namespace sfc {

struct BenchConfig {
    int warmup_rounds = 2;
    int measured_rounds = 9;  // minimum 3
    uint64_t batch_size = 200000;
    int n = 16;
    uint64_t seed = 0x5FC0DE;
};

struct VariantStats {
    std::string variant;  // "Z", "H", "Hilbert", "H (cached)"
    double median_ns = 0;
    double mean_ns = 0;
    double stddev_ns = 0;
};

struct BenchReport {
    std::vector<VariantStats> variants;
    std::string machine;
    BenchConfig config;

    const VariantStats& row(const std::string& variant) const;
};

enum class ReportFormat { Text, Csv, Json };

std::string machine_descriptor();

// Throws std::runtime_error when the per-batch time is under 100x the
// timer granularity (grow the batch), std::domain_error on a bad config.
BenchReport run_bench(const BenchConfig& cfg);

std::string emit_table(const BenchReport& r, ReportFormat fmt);

// Summary parse of the csv form; inverse of emit_table(r, Csv).
BenchReport parse_csv_report(const std::string& csv);

}  // namespace sfc
