#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sfcgeo/curves.hpp"

// Quantitative curve comparison: edit distance over hash strings, cluster
// counting for rectangular queries, and the seeded nearby-pair win-rate
// experiment. run_experiment partitions iterations across OpenMP threads;
// per-iteration substreams and ordered aggregation make the result
// bit-identical to run_experiment_serial at any thread count.

namespace sfc {

uint64_t levenshtein(std::string_view a, std::string_view b);

// Inclusive cell bounds; never empty.
struct QueryRect {
    uint32_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

// Number of maximal runs of consecutive curve indices inside q.
uint64_t count_clusters(QueryRect q, CurveId c, int n);

enum class QueryClass { AllRects, Windows };

// Exact mean of count_clusters over every query of the class; no sampling.
// Throws std::length_error when the class would enumerate > 10^8 queries.
double average_clusters(QueryClass cls, int k, CurveId c, int n);

struct ClusterReportEntry {
    CurveId curve;
    double avg_clusters;
};

struct ClusterReport {
    QueryClass query_class;
    int k = 0;  // window side; unused for AllRects
    int n = 0;
    std::vector<ClusterReportEntry> rows;
};

ClusterReport cluster_report(QueryClass cls, int k, const std::vector<CurveId>& curves, int n);

inline constexpr uint64_t kDefaultSeed = 0x5FC0DE;

struct ExperimentConfig {
    uint64_t points_per_iteration = 1000;
    uint64_t iterations = 100;
    uint64_t seed = kDefaultSeed;
    int n = 16;
    double neighbor_offset_degrees = 0.05;
    bool include_grayz = false;  // the three-way tally of the default setup excludes GrayZ
};

void check_config(const ExperimentConfig& cfg);

struct TallyResult {
    std::vector<CurveId> curves;            // participants, fixed order
    std::array<uint64_t, 4> wins{};         // indexed by CurveId
    uint64_t ties = 0;
    uint64_t total_comparisons = 0;

    // Strict-win share: wins[c] / total strict wins (0 when nothing was won).
    double share(CurveId c) const;
    uint64_t win_count(CurveId c) const { return wins[static_cast<size_t>(c)]; }
};

TallyResult run_experiment(const ExperimentConfig& cfg);
TallyResult run_experiment_serial(const ExperimentConfig& cfg);

// Fraction of comparisons where a's hash distance is strictly smaller than
// b's, among the comparisons where the two differ. Same point stream as
// run_experiment.
double pairwise_share(const ExperimentConfig& cfg, CurveId a, CurveId b);

// Serialization with stable field names (curve, wins, share, ties, total /
// class, n, curve, avg_clusters).
std::string tally_to_json(const TallyResult& t);
std::string tally_to_csv(const TallyResult& t);
std::string cluster_report_to_json(const ClusterReport& r);
std::string cluster_report_to_csv(const ClusterReport& r);

}  // namespace sfc
