#include "sfcgeo/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sfcgeo/geocode.hpp"
#include "sfcgeo/rng.hpp"

namespace sfc {

uint64_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<uint64_t> row(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        uint64_t diag = row[0];
        row[0] = i;
        for (size_t j = 1; j <= b.size(); ++j) {
            const uint64_t prev = row[j];
            if (a[i - 1] == b[j - 1])
                row[j] = diag;
            else
                row[j] = 1 + std::min({diag, row[j], row[j - 1]});
            diag = prev;
        }
    }
    return row[b.size()];
}

namespace {

void check_rect(QueryRect q, int n) {
    check_granularity(n);
    const uint32_t side = grid_side(n);
    if (q.x0 > q.x1 || q.y0 > q.y1 || q.x1 >= side || q.y1 >= side)
        throw std::domain_error("query rectangle [" + std::to_string(q.x0) + "," +
                                std::to_string(q.x1) + "]x[" + std::to_string(q.y0) + "," +
                                std::to_string(q.y1) + "] invalid for n=" + std::to_string(n));
}

uint64_t count_clusters_sorted(std::vector<uint64_t>& idx) {
    std::sort(idx.begin(), idx.end());
    uint64_t runs = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] != idx[i - 1] + 1) ++runs;
    return runs;
}

}  // namespace

uint64_t count_clusters(QueryRect q, CurveId c, int n) {
    check_rect(q, n);
    std::vector<uint64_t> idx;
    idx.reserve(size_t{q.x1 - q.x0 + 1} * (q.y1 - q.y0 + 1));
    for (uint32_t y = q.y0; y <= q.y1; ++y)
        for (uint32_t x = q.x0; x <= q.x1; ++x) idx.push_back(curve_index(c, {x, y}, n));
    return count_clusters_sorted(idx);
}

double average_clusters(QueryClass cls, int k, CurveId c, int n) {
    check_granularity(n);
    const uint64_t side = grid_side(n);
    uint64_t queries;
    if (cls == QueryClass::Windows) {
        if (k < 1 || static_cast<uint64_t>(k) > side)
            throw std::domain_error("window side k=" + std::to_string(k) +
                                    " invalid for n=" + std::to_string(n));
        const uint64_t span = side - static_cast<uint64_t>(k) + 1;
        queries = span * span;
    } else {
        const double per_axis = 0.5 * static_cast<double>(side) * (static_cast<double>(side) + 1);
        if (per_axis * per_axis > 1e8)
            throw std::length_error("exhaustive rectangle enumeration needs " +
                                    std::to_string(per_axis * per_axis) +
                                    " queries; use a smaller n");
        queries = static_cast<uint64_t>(per_axis * per_axis);
    }
    if (queries > 100000000ull)
        throw std::length_error("query class enumerates " + std::to_string(queries) +
                                " queries; use a smaller n");

    uint64_t total = 0;
    if (cls == QueryClass::Windows) {
        const int64_t span = static_cast<int64_t>(side) - k + 1;
#pragma omp parallel for collapse(2) reduction(+ : total) schedule(static)
        for (int64_t y0 = 0; y0 < span; ++y0)
            for (int64_t x0 = 0; x0 < span; ++x0)
                total += count_clusters({static_cast<uint32_t>(x0), static_cast<uint32_t>(y0),
                                         static_cast<uint32_t>(x0 + k - 1),
                                         static_cast<uint32_t>(y0 + k - 1)},
                                        c, n);
    } else {
        const int64_t s = static_cast<int64_t>(side);
#pragma omp parallel for collapse(2) reduction(+ : total) schedule(dynamic)
        for (int64_t y0 = 0; y0 < s; ++y0)
            for (int64_t x0 = 0; x0 < s; ++x0)
                for (int64_t y1 = y0; y1 < s; ++y1)
                    for (int64_t x1 = x0; x1 < s; ++x1)
                        total += count_clusters(
                            {static_cast<uint32_t>(x0), static_cast<uint32_t>(y0),
                             static_cast<uint32_t>(x1), static_cast<uint32_t>(y1)},
                            c, n);
    }
    return static_cast<double>(total) / static_cast<double>(queries);
}

ClusterReport cluster_report(QueryClass cls, int k, const std::vector<CurveId>& curves, int n) {
    ClusterReport r{cls, k, n, {}};
    for (CurveId c : curves) r.rows.push_back({c, average_clusters(cls, k, c, n)});
    return r;
}

void check_config(const ExperimentConfig& cfg) {
    check_granularity(cfg.n);
    if (cfg.points_per_iteration < 1)
        throw std::domain_error("points_per_iteration must be >= 1");
    if (cfg.iterations < 1) throw std::domain_error("iterations must be >= 1");
    if (!(cfg.neighbor_offset_degrees > 0))
        throw std::domain_error("neighbor_offset_degrees must be > 0");
}

double TallyResult::share(CurveId c) const {
    uint64_t strict = 0;
    for (uint64_t w : wins) strict += w;
    if (strict == 0) return 0.0;
    return static_cast<double>(win_count(c)) / static_cast<double>(strict);
}

namespace {

std::vector<CurveId> participants(const ExperimentConfig& cfg) {
    if (cfg.include_grayz)
        return {CurveId::Z, CurveId::GrayZ, CurveId::Hilbert, CurveId::H};
    return {CurveId::Z, CurveId::Hilbert, CurveId::H};
}

// Visits every comparison of one iteration in point order, handing the
// per-curve hash distances to fn.
template <class Fn>
void walk_iteration(const ExperimentConfig& cfg, const std::vector<CurveId>& curves, uint64_t iter,
                    Fn&& fn) {
    SplitMix64 g = iteration_stream(cfg.seed, iter);
    const double off = cfg.neighbor_offset_degrees;
    for (uint64_t k = 0; k < cfg.points_per_iteration; ++k) {
        const double lon = -180.0 + 360.0 * g.next_unit();
        const double lat = -90.0 + 180.0 * g.next_unit();
        const double dlon = off * (2.0 * g.next_unit() - 1.0);
        const double dlat = off * (2.0 * g.next_unit() - 1.0);
        const GeoPoint base{static_cast<float>(lat), static_cast<float>(lon)};
        const GeoPoint partner{static_cast<float>(std::clamp(lat + dlat, -90.0, 90.0)),
                               static_cast<float>(std::clamp(lon + dlon, -180.0, 180.0))};
        const GridPoint cb = point_to_cell(base, cfg.n);
        const GridPoint cp = point_to_cell(partner, cfg.n);
        std::array<uint64_t, 4> dist{};
        for (CurveId c : curves) {
            const std::string hb = index_to_hash(curve_index(c, cb, cfg.n), cfg.n);
            const std::string hp = index_to_hash(curve_index(c, cp, cfg.n), cfg.n);
            dist[static_cast<size_t>(c)] = levenshtein(hb, hp);
        }
        fn(dist);
    }
}

struct IterTally {
    std::array<uint64_t, 4> wins{};
    uint64_t ties = 0;
};

TallyResult run_experiment_impl(const ExperimentConfig& cfg, bool parallel) {
    check_config(cfg);
    const std::vector<CurveId> curves = participants(cfg);
    std::vector<IterTally> per_iter(cfg.iterations);

    const int64_t iters = static_cast<int64_t>(cfg.iterations);
#pragma omp parallel for if (parallel) schedule(static)
    for (int64_t it = 0; it < iters; ++it) {
        IterTally t;
        walk_iteration(cfg, curves, static_cast<uint64_t>(it),
                       [&](const std::array<uint64_t, 4>& dist) {
                           uint64_t best = std::numeric_limits<uint64_t>::max();
                           size_t winner = 0, at_best = 0;
                           for (CurveId c : curves) {
                               const uint64_t d = dist[static_cast<size_t>(c)];
                               if (d < best) {
                                   best = d;
                                   winner = static_cast<size_t>(c);
                                   at_best = 1;
                               } else if (d == best) {
                                   ++at_best;
                               }
                           }
                           if (at_best == 1)
                               ++t.wins[winner];
                           else
                               ++t.ties;
                       });
        per_iter[static_cast<size_t>(it)] = t;
    }

    TallyResult result;
    result.curves = curves;
    for (const IterTally& t : per_iter) {
        for (size_t i = 0; i < 4; ++i) result.wins[i] += t.wins[i];
        result.ties += t.ties;
    }
    result.total_comparisons = cfg.points_per_iteration * cfg.iterations;
    return result;
}

}  // namespace

TallyResult run_experiment(const ExperimentConfig& cfg) { return run_experiment_impl(cfg, true); }

TallyResult run_experiment_serial(const ExperimentConfig& cfg) {
    return run_experiment_impl(cfg, false);
}

double pairwise_share(const ExperimentConfig& cfg, CurveId a, CurveId b) {
    if (a == b) throw std::invalid_argument("pairwise_share needs two distinct curves");
    check_config(cfg);
    const std::vector<CurveId> curves = participants(cfg);
    const int64_t iters = static_cast<int64_t>(cfg.iterations);
    std::vector<std::array<uint64_t, 2>> per_iter(cfg.iterations, {0, 0});
#pragma omp parallel for schedule(static)
    for (int64_t it = 0; it < iters; ++it) {
        std::array<uint64_t, 2> counts{};
        walk_iteration(cfg, curves, static_cast<uint64_t>(it),
                       [&](const std::array<uint64_t, 4>& dist) {
                           const uint64_t da = dist[static_cast<size_t>(a)];
                           const uint64_t db = dist[static_cast<size_t>(b)];
                           if (da < db)
                               ++counts[0];
                           else if (db < da)
                               ++counts[1];
                       });
        per_iter[static_cast<size_t>(it)] = counts;
    }
    uint64_t a_less = 0, b_less = 0;
    for (const auto& c : per_iter) {
        a_less += c[0];
        b_less += c[1];
    }
    if (a_less + b_less == 0) return 0.0;
    return static_cast<double>(a_less) / static_cast<double>(a_less + b_less);
}

namespace {

std::string class_descriptor(const ClusterReport& r) {
    if (r.query_class == QueryClass::AllRects) return "rects";
    return "windows:" + std::to_string(r.k);
}

}  // namespace

std::string tally_to_json(const TallyResult& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (CurveId c : t.curves)
        rows.push_back({{"curve", std::string(curve_name(c))},
                        {"wins", t.win_count(c)},
                        {"share", t.share(c)}});
    nlohmann::json j{{"curves", rows}, {"ties", t.ties}, {"total", t.total_comparisons}};
    return j.dump(2);
}

std::string tally_to_csv(const TallyResult& t) {
    std::ostringstream out;
    out << "curve,wins,share,ties,total\n";
    for (CurveId c : t.curves)
        out << curve_name(c) << ',' << t.win_count(c) << ',' << t.share(c) << ',' << t.ties << ','
            << t.total_comparisons << '\n';
    return out.str();
}

std::string cluster_report_to_json(const ClusterReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ClusterReportEntry& e : r.rows)
        rows.push_back(
            {{"curve", std::string(curve_name(e.curve))}, {"avg_clusters", e.avg_clusters}});
    nlohmann::json j{{"class", class_descriptor(r)}, {"n", r.n}, {"rows", rows}};
    return j.dump(2);
}

std::string cluster_report_to_csv(const ClusterReport& r) {
    std::ostringstream out;
    out << "class,n,curve,avg_clusters\n";
    for (const ClusterReportEntry& e : r.rows)
        out << class_descriptor(r) << ',' << r.n << ',' << curve_name(e.curve) << ','
            << e.avg_clusters << '\n';
    return out.str();
}

}  // namespace sfc
