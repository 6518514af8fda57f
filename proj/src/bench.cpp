#include "sfcgeo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#ifdef __linux__
#include <sched.h>
#endif

#include "sfcgeo/geocode.hpp"
#include "sfcgeo/hcurve.hpp"
#include "sfcgeo/rng.hpp"

namespace sfc {

namespace {

using Clock = std::chrono::steady_clock;

inline void do_not_optimize(uint64_t v) { asm volatile("" : : "r"(v) : "memory"); }

double timer_granularity_ns() {
    // Smallest observed positive delta between consecutive readings.
    double best = 1e9;
    for (int i = 0; i < 1000; ++i) {
        const auto a = Clock::now();
        auto b = Clock::now();
        while (b == a) b = Clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::nano>(b - a).count());
    }
    return best;
}

void pin_to_one_cpu() {
#ifdef __linux__
    cpu_set_t set;
    CPU_ZERO(&set);
    CPU_SET(0, &set);
    sched_setaffinity(0, sizeof(set), &set);  // best effort
#endif
}

std::vector<GeoPoint> make_batch(uint64_t seed, uint64_t count) {
    SplitMix64 g = iteration_stream(seed, 0);
    std::vector<GeoPoint> batch;
    batch.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        const double lon = -180.0 + 360.0 * g.next_unit();
        const double lat = -90.0 + 180.0 * g.next_unit();
        batch.push_back({static_cast<float>(lat), static_cast<float>(lon)});
    }
    return batch;
}

// One timed pass over the batch; returns ns per point.
template <class Encode>
double time_batch(const std::vector<GeoPoint>& batch, double granularity_ns, Encode&& encode) {
    uint64_t sink = 0;
    const auto t0 = Clock::now();
    for (const GeoPoint& g : batch) sink += static_cast<uint64_t>(encode(g).text[0]);
    const auto t1 = Clock::now();
    do_not_optimize(sink);
    const double batch_ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
    if (batch_ns < 100.0 * granularity_ns)
        throw std::runtime_error("batch of " + std::to_string(batch.size()) + " took " +
                                 std::to_string(batch_ns) + " ns, under 100x the timer " +
                                 "granularity; increase batch_size");
    return batch_ns / static_cast<double>(batch.size());
}

VariantStats make_stats(const std::string& name, const std::vector<double>& rounds_ns) {
    VariantStats s;
    s.variant = name;
    std::vector<double> sorted = rounds_ns;
    std::sort(sorted.begin(), sorted.end());
    const size_t mid = sorted.size() / 2;
    s.median_ns = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    s.mean_ns = std::accumulate(sorted.begin(), sorted.end(), 0.0) / sorted.size();
    double var = 0;
    for (double v : sorted) var += (v - s.mean_ns) * (v - s.mean_ns);
    s.stddev_ns = std::sqrt(var / sorted.size());
    if (s.median_ns > s.mean_ns + 3.0 * s.stddev_ns + 1e-9)
        throw std::runtime_error("implausible timing distribution for " + name);
    return s;
}

}  // namespace

const VariantStats& BenchReport::row(const std::string& variant) const {
    for (const VariantStats& v : variants)
        if (v.variant == variant) return v;
    throw std::invalid_argument("no variant " + variant + " in report");
}

std::string machine_descriptor() {
    std::string model = "unknown cpu";
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    while (std::getline(cpuinfo, line)) {
        const auto pos = line.find("model name");
        if (pos != std::string::npos) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                model = line.substr(colon + 1);
                while (!model.empty() && model.front() == ' ') model.erase(model.begin());
            }
            break;
        }
    }
    return model + " / " + std::to_string(std::thread::hardware_concurrency()) + " hw threads";
}

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.warmup_rounds < 0) throw std::domain_error("warmup_rounds must be >= 0");
    if (cfg.measured_rounds < 3) throw std::domain_error("measured_rounds must be >= 3");
    if (cfg.batch_size < 1) throw std::domain_error("batch_size must be >= 1");
    check_granularity(cfg.n);

    pin_to_one_cpu();
    const std::vector<GeoPoint> batch = make_batch(cfg.seed, cfg.batch_size);
    const HTables tables = build_h_tables(cfg.n);  // built outside the timed region
    const int n = cfg.n;

    // Correctness sweep on the same batch before any timing.
    for (const GeoPoint& g : batch) {
        const GridPoint cell = point_to_cell(g, n);
        if (h_index_cached(tables, cell, n) != h_index(cell, n))
            throw std::runtime_error("cached H disagrees with plain H on the bench batch");
        for (CurveId c : kAllCurves) {
            const uint64_t idx = curve_index(c, cell, n);
            const GridPoint back = curve_point(c, idx, n);
            if (!(back == cell)) throw std::runtime_error("curve round trip failed on bench batch");
        }
    }

    const double granularity = timer_granularity_ns();
    BenchReport report;
    report.config = cfg;
    report.machine = machine_descriptor();

    const auto enc_z = [n](GeoPoint g) { return encode_hash(g, CurveId::Z, n); };
    const auto enc_h = [n](GeoPoint g) { return encode_hash(g, CurveId::H, n); };
    const auto enc_hil = [n](GeoPoint g) { return encode_hash(g, CurveId::Hilbert, n); };
    const auto enc_hc = [n, &tables](GeoPoint g) {
        return encode_hash(g, CurveId::H, n, EvalMode::Cached, &tables);
    };

    // Rounds are interleaved across the variants so that machine-wide speed
    // drift (shared hosts, frequency shifts) lands on every variant alike
    // instead of skewing whichever one was timed in the slow stretch.
    std::vector<double> r_z, r_h, r_hil, r_hc;
    for (int r = 0; r < cfg.warmup_rounds + cfg.measured_rounds; ++r) {
        const double tz = time_batch(batch, granularity, enc_z);
        const double th = time_batch(batch, granularity, enc_h);
        const double thil = time_batch(batch, granularity, enc_hil);
        const double thc = time_batch(batch, granularity, enc_hc);
        if (r >= cfg.warmup_rounds) {
            r_z.push_back(tz);
            r_h.push_back(th);
            r_hil.push_back(thil);
            r_hc.push_back(thc);
        }
    }
    report.variants.push_back(make_stats("Z", r_z));
    report.variants.push_back(make_stats("H", r_h));
    report.variants.push_back(make_stats("Hilbert", r_hil));
    report.variants.push_back(make_stats("H (cached)", r_hc));
    return report;
}

std::string emit_table(const BenchReport& r, ReportFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case ReportFormat::Text:
            out << "Curves | time, ns\n";
            for (const VariantStats& v : r.variants)
                out << v.variant << " | " << std::llround(v.median_ns) << '\n';
            out << "\nmachine: " << r.machine << '\n';
            out << "batch=" << r.config.batch_size << " rounds=" << r.config.measured_rounds
                << " n=" << r.config.n << " seed=" << r.config.seed << '\n';
            break;
        case ReportFormat::Csv:
            out << "variant,median_ns,mean_ns,stddev_ns,batch,rounds,n,seed,machine\n";
            for (const VariantStats& v : r.variants)
                out << '"' << v.variant << "\"," << v.median_ns << ',' << v.mean_ns << ','
                    << v.stddev_ns << ',' << r.config.batch_size << ',' << r.config.measured_rounds
                    << ',' << r.config.n << ',' << r.config.seed << ",\"" << r.machine << "\"\n";
            break;
        case ReportFormat::Json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const VariantStats& v : r.variants)
                rows.push_back({{"variant", v.variant},
                                {"median_ns", v.median_ns},
                                {"mean_ns", v.mean_ns},
                                {"stddev_ns", v.stddev_ns}});
            nlohmann::json j{{"machine", r.machine},
                             {"config",
                              {{"warmup_rounds", r.config.warmup_rounds},
                               {"measured_rounds", r.config.measured_rounds},
                               {"batch_size", r.config.batch_size},
                               {"n", r.config.n},
                               {"seed", r.config.seed}}},
                             {"variants", rows}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

BenchReport parse_csv_report(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) ||
        line != "variant,median_ns,mean_ns,stddev_ns,batch,rounds,n,seed,machine")
        throw std::invalid_argument("bad bench csv header");
    BenchReport r;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.size() < 2 || line[0] != '"') throw std::invalid_argument("bad bench csv row");
        const size_t name_end = line.find('"', 1);
        VariantStats v;
        v.variant = line.substr(1, name_end - 1);
        std::istringstream fields(line.substr(name_end + 2));
        char comma;
        uint64_t batch, seed;
        int rounds, n;
        fields >> v.median_ns >> comma >> v.mean_ns >> comma >> v.stddev_ns >> comma >> batch >>
            comma >> rounds >> comma >> n >> comma >> seed >> comma;
        r.config.batch_size = batch;
        r.config.measured_rounds = rounds;
        r.config.n = n;
        r.config.seed = seed;
        std::string machine;
        std::getline(fields, machine);
        if (machine.size() >= 2 && machine.front() == '"' && machine.back() == '"')
            machine = machine.substr(1, machine.size() - 2);
        r.machine = machine;
        r.variants.push_back(v);
    }
    return r;
}

}  // namespace sfc
