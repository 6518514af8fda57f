// sfcgeo command line: encode/decode geohashes, run the curve comparison
// experiment, cluster analysis, and benchmarks.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfcgeo/bench.hpp"
#include "sfcgeo/curves.hpp"
#include "sfcgeo/geocode.hpp"
#include "sfcgeo/hcurve.hpp"
#include "sfcgeo/metrics.hpp"

namespace {

using namespace sfc;

enum class OutFormat { Text, Csv, Json };

struct Common {
    std::string format = "text";
    std::string out;

    OutFormat fmt() const {
        if (format == "text") return OutFormat::Text;
        if (format == "csv") return OutFormat::Csv;
        if (format == "json") return OutFormat::Json;
        throw std::invalid_argument("unknown format: " + format);
    }

    void deliver(const std::string& body) const {
        if (out.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out);
        f << body;
    }
};

uint64_t seed_or_env(std::optional<uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SFC_GEOHASH_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 0);
        if (end == env || *end != '\0')
            throw std::invalid_argument(std::string("SFC_GEOHASH_SEED is not an integer: ") + env);
        return v;
    }
    return kDefaultSeed;
}

std::string run_encode(double lat, double lon, const std::string& curve, int n,
                       const std::string& mode, const Common& io) {
    const CurveId c = curve_from_name(curve);
    const GeoPoint p{static_cast<float>(lat), static_cast<float>(lon)};
    Geohash g;
    if (mode == "plain") {
        g = encode_hash(p, c, n);
    } else if (mode == "cached") {
        const HTables tables = build_h_tables(n);
        g = encode_hash(p, c, n, EvalMode::Cached, &tables);
    } else {
        throw std::invalid_argument("unknown mode: " + mode);
    }
    std::ostringstream s;
    switch (io.fmt()) {
        case OutFormat::Text:
            s << "lat=" << p.lat << " lon=" << p.lon << " curve=" << curve_name(c) << " n=" << n
              << " hash=" << g.text << '\n';
            break;
        case OutFormat::Csv:
            s << "lat,lon,curve,n,hash\n"
              << p.lat << ',' << p.lon << ',' << curve_name(c) << ',' << n << ',' << g.text
              << '\n';
            break;
        case OutFormat::Json:
            s << nlohmann::json{{"lat", p.lat},
                                {"lon", p.lon},
                                {"curve", std::string(curve_name(c))},
                                {"n", n},
                                {"hash", g.text}}
                     .dump(2)
              << '\n';
            break;
    }
    return s.str();
}

std::string run_decode(const std::string& hash, const std::string& curve, int n,
                       const Common& io) {
    const CurveId c = curve_from_name(curve);
    const GeoPoint center = decode_hash({hash, c, n});
    const double cell_lat = 180.0 / static_cast<double>(grid_side(n));
    const double cell_lon = 360.0 / static_cast<double>(grid_side(n));
    const double lat0 = center.lat - cell_lat / 2, lat1 = center.lat + cell_lat / 2;
    const double lon0 = center.lon - cell_lon / 2, lon1 = center.lon + cell_lon / 2;
    std::ostringstream s;
    switch (io.fmt()) {
        case OutFormat::Text:
            s << "hash=" << hash << " curve=" << curve_name(c) << " n=" << n
              << " center=(" << center.lat << ',' << center.lon << ")"
              << " lat=[" << lat0 << ',' << lat1 << "] lon=[" << lon0 << ',' << lon1 << "]\n";
            break;
        case OutFormat::Csv:
            s << "hash,curve,n,center_lat,center_lon,lat0,lat1,lon0,lon1\n"
              << hash << ',' << curve_name(c) << ',' << n << ',' << center.lat << ','
              << center.lon << ',' << lat0 << ',' << lat1 << ',' << lon0 << ',' << lon1 << '\n';
            break;
        case OutFormat::Json:
            s << nlohmann::json{{"hash", hash},
                                {"curve", std::string(curve_name(c))},
                                {"n", n},
                                {"center", {{"lat", center.lat}, {"lon", center.lon}}},
                                {"lat_bounds", {lat0, lat1}},
                                {"lon_bounds", {lon0, lon1}}}
                     .dump(2)
              << '\n';
            break;
    }
    return s.str();
}

std::string run_compare(const ExperimentConfig& cfg, const Common& io) {
    const TallyResult t = run_experiment(cfg);
    const double hz = pairwise_share(cfg, CurveId::Hilbert, CurveId::Z);
    std::ostringstream s;
    switch (io.fmt()) {
        case OutFormat::Text: {
            s << "edit-distance wins over " << t.total_comparisons << " comparisons (n=" << cfg.n
              << ", offset=" << cfg.neighbor_offset_degrees << ", seed=" << cfg.seed << ")\n";
            char buf[64];
            for (CurveId c : t.curves) {
                std::snprintf(buf, sizeof buf, "%-8s wins=%-8llu share=%.2f\n",
                              std::string(curve_name(c)).c_str(),
                              static_cast<unsigned long long>(t.win_count(c)), t.share(c));
                s << buf;
            }
            s << "ties     " << t.ties << '\n';
            std::snprintf(buf, sizeof buf, "pairwise hilbert<z share=%.2f\n", hz);
            s << buf;
            break;
        }
        case OutFormat::Csv:
            s << tally_to_csv(t) << "\npair,share\nhilbert<z," << hz << '\n';
            break;
        case OutFormat::Json: {
            nlohmann::json j = nlohmann::json::parse(tally_to_json(t));
            j["hilbert_vs_z"] = hz;
            s << j.dump(2) << '\n';
            break;
        }
    }
    return s.str();
}

std::string run_clusters(const std::string& cls, int k, const std::string& curve, int n,
                         const Common& io) {
    QueryClass qc;
    if (cls == "windows")
        qc = QueryClass::Windows;
    else if (cls == "rects")
        qc = QueryClass::AllRects;
    else
        throw std::invalid_argument("unknown query class: " + cls);
    std::vector<CurveId> curves;
    if (curve == "all")
        curves.assign(std::begin(kAllCurves), std::end(kAllCurves));
    else
        curves.push_back(curve_from_name(curve));
    const ClusterReport r = cluster_report(qc, k, curves, n);
    std::ostringstream s;
    switch (io.fmt()) {
        case OutFormat::Text:
            s << "average clusters, " << (qc == QueryClass::Windows ? "windows" : "rects");
            if (qc == QueryClass::Windows) s << " k=" << k;
            s << ", n=" << n << '\n';
            for (const ClusterReportEntry& e : r.rows)
                s << "  " << curve_name(e.curve) << " " << e.avg_clusters << '\n';
            break;
        case OutFormat::Csv:
            s << cluster_report_to_csv(r);
            break;
        case OutFormat::Json:
            s << cluster_report_to_json(r) << '\n';
            break;
    }
    return s.str();
}

std::string run_bench_cmd(const BenchConfig& cfg, const Common& io) {
    const BenchReport r = run_bench(cfg);
    ReportFormat f = ReportFormat::Text;
    if (io.fmt() == OutFormat::Csv) f = ReportFormat::Csv;
    if (io.fmt() == OutFormat::Json) f = ReportFormat::Json;
    return emit_table(r, f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-filling-curve geohash tool"};
    app.require_subcommand(1);

    Common io;
    std::optional<uint64_t> seed;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", io.format, "output format: text|csv|json");
        cmd->add_option("--out", io.out, "write output to file instead of stdout");
    };

    // encode
    double lat = 0, lon = 0;
    int codec_n = kDefaultGranularity;
    std::string codec_curve = "z";
    std::string mode = "plain";
    CLI::App* enc = app.add_subcommand("encode", "geohash of a coordinate");
    enc->add_option("--lat", lat, "latitude, degrees")->required();
    enc->add_option("--lon", lon, "longitude, degrees")->required();
    enc->add_option("--curve", codec_curve, "curve: z|grayz|hilbert|h");
    enc->add_option("--n", codec_n, "subdivision granularity");
    enc->add_option("--mode", mode, "evaluation mode: plain|cached (cached is H-only)");
    add_common(enc);

    // decode
    std::string hash;
    CLI::App* dec = app.add_subcommand("decode", "coordinate of a geohash");
    dec->add_option("--hash", hash, "geohash string")->required();
    dec->add_option("--curve", codec_curve, "curve: z|grayz|hilbert|h");
    dec->add_option("--n", codec_n, "subdivision granularity");
    add_common(dec);

    // compare
    ExperimentConfig ecfg;
    CLI::App* cmp = app.add_subcommand("compare", "edit-distance win-rate experiment");
    cmp->add_option("--points", ecfg.points_per_iteration, "points per iteration");
    cmp->add_option("--iterations", ecfg.iterations, "iterations");
    cmp->add_option("--n", ecfg.n, "subdivision granularity");
    cmp->add_option("--offset", ecfg.neighbor_offset_degrees, "neighbor offset, degrees");
    cmp->add_option("--seed", seed, "experiment seed");
    add_common(cmp);

    // clusters
    std::string cls = "windows";
    std::string clu_curve = "all";
    int k = 2;
    int clu_n = 3;
    CLI::App* clu = app.add_subcommand("clusters", "average cluster counts");
    clu->add_option("--class", cls, "query class: windows|rects");
    clu->add_option("--k", k, "window side (windows class)");
    clu->add_option("--curve", clu_curve, "curve: z|grayz|hilbert|h|all");
    clu->add_option("--n", clu_n, "subdivision granularity");
    add_common(clu);

    // bench
    BenchConfig bcfg;
    CLI::App* ben = app.add_subcommand("bench", "geohash throughput benchmark");
    ben->add_option("--warmup", bcfg.warmup_rounds, "warmup rounds");
    ben->add_option("--rounds", bcfg.measured_rounds, "measured rounds (minimum 3)");
    ben->add_option("--batch", bcfg.batch_size, "points per round");
    ben->add_option("--n", bcfg.n, "subdivision granularity");
    ben->add_option("--seed", seed, "batch seed");
    add_common(ben);

    CLI11_PARSE(app, argc, argv);

    try {
        std::string body;
        if (enc->parsed()) body = run_encode(lat, lon, codec_curve, codec_n, mode, io);
        if (dec->parsed()) body = run_decode(hash, codec_curve, codec_n, io);
        if (cmp->parsed()) {
            ecfg.seed = seed_or_env(seed);
            body = run_compare(ecfg, io);
        }
        if (clu->parsed()) body = run_clusters(cls, k, clu_curve, clu_n, io);
        if (ben->parsed()) {
            bcfg.seed = seed_or_env(seed);
            body = run_bench_cmd(bcfg, io);
        }
        io.deliver(body);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
