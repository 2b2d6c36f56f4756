#include "dynlocness/benchmark.hpp"
#include "dynlocness/colormap.hpp"
#include "dynlocness/detection.hpp"
#include "dynlocness/evaluation.hpp"
#include "dynlocness/stream.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>

namespace {

using namespace dynlocness;

int cmd_generate(const std::string& pattern, VertexId n, double p_in, double p_out, int steps,
                 double fraction, std::uint64_t seed, const std::string& out_stream,
                 const std::string& out_truth) {
    BenchmarkConfig cfg;
    cfg.pattern = pattern_from_name(pattern);
    cfg.n = n;
    cfg.p_in = p_in;
    cfg.p_out = p_out;
    cfg.steps = steps;
    cfg.fraction = fraction;
    cfg.seed = seed;
    GeneratedBenchmark b = generate(cfg);
    save_event_stream(out_stream, b.stream);
    save_timeline(out_truth, b.ground_truth);
    std::cerr << "generated " << pattern << " n=" << n << " steps=" << steps << " events="
              << b.edge_event_count << "\n";
    return 0;
}

int cmd_detect(const std::string& stream_path, const std::string& measure_name,
               const std::string& mode_name, const std::string& out_path, bool quiet) {
    EventStream s = load_event_stream(stream_path);
    Measure m = measure_from_name(measure_name);
    ReadMode mode = read_mode_from_name(mode_name);

    Detector det(build_initial_graph(s), m, mode);
    CommunityTimeline tl;
    tl.n = s.n;
    tl.snapshots.push_back(det.snapshot());
    if (!quiet)
        std::cout << "step 0: " << det.community_count() << " communities\n";
    for (const auto& batch : s.batches) {
        tl.snapshots.push_back(det.process_step(batch));
        if (!quiet)
            std::cout << "step " << batch.step << ": " << det.community_count()
                      << " communities\n";
    }
    save_timeline(out_path, tl);
    return 0;
}

int cmd_evaluate(const std::string& detected_path, const std::string& truth_path,
                 const std::string& metric) {
    CommunityTimeline detected = load_timeline(detected_path);
    CommunityTimeline truth = load_timeline(truth_path);
    MetricSeries series = evaluate_timeline(detected, truth);

    bool want_nmi = metric == "nmi" || metric == "both";
    bool want_nvi = metric == "nvi" || metric == "both";
    std::cout << "step";
    if (want_nmi) std::cout << ",nmi";
    if (want_nvi) std::cout << ",nvi";
    std::cout << "\n";
    char buf[64];
    for (std::size_t t = 0; t < series.nmi_values.size(); ++t) {
        std::cout << t;
        if (want_nmi) {
            std::snprintf(buf, sizeof buf, ",%.6f", series.nmi_values[t]);
            std::cout << buf;
        }
        if (want_nvi) {
            std::snprintf(buf, sizeof buf, ",%.6f", series.nvi_values[t]);
            std::cout << buf;
        }
        std::cout << "\n";
    }
    std::cout << "mean";
    if (want_nmi) {
        std::snprintf(buf, sizeof buf, ",%.6f", series.mean_nmi);
        std::cout << buf;
    }
    if (want_nvi) {
        std::snprintf(buf, sizeof buf, ",%.6f", series.mean_nvi);
        std::cout << buf;
    }
    std::cout << "\n";
    return 0;
}

int cmd_colormap(const std::string& timeline_path, const std::string& out_path) {
    CommunityTimeline tl = load_timeline(timeline_path);
    save_colormap_ppm(out_path, tl);
    return 0;
}

int cmd_bench(const std::vector<VertexId>& sizes, int steps, const std::string& measure_name,
              int reps, std::uint64_t seed) {
    Measure m = measure_from_name(measure_name);
    std::cout << "n,events,mean_seconds\n";
    for (VertexId n : sizes) {
        BenchmarkConfig cfg;
        cfg.n = n;
        cfg.steps = steps;
        cfg.pattern = Pattern::GrowShrink;
        cfg.seed = seed;
        GeneratedBenchmark b = generate_grow_shrink(cfg);

        std::vector<double> times;
        times.reserve(reps);
        for (int r = 0; r < reps; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            Detector det(build_initial_graph(b.stream), m);
            for (const auto& batch : b.stream.batches) det.process_step(batch);
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        double mean = 0.0;
        for (double t : times) mean += t;
        mean /= times.size();
        double var = 0.0;
        for (double t : times) var += (t - mean) * (t - mean);
        double stddev = times.size() > 1 ? std::sqrt(var / (times.size() - 1)) : 0.0;

        char buf[128];
        std::snprintf(buf, sizeof buf, "%u,%llu,%.6f\n", n,
                      static_cast<unsigned long long>(b.edge_event_count), mean);
        std::cout << buf << std::flush;
        std::snprintf(buf, sizeof buf, "n=%u stddev=%.6f s over %d reps\n", n, stddev, reps);
        std::cerr << buf;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Event-driven vertex-centred community detection on evolving graphs"};
    app.require_subcommand(1);

    // generate
    std::string pattern = "grow-shrink";
    VertexId n = 64;
    double p_in = 0.5, p_out = 0.05, fraction = 0.5;
    int steps = 100;
    std::uint64_t seed = 0;
    std::string out_stream, out_truth;
    auto* gen = app.add_subcommand("generate", "Generate an evolving benchmark with ground truth");
    gen->add_option("--pattern", pattern)
        ->check(CLI::IsMember({"grow-shrink", "merge-split"}));
    gen->add_option("--n", n, "vertex count (even)");
    gen->add_option("--p-in", p_in, "intra-community edge probability");
    gen->add_option("--p-out", p_out, "inter-community edge probability");
    gen->add_option("--steps", steps, "number of time steps");
    gen->add_option("--fraction", fraction, "grow-shrink migration fraction");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--out-stream", out_stream)->required();
    gen->add_option("--out-truth", out_truth)->required();

    // detect
    std::string stream_path, measure = "cwcn", read_mode = "sequential", out_timeline;
    bool quiet = false;
    auto* det = app.add_subcommand("detect", "Run community detection over an event stream");
    det->add_option("--stream", stream_path)->required();
    det->add_option("--measure", measure)
        ->check(CLI::IsMember({"jaccard", "adamic-adar", "pref-attach", "cwcn"}));
    det->add_option("--read-mode", read_mode)
        ->check(CLI::IsMember({"sequential", "snapshot"}));
    det->add_option("--out", out_timeline)->required();
    det->add_flag("-q,--quiet", quiet, "suppress per-step community counts");

    // evaluate
    std::string detected_path, truth_path, metric = "both";
    auto* ev = app.add_subcommand("evaluate", "Score a detected timeline against ground truth");
    ev->add_option("--detected", detected_path)->required();
    ev->add_option("--truth", truth_path)->required();
    ev->add_option("--metric", metric)->check(CLI::IsMember({"nmi", "nvi", "both"}));

    // colormap
    std::string timeline_path, out_image;
    auto* cm = app.add_subcommand("colormap", "Render a timeline as a PPM image");
    cm->add_option("--timeline", timeline_path)->required();
    cm->add_option("--out", out_image)->required();

    // bench
    std::vector<VertexId> sizes = {64, 128, 256, 512, 1024, 2048};
    int bench_steps = 10, reps = 5;
    std::string bench_measure = "cwcn";
    std::uint64_t bench_seed = 1;
    auto* be = app.add_subcommand("bench", "Time detection across benchmark sizes");
    be->add_option("--sizes", sizes)->delimiter(',');
    be->add_option("--steps", bench_steps);
    be->add_option("--measure", bench_measure)
        ->check(CLI::IsMember({"jaccard", "adamic-adar", "pref-attach", "cwcn"}));
    be->add_option("--reps", reps);
    be->add_option("--seed", bench_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help/version
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_generate(pattern, n, p_in, p_out, steps, fraction, seed, out_stream,
                                out_truth);
        if (det->parsed()) return cmd_detect(stream_path, measure, read_mode, out_timeline, quiet);
        if (ev->parsed()) return cmd_evaluate(detected_path, truth_path, metric);
        if (cm->parsed()) return cmd_colormap(timeline_path, out_image);
        if (be->parsed()) return cmd_bench(sizes, bench_steps, bench_measure, reps, bench_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
