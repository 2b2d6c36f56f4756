#include "dynlocness/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace dynlocness {

Pattern pattern_from_name(const std::string& name) {
    if (name == "grow-shrink") return Pattern::GrowShrink;
    if (name == "merge-split") return Pattern::MergeSplit;
    throw std::invalid_argument("unknown pattern '" + name + "'");
}

std::uint32_t Rng::below(std::uint32_t bound) {
    // rejection sampling over the top 32 bits
    std::uint64_t threshold = (std::uint64_t{1} << 32) % bound;
    for (;;) {
        std::uint64_t r = eng_() >> 32;
        if (r >= threshold) return static_cast<std::uint32_t>(r % bound);
    }
}

namespace {

void validate(const BenchmarkConfig& cfg) {
    if (cfg.n < 2 || cfg.n % 2 != 0)
        throw ConfigInvalid("n must be even and >= 2");
    if (!(0.0 <= cfg.p_out && cfg.p_out < cfg.p_in && cfg.p_in <= 1.0))
        throw ConfigInvalid("need 0 <= p_out < p_in <= 1");
    if (cfg.steps < 2) throw ConfigInvalid("steps must be >= 2");
    if (cfg.pattern == Pattern::GrowShrink) {
        if (!(cfg.fraction > 0.0 && cfg.fraction <= 1.0))
            throw ConfigInvalid("fraction must be in (0,1]");
        long amplitude = std::llround(cfg.fraction * cfg.n / 2.0);
        if (amplitude < 1)
            throw ConfigInvalid("fraction too small: no vertex ever migrates");
        if (amplitude >= cfg.n / 2)
            throw ConfigInvalid("fraction too large: the donor community would empty out");
    }
}

std::uint64_t pair_key(VertexId n, VertexId a, VertexId b) {
    return static_cast<std::uint64_t>(a) * n + b;
}

CommunitySnapshot labels_to_snapshot(const std::vector<CommunityId>& comm) {
    CommunitySnapshot snap(comm.size());
    for (std::size_t v = 0; v < comm.size(); ++v) snap[v] = {comm[v]};
    return snap;
}

} // namespace

std::pair<std::vector<std::pair<VertexId, VertexId>>, std::vector<CommunityId>>
generate_planted_bisection(VertexId n, double p_in, double p_out, Rng& rng) {
    VertexId half = n / 2;
    std::vector<CommunityId> comm(n);
    for (VertexId v = 0; v < n; ++v) comm[v] = v < half ? 0 : 1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            double p = comm[u] == comm[v] ? p_in : p_out;
            if (rng.unit() < p) edges.emplace_back(u, v);
        }
    return {std::move(edges), std::move(comm)};
}

GeneratedBenchmark generate_grow_shrink(const BenchmarkConfig& cfg) {
    validate(cfg);
    const VertexId n = cfg.n, half = n / 2;
    const long amplitude = std::lround(cfg.fraction * n / 2.0);

    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        Rng rng(cfg.seed + attempt);
        auto [edges0, comm] = generate_planted_bisection(n, cfg.p_in, cfg.p_out, rng);

        GeneratedBenchmark out;
        out.stream.n = n;
        out.stream.initial_edges = edges0;
        out.ground_truth.n = n;
        out.ground_truth.snapshots.push_back(labels_to_snapshot(comm));
        out.edge_event_count = edges0.size();

        std::unordered_set<std::uint64_t> cur;
        cur.reserve(edges0.size() * 2);
        for (const auto& [u, v] : edges0) cur.insert(pair_key(n, u, v));

        long m_prev = 0;
        bool ok = true;
        for (int t = 1; t <= cfg.steps; ++t) {
            long m_t = std::llround(amplitude *
                                    (1.0 - std::abs(1.0 - 2.0 * t / cfg.steps)));
            // community 1 grows by pulling boundary vertices out of block 0,
            // nearest the boundary first, so its size follows n/2 + wave
            std::vector<VertexId> migrants;
            if (m_t > m_prev) {
                for (long k = m_prev; k < m_t; ++k) {
                    migrants.push_back(static_cast<VertexId>(half - 1 - k));
                    comm[half - 1 - k] = 1;
                }
            } else if (m_t < m_prev) {
                for (long k = m_t; k < m_prev; ++k) {
                    migrants.push_back(static_cast<VertexId>(half - 1 - k));
                    comm[half - 1 - k] = 0;
                }
            }

            TimeStepBatch batch{t, {}};
            auto redraw = [&](VertexId a, VertexId b) {
                double p = comm[a] == comm[b] ? cfg.p_in : cfg.p_out;
                bool present = cur.count(pair_key(n, a, b)) > 0;
                bool next = rng.unit() < p;
                if (next != present) {
                    batch.events.push_back({next ? EventKind::Add : EventKind::Remove, a, b});
                    if (next) cur.insert(pair_key(n, a, b));
                    else cur.erase(pair_key(n, a, b));
                }
            };

            if (!migrants.empty()) {
                // re-draw every pair incident to a migrating vertex, once,
                // in canonical order
                std::vector<std::pair<VertexId, VertexId>> pairs;
                pairs.reserve(migrants.size() * n);
                for (VertexId w : migrants)
                    for (VertexId x = 0; x < n; ++x)
                        if (x != w) pairs.emplace_back(std::min(w, x), std::max(w, x));
                std::sort(pairs.begin(), pairs.end());
                pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
                for (const auto& [a, b] : pairs) redraw(a, b);
            } else {
                // no migration this step: re-draw uniform random pairs until
                // one flips, so the step still carries an edge event
                for (int tries = 0; tries < 100000 && batch.events.empty(); ++tries) {
                    VertexId a = rng.below(n), b = rng.below(n);
                    if (a == b) continue;
                    redraw(std::min(a, b), std::max(a, b));
                }
            }

            if (batch.events.empty()) {
                ok = false;
                break;
            }
            out.edge_event_count += batch.events.size();
            out.stream.batches.push_back(std::move(batch));
            out.ground_truth.snapshots.push_back(labels_to_snapshot(comm));
            m_prev = m_t;
        }
        if (ok) return out;
    }
    throw ConfigInvalid("could not generate non-empty batches for any seed attempt");
}

GeneratedBenchmark generate_merge_split(const BenchmarkConfig& cfg) {
    validate(cfg);
    const VertexId n = cfg.n, half = n / 2;

    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        Rng rng(cfg.seed + attempt);
        auto [edges0, comm0] = generate_planted_bisection(n, cfg.p_in, cfg.p_out, rng);

        std::vector<CommunityId> bisect = comm0;
        std::vector<CommunityId> merged(n, 0);

        GeneratedBenchmark out;
        out.stream.n = n;
        out.stream.initial_edges = edges0;
        out.ground_truth.n = n;
        out.ground_truth.snapshots.push_back(labels_to_snapshot(bisect));
        out.edge_event_count = edges0.size();

        std::unordered_set<std::uint64_t> cur;
        cur.reserve(edges0.size() * 2);
        for (const auto& [u, v] : edges0) cur.insert(pair_key(n, u, v));

        bool ok = true;
        double p_prev = cfg.p_out;
        for (int t = 1; t <= cfg.steps; ++t) {
            double frac = 1.0 - std::abs(1.0 - 2.0 * t / cfg.steps);
            double p_t = cfg.p_out + (cfg.p_in - cfg.p_out) * frac;

            // coupled re-draw: each inter pair consumes one draw; only the
            // density delta flips edges, so the walk is monotone per ramp
            TimeStepBatch batch{t, {}};
            for (VertexId u = 0; u < half; ++u)
                for (VertexId v = half; v < n; ++v) {
                    bool present = cur.count(pair_key(n, u, v)) > 0;
                    double r = rng.unit();
                    if (p_t > p_prev) {
                        if (!present && r < (p_t - p_prev) / (1.0 - p_prev)) {
                            batch.events.push_back({EventKind::Add, u, v});
                            cur.insert(pair_key(n, u, v));
                        }
                    } else if (p_t < p_prev) {
                        if (present && r < (p_prev - p_t) / p_prev) {
                            batch.events.push_back({EventKind::Remove, u, v});
                            cur.erase(pair_key(n, u, v));
                        }
                    }
                }

            if (batch.events.empty()) {
                ok = false;
                break;
            }
            out.edge_event_count += batch.events.size();
            out.stream.batches.push_back(std::move(batch));
            bool is_merged = p_t >= 0.95 * cfg.p_in;
            out.ground_truth.snapshots.push_back(labels_to_snapshot(is_merged ? merged : bisect));
            p_prev = p_t;
        }
        if (ok) return out;
    }
    throw ConfigInvalid("could not generate non-empty batches for any seed attempt");
}

GeneratedBenchmark generate(const BenchmarkConfig& cfg) {
    return cfg.pattern == Pattern::GrowShrink ? generate_grow_shrink(cfg)
                                              : generate_merge_split(cfg);
}

std::vector<GeneratedBenchmark> generate_scaling_suite(const std::vector<VertexId>& sizes,
                                                       int steps, std::uint64_t seed) {
    std::vector<GeneratedBenchmark> out;
    out.reserve(sizes.size());
    for (VertexId n : sizes) {
        BenchmarkConfig cfg;
        cfg.n = n;
        cfg.steps = steps;
        cfg.pattern = Pattern::GrowShrink;
        cfg.seed = seed;
        out.push_back(generate_grow_shrink(cfg));
    }
    return out;
}

} // namespace dynlocness
