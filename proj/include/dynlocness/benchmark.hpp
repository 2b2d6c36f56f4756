#pragma once

#include "dynlocness/stream.hpp"
#include "dynlocness/timeline.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dynlocness {

struct ConfigInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Pattern { GrowShrink, MergeSplit };

Pattern pattern_from_name(const std::string& name); // grow-shrink | merge-split

struct BenchmarkConfig {
    VertexId n = 64;
    double p_in = 0.5;
    double p_out = 0.05;
    int steps = 100;
    Pattern pattern = Pattern::GrowShrink;
    double fraction = 0.5; // grow-shrink migration fraction f
    std::uint64_t seed = 1;
};

struct GeneratedBenchmark {
    EventStream stream;
    CommunityTimeline ground_truth; // steps + 1 blocks
    std::uint64_t edge_event_count = 0;
};

// Seedable, portable uniform source: mt19937_64 (a fully specified
// algorithm) mapped to [0,1) through the top 53 bits, so streams are
// bit-reproducible across platforms and languages.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    // uniform integer in [0, bound) by rejection (no modulo bias)
    std::uint32_t below(std::uint32_t bound);

private:
    std::mt19937_64 eng_;
};

// Two planted communities {0..n/2-1} and {n/2..n-1}; each intra pair kept
// with probability p_in, inter pair with p_out, drawn in canonical pair
// order (u < v, lexicographic).
std::pair<std::vector<std::pair<VertexId, VertexId>>, std::vector<CommunityId>>
generate_planted_bisection(VertexId n, double p_in, double p_out, Rng& rng);

GeneratedBenchmark generate_grow_shrink(const BenchmarkConfig& cfg);
GeneratedBenchmark generate_merge_split(const BenchmarkConfig& cfg);
GeneratedBenchmark generate(const BenchmarkConfig& cfg);

// One grow-shrink benchmark per size at the default densities.
std::vector<GeneratedBenchmark> generate_scaling_suite(const std::vector<VertexId>& sizes,
                                                       int steps, std::uint64_t seed);

} // namespace dynlocness
