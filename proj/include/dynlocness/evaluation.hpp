#pragma once

#include "dynlocness/timeline.hpp"

#include <vector>

namespace dynlocness {

struct SizeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Partition {
    std::vector<std::uint32_t> labels; // one per vertex
    std::size_t size() const { return labels.size(); }
};

// Overlap -> partition: every vertex keeps its lowest community id.
Partition project_primary(const CommunitySnapshot& snap);

// Natural log throughout; 0 * log 0 = 0.
double entropy(const Partition& p);
double mutual_information(const Partition& x, const Partition& y);

// 2 I / (H(X)+H(Y)); 1 when both partitions are single clusters.
double nmi(const Partition& x, const Partition& y);

// (H(X|Y) + H(Y|X)) / log n; 0 for identical partitions. Needs n >= 2.
double nvi(const Partition& x, const Partition& y);

struct MetricSeries {
    std::vector<double> nmi_values; // one per step
    std::vector<double> nvi_values;
    double mean_nmi = 0.0;
    double mean_nvi = 0.0;
};

// Per-step NMI and NVI of the detected timeline against ground truth,
// after primary projection, plus means over the steps.
MetricSeries evaluate_timeline(const CommunityTimeline& detected,
                               const CommunityTimeline& truth);

// Community sizes per step after primary projection, with labels matched
// greedily across consecutive steps by largest member overlap.  Row t maps
// series index -> size (0 when the series is absent at t).
std::vector<std::vector<std::uint32_t>> community_size_series(const CommunityTimeline& tl);

} // namespace dynlocness
