#include "dynlocness/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace dynlocness {

Partition project_primary(const CommunitySnapshot& snap) {
    Partition p;
    p.labels.reserve(snap.size());
    for (const auto& m : snap) {
        if (m.empty()) throw ShapeMismatch("vertex with empty membership set");
        p.labels.push_back(m.front()); // memberships are sorted
    }
    return p;
}

namespace {

std::unordered_map<std::uint32_t, std::uint32_t> cluster_sizes(const Partition& p) {
    std::unordered_map<std::uint32_t, std::uint32_t> sz;
    for (auto l : p.labels) ++sz[l];
    return sz;
}

} // namespace

double entropy(const Partition& p) {
    const double n = static_cast<double>(p.size());
    double h = 0.0;
    for (const auto& [l, k] : cluster_sizes(p)) {
        double q = k / n;
        h -= q * std::log(q);
    }
    return h;
}

double mutual_information(const Partition& x, const Partition& y) {
    if (x.size() != y.size()) throw SizeMismatch("partitions differ in size");
    const double n = static_cast<double>(x.size());
    auto sx = cluster_sizes(x);
    auto sy = cluster_sizes(y);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> joint;
    for (std::size_t v = 0; v < x.size(); ++v) ++joint[{x.labels[v], y.labels[v]}];
    double mi = 0.0;
    for (const auto& [cell, k] : joint) {
        double q = k / n;
        mi += q * std::log(n * k / (static_cast<double>(sx[cell.first]) * sy[cell.second]));
    }
    return mi;
}

double nmi(const Partition& x, const Partition& y) {
    double hx = entropy(x), hy = entropy(y);
    if (hx + hy == 0.0) return 1.0; // both trivial: identical single clusters
    return 2.0 * mutual_information(x, y) / (hx + hy);
}

double nvi(const Partition& x, const Partition& y) {
    if (x.size() != y.size()) throw SizeMismatch("partitions differ in size");
    if (x.size() < 2) throw SizeMismatch("nvi needs n >= 2");
    double hx = entropy(x), hy = entropy(y);
    double vi = hx + hy - 2.0 * mutual_information(x, y);
    // identical partitions leave rounding residue of either sign; snap it out
    if (std::abs(vi) <= 1e-12 * std::max(1.0, hx + hy)) vi = 0.0;
    return std::max(0.0, vi) / std::log(static_cast<double>(x.size()));
}

MetricSeries evaluate_timeline(const CommunityTimeline& detected,
                               const CommunityTimeline& truth) {
    if (detected.n != truth.n) throw ShapeMismatch("timelines differ in vertex count");
    if (detected.snapshots.size() != truth.snapshots.size())
        throw ShapeMismatch("timelines differ in step count");
    MetricSeries s;
    s.nmi_values.reserve(detected.snapshots.size());
    s.nvi_values.reserve(detected.snapshots.size());
    for (std::size_t t = 0; t < detected.snapshots.size(); ++t) {
        Partition d = project_primary(detected.snapshots[t]);
        Partition g = project_primary(truth.snapshots[t]);
        s.nmi_values.push_back(nmi(d, g));
        s.nvi_values.push_back(nvi(d, g));
        s.mean_nmi += s.nmi_values.back();
        s.mean_nvi += s.nvi_values.back();
    }
    s.mean_nmi /= static_cast<double>(s.nmi_values.size());
    s.mean_nvi /= static_cast<double>(s.nvi_values.size());
    return s;
}

std::vector<std::vector<std::uint32_t>> community_size_series(const CommunityTimeline& tl) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(tl.snapshots.size());
    std::vector<std::vector<VertexId>> prev_members; // by series index
    std::size_t series_count = 0;

    for (const auto& snap : tl.snapshots) {
        Partition p = project_primary(snap);
        std::unordered_map<std::uint32_t, std::vector<VertexId>> clusters;
        for (std::size_t v = 0; v < p.size(); ++v)
            clusters[p.labels[v]].push_back(static_cast<VertexId>(v));

        // overlap of every current cluster with every previous series
        struct Cand { std::uint32_t overlap; std::uint32_t label; std::size_t series; };
        std::vector<Cand> cands;
        if (!prev_members.empty()) {
            for (const auto& [label, members] : clusters) {
                for (std::size_t s = 0; s < prev_members.size(); ++s) {
                    std::uint32_t o = 0;
                    const auto& pm = prev_members[s];
                    std::size_t i = 0, j = 0;
                    while (i < members.size() && j < pm.size()) {
                        if (members[i] < pm[j]) ++i;
                        else if (members[i] > pm[j]) ++j;
                        else { ++o; ++i; ++j; }
                    }
                    if (o > 0) cands.push_back({o, label, s});
                }
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.overlap != b.overlap) return a.overlap > b.overlap;
            if (a.label != b.label) return a.label < b.label;
            return a.series < b.series;
        });

        std::unordered_map<std::uint32_t, std::size_t> assign;
        std::vector<std::uint8_t> series_taken(series_count, 0);
        for (const auto& c : cands) {
            if (assign.count(c.label) || series_taken[c.series]) continue;
            assign[c.label] = c.series;
            series_taken[c.series] = 1;
        }
        std::vector<std::uint32_t> labels_sorted;
        for (const auto& [label, members] : clusters) labels_sorted.push_back(label);
        std::sort(labels_sorted.begin(), labels_sorted.end());
        for (std::uint32_t label : labels_sorted)
            if (!assign.count(label)) assign[label] = series_count++;

        std::vector<std::uint32_t> row(series_count, 0);
        std::vector<std::vector<VertexId>> next_members(series_count);
        for (const auto& [label, members] : clusters) {
            std::size_t s = assign[label];
            row[s] = static_cast<std::uint32_t>(members.size());
            next_members[s] = members;
        }
        for (auto& r : out) r.resize(series_count, 0); // keep rows rectangular
        out.push_back(std::move(row));
        prev_members = std::move(next_members);
    }
    return out;
}

} // namespace dynlocness
