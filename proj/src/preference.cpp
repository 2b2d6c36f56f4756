#include "dynlocness/preference.hpp"

#include <algorithm>
#include <cmath>

namespace dynlocness {

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::Jaccard: return "jaccard";
        case Measure::AdamicAdar: return "adamic-adar";
        case Measure::PreferentialAttachment: return "pref-attach";
        case Measure::Cwcn: return "cwcn";
    }
    return "?";
}

Measure measure_from_name(const std::string& name) {
    if (name == "jaccard") return Measure::Jaccard;
    if (name == "adamic-adar") return Measure::AdamicAdar;
    if (name == "pref-attach") return Measure::PreferentialAttachment;
    if (name == "cwcn") return Measure::Cwcn;
    throw std::invalid_argument("unknown measure '" + name + "'");
}

namespace {

double adamic_adar(const DynamicGraph& g, VertexId v, VertexId u) {
    const auto& a = g.neighbors(v);
    const auto& b = g.neighbors(u);
    double s = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else {
            s += 1.0 / std::log(static_cast<double>(g.degree(a[i])));
            ++i;
            ++j;
        }
    }
    return s;
}

} // namespace

double sigma(const DynamicGraph& g, Measure m, VertexId v, VertexId u) {
    if (!g.has_edge(v, u))
        throw NotNeighbors("sigma(" + std::to_string(v) + "," + std::to_string(u) +
                           "): not neighbours");
    switch (m) {
        case Measure::Jaccard: {
            std::uint64_t c = g.common_neighbor_count(v, u);
            std::uint64_t uni = static_cast<std::uint64_t>(g.degree(v)) + g.degree(u) - c;
            return static_cast<double>(c) / static_cast<double>(uni);
        }
        case Measure::AdamicAdar:
            return adamic_adar(g, v, u);
        case Measure::PreferentialAttachment:
            return static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v));
        case Measure::Cwcn:
            return static_cast<double>(g.common_neighbor_count(v, u)) *
                   static_cast<double>(g.degree(u));
    }
    return 0.0;
}

std::vector<VertexId> preferred_leaders(const DynamicGraph& g, Measure m, VertexId v) {
    const auto& nb = g.neighbors(v);
    if (nb.empty()) return {};

    std::vector<VertexId> best;
    bool all_zero = true;

    if (m == Measure::AdamicAdar) {
        std::vector<double> score(nb.size());
        double mx = 0.0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            score[i] = adamic_adar(g, v, nb[i]);
            if (score[i] > mx) mx = score[i];
        }
        if (mx > 0.0) {
            all_zero = false;
            double tol = 1e-12 * std::max(1.0, mx);
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (mx - score[i] <= tol) best.push_back(nb[i]);
        }
    } else {
        // scores are exact rationals num/den; compare by cross-multiplication
        std::vector<std::int64_t> num(nb.size()), den(nb.size(), 1);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            VertexId u = nb[i];
            switch (m) {
                case Measure::Jaccard: {
                    std::int64_t c = g.common_neighbor_count(v, u);
                    num[i] = c;
                    den[i] = static_cast<std::int64_t>(g.degree(v)) + g.degree(u) - c;
                    break;
                }
                case Measure::PreferentialAttachment:
                    num[i] = static_cast<std::int64_t>(g.degree(u)) * g.degree(v);
                    break;
                case Measure::Cwcn:
                    num[i] = static_cast<std::int64_t>(g.common_neighbor_count(v, u)) *
                             g.degree(u);
                    break;
                default: break;
            }
        }
        std::size_t arg = 0;
        for (std::size_t i = 1; i < nb.size(); ++i)
            if (num[i] * den[arg] > num[arg] * den[i]) arg = i;
        if (num[arg] > 0) {
            all_zero = false;
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (num[i] * den[arg] == num[arg] * den[i]) best.push_back(nb[i]);
        }
    }

    if (all_zero) {
        VertexId md = 0;
        for (VertexId u : nb) md = std::max(md, g.degree(u));
        for (VertexId u : nb)
            if (g.degree(u) == md) best.push_back(u);
    }
    return best; // nb is sorted, so best is sorted
}

} // namespace dynlocness
