#include "dynlocness/graph.hpp"

#include <algorithm>
#include <bit>

namespace dynlocness {

namespace {
constexpr VertexId kBitRowLimit = 8192; // 8 MB of bit rows at most
}

DynamicGraph::DynamicGraph(VertexId n) : n_(n), adj_(n) {
    use_bits_ = n_ > 0 && n_ <= kBitRowLimit;
    if (use_bits_) {
        words_ = (static_cast<std::size_t>(n_) + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    }
}

void DynamicGraph::check_vertex(VertexId v) const {
    if (v >= n_)
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (n=" +
                                std::to_string(n_) + ")");
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (use_bits_)
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<VertexId>& DynamicGraph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

std::uint32_t DynamicGraph::common_neighbor_count(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (use_bits_) {
        const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(u) * words_;
        const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(v) * words_;
        std::uint32_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
        return c;
    }
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    std::uint32_t c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

void DynamicGraph::insert_edge(VertexId u, VertexId v) {
    auto& a = adj_[u];
    a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    if (use_bits_) {
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    ++edges_;
}

void DynamicGraph::erase_edge(VertexId u, VertexId v) {
    auto& a = adj_[u];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
    auto& b = adj_[v];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    if (use_bits_) {
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    }
    --edges_;
}

void DynamicGraph::add_initial_edge(VertexId u, VertexId v) {
    if (step_ != 0) throw NonContiguousStep("initial edges only allowed at step 0");
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InapplicableEvent("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (has_edge(u, v))
        throw InapplicableEvent("duplicate initial edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
    insert_edge(u, v);
}

std::vector<VertexId> DynamicGraph::apply_batch(const TimeStepBatch& batch) {
    if (batch.step != step_ + 1)
        throw NonContiguousStep("batch step " + std::to_string(batch.step) + " after step " +
                                std::to_string(step_));
    if (batch.events.empty())
        throw StreamError("empty batch at step " + std::to_string(batch.step));

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(batch.events.size());
    for (const auto& e : batch.events) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v)
            throw InapplicableEvent("self-loop at step " + std::to_string(batch.step));
        VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        pairs.emplace_back(a, b);
        bool present = has_edge(a, b);
        if (e.kind == EventKind::Add && present)
            throw InapplicableEvent("add of existing edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") at step " + std::to_string(batch.step));
        if (e.kind == EventKind::Remove && !present)
            throw InapplicableEvent("remove of missing edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") at step " + std::to_string(batch.step));
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw StreamError("pair touched twice in batch at step " + std::to_string(batch.step));

    std::vector<VertexId> touched;
    touched.reserve(batch.events.size() * 2);
    for (const auto& e : batch.events) {
        VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        if (e.kind == EventKind::Add) insert_edge(a, b);
        else erase_edge(a, b);
        touched.push_back(a);
        touched.push_back(b);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    ++step_;
    return touched;
}

std::vector<std::pair<VertexId, VertexId>> DynamicGraph::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

} // namespace dynlocness
