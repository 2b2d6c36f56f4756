#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynlocness {

using VertexId = std::uint32_t;

struct StreamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// add of an existing edge or remove of a missing one: the stream is corrupt
struct InapplicableEvent : StreamError {
    using StreamError::StreamError;
};

// batch step is not current_step + 1
struct NonContiguousStep : StreamError {
    using StreamError::StreamError;
};

enum class EventKind : std::uint8_t { Add, Remove };

struct EdgeEvent {
    EventKind kind;
    VertexId u; // u < v
    VertexId v;
};

struct TimeStepBatch {
    int step = 0; // >= 1
    std::vector<EdgeEvent> events;
};

// Evolving undirected simple graph over a fixed vertex set 0..n-1.
// Neighbour sets are kept sorted; for moderate n a dense bit matrix is
// maintained alongside so common-neighbour counting is a word-parallel
// AND+popcount instead of a merge.
class DynamicGraph {
public:
    explicit DynamicGraph(VertexId n);

    VertexId num_vertices() const { return n_; }
    int current_step() const { return step_; }
    std::uint64_t num_edges() const { return edges_; }

    bool has_edge(VertexId u, VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;
    VertexId degree(VertexId v) const { return static_cast<VertexId>(adj_[v].size()); }
    std::uint32_t common_neighbor_count(VertexId u, VertexId v) const;

    // Validates the whole batch (contiguity, pair uniqueness, applicability)
    // before touching the graph, then applies every event and advances the
    // step. Returns the touched vertices (endpoints of all events), sorted.
    std::vector<VertexId> apply_batch(const TimeStepBatch& batch);

    // Initial construction of G_0; usable only at step 0.
    void add_initial_edge(VertexId u, VertexId v);

    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

private:
    void insert_edge(VertexId u, VertexId v);
    void erase_edge(VertexId u, VertexId v);
    void check_vertex(VertexId v) const;

    VertexId n_;
    int step_ = 0;
    std::uint64_t edges_ = 0;
    std::vector<std::vector<VertexId>> adj_;

    bool use_bits_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_; // row v at v * words_
};

} // namespace dynlocness
