#pragma once

#include "dynlocness/graph.hpp"
#include "dynlocness/preference.hpp"
#include "dynlocness/timeline.hpp"

#include <cstdint>
#include <vector>

namespace dynlocness {

// Epoch the membership recomputation reads leader communities from.
// Sequential: ascending-id sweep sees same-step writes (the reference mode).
// Snapshot: every update reads the previous step's memberships.
enum class ReadMode { Sequential, Snapshot };

ReadMode read_mode_from_name(const std::string& name); // sequential | snapshot

struct VertexState {
    std::vector<VertexId> leaders;        // L(v), sorted
    std::vector<CommunityId> memberships; // C(v), sorted, non-empty
    bool operator==(const VertexState&) const = default;
};

// Incremental community maintenance: leader-based initialisation on G_0,
// then per-batch vertex updates with two-phase marking (marks made during
// step i become visible to followers at step i+1).
class Detector {
public:
    // Takes the t_0 graph and runs the initialiser: preferred leaders for
    // everyone, communities from the cycles of the functional digraph
    // v -> min L(v), then one ascending refinement pass to install overlaps.
    Detector(DynamicGraph g0, Measure measure, ReadMode mode = ReadMode::Sequential);

    // Applies the batch, updates the candidate vertices (touched ones plus
    // followers of vertices marked last step) in ascending id order, swaps
    // the mark phases, and returns the new snapshot.
    CommunitySnapshot process_step(const TimeStepBatch& batch);

    // Current memberships with ids relabelled by first appearance.
    CommunitySnapshot snapshot() const;

    const DynamicGraph& graph() const { return g_; }
    Measure measure() const { return measure_; }
    ReadMode read_mode() const { return mode_; }
    VertexId num_vertices() const { return g_.num_vertices(); }

    const VertexState& state(VertexId v) const { return st_[v]; }
    bool marked_prev(VertexId v) const { return markp_bits_[v] != 0; }
    bool marked_curr(VertexId v) const { return markc_bits_[v] != 0; }

    // Communities that still have members.
    std::size_t community_count() const { return live_communities_; }

    // Synthetic full re-evaluation (every vertex treated as if its
    // neighbourhood changed), used as a convergence oracle in tests.
    // Returns the number of vertices whose membership changed.
    std::size_t force_full_pass();

    // Introspection for tests and instrumentation.
    const std::vector<VertexId>& last_candidates() const { return last_candidates_; }
    const std::vector<VertexId>& last_reevaluated() const { return last_reevaluated_; }
    std::uint64_t sigma_evaluations() const { return sigma_evaluations_; }

private:
    void set_membership(VertexId v, std::vector<CommunityId> next);
    std::vector<CommunityId> most_frequent(const std::vector<VertexId>& leaders) const;
    const std::vector<CommunityId>& leader_memberships(VertexId u) const;
    void update_vertex(VertexId v, bool neighborhood_changed);
    CommunityId fresh_community();

    DynamicGraph g_;
    Measure measure_;
    ReadMode mode_;
    std::vector<VertexState> st_;

    // marks are engine state so untouched VertexStates stay bit-identical
    // across the phase swap at each step boundary
    std::vector<std::uint8_t> markp_bits_, markc_bits_;
    std::vector<VertexId> markp_ids_, markc_ids_;

    std::vector<std::uint32_t> member_count_; // indexed by CommunityId
    std::size_t live_communities_ = 0;
    CommunityId next_cid_ = 0;

    // set during a snapshot-mode step; null means read live memberships
    const std::vector<std::vector<CommunityId>>* frozen_src_ = nullptr;
    std::vector<std::vector<CommunityId>> frozen_members_;

    std::vector<VertexId> last_candidates_, last_reevaluated_;
    std::uint64_t sigma_evaluations_ = 0;
};

} // namespace dynlocness
