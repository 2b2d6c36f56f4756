#include "dynlocness/detection.hpp"

#include <algorithm>
#include <unordered_map>

namespace dynlocness {

ReadMode read_mode_from_name(const std::string& name) {
    if (name == "sequential") return ReadMode::Sequential;
    if (name == "snapshot") return ReadMode::Snapshot;
    throw std::invalid_argument("unknown read mode '" + name + "'");
}

Detector::Detector(DynamicGraph g0, Measure measure, ReadMode mode)
    : g_(std::move(g0)), measure_(measure), mode_(mode) {
    VertexId n = g_.num_vertices();
    st_.resize(n);
    markp_bits_.assign(n, 0);
    markc_bits_.assign(n, 0);

    for (VertexId v = 0; v < n; ++v) {
        st_[v].leaders = preferred_leaders(g_, measure_, v);
        sigma_evaluations_ += g_.degree(v);
    }

    // communities from the cycles of v -> min L(v); isolated vertices point
    // to themselves and found singletons
    std::vector<VertexId> ptr(n);
    for (VertexId v = 0; v < n; ++v)
        ptr[v] = st_[v].leaders.empty() ? v : st_[v].leaders.front();

    constexpr std::uint8_t kNew = 0, kActive = 1, kDone = 2;
    std::vector<std::uint8_t> colour(n, kNew);
    std::vector<CommunityId> comm_of(n, 0);
    std::vector<std::uint8_t> assigned(n, 0);
    std::vector<VertexId> path;
    for (VertexId s = 0; s < n; ++s) {
        if (colour[s] != kNew) continue;
        path.clear();
        VertexId v = s;
        while (colour[v] == kNew) {
            colour[v] = kActive;
            path.push_back(v);
            v = ptr[v];
        }
        if (colour[v] == kActive) { // new cycle found
            CommunityId cid = fresh_community();
            VertexId w = v;
            do {
                comm_of[w] = cid;
                assigned[w] = 1;
                w = ptr[w];
            } while (w != v);
        }
        CommunityId target = comm_of[v];
        for (VertexId w : path) {
            colour[w] = kDone;
            if (!assigned[w]) {
                comm_of[w] = target;
                assigned[w] = 1;
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) set_membership(v, {comm_of[v]});

    // one refinement pass (ascending, immediate visibility, no marking)
    for (VertexId v = 0; v < n; ++v)
        if (!st_[v].leaders.empty()) set_membership(v, most_frequent(st_[v].leaders));
}

CommunityId Detector::fresh_community() {
    member_count_.push_back(0);
    return next_cid_++;
}

void Detector::set_membership(VertexId v, std::vector<CommunityId> next) {
    for (CommunityId c : st_[v].memberships)
        if (--member_count_[c] == 0) --live_communities_;
    for (CommunityId c : next)
        if (member_count_[c]++ == 0) ++live_communities_;
    st_[v].memberships = std::move(next);
}

const std::vector<CommunityId>& Detector::leader_memberships(VertexId u) const {
    return frozen_src_ ? (*frozen_src_)[u] : st_[u].memberships;
}

std::vector<CommunityId> Detector::most_frequent(const std::vector<VertexId>& leaders) const {
    // each (leader, membership) pair contributes one count
    std::unordered_map<CommunityId, std::uint32_t> cnt;
    for (VertexId u : leaders)
        for (CommunityId c : leader_memberships(u)) ++cnt[c];
    std::uint32_t mx = 0;
    for (const auto& [c, k] : cnt) mx = std::max(mx, k);
    std::vector<CommunityId> out;
    for (const auto& [c, k] : cnt)
        if (k == mx) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

void Detector::update_vertex(VertexId v, bool neighborhood_changed) {
    bool leaders_changed = false;
    if (neighborhood_changed) {
        auto nl = preferred_leaders(g_, measure_, v);
        sigma_evaluations_ += g_.degree(v);
        leaders_changed = (nl != st_[v].leaders);
        st_[v].leaders = std::move(nl);
    }
    bool leader_marked = false;
    if (!leaders_changed)
        for (VertexId u : st_[v].leaders)
            if (markp_bits_[u]) { leader_marked = true; break; }
    if (!leaders_changed && !leader_marked) return;

    last_reevaluated_.push_back(v);
    std::vector<CommunityId> next;
    if (!st_[v].leaders.empty()) {
        next = most_frequent(st_[v].leaders);
    } else if (st_[v].memberships.size() == 1 &&
               member_count_[st_[v].memberships.front()] == 1) {
        return; // isolated vertex already alone in its own community
    } else {
        next = {fresh_community()};
    }
    if (next != st_[v].memberships) {
        set_membership(v, std::move(next));
        if (!markc_bits_[v]) {
            markc_bits_[v] = 1;
            markc_ids_.push_back(v);
        }
    }
}

CommunitySnapshot Detector::process_step(const TimeStepBatch& batch) {
    std::vector<VertexId> touched = g_.apply_batch(batch);

    std::vector<std::uint8_t> is_touched(g_.num_vertices(), 0);
    for (VertexId v : touched) is_touched[v] = 1;

    std::vector<VertexId> candidates = touched;
    for (VertexId u : markp_ids_) {
        for (VertexId v : g_.neighbors(u)) {
            const auto& L = st_[v].leaders;
            if (std::binary_search(L.begin(), L.end(), u)) candidates.push_back(v);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    last_candidates_ = candidates;
    last_reevaluated_.clear();

    if (mode_ == ReadMode::Snapshot) {
        frozen_members_.resize(st_.size());
        for (std::size_t v = 0; v < st_.size(); ++v) frozen_members_[v] = st_[v].memberships;
        frozen_src_ = &frozen_members_;
    }
    for (VertexId v : candidates) update_vertex(v, is_touched[v]);
    frozen_src_ = nullptr;

    // step boundary: this step's marks become visible, slate wiped
    std::swap(markp_bits_, markc_bits_);
    std::swap(markp_ids_, markc_ids_);
    for (VertexId v : markc_ids_) markc_bits_[v] = 0;
    markc_ids_.clear();

    return snapshot();
}

std::size_t Detector::force_full_pass() {
    std::vector<VertexId> all(g_.num_vertices());
    for (VertexId v = 0; v < g_.num_vertices(); ++v) all[v] = v;
    last_candidates_ = all;
    last_reevaluated_.clear();

    std::size_t changed = 0;
    if (mode_ == ReadMode::Snapshot) {
        frozen_members_.resize(st_.size());
        for (std::size_t v = 0; v < st_.size(); ++v) frozen_members_[v] = st_[v].memberships;
        frozen_src_ = &frozen_members_;
    }
    for (VertexId v : all) {
        auto before = st_[v].memberships;
        update_vertex(v, true);
        if (st_[v].memberships != before) ++changed;
    }
    frozen_src_ = nullptr;

    std::swap(markp_bits_, markc_bits_);
    std::swap(markp_ids_, markc_ids_);
    for (VertexId v : markc_ids_) markc_bits_[v] = 0;
    markc_ids_.clear();
    return changed;
}

CommunitySnapshot Detector::snapshot() const {
    CommunitySnapshot raw(st_.size());
    for (std::size_t v = 0; v < st_.size(); ++v) raw[v] = st_[v].memberships;
    return canonical_relabel(raw);
}

} // namespace dynlocness
