#pragma once

#include "dynlocness/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dynlocness {

using CommunityId = std::uint32_t;

// Per-vertex membership sets (sorted, overlap = several ids).
using CommunitySnapshot = std::vector<std::vector<CommunityId>>;

// One snapshot per step, snapshots[t] belongs to step t.
struct CommunityTimeline {
    VertexId n = 0;
    std::vector<CommunitySnapshot> snapshots;
};

// Text format, one block per step:
//   t <step>
//   <vertex_id> <community_id> [<community_id> ...]
CommunityTimeline read_timeline(std::istream& in);
void write_timeline(std::ostream& out, const CommunityTimeline& tl);

CommunityTimeline load_timeline(const std::string& path);
void save_timeline(const std::string& path, const CommunityTimeline& tl);

// Relabels community ids by order of first appearance (vertex 0 upward,
// ids ascending within a vertex).
CommunitySnapshot canonical_relabel(const CommunitySnapshot& snap);

// Distinct community ids present in a snapshot.
std::size_t community_count(const CommunitySnapshot& snap);

} // namespace dynlocness
