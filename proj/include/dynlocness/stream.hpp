#pragma once

#include "dynlocness/graph.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dynlocness {

// A whole experiment's worth of edge events.  The `t 0` block of the text
// format holds the initial edge set; steps >= 1 are diffs.
struct EventStream {
    VertexId n = 0;
    std::vector<std::pair<VertexId, VertexId>> initial_edges; // u < v
    std::vector<TimeStepBatch> batches;                       // steps 1..k, contiguous
};

// Text format:
//   n <vertex_count>
//   t 0
//   + <u> <v> ...
//   t <step>
//   +/- <u> <v> ...
EventStream read_event_stream(std::istream& in);
void write_event_stream(std::ostream& out, const EventStream& s);

EventStream load_event_stream(const std::string& path);
void save_event_stream(const std::string& path, const EventStream& s);

// Builds G_0 from the initial edges (step 0).
DynamicGraph build_initial_graph(const EventStream& s);

} // namespace dynlocness
