#pragma once

#include "dynlocness/graph.hpp"

#include <vector>

namespace dynlocness {

struct NotNeighbors : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Measure { Jaccard, AdamicAdar, PreferentialAttachment, Cwcn };

const char* measure_name(Measure m);
// Accepts the CLI spellings: jaccard | adamic-adar | pref-attach | cwcn.
Measure measure_from_name(const std::string& name);

// Preference of v for its neighbour u.  Throws NotNeighbors if u is not
// adjacent to v.
//   Jaccard              |common| / |union|
//   AdamicAdar           sum over common w of 1/ln(d_w)
//   PreferentialAttachment  d_u * d_v
//   Cwcn                 |common| * d_u  (weighted by the candidate's degree)
double sigma(const DynamicGraph& g, Measure m, VertexId v, VertexId u);

// Full argmax set of sigma(v, .) over the neighbours of v, sorted.
// Jaccard / PA / CWCN scores are compared exactly as integer rationals;
// AdamicAdar uses a 1e-12 relative tolerance.  If every neighbour scores 0,
// falls back to the neighbours of maximum degree (ties kept).  An isolated
// vertex yields the empty set.
std::vector<VertexId> preferred_leaders(const DynamicGraph& g, Measure m, VertexId v);

} // namespace dynlocness
