#include "dynlocness/detection.hpp"
#include "dynlocness/benchmark.hpp"
#include "dynlocness/evaluation.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace dynlocness;

namespace {

DynamicGraph make_graph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    DynamicGraph g(n);
    for (auto [u, v] : edges) g.add_initial_edge(u, v);
    return g;
}

TimeStepBatch batch_of(int step, std::vector<EdgeEvent> events) {
    return {step, std::move(events)};
}

std::vector<std::pair<VertexId, VertexId>> two_triangles() {
    return {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
}

// follower view rebuilt from the leader sets
std::set<VertexId> followers_of(const Detector& d, const std::set<VertexId>& leaders) {
    std::set<VertexId> out;
    for (VertexId v = 0; v < d.num_vertices(); ++v)
        for (VertexId u : d.state(v).leaders)
            if (leaders.count(u)) out.insert(v);
    return out;
}

const Measure kAll[] = {Measure::Jaccard, Measure::AdamicAdar, Measure::PreferentialAttachment,
                        Measure::Cwcn};

} // namespace

TEST_CASE("initialiser on two disjoint triangles finds one community each") {
    Detector d(make_graph(6, two_triangles()), Measure::Cwcn);
    auto snap = d.snapshot();
    CHECK(d.community_count() == 2);
    for (VertexId v : {0, 1, 2}) CHECK(snap[v] == std::vector<CommunityId>{0});
    for (VertexId v : {3, 4, 5}) CHECK(snap[v] == std::vector<CommunityId>{1});
}

TEST_CASE("initialiser on a single triangle finds one community") {
    Detector d(make_graph(3, {{0, 1}, {0, 2}, {1, 2}}), Measure::Cwcn);
    CHECK(d.community_count() == 1);
    auto snap = d.snapshot();
    for (VertexId v = 0; v < 3; ++v) CHECK(snap[v] == std::vector<CommunityId>{0});
}

TEST_CASE("initialiser recovers a planted bisection under cwcn") {
    // dense noise occasionally splinters an extra fragment, so the community
    // count is a statistical claim; agreement with the planted halves is not
    int small = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        auto [edges, labels] = generate_planted_bisection(64, 0.5, 0.05, rng);
        Detector d(make_graph(64, edges), Measure::Cwcn);
        auto count = d.community_count();
        CHECK(count >= 2);
        if (count <= 3) ++small;
        Partition truth{std::vector<std::uint32_t>(labels.begin(), labels.end())};
        double score = nmi(project_primary(d.snapshot()), truth);
        CHECK(score >= 0.6);
    }
    CHECK(small >= 8);
}

TEST_CASE("every vertex keeps a non-empty membership, leaders stay inside the neighbourhood") {
    BenchmarkConfig cfg;
    cfg.n = 32;
    cfg.steps = 12;
    cfg.seed = 5;
    auto bench = generate_grow_shrink(cfg);
    for (Measure m : kAll) {
        Detector d(build_initial_graph(bench.stream), m);
        auto check_state = [&] {
            std::size_t distinct = community_count(d.snapshot());
            CHECK(d.community_count() == distinct);
            for (VertexId v = 0; v < d.num_vertices(); ++v) {
                const auto& st = d.state(v);
                CHECK_FALSE(st.memberships.empty());
                CHECK(std::is_sorted(st.memberships.begin(), st.memberships.end()));
                const auto& nbrs = d.graph().neighbors(v);
                CHECK(st.leaders.empty() == nbrs.empty());
                for (VertexId u : st.leaders)
                    CHECK(std::binary_search(nbrs.begin(), nbrs.end(), u));
            }
        };
        check_state();
        for (const auto& b : bench.stream.batches) {
            d.process_step(b);
            check_state();
        }
    }
}

TEST_CASE("unanimous leaders copy the community, a split vote installs an overlap") {
    // bridge vertex 6 sits between both triangles with tied leaders
    auto edges = two_triangles();
    edges.push_back({2, 6});
    edges.push_back({3, 6});
    // pendant 7 hangs off triangle A: single leader, unanimous copy
    edges.push_back({0, 7});
    Detector d(make_graph(8, edges), Measure::Cwcn);
    auto snap = d.snapshot();
    CHECK(snap[7] == snap[0]);
    CHECK(snap[7].size() == 1);
    REQUIRE(d.state(6).leaders == std::vector<VertexId>{2, 3});
    auto overlap = snap[6];
    REQUIRE(overlap.size() == 2);
    CHECK(overlap[0] == snap[2][0]);
    CHECK(overlap[1] == snap[3][0]);
}

TEST_CASE("an edge added inside a dense community touches only its endpoints") {
    // K5 missing one edge; the batch completes it
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = u + 1; v < 5; ++v)
            if (!(u == 0 && v == 1)) edges.push_back({u, v});
    Detector d(make_graph(5, edges), Measure::Cwcn);

    std::vector<VertexState> before;
    for (VertexId v = 0; v < 5; ++v) before.push_back(d.state(v));

    d.process_step(batch_of(1, {{EventKind::Add, 0, 1}}));
    CHECK(d.last_candidates() == std::vector<VertexId>{0, 1});
    for (VertexId v = 2; v < 5; ++v) CHECK(d.state(v) == before[v]);
    CHECK(d.community_count() == 1);
}

TEST_CASE("vertices with unchanged neighbourhoods and unmarked leaders cost no sigma work") {
    auto edges = two_triangles();
    edges.push_back({6, 7});
    Detector d(make_graph(9, edges), Measure::Jaccard);
    auto evals_before = d.sigma_evaluations();
    std::vector<VertexState> before;
    for (VertexId v = 0; v < 9; ++v) before.push_back(d.state(v));

    d.process_step(batch_of(1, {{EventKind::Add, 7, 8}}));

    // only the endpoints re-rank; the sigma budget is exactly their degrees
    CHECK(d.last_candidates() == std::vector<VertexId>{7, 8});
    CHECK(d.sigma_evaluations() - evals_before ==
          d.graph().degree(7) + d.graph().degree(8));
    for (VertexId v = 0; v < 7; ++v) CHECK(d.state(v) == before[v]);
}

TEST_CASE("marks take effect exactly one step later, on exactly the followers") {
    // triangle A {0,1,2}, triangle B {4,5,6}, vertex 3 bridges A with
    // pendant followers 7 and 8; 9..12 are isolated spares
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {0, 1}, {0, 2}, {1, 2}, {4, 5}, {4, 6}, {5, 6}, {0, 3}, {3, 7}, {3, 8}};
    Detector d(make_graph(13, edges), Measure::Cwcn);

    REQUIRE(d.state(7).leaders == std::vector<VertexId>{3});
    REQUIRE(d.state(8).leaders == std::vector<VertexId>{3});
    auto comm_a = d.state(0).memberships;
    auto comm_b = d.state(4).memberships;
    REQUIRE(d.state(3).memberships == comm_a);
    REQUIRE(d.state(7).memberships == comm_a);

    // step 1: vertex 3 migrates from A to B and changes community -> marked
    auto st7 = d.state(7);
    auto st8 = d.state(8);
    d.process_step(batch_of(1, {{EventKind::Remove, 0, 3},
                                {EventKind::Add, 3, 4},
                                {EventKind::Add, 3, 5}}));
    CHECK(d.last_candidates() == std::vector<VertexId>{0, 3, 4, 5});
    CHECK(d.state(3).memberships == comm_b);
    CHECK(d.marked_prev(3));

    // zero same-step effect: the followers of 3 were not re-evaluated
    CHECK(d.state(7) == st7);
    CHECK(d.state(8) == st8);
    CHECK(d.state(7).memberships == comm_a);

    // step 2: a distant edge appears; candidates = its endpoints plus the
    // followers of the vertex marked at step 1
    d.process_step(batch_of(2, {{EventKind::Add, 9, 10}}));
    CHECK(d.last_candidates() == std::vector<VertexId>{7, 8, 9, 10});
    CHECK(d.state(7).memberships == comm_b);
    CHECK(d.state(8).memberships == comm_b);
    CHECK_FALSE(d.marked_prev(3));
    CHECK(d.marked_prev(7));
    CHECK(d.marked_prev(8));

    // step 3: the chain ends; 7 and 8 lead nobody, so only the followers of
    // the step-2 movers remain alongside the new endpoints
    std::set<VertexId> marked;
    for (VertexId v = 0; v < 13; ++v)
        if (d.marked_prev(v)) marked.insert(v);
    auto expected = followers_of(d, marked);
    d.process_step(batch_of(3, {{EventKind::Add, 11, 12}}));
    expected.insert(11);
    expected.insert(12);
    std::vector<VertexId> expected_sorted(expected.begin(), expected.end());
    CHECK(d.last_candidates() == expected_sorted);
}

TEST_CASE("a vertex stripped of every edge keeps or founds a singleton community") {
    auto edges = two_triangles();
    edges.push_back({6, 7});
    Detector d(make_graph(8, edges), Measure::Jaccard);
    auto pair_comm = d.state(6).memberships;
    REQUIRE(d.state(7).memberships == pair_comm);

    d.process_step(batch_of(1, {{EventKind::Remove, 6, 7}}));
    auto c6 = d.state(6).memberships;
    auto c7 = d.state(7).memberships;
    REQUIRE(c6.size() == 1);
    REQUIRE(c7.size() == 1);
    CHECK(c6 != c7);
    CHECK(c7 == pair_comm); // second one processed keeps the old id, now sole member
    CHECK(d.community_count() == 4);

    // once settled, the isolated pair never re-enters the candidate set
    d.process_step(batch_of(2, {{EventKind::Add, 0, 3}}));
    auto cands = d.last_candidates();
    CHECK(std::find(cands.begin(), cands.end(), 6) == cands.end());
    CHECK(std::find(cands.begin(), cands.end(), 7) == cands.end());
    CHECK(d.state(6).memberships == c6);
}

TEST_CASE("forced full passes reach a fixpoint after a batch") {
    std::mt19937 seeds(41);
    for (Measure m : kAll) {
        for (ReadMode mode : {ReadMode::Sequential, ReadMode::Snapshot}) {
            std::mt19937 rng(seeds());
            DynamicGraph g(24);
            std::set<std::pair<VertexId, VertexId>> present;
            for (int i = 0; i < 70; ++i) {
                VertexId u = rng() % 24, v = rng() % 24;
                if (u == v) continue;
                if (u > v) std::swap(u, v);
                if (present.insert({u, v}).second) g.add_initial_edge(u, v);
            }
            Detector d(std::move(g), m, mode);

            std::vector<EdgeEvent> ev;
            for (int i = 0; i < 6 && !present.empty();) {
                VertexId u = rng() % 24, v = rng() % 24;
                if (u == v) continue;
                if (u > v) std::swap(u, v);
                bool exists = present.count({u, v}) != 0;
                bool dup = false;
                for (const auto& e : ev) dup |= (e.u == u && e.v == v);
                if (dup) continue;
                ev.push_back({exists ? EventKind::Remove : EventKind::Add, u, v});
                if (exists)
                    present.erase({u, v});
                else
                    present.insert({u, v});
                ++i;
            }
            d.process_step(batch_of(1, ev));

            std::size_t changed = 1;
            int passes = 0;
            while (changed != 0 && passes < 64) {
                changed = d.force_full_pass();
                ++passes;
            }
            CHECK(changed == 0);
            CHECK(d.force_full_pass() == 0);
        }
    }
}

TEST_CASE("identical streams give identical timelines in both read modes") {
    BenchmarkConfig cfg;
    cfg.n = 32;
    cfg.steps = 10;
    cfg.seed = 9;
    auto bench = generate_grow_shrink(cfg);
    for (ReadMode mode : {ReadMode::Sequential, ReadMode::Snapshot}) {
        std::vector<CommunitySnapshot> a, b;
        for (auto* sink : {&a, &b}) {
            Detector d(build_initial_graph(bench.stream), Measure::Cwcn, mode);
            sink->push_back(d.snapshot());
            for (const auto& batch : bench.stream.batches) sink->push_back(d.process_step(batch));
        }
        CHECK(a == b);
    }
}

TEST_CASE("snapshots are stable and relabelling spares untouched communities") {
    auto edges = two_triangles();
    edges.push_back({0, 6});
    edges.push_back({1, 6});
    Detector d(make_graph(7, edges), Measure::Cwcn);
    auto first = d.snapshot();
    CHECK(first == d.snapshot());
    REQUIRE(first[6] == first[0]);

    // 6 moves from triangle A to triangle B; everyone else keeps their label
    d.process_step(batch_of(1, {{EventKind::Remove, 0, 6},
                                {EventKind::Remove, 1, 6},
                                {EventKind::Add, 3, 6},
                                {EventKind::Add, 4, 6}}));
    auto second = d.snapshot();
    for (VertexId v = 0; v < 6; ++v) CHECK(second[v] == first[v]);
    CHECK(second[6] == second[3]);
}

TEST_CASE("read mode names parse") {
    CHECK(read_mode_from_name("sequential") == ReadMode::Sequential);
    CHECK(read_mode_from_name("snapshot") == ReadMode::Snapshot);
    CHECK_THROWS(read_mode_from_name("parallel"));
}
