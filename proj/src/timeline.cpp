#include "dynlocness/timeline.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dynlocness {

CommunityTimeline read_timeline(std::istream& in) {
    CommunityTimeline tl;
    std::string line;
    std::size_t line_no = 0;
    int current = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "t") {
            long long step = -1;
            if (!(ls >> step) || step < 0)
                throw StreamError("line " + std::to_string(line_no) + ": bad step");
            if (step != current + 1)
                throw StreamError("line " + std::to_string(line_no) + ": non-contiguous step");
            current = static_cast<int>(step);
            tl.snapshots.emplace_back();
        } else {
            if (current < 0)
                throw StreamError("line " + std::to_string(line_no) + ": vertex line before t block");
            long long v = -1;
            try {
                v = std::stoll(tok);
            } catch (const std::exception&) {
                throw StreamError("line " + std::to_string(line_no) + ": bad vertex id");
            }
            auto& snap = tl.snapshots.back();
            if (v != static_cast<long long>(snap.size()))
                throw StreamError("line " + std::to_string(line_no) + ": vertex ids must ascend from 0");
            std::vector<CommunityId> ids;
            long long c;
            while (ls >> c) {
                if (c < 0) throw StreamError("line " + std::to_string(line_no) + ": bad community id");
                ids.push_back(static_cast<CommunityId>(c));
            }
            if (ids.empty())
                throw StreamError("line " + std::to_string(line_no) + ": vertex with no community");
            if (!std::is_sorted(ids.begin(), ids.end()) ||
                std::adjacent_find(ids.begin(), ids.end()) != ids.end())
                throw StreamError("line " + std::to_string(line_no) + ": ids not strictly ascending");
            snap.push_back(std::move(ids));
        }
    }
    if (tl.snapshots.empty()) throw StreamError("timeline has no steps");
    tl.n = static_cast<VertexId>(tl.snapshots.front().size());
    for (const auto& s : tl.snapshots)
        if (s.size() != tl.n) throw StreamError("timeline blocks differ in vertex count");
    if (tl.n == 0) throw StreamError("timeline has no vertices");
    return tl;
}

void write_timeline(std::ostream& out, const CommunityTimeline& tl) {
    for (std::size_t t = 0; t < tl.snapshots.size(); ++t) {
        out << "t " << t << "\n";
        const auto& snap = tl.snapshots[t];
        for (std::size_t v = 0; v < snap.size(); ++v) {
            out << v;
            for (CommunityId c : snap[v]) out << " " << c;
            out << "\n";
        }
    }
}

CommunityTimeline load_timeline(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StreamError("cannot open " + path);
    return read_timeline(in);
}

void save_timeline(const std::string& path, const CommunityTimeline& tl) {
    std::ofstream out(path);
    if (!out) throw StreamError("cannot open " + path + " for writing");
    write_timeline(out, tl);
}

CommunitySnapshot canonical_relabel(const CommunitySnapshot& snap) {
    std::unordered_map<CommunityId, CommunityId> remap;
    CommunitySnapshot out(snap.size());
    for (std::size_t v = 0; v < snap.size(); ++v) {
        out[v].reserve(snap[v].size());
        for (CommunityId c : snap[v]) {
            auto [it, fresh] = remap.try_emplace(c, static_cast<CommunityId>(remap.size()));
            out[v].push_back(it->second);
        }
        std::sort(out[v].begin(), out[v].end());
    }
    return out;
}

std::size_t community_count(const CommunitySnapshot& snap) {
    std::unordered_set<CommunityId> ids;
    for (const auto& m : snap) ids.insert(m.begin(), m.end());
    return ids.size();
}

} // namespace dynlocness
