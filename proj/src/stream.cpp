#include "dynlocness/stream.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace dynlocness {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw StreamError("line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

EventStream read_event_stream(std::istream& in) {
    EventStream s;
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    bool in_step0 = false;
    int current = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "n") {
            if (have_n) fail(line_no, "duplicate vertex count");
            long long n = -1;
            if (!(ls >> n) || n <= 0) fail(line_no, "bad vertex count");
            s.n = static_cast<VertexId>(n);
            have_n = true;
        } else if (tok == "t") {
            if (!have_n) fail(line_no, "step block before vertex count");
            long long step = -1;
            if (!(ls >> step) || step < 0) fail(line_no, "bad step number");
            if (step != current + 1) fail(line_no, "non-contiguous step " + std::to_string(step));
            current = static_cast<int>(step);
            in_step0 = (step == 0);
            if (step > 0) {
                s.batches.push_back({static_cast<int>(step), {}});
            }
        } else if (tok == "+" || tok == "-") {
            if (current < 0) fail(line_no, "event before any step block");
            long long u = -1, v = -1;
            if (!(ls >> u >> v) || u < 0 || v < 0) fail(line_no, "bad event endpoints");
            if (u == v) fail(line_no, "self loop");
            if (u > v) std::swap(u, v);
            if (static_cast<VertexId>(v) >= s.n) fail(line_no, "endpoint out of range");
            EdgeEvent e{tok == "+" ? EventKind::Add : EventKind::Remove,
                        static_cast<VertexId>(u), static_cast<VertexId>(v)};
            if (in_step0) {
                if (e.kind != EventKind::Add) fail(line_no, "removal in the t 0 block");
                s.initial_edges.emplace_back(e.u, e.v);
            } else {
                s.batches.back().events.push_back(e);
            }
        } else {
            fail(line_no, "unrecognised token '" + tok + "'");
        }
    }
    if (!have_n) throw StreamError("stream has no vertex count");
    for (const auto& b : s.batches)
        if (b.events.empty())
            throw StreamError("empty batch at step " + std::to_string(b.step));
    return s;
}

void write_event_stream(std::ostream& out, const EventStream& s) {
    out << "n " << s.n << "\n";
    out << "t 0\n";
    for (const auto& [u, v] : s.initial_edges) out << "+ " << u << " " << v << "\n";
    for (const auto& b : s.batches) {
        out << "t " << b.step << "\n";
        for (const auto& e : b.events)
            out << (e.kind == EventKind::Add ? "+ " : "- ") << e.u << " " << e.v << "\n";
    }
}

EventStream load_event_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StreamError("cannot open " + path);
    return read_event_stream(in);
}

void save_event_stream(const std::string& path, const EventStream& s) {
    std::ofstream out(path);
    if (!out) throw StreamError("cannot open " + path + " for writing");
    write_event_stream(out, s);
}

DynamicGraph build_initial_graph(const EventStream& s) {
    DynamicGraph g(s.n);
    for (const auto& [u, v] : s.initial_edges) g.add_initial_edge(u, v);
    return g;
}

} // namespace dynlocness
