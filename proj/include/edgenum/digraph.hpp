#pragma once

// The directed graph G(D) of a cycle presentation: one vertex per edge in
// traversal order, an arc from the over-edge to the under-edge of every
// crossing-sharing pair. Condition (2) makes the relation single-valued, so
// there is at most one arc per vertex pair and never a self-loop.

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "edgenum/presentation.hpp"

namespace edgenum {

struct DigraphArc {
    int from = -1;
    int to = -1;
    std::vector<int> crossings;  // shared crossings, ascending
};

struct OverDigraph {
    int vertex_count = 0;
    std::vector<DigraphArc> arcs;                  // sorted by (from, to)
    std::vector<std::pair<int, int>> successive;   // consecutive edges per component
    std::vector<int> crossing_ids;                 // display ids, indexed by crossing index

    bool has_arc(int u, int v) const {
        for (const auto& a : arcs)
            if (a.from == u && a.to == v) return true;
        return false;
    }
};

inline OverDigraph build(const CyclePresentation& p) {
    OverDigraph g;
    g.vertex_count = p.size();
    g.successive = p.successive;
    for (const auto& x : p.diagram->crossings()) g.crossing_ids.push_back(x.id);
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j) {
            Relation r = p.relation(i, j);
            if (r == Relation::NoCrossing) continue;
            DigraphArc a;
            a.from = r == Relation::FirstOver ? i : j;
            a.to = r == Relation::FirstOver ? j : i;
            a.crossings = p.shared_crossings(i, j);
            g.arcs.push_back(std::move(a));
        }
    std::sort(g.arcs.begin(), g.arcs.end(),
              [](const DigraphArc& a, const DigraphArc& b) {
                  return a.from != b.from ? a.from < b.from : a.to < b.to;
              });
    return g;
}

struct DigraphClass {
    bool connected = false;
    bool is_path = false;            // underlying undirected graph is a simple path
    bool has_directed_cycle = false;
    bool is_directed_n_cycle = false;
    std::vector<int> successive_distance;  // d(v_i, v_{i+1}) per successive pair, -1 if unreachable
};

inline DigraphClass classify(const OverDigraph& g) {
    DigraphClass dc;
    const int n = g.vertex_count;
    if (n == 0) return dc;

    std::vector<std::vector<int>> und(n), out(n);
    std::vector<int> indeg(n, 0);
    for (const auto& a : g.arcs) {
        und[a.from].push_back(a.to);
        und[a.to].push_back(a.from);
        out[a.from].push_back(a.to);
        ++indeg[a.to];
    }

    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : und[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        dc.connected = reached == n;
    }

    {
        bool deg_ok = true;
        for (int v = 0; v < n; ++v)
            if (und[v].size() > 2) deg_ok = false;
        dc.is_path = dc.connected && deg_ok && static_cast<int>(g.arcs.size()) == n - 1;
    }

    {
        // iterative three-color DFS
        std::vector<char> color(n, 0);
        for (int s = 0; s < n && !dc.has_directed_cycle; ++s) {
            if (color[s]) continue;
            std::vector<std::pair<int, size_t>> stack{{s, 0}};
            color[s] = 1;
            while (!stack.empty() && !dc.has_directed_cycle) {
                auto& [v, k] = stack.back();
                if (k < out[v].size()) {
                    int w = out[v][k++];
                    if (color[w] == 1) {
                        dc.has_directed_cycle = true;
                    } else if (color[w] == 0) {
                        color[w] = 1;
                        stack.emplace_back(w, 0);
                    }
                } else {
                    color[v] = 2;
                    stack.pop_back();
                }
            }
        }
    }

    {
        bool deg1 = static_cast<int>(g.arcs.size()) == n;
        for (int v = 0; v < n && deg1; ++v)
            if (indeg[v] != 1 || out[v].size() != 1) deg1 = false;
        dc.is_directed_n_cycle = deg1 && dc.connected;
    }

    for (const auto& [u, v] : g.successive) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty() && dist[v] < 0) {
            int x = q.front();
            q.pop();
            for (int w : und[x])
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    q.push(w);
                }
        }
        dc.successive_distance.push_back(dist[v]);
    }
    return dc;
}

struct SourcesSinks {
    std::vector<int> sources;
    std::vector<int> sinks;
};

// Source/sink sets of g minus the arc between the given pair (either
// orientation); a pair without an arc is a no-op.
inline SourcesSinks sources_sinks(const OverDigraph& g, std::optional<std::pair<int, int>> without_arc = {}) {
    std::vector<int> indeg(g.vertex_count, 0), outdeg(g.vertex_count, 0);
    for (const auto& a : g.arcs) {
        if (without_arc) {
            auto [u, v] = *without_arc;
            if ((a.from == u && a.to == v) || (a.from == v && a.to == u)) continue;
        }
        ++outdeg[a.from];
        ++indeg[a.to];
    }
    SourcesSinks r;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (indeg[v] == 0) r.sources.push_back(v);
        if (outdeg[v] == 0) r.sinks.push_back(v);
    }
    return r;
}

// Deterministic DOT emission, vertices e1..en in traversal order, arcs
// annotated with the shared crossing ids.
inline std::string to_dot(const OverDigraph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (int v = 0; v < g.vertex_count; ++v) os << "  e" << v + 1 << ";\n";
    for (const auto& a : g.arcs) {
        os << "  e" << a.from + 1 << " -> e" << a.to + 1 << " [label=\"";
        for (size_t k = 0; k < a.crossings.size(); ++k) {
            if (k) os << ',';
            os << g.crossing_ids[a.crossings[k]];
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace edgenum
