#pragma once

// Test-side oracles, deliberately independent of the library's computation
// paths: a recursive skein-expansion bracket with loop tracing (no union-find),
// a from-scratch presentation validity decision working straight off the
// passage lists, and a brute-force directed-cycle detector over vertex
// subsets. Used to cross-check the implementation and to freeze expected
// values.

#include <cstdint>
#include <map>
#include <vector>

#include "edgenum/diagram.hpp"
#include "edgenum/laurent.hpp"

namespace oracle {

struct Join {
    int u, v;
};

// Cycle count of the 2-regular multigraph the smoothing joins induce on arcs.
inline int trace_loops(int max_label, const std::vector<Join>& joins) {
    std::vector<std::vector<int>> inc(max_label + 1);
    for (size_t e = 0; e < joins.size(); ++e) {
        inc[joins[e].u].push_back(static_cast<int>(e));
        inc[joins[e].v].push_back(static_cast<int>(e));
    }
    std::vector<char> used(joins.size(), 0);
    int loops = 0;
    for (int a = 1; a <= max_label; ++a) {
        for (int e : inc[a]) {
            if (used[e]) continue;
            ++loops;
            int cur_arc = a, cur_edge = e;
            while (!used[cur_edge]) {
                used[cur_edge] = 1;
                int next_arc = joins[cur_edge].u == cur_arc ? joins[cur_edge].v : joins[cur_edge].u;
                const auto& ie = inc[next_arc];
                int next_edge = ie[0] == cur_edge ? ie[1] : ie[0];
                cur_arc = next_arc;
                cur_edge = next_edge;
            }
        }
    }
    return loops;
}

inline edgenum::Laurent delta_pow(int k) {
    edgenum::Laurent delta = edgenum::Laurent::term(-1, 2) + edgenum::Laurent::term(-1, -2);
    return delta.pow(k);
}

inline edgenum::Laurent skein(const std::vector<std::array<int, 4>>& quads, size_t idx,
                              std::vector<Join>& acc, int max_label, int extra_loops) {
    if (idx == quads.size()) {
        int loops = trace_loops(max_label, acc) + extra_loops;
        return delta_pow(loops - 1);
    }
    const auto& [a, b, c, d] = quads[idx];
    acc.push_back({a, b});
    acc.push_back({c, d});
    edgenum::Laurent va = skein(quads, idx + 1, acc, max_label, extra_loops);
    va.shift(1, +1);
    acc.resize(acc.size() - 2);
    acc.push_back({a, d});
    acc.push_back({b, c});
    edgenum::Laurent vb = skein(quads, idx + 1, acc, max_label, extra_loops);
    vb.shift(1, -1);
    acc.resize(acc.size() - 2);
    return va + vb;
}

inline edgenum::Laurent bracket(const edgenum::Diagram& d) {
    std::vector<std::array<int, 4>> quads;
    int max_label = 0;
    for (const auto& x : d.crossings()) {
        quads.push_back(*x.pd);
        for (int lbl : *x.pd) max_label = std::max(max_label, lbl);
    }
    std::vector<Join> acc;
    if (quads.empty())
        return delta_pow(d.crossingless_components() > 0 ? d.crossingless_components() - 1 : 0);
    return skein(quads, 0, acc, max_label, d.crossingless_components());
}

inline edgenum::Laurent jones(const edgenum::Diagram& d) {
    edgenum::Laurent br = oracle::bracket(d);
    int w = edgenum::writhe(d);
    edgenum::Laurent f;
    long long sign = (w % 2 == 0) ? 1 : -1;
    for (const auto& [e, co] : br.terms()) f.add_term(-(e - 3 * w), co * sign);
    return f;
}

// Independent validity decision for a cut set (0-based sorted gaps per
// component), straight from the passage lists. Edge of a position p with cuts
// cs: (count of cuts < p) - 1 mod |cs|.
inline bool valid_presentation(const edgenum::Diagram& d,
                               const std::vector<std::vector<int>>& cuts) {
    const auto& comps = d.components();
    int total_comps = d.component_count();
    std::vector<int> first_edge(total_comps + 1, 0);
    for (int ci = 0; ci < total_comps; ++ci)
        first_edge[ci + 1] = first_edge[ci] + static_cast<int>(cuts[ci].size());
    auto edge_of = [&](int ci, int p) {
        const auto& cs = cuts[ci];
        int k = static_cast<int>(cs.size());
        int q = 0;
        for (int g : cs)
            if (g < p) ++q;
        return first_edge[ci] + (q - 1 + k) % k;
    };
    // locate both passages of every crossing by direct scan
    std::map<int, std::pair<int, int>> over_edge_under_edge;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (int p = 0; p < static_cast<int>(comps[ci].size()); ++p) {
            int e = edge_of(ci, p);
            auto& slot = over_edge_under_edge.emplace(comps[ci][p].crossing, std::make_pair(-1, -1))
                             .first->second;
            (comps[ci][p].role == edgenum::Role::Over ? slot.first : slot.second) = e;
        }
    std::map<std::pair<int, int>, int> over_of_pair;
    for (const auto& [x, eo_eu] : over_edge_under_edge) {
        (void)x;
        auto [eo, eu] = eo_eu;
        if (eo == eu) return false;  // condition (1)
        auto key = std::minmax(eo, eu);
        auto [it, fresh] = over_of_pair.emplace(std::make_pair(key.first, key.second), eo);
        if (!fresh && it->second != eo) return false;  // condition (2)
    }
    return true;
}

// Exhaustive 3-cut scan for knots by plain triple loops.
inline bool any_valid_three_cut(const edgenum::Diagram& d, std::uint64_t* candidates = nullptr) {
    int m = static_cast<int>(d.components()[0].size());
    std::uint64_t count = 0;
    bool any = false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                ++count;
                if (valid_presentation(d, {{i, j, k}})) any = true;
            }
    if (candidates) *candidates = count;
    return any;
}

// A digraph has a directed cycle iff some nonempty vertex subset S gives every
// vertex of S an out-arc inside S.
inline bool has_directed_cycle(int n, const std::vector<std::pair<int, int>>& arcs) {
    for (unsigned s = 1; s < (1u << n); ++s) {
        bool all_have_out = true;
        for (int v = 0; v < n && all_have_out; ++v) {
            if (!((s >> v) & 1u)) continue;
            bool out = false;
            for (const auto& [u, w] : arcs)
                if (u == v && ((s >> w) & 1u)) out = true;
            if (!out) all_have_out = false;
        }
        if (all_have_out) return true;
    }
    return false;
}

}  // namespace oracle
