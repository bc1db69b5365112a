#pragma once

// Cut sets and cycle presentations.
//
// A cut set places vertices in inter-passage gaps: gap i of a component lies
// between passage i and passage i+1 (mod m), a crossingless component has the
// single gap 0. Canonical form allows at most one cut per gap and requires at
// least one cut per component; cutting k gaps splits the component into k
// edges. A cut set is a valid cycle presentation when
//   (1) no edge visits the same crossing twice, and
//   (2) any two edges sharing crossings have the same edge on top at all of
//       them.
//
// Internal gap indices are 0-based; the external text form ("1,3,5", components
// joined by ';') is 1-based, gap i following the i-th passage.
//
// Enumeration is in lexicographic order (per component, subsets ordered
// prefix-first), so reported witnesses are reproducible. Everything here is
// pure; enumeration work may be split across threads in batches without
// changing results.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "edgenum/diagram.hpp"

namespace edgenum {

struct CutSet {
    std::vector<std::vector<int>> cuts;  // sorted 0-based gap indices per component

    int total() const {
        int n = 0;
        for (const auto& c : cuts) n += static_cast<int>(c.size());
        return n;
    }

    friend bool operator==(const CutSet&, const CutSet&) = default;
};

inline int gap_count(const Diagram& d, int component) {
    int m = d.component_length(component);
    return m > 0 ? m : 1;
}

inline int total_gaps(const Diagram& d) {
    int t = 0;
    for (int i = 0; i < d.component_count(); ++i) t += gap_count(d, i);
    return t;
}

// External 1-based text form, e.g. "1,3,5" or "1;1,2".
inline std::string cut_text(const CutSet& s) {
    std::ostringstream os;
    for (size_t ci = 0; ci < s.cuts.size(); ++ci) {
        if (ci) os << ';';
        for (size_t k = 0; k < s.cuts[ci].size(); ++k) {
            if (k) os << ',';
            os << s.cuts[ci][k] + 1;
        }
    }
    return os.str();
}

inline CutSet parse_cut_text(const Diagram& d, const std::string& text) {
    CutSet s;
    s.cuts.assign(d.component_count(), {});
    size_t ci = 0, i = 0;
    auto finish_component = [&](std::vector<int>& v) {
        if (v.empty()) throw std::invalid_argument("cut set: component without cuts");
        std::sort(v.begin(), v.end());
        for (size_t k = 1; k < v.size(); ++k)
            if (v[k] == v[k - 1]) throw std::invalid_argument("cut set: duplicate cut");
    };
    while (i <= text.size()) {
        if (ci >= s.cuts.size()) throw std::invalid_argument("cut set: too many components");
        size_t end = text.find(';', i);
        std::string part = text.substr(i, end == std::string::npos ? std::string::npos : end - i);
        size_t j = 0;
        while (detail::skip_ws(part, j)) {
            int g = detail::parse_int(part, j, "gap index");
            if (g < 1 || g > gap_count(d, static_cast<int>(ci)))
                throw std::invalid_argument("cut set: gap index " + std::to_string(g) +
                                            " out of range for component " + std::to_string(ci + 1));
            s.cuts[ci].push_back(g - 1);
            detail::skip_ws(part, j);
            if (j < part.size()) {
                if (part[j] != ',') throw std::invalid_argument("cut set: expected ','");
                ++j;
            }
        }
        finish_component(s.cuts[ci]);
        ++ci;
        if (end == std::string::npos) break;
        i = end + 1;
    }
    if (ci != s.cuts.size()) throw std::invalid_argument("cut set: missing components");
    return s;
}

// Canonical-form validation: sorted unique in-range gaps, >= 1 per component.
inline void validate_cut_set(const Diagram& d, const CutSet& s) {
    if (static_cast<int>(s.cuts.size()) != d.component_count())
        throw std::invalid_argument("cut set: component count mismatch");
    for (int ci = 0; ci < d.component_count(); ++ci) {
        const auto& v = s.cuts[ci];
        if (v.empty()) throw std::invalid_argument("cut set: component without cuts");
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k] < 0 || v[k] >= gap_count(d, ci))
                throw std::invalid_argument("cut set: gap index out of range");
            if (k && v[k] <= v[k - 1]) throw std::invalid_argument("cut set: not sorted unique");
        }
    }
}

struct EdgeInterval {
    int component = 0;
    std::vector<int> positions;  // contiguous cyclic run (may be empty for a crossingless component)
    std::vector<int> crossings;  // crossing indices in traversal order
};

enum class Relation : unsigned char { NoCrossing = 0, FirstOver = 1, FirstUnder = 2 };

struct ViolationReport {
    int condition = 0;   // 1 = self-crossing edge, 2 = inconsistent pair
    int edge_a = -1;
    int edge_b = -1;     // condition 2 only
    int crossing = -1;   // crossing index (display id via diagram)
    std::string message;
};

struct CyclePresentation {
    const Diagram* diagram = nullptr;
    CutSet cuts;
    std::vector<EdgeInterval> edges;
    std::vector<unsigned char> rel;          // upper-triangle relation matrix, index i*n+j (i<j)
    std::vector<std::vector<int>> shared;    // ascending crossing indices per pair, index i*n+j
    std::vector<std::pair<int, int>> successive;  // consecutive edges per component (wrap included)

    int size() const { return static_cast<int>(edges.size()); }

    Relation relation(int i, int j) const {
        if (i == j) return Relation::NoCrossing;
        if (i > j) {
            Relation r = relation(j, i);
            if (r == Relation::FirstOver) return Relation::FirstUnder;
            if (r == Relation::FirstUnder) return Relation::FirstOver;
            return r;
        }
        return static_cast<Relation>(rel[static_cast<size_t>(i) * edges.size() + j]);
    }

    // true iff edge i runs over edge j at their (existing) shared crossings
    bool over(int i, int j) const { return relation(i, j) == Relation::FirstOver; }

    const std::vector<int>& shared_crossings(int i, int j) const {
        if (i > j) std::swap(i, j);
        return shared[static_cast<size_t>(i) * edges.size() + j];
    }
};

namespace detail {

// Maps every passage (component, position) to its edge id; edge ids are
// contiguous per component, in traversal order starting after the first cut.
struct EdgeLayout {
    std::vector<int> comp_first_edge;
    std::vector<int> edge_of;  // flat by component offsets
    std::vector<int> comp_offset;
    int edge_count = 0;

    EdgeLayout(const Diagram& d, const CutSet& s) {
        const int nc = d.component_count();
        comp_first_edge.resize(nc + 1);
        comp_offset.resize(nc + 1, 0);
        for (int ci = 0; ci < nc; ++ci)
            comp_offset[ci + 1] = comp_offset[ci] + d.component_length(ci);
        edge_of.assign(comp_offset[nc], -1);
        int next_edge = 0;
        for (int ci = 0; ci < nc; ++ci) {
            comp_first_edge[ci] = next_edge;
            const auto& cs = s.cuts[ci];
            const int m = d.component_length(ci);
            const int k = static_cast<int>(cs.size());
            if (m == 0) {
                ++next_edge;  // single empty edge
                continue;
            }
            for (int j = 0; j < k; ++j) {
                int edge = next_edge + j;
                int p = (cs[j] + 1) % m;
                while (true) {
                    edge_of[comp_offset[ci] + p] = edge;
                    if (p == cs[(j + 1) % k]) break;
                    p = (p + 1) % m;
                }
            }
            next_edge += k;
        }
        comp_first_edge[nc] = next_edge;
        edge_count = next_edge;
    }

    int at(const PassageLoc& loc) const { return edge_of[comp_offset[loc.component] + loc.position]; }
};

}  // namespace detail

// Fast validity test; identical verdicts to check_presentation.
inline bool presentation_valid(const Diagram& d, const CutSet& s) {
    detail::EdgeLayout lay(d, s);
    const int n = lay.edge_count;
    const int c = d.crossing_count();
    std::vector<unsigned char> rel(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < c; ++x) {
        int eo = lay.at(d.over_loc(x));
        int eu = lay.at(d.under_loc(x));
        if (eo == eu) return false;  // condition (1)
        unsigned char dir = eo < eu ? 1 : 2;
        unsigned char& cell = rel[static_cast<size_t>(std::min(eo, eu)) * n + std::max(eo, eu)];
        if (cell == 0)
            cell = dir;
        else if (cell != dir)
            return false;  // condition (2)
    }
    return true;
}

struct CheckOutcome {
    std::optional<CyclePresentation> presentation;
    std::optional<ViolationReport> violation;
    bool ok() const { return presentation.has_value(); }
};

inline CheckOutcome check_presentation(const Diagram& d, const CutSet& s) {
    validate_cut_set(d, s);
    detail::EdgeLayout lay(d, s);
    const int n = lay.edge_count;
    const int c = d.crossing_count();

    std::vector<EdgeInterval> edges(n);
    for (int ci = 0; ci < d.component_count(); ++ci) {
        const int m = d.component_length(ci);
        const auto& cs = s.cuts[ci];
        const int k = static_cast<int>(cs.size());
        int first = lay.comp_first_edge[ci];
        if (m == 0) {
            edges[first].component = ci;
            continue;
        }
        for (int j = 0; j < k; ++j) {
            EdgeInterval& e = edges[first + j];
            e.component = ci;
            int p = (cs[j] + 1) % m;
            while (true) {
                e.positions.push_back(p);
                e.crossings.push_back(d.components()[ci][p].crossing);
                if (p == cs[(j + 1) % k]) break;
                p = (p + 1) % m;
            }
        }
    }

    // Condition (1), edges checked by index.
    {
        std::vector<int> stamp(c, -1);
        for (int e = 0; e < n; ++e) {
            for (int x : edges[e].crossings) {
                if (stamp[x] == e) {
                    ViolationReport v;
                    v.condition = 1;
                    v.edge_a = e;
                    v.crossing = x;
                    v.message = "condition (1): edge e" + std::to_string(e + 1) +
                                " visits crossing " + std::to_string(d.crossings()[x].id) + " twice";
                    return CheckOutcome{std::nullopt, v};
                }
                stamp[x] = e;
            }
        }
    }

    // Condition (2), pairs checked lexicographically; within a pair the
    // offending crossing is the first one disagreeing with the pair's first
    // shared crossing.
    std::vector<unsigned char> rel(static_cast<size_t>(n) * n, 0);
    std::vector<std::vector<int>> shared(static_cast<size_t>(n) * n);
    std::vector<unsigned char> conflict(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < c; ++x) {
        int eo = lay.at(d.over_loc(x));
        int eu = lay.at(d.under_loc(x));
        size_t idx = static_cast<size_t>(std::min(eo, eu)) * n + std::max(eo, eu);
        unsigned char dir = eo < eu ? 1 : 2;
        shared[idx].push_back(x);
        if (rel[idx] == 0)
            rel[idx] = dir;
        else if (rel[idx] != dir)
            conflict[idx] = 1;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            size_t idx = static_cast<size_t>(i) * n + j;
            if (!conflict[idx]) continue;
            int eo0 = lay.at(d.over_loc(shared[idx][0]));
            int bad = -1;
            for (int x : shared[idx])
                if (lay.at(d.over_loc(x)) != eo0) {
                    bad = x;
                    break;
                }
            ViolationReport v;
            v.condition = 2;
            v.edge_a = i;
            v.edge_b = j;
            v.crossing = bad;
            v.message = "condition (2): edges e" + std::to_string(i + 1) + ", e" +
                        std::to_string(j + 1) + " share crossings with mixed over/under (crossing " +
                        std::to_string(d.crossings()[bad].id) + ")";
            return CheckOutcome{std::nullopt, v};
        }
    }

    CyclePresentation p;
    p.diagram = &d;
    p.cuts = s;
    p.edges = std::move(edges);
    p.rel = std::move(rel);
    p.shared = std::move(shared);
    for (int ci = 0; ci < d.component_count(); ++ci) {
        int first = lay.comp_first_edge[ci];
        int k = lay.comp_first_edge[ci + 1] - first;
        if (k < 2) continue;
        for (int j = 0; j < k; ++j) p.successive.emplace_back(first + j, first + (j + 1) % k);
    }
    return CheckOutcome{std::move(p), std::nullopt};
}

// Yields every canonical cut set of total size n in lexicographic order
// (components in order; within a component, subsets prefix-first). Returns the
// number of sets visited; 0 when n is infeasible.
template <class F>
std::uint64_t enumerate_cut_sets(const Diagram& d, int n, F&& visit) {
    const int nc = d.component_count();
    if (n < nc || nc == 0) return 0;
    std::vector<int> gaps(nc);
    for (int i = 0; i < nc; ++i) gaps[i] = gap_count(d, i);
    std::vector<int> suffix(nc + 1, 0);
    for (int i = nc - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + gaps[i];
    if (n > suffix[0]) return 0;

    CutSet cs;
    cs.cuts.assign(nc, {});
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int ci, int used, int next_gap) -> void {
        auto& cur = cs.cuts[ci];
        if (!cur.empty()) {
            int rem = n - used;
            int rem_comps = nc - ci - 1;
            if (rem >= rem_comps && rem <= suffix[ci + 1]) {
                if (ci + 1 == nc) {
                    ++count;
                    visit(static_cast<const CutSet&>(cs));
                } else {
                    self(self, ci + 1, used, 0);
                }
            }
        }
        int rem_comps = nc - ci - 1;
        for (int g = next_gap; g < gaps[ci]; ++g) {
            if (used + 1 + rem_comps > n) break;
            cur.push_back(g);
            self(self, ci, used + 1, g + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    return count;
}

namespace detail {

template <class Work>
inline void parallel_chunks(std::size_t count, int jobs, Work&& work) {
    if (jobs <= 1 || count < 2) {
        if (count) work(std::size_t{0}, count);
        return;
    }
    std::size_t j = std::min<std::size_t>(jobs, count);
    std::size_t chunk = (count + j - 1) / j;
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < j; ++t) {
        std::size_t b = t * chunk, e = std::min(count, b + chunk);
        if (b >= e) break;
        threads.emplace_back([&work, b, e] { work(b, e); });
    }
    for (auto& t : threads) t.join();
}

// Validity over all cut sets of size n, sink called in lexicographic order.
template <class Sink>
std::uint64_t scan_cut_sets(const Diagram& d, int n, int jobs, Sink&& sink) {
    if (jobs <= 1)
        return enumerate_cut_sets(d, n, [&](const CutSet& cs) { sink(cs, presentation_valid(d, cs)); });
    constexpr std::size_t kBatch = 2048;
    std::vector<CutSet> batch;
    batch.reserve(kBatch);
    std::vector<char> ok;
    auto flush = [&] {
        ok.assign(batch.size(), 0);
        parallel_chunks(batch.size(), jobs, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) ok[i] = presentation_valid(d, batch[i]) ? 1 : 0;
        });
        for (std::size_t i = 0; i < batch.size(); ++i) sink(batch[i], ok[i] != 0);
        batch.clear();
    };
    std::uint64_t count = enumerate_cut_sets(d, n, [&](const CutSet& cs) {
        batch.push_back(cs);
        if (batch.size() == kBatch) flush();
    });
    flush();
    return count;
}

}  // namespace detail

// Cuts at every gap where the passage role changes; components without a role
// change (crossingless, or uniformly over/under) get their gap 0 cut. The
// result always validates: same-role edges never share a crossing and mixed
// pairs see each crossing from the same side.
inline CutSet overpass_cut_set(const Diagram& d) {
    CutSet s;
    s.cuts.assign(d.component_count(), {});
    for (int ci = 0; ci < d.component_count(); ++ci) {
        int m = d.component_length(ci);
        if (m == 0) {
            s.cuts[ci] = {0};
            continue;
        }
        const auto& comp = d.components()[ci];
        for (int g = 0; g < m; ++g)
            if (comp[g].role != comp[(g + 1) % m].role) s.cuts[ci].push_back(g);
        if (s.cuts[ci].empty()) s.cuts[ci] = {0};
    }
    return s;
}

struct SearchOptions {
    int n_max = -1;  // <= 0: bounded by the overpass cut set (always valid)
    int jobs = 1;
};

struct SearchResult {
    bool found = false;
    int minimal_n = 0;
    CutSet witness;  // lexicographically least valid cut set at minimal_n
    std::uint64_t candidates_examined = 0;
    std::uint64_t valid_count_at_minimal_n = 0;
    bool truncated = false;  // n_max stopped the search before the guaranteed bound
};

inline SearchResult min_presentation(const Diagram& d, SearchOptions opts = {}) {
    SearchResult r;
    const int nc = d.component_count();
    const int seed = overpass_cut_set(d).total();
    int cap = opts.n_max > 0 ? std::min(opts.n_max, seed) : seed;
    for (int n = nc; n <= cap; ++n) {
        bool any = false;
        detail::scan_cut_sets(d, n, opts.jobs, [&](const CutSet& cs, bool valid) {
            ++r.candidates_examined;
            if (!valid) return;
            if (!any) {
                any = true;
                r.witness = cs;
            }
            ++r.valid_count_at_minimal_n;
        });
        if (any) {
            r.found = true;
            r.minimal_n = n;
            return r;
        }
        r.valid_count_at_minimal_n = 0;
    }
    r.truncated = opts.n_max > 0 && opts.n_max < seed;
    return r;
}

struct EnumStats {
    int n_lo = 0, n_hi = 0;
    std::uint64_t candidates = 0;
    std::uint64_t valid = 0;
    bool truncated = false;  // requested range exceeded the gap capacity
};

// All valid presentations with n in [n_lo, n_hi], lexicographic order within
// each n, n ascending. The visitor receives fully-built presentations.
template <class F>
EnumStats enumerate_presentations(const Diagram& d, int n_lo, int n_hi, F&& visit, int jobs = 1) {
    EnumStats st;
    int cap = total_gaps(d);
    st.truncated = n_hi > cap;
    st.n_lo = std::max(n_lo, d.component_count());
    st.n_hi = std::min(n_hi, cap);
    for (int n = st.n_lo; n <= st.n_hi; ++n) {
        st.candidates += detail::scan_cut_sets(d, n, jobs, [&](const CutSet& cs, bool valid) {
            if (!valid) return;
            ++st.valid;
            auto out = check_presentation(d, cs);
            visit(*out.presentation);
        });
    }
    return st;
}

// Removes one cut; the component must retain at least one.
inline CutSet merge_cut(const CutSet& s, int component, int gap) {
    if (component < 0 || component >= static_cast<int>(s.cuts.size()))
        throw std::invalid_argument("merge_cut: component out of range");
    CutSet r = s;
    auto& v = r.cuts[component];
    auto it = std::find(v.begin(), v.end(), gap);
    if (it == v.end()) throw std::invalid_argument("merge_cut: cut not present");
    if (v.size() == 1) throw std::invalid_argument("merge_cut: last cut of a component");
    v.erase(it);
    return r;
}

struct ObstructionReport {
    int edge = -1;
    int next_edge = -1;
    bool pair_exists = false;       // component has >= 2 edges
    bool adjacent = false;          // e_i, e_{i+1} share a crossing (adjacent in G(D))
    std::vector<int> forward_mid;   // common neighbors k with e_i -> e_k -> e_{i+1}
    std::vector<int> backward_mid;  // common neighbors k with e_{i+1} -> e_k -> e_i
    bool union_self_crossing = false;
    int repeated_crossing = -1;     // crossing index
    bool partners_consistent = true;
    int offending_partner = -1;
    int offending_crossing = -1;
    bool mergeable = false;  // mergeable-on-this-diagram
    int removed_gap = -1;    // the cut a merge would remove
};

// Merge analysis for the successive pair (e_i, e_{i+1}) on e_i's component.
inline ObstructionReport merge_obstruction(const CyclePresentation& p, int edge_index) {
    const int n = p.size();
    if (edge_index < 0 || edge_index >= n) throw std::out_of_range("merge_obstruction: edge index");
    ObstructionReport r;
    r.edge = edge_index;

    const Diagram& d = *p.diagram;
    int ci = p.edges[edge_index].component;
    int first = edge_index;
    while (first > 0 && p.edges[first - 1].component == ci) --first;
    int last = edge_index;
    while (last + 1 < n && p.edges[last + 1].component == ci) ++last;
    int k = last - first + 1;
    if (k < 2) return r;  // single-edge component: nothing to merge with
    r.pair_exists = true;
    int pos = edge_index - first;
    r.next_edge = first + (pos + 1) % k;
    const auto& cs = p.cuts.cuts[ci];
    r.removed_gap = cs[(pos + 1) % static_cast<int>(cs.size())];

    r.adjacent = p.relation(edge_index, r.next_edge) != Relation::NoCrossing;
    if (!r.adjacent) {
        for (int v = 0; v < n; ++v) {
            if (v == edge_index || v == r.next_edge) continue;
            if (p.relation(edge_index, v) == Relation::NoCrossing) continue;
            if (p.relation(r.next_edge, v) == Relation::NoCrossing) continue;
            if (p.over(edge_index, v) && p.over(v, r.next_edge)) r.forward_mid.push_back(v);
            if (p.over(r.next_edge, v) && p.over(v, edge_index)) r.backward_mid.push_back(v);
        }
    }

    // (c) repeated crossing in the union
    {
        std::vector<int> stamp(d.crossing_count(), 0);
        for (int x : p.edges[edge_index].crossings) stamp[x] = 1;
        for (int x : p.edges[r.next_edge].crossings)
            if (stamp[x]) {
                r.union_self_crossing = true;
                r.repeated_crossing = x;
                break;
            }
    }

    // Every partner sharing crossings with the union must see it consistently;
    // an inconsistent partner is exactly a directed 2-path between the pair.
    for (int v = 0; v < n && r.partners_consistent; ++v) {
        if (v == edge_index || v == r.next_edge) continue;
        Relation a = p.relation(edge_index, v);
        Relation b = p.relation(r.next_edge, v);
        if (a == Relation::NoCrossing || b == Relation::NoCrossing) continue;
        if (a != b) {
            r.partners_consistent = false;
            r.offending_partner = v;
            const auto& sh = p.shared_crossings(r.next_edge, v);
            r.offending_crossing = sh.empty() ? -1 : sh.front();
        }
    }

    r.mergeable = r.pair_exists && !r.union_self_crossing && r.partners_consistent;
    return r;
}

// A rotation r such that listing edges e_r, e_{r+1}, ... makes every digraph
// arc point from an earlier edge to a later one; such a diagram is descending,
// hence trivial. Knots only.
inline std::optional<int> descending_rotation(const CyclePresentation& p) {
    if (p.diagram->component_count() != 1)
        throw std::invalid_argument("descending_rotation: knots only");
    const int n = p.size();
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Relation rl = p.relation(i, j);
            if (rl == Relation::FirstOver) arcs.emplace_back(i, j);
            if (rl == Relation::FirstUnder) arcs.emplace_back(j, i);
        }
    for (int r = 0; r < n; ++r) {
        bool ok = true;
        for (const auto& [u, v] : arcs)
            if ((u - r + n) % n >= (v - r + n) % n) {
                ok = false;
                break;
            }
        if (ok) return r;
    }
    return std::nullopt;
}

}  // namespace edgenum
