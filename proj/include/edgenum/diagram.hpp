#pragma once

// Knot/link diagrams as cyclic sequences of crossing passages.
//
// Two input encodings are supported.
//
// Planar diagram (PD) text: whitespace-separated tokens X[a,b,c,d] plus an
// optional unknot(k) token for k crossingless components. The quadruple lists
// the four arc labels counterclockwise starting from the incoming
// under-strand, so the under-strand runs a -> c. Arc labels are 1..2c,
// consecutive along each component (wrapping from the component's largest
// label back to its smallest), which determines the over-strand direction:
// exactly one of b -> d, d -> b is label-consistent, except for 2-arc
// components where the non-wrap direction is preferred (this is what standard
// tables use; it also makes X[1,2,2,1] a kink and X[1,1,2,2] an error).
// A crossing is positive when the over-strand runs d -> b.
//
// Extended Gauss text: per-component concatenated tokens O<k><sign> /
// U<k><sign>, components separated by ';'. Signs are optional; when every
// crossing's sign is known the planar structure is reconstructed (synthetic
// arc labels), so the bracket and writhe become available. Realizability of
// Gauss codes is not checked; inputs are trusted.
//
// Diagrams are immutable after construction and safe to share across threads.

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgenum {

enum class Role : unsigned char { Over, Under };

inline Role flip(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Crossing {
    int id = 0;                            // display label (input order for PD)
    std::optional<std::array<int, 4>> pd;  // (a,b,c,d) arc labels when planar data is known
    std::optional<int> sign;               // +1 / -1

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Passage {
    int crossing = 0;  // index into Diagram::crossings()
    Role role = Role::Over;
    int component = 0;
    int position = 0;

    friend bool operator==(const Passage&, const Passage&) = default;
};

// Location of one passage: (component, position).
struct PassageLoc {
    int component = -1;
    int position = -1;

    friend bool operator==(const PassageLoc&, const PassageLoc&) = default;
};

class Diagram {
public:
    Diagram() = default;

    // Validates and indexes the passage structure. Throws parse_error on
    // structural violations regardless of which parser produced the input.
    Diagram(std::vector<Crossing> crossings, std::vector<std::vector<Passage>> components,
            int crossingless)
        : crossings_(std::move(crossings)),
          components_(std::move(components)),
          crossingless_(crossingless) {
        const int c = static_cast<int>(crossings_.size());
        over_loc_.assign(c, PassageLoc{});
        under_loc_.assign(c, PassageLoc{});
        int passages = 0;
        for (int ci = 0; ci < static_cast<int>(components_.size()); ++ci) {
            auto& comp = components_[ci];
            if (comp.empty()) throw parse_error("internal: empty passage component");
            for (int pos = 0; pos < static_cast<int>(comp.size()); ++pos) {
                Passage& p = comp[pos];
                p.component = ci;
                p.position = pos;
                if (p.crossing < 0 || p.crossing >= c)
                    throw parse_error("internal: passage references unknown crossing");
                PassageLoc& slot = p.role == Role::Over ? over_loc_[p.crossing] : under_loc_[p.crossing];
                if (slot.component >= 0)
                    throw parse_error("crossing " + std::to_string(crossings_[p.crossing].id) +
                                      " visited twice with the same role");
                slot = PassageLoc{ci, pos};
                ++passages;
            }
        }
        if (passages != 2 * c)
            throw parse_error("passage count does not equal twice the crossing count");
        for (int x = 0; x < c; ++x)
            if (over_loc_[x].component < 0 || under_loc_[x].component < 0)
                throw parse_error("crossing " + std::to_string(crossings_[x].id) +
                                  " lacks an over or under passage");
    }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<std::vector<Passage>>& components() const { return components_; }
    int crossingless_components() const { return crossingless_; }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int passage_count() const { return 2 * crossing_count(); }

    // Passage-bearing components come first, then crossingless ones.
    int component_count() const { return static_cast<int>(components_.size()) + crossingless_; }
    bool is_knot() const { return component_count() == 1; }

    int component_length(int comp) const {
        if (comp < static_cast<int>(components_.size()))
            return static_cast<int>(components_[comp].size());
        return 0;
    }

    const PassageLoc& over_loc(int crossing) const { return over_loc_[crossing]; }
    const PassageLoc& under_loc(int crossing) const { return under_loc_[crossing]; }

    Role role_at(const PassageLoc& loc) const {
        return components_[loc.component][loc.position].role;
    }

    bool has_planar_data() const {
        for (const auto& x : crossings_)
            if (!x.pd) return false;
        return true;
    }
    bool has_signs() const {
        for (const auto& x : crossings_)
            if (!x.sign) return false;
        return true;
    }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.crossings_ == b.crossings_ && a.components_ == b.components_ &&
               a.crossingless_ == b.crossingless_;
    }

private:
    std::vector<Crossing> crossings_;
    std::vector<std::vector<Passage>> components_;
    int crossingless_ = 0;
    std::vector<PassageLoc> over_loc_;
    std::vector<PassageLoc> under_loc_;
};

namespace detail {

inline bool skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i < s.size();
}

inline int parse_int(const std::string& s, size_t& i, const char* what) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error(std::string("expected ") + what);
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000) throw parse_error(std::string(what) + " out of range");
        ++i;
    }
    return static_cast<int>(v);
}

inline void expect(const std::string& s, size_t& i, char ch) {
    if (i >= s.size() || s[i] != ch)
        throw parse_error(std::string("expected '") + ch + "'");
    ++i;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

inline Diagram parse_pd(const std::string& text) {
    std::vector<std::array<int, 4>> quads;
    int crossingless = 0;
    {
        size_t i = 0;
        while (detail::skip_ws(text, i)) {
            if (text.compare(i, 2, "X[") == 0) {
                i += 2;
                std::array<int, 4> q{};
                for (int k = 0; k < 4; ++k) {
                    if (k) detail::expect(text, i, ',');
                    q[k] = detail::parse_int(text, i, "arc label");
                }
                detail::expect(text, i, ']');
                quads.push_back(q);
            } else if (text.compare(i, 7, "unknot(") == 0) {
                i += 7;
                crossingless += detail::parse_int(text, i, "component count");
                detail::expect(text, i, ')');
            } else {
                throw parse_error("unknown token at offset " + std::to_string(i));
            }
        }
    }
    const int c = static_cast<int>(quads.size());
    if (c == 0 && crossingless == 0) throw parse_error("empty input without unknot");
    if (c == 0) return Diagram({}, {}, crossingless);

    std::vector<int> uses(2 * c + 1, 0);
    for (const auto& q : quads)
        for (int x : q) {
            if (x < 1 || x > 2 * c)
                throw parse_error("label " + std::to_string(x) + " out of range 1.." +
                                  std::to_string(2 * c));
            ++uses[x];
        }
    for (int x = 1; x <= 2 * c; ++x)
        if (uses[x] != 2)
            throw parse_error("label " + std::to_string(x) + " used " + std::to_string(uses[x]) +
                              " times (expected 2)");

    // Components: labels joined by (a,c) and (b,d) pairs must form contiguous ranges.
    detail::UnionFind uf(2 * c + 1);
    for (const auto& [a, b, cc, d] : quads) {
        uf.unite(a, cc);
        uf.unite(b, d);
    }
    std::vector<int> comp_min(2 * c + 1, 0), comp_max(2 * c + 1, 0), comp_size(2 * c + 1, 0);
    for (int x = 1; x <= 2 * c; ++x) {
        int r = uf.find(x);
        if (comp_size[r] == 0) comp_min[r] = comp_max[r] = x;
        comp_min[r] = std::min(comp_min[r], x);
        comp_max[r] = std::max(comp_max[r], x);
        ++comp_size[r];
    }
    for (int x = 1; x <= 2 * c; ++x) {
        int r = uf.find(x);
        if (comp_max[r] - comp_min[r] + 1 != comp_size[r])
            throw parse_error("succession inconsistency: component labels not contiguous");
    }
    auto successor = [&](int x) {
        int r = uf.find(x);
        return x < comp_max[r] ? x + 1 : comp_min[r];
    };

    // Under-strand runs a -> c, so c must be a's successor along the strand.
    for (const auto& [a, b, cc, d] : quads) {
        (void)b;
        (void)d;
        if (successor(a) != cc)
            throw parse_error("succession inconsistency: under-strand " + std::to_string(a) +
                              " -> " + std::to_string(cc));
    }

    // Over-strand directions: (in, out) labels per crossing.
    std::vector<std::pair<int, int>> over;
    over.reserve(c);
    for (const auto& [a, b, cc, d] : quads) {
        (void)a;
        (void)cc;
        bool bd = successor(b) == d, db = successor(d) == b;
        if (bd && db) {
            // 2-arc component: prefer the non-wrap direction.
            if ((d - b) % (2 * c) == 1 || (d - b + 2 * c) % (2 * c) == 1)
                over.emplace_back(b, d);
            else
                over.emplace_back(d, b);
        } else if (bd) {
            over.emplace_back(b, d);
        } else if (db) {
            over.emplace_back(d, b);
        } else {
            throw parse_error("succession inconsistency: over-strand labels not successive");
        }
    }

    // Each label must enter exactly one crossing and leave exactly one.
    std::vector<int> in_at(2 * c + 1, -1);  // label -> crossing it enters
    std::vector<Role> in_role(2 * c + 1, Role::Over);
    std::vector<int> out_of(2 * c + 1, -1);
    for (int x = 0; x < c; ++x) {
        const auto& [a, b, cc, d] = quads[x];
        (void)b;
        (void)d;
        auto set_in = [&](int label, Role r) {
            if (in_at[label] >= 0)
                throw parse_error("succession inconsistency: label " + std::to_string(label) +
                                  " enters two crossings");
            in_at[label] = x;
            in_role[label] = r;
        };
        auto set_out = [&](int label) {
            if (out_of[label] >= 0)
                throw parse_error("succession inconsistency: label " + std::to_string(label) +
                                  " leaves two crossings");
            out_of[label] = x;
        };
        set_in(a, Role::Under);
        set_out(cc);
        set_in(over[x].first, Role::Over);
        set_out(over[x].second);
    }
    for (int lbl = 1; lbl <= 2 * c; ++lbl)
        if (in_at[lbl] < 0 || out_of[lbl] < 0)
            throw parse_error("succession inconsistency: label " + std::to_string(lbl) +
                              " is not both entering and leaving");

    // Through-crossing arc successor.
    std::vector<int> next_arc(2 * c + 1, 0);
    for (int x = 0; x < c; ++x) {
        next_arc[quads[x][0]] = quads[x][2];
        next_arc[over[x].first] = over[x].second;
    }

    std::vector<Crossing> crossings(c);
    for (int x = 0; x < c; ++x) {
        crossings[x].id = x + 1;
        crossings[x].pd = quads[x];
        crossings[x].sign = (over[x].first == quads[x][3]) ? +1 : -1;  // d -> b is positive
    }

    // Traverse components starting at each minimal label; passage j is the
    // crossing at which arc (start + j) ends.
    std::vector<std::vector<Passage>> components;
    std::vector<char> seen(2 * c + 1, 0);
    for (int start = 1; start <= 2 * c; ++start) {
        if (seen[start]) continue;
        std::vector<Passage> comp;
        int arc = start;
        do {
            if (seen[arc]) throw parse_error("succession inconsistency: component does not close");
            seen[arc] = 1;
            comp.push_back(Passage{in_at[arc], in_role[arc], 0, 0});
            arc = next_arc[arc];
        } while (arc != start);
        components.push_back(std::move(comp));
    }
    return Diagram(std::move(crossings), std::move(components), crossingless);
}

inline Diagram parse_gauss(const std::string& text) {
    struct Tok {
        Role role;
        int label;
        int sign;  // 0 = unspecified
    };
    std::vector<std::vector<Tok>> comps(1);
    {
        size_t i = 0;
        while (detail::skip_ws(text, i)) {
            char ch = text[i];
            if (ch == ';') {
                if (comps.back().empty()) throw parse_error("empty component");
                comps.emplace_back();
                ++i;
                continue;
            }
            if (ch != 'O' && ch != 'U') throw parse_error(std::string("unknown token '") + ch + "'");
            ++i;
            int label = detail::parse_int(text, i, "crossing label");
            int sign = 0;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                sign = text[i] == '+' ? +1 : -1;
                ++i;
            }
            comps.back().push_back(Tok{ch == 'O' ? Role::Over : Role::Under, label, sign});
        }
        if (comps.back().empty()) {
            if (comps.size() == 1) throw parse_error("empty input");
            throw parse_error("empty component");
        }
    }

    // Crossing indices by first appearance; each label once as O and once as U.
    std::vector<int> labels;
    std::vector<std::array<int, 2>> occur;  // per crossing: count per role
    std::vector<int> signs;
    auto index_of = [&](int label) {
        for (size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == label) return static_cast<int>(k);
        labels.push_back(label);
        occur.push_back({0, 0});
        signs.push_back(0);
        return static_cast<int>(labels.size() - 1);
    };
    std::vector<std::vector<Passage>> components;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        std::vector<Passage> comp;
        for (const Tok& t : comps[ci]) {
            int x = index_of(t.label);
            int& cnt = occur[x][t.role == Role::Over ? 0 : 1];
            if (++cnt > 1)
                throw parse_error("crossing " + std::to_string(t.label) + " has two " +
                                  (t.role == Role::Over ? "O" : "U") + " occurrences");
            if (t.sign != 0) {
                if (signs[x] != 0 && signs[x] != t.sign)
                    throw parse_error("crossing " + std::to_string(t.label) + " has mismatched signs");
                signs[x] = t.sign;
            }
            comp.push_back(Passage{x, t.role, 0, 0});
        }
        components.push_back(std::move(comp));
    }
    for (size_t x = 0; x < labels.size(); ++x)
        if (occur[x][0] != 1 || occur[x][1] != 1)
            throw parse_error("crossing " + std::to_string(labels[x]) +
                              " does not appear exactly once as O and once as U");

    std::vector<Crossing> crossings(labels.size());
    bool all_signed = true;
    for (size_t x = 0; x < labels.size(); ++x) {
        crossings[x].id = labels[x];
        if (signs[x] != 0)
            crossings[x].sign = signs[x];
        else
            all_signed = false;
    }

    if (all_signed && !crossings.empty()) {
        // Reconstruct planar quadruples from synthetic arc labels. Arc consumed
        // by passage j of a component is base + j (1-based, contiguous per
        // component), matching the PD traversal convention.
        std::vector<std::array<int, 2>> in_arc(crossings.size()), out_arc(crossings.size());
        int base = 1;
        for (const auto& comp : components) {
            int m = static_cast<int>(comp.size());
            for (int j = 0; j < m; ++j) {
                int r = comp[j].role == Role::Over ? 0 : 1;
                in_arc[comp[j].crossing][r] = base + j;
                out_arc[comp[j].crossing][r] = base + (j + 1) % m;
            }
            base += m;
        }
        for (size_t x = 0; x < crossings.size(); ++x) {
            int a = in_arc[x][1], cc = out_arc[x][1];
            int oi = in_arc[x][0], oo = out_arc[x][0];
            if (*crossings[x].sign > 0)
                crossings[x].pd = std::array<int, 4>{a, oo, cc, oi};  // over runs d -> b
            else
                crossings[x].pd = std::array<int, 4>{a, oi, cc, oo};  // over runs b -> d
        }
    }
    return Diagram(std::move(crossings), std::move(components), 0);
}

inline Diagram mirror(const Diagram& d) {
    std::vector<Crossing> crossings = d.crossings();
    for (auto& x : crossings) {
        if (!x.sign) continue;
        x.sign = -*x.sign;
        if (!x.pd) continue;
        const auto& [a, b, cc, dd] = *x.pd;
        // The old over-strand becomes the under-strand; slots rotate around the
        // crossing accordingly. x.sign has already been flipped here.
        int o_in, o_out;
        if (*x.sign < 0) {  // old sign was +: over ran d -> b
            o_in = dd;
            o_out = b;
        } else {
            o_in = b;
            o_out = dd;
        }
        if (*x.sign > 0)
            x.pd = std::array<int, 4>{o_in, cc, o_out, a};
        else
            x.pd = std::array<int, 4>{o_in, a, o_out, cc};
    }
    std::vector<std::vector<Passage>> components = d.components();
    for (auto& comp : components)
        for (auto& p : comp) p.role = flip(p.role);
    return Diagram(std::move(crossings), std::move(components), d.crossingless_components());
}

inline int writhe(const Diagram& d) {
    if (!d.has_signs()) throw std::invalid_argument("writhe: sign data absent");
    int w = 0;
    for (const auto& x : d.crossings()) w += *x.sign;
    return w;
}

inline std::string to_pd_text(const Diagram& d) {
    if (!d.has_planar_data()) throw std::invalid_argument("to_pd_text: planar data absent");
    std::ostringstream os;
    bool first = true;
    for (const auto& x : d.crossings()) {
        if (!first) os << ' ';
        first = false;
        const auto& q = *x.pd;
        os << "X[" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ']';
    }
    if (d.crossingless_components() > 0) {
        if (!first) os << ' ';
        os << "unknot(" << d.crossingless_components() << ')';
    }
    return os.str();
}

inline std::string to_gauss_text(const Diagram& d) {
    if (d.crossingless_components() > 0)
        throw std::invalid_argument("to_gauss_text: crossingless components not expressible");
    std::ostringstream os;
    bool sep = false;
    for (const auto& comp : d.components()) {
        if (sep) os << ';';
        sep = true;
        for (const auto& p : comp) {
            const Crossing& x = d.crossings()[p.crossing];
            os << (p.role == Role::Over ? 'O' : 'U') << x.id;
            if (x.sign) os << (*x.sign > 0 ? '+' : '-');
        }
    }
    return os.str();
}

}  // namespace edgenum
