#pragma once

#include "eisk3/common.hpp"
#include "eisk3/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eisk3 {
namespace branch {

// ---------------------------------------------------------------------------
// Truncated power series over Q
// ---------------------------------------------------------------------------

/// Power series in t truncated to degree 16. The germ parametrizations and all
/// chart transformations keep orders at 5 or below, re-asserted where used.
class Series {
public:
    static constexpr std::size_t kTrunc = 17;
    static constexpr std::size_t kInf = static_cast<std::size_t>(-1);

    Series() : c_(kTrunc, Rat(0)) {}

    static Series zero() { return Series(); }
    static Series monomial(std::size_t deg, const Rat& coeff = Rat(1)) {
        Series s;
        EISK3_REQUIRE(deg < kTrunc, "series: degree beyond truncation");
        s.c_[deg] = coeff;
        return s;
    }

    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }

    std::size_t ord() const {
        for (std::size_t i = 0; i < kTrunc; ++i)
            if (c_[i] != 0) return i;
        return kInf;
    }

    bool is_zero() const { return ord() == kInf; }

    Series operator+(const Series& o) const {
        Series r;
        for (std::size_t i = 0; i < kTrunc; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Series operator-(const Series& o) const {
        Series r;
        for (std::size_t i = 0; i < kTrunc; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Series operator*(const Series& o) const {
        Series r;
        for (std::size_t i = 0; i < kTrunc; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < kTrunc; ++j) r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }
    Series operator-(const Rat& v) const {
        Series r = *this;
        r.c_[0] -= v;
        return r;
    }

    /// this / o, requiring ord(o) <= ord(this).
    Series divided_by(const Series& o) const {
        std::size_t k = o.ord();
        EISK3_REQUIRE(k != kInf, "series: division by zero");
        if (is_zero()) return zero();
        EISK3_REQUIRE(ord() >= k, "series: division would leave the power series ring");
        // o = t^k * u with u a unit; invert u, multiply, shift down
        Series u;
        for (std::size_t i = 0; i + k < kTrunc; ++i) u.c_[i] = o.c_[i + k];
        Series uinv;
        uinv.c_[0] = Rat(1) / u.c_[0];
        for (std::size_t i = 1; i < kTrunc; ++i) {
            Rat s(0);
            for (std::size_t j = 1; j <= i; ++j) s += u.c_[j] * uinv.c_[i - j];
            uinv.c_[i] = -s / u.c_[0];
        }
        Series num;
        for (std::size_t i = 0; i + k < kTrunc; ++i) num.c_[i] = c_[i + k];
        return num * uinv;
    }

private:
    std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// Germ kinds and normal forms
// ---------------------------------------------------------------------------

enum class GermKind {
    node,
    cusp,
    tacnode,
    ramphoid_cusp,
    ordinary_triple,
    transverse_B1B2,
    node_with_B2,
    cusp_with_B2,
};

inline const char* germ_name(GermKind k) {
    switch (k) {
        case GermKind::node: return "node";
        case GermKind::cusp: return "cusp";
        case GermKind::tacnode: return "tacnode";
        case GermKind::ramphoid_cusp: return "ramphoid_cusp";
        case GermKind::ordinary_triple: return "ordinary_triple";
        case GermKind::transverse_B1B2: return "transverse_B1B2";
        case GermKind::node_with_B2: return "node_with_B2";
        default: return "cusp_with_B2";
    }
}

inline std::optional<GermKind> germ_from_name(const std::string& s) {
    for (GermKind k : {GermKind::node, GermKind::cusp, GermKind::tacnode, GermKind::ramphoid_cusp,
                       GermKind::ordinary_triple, GermKind::transverse_B1B2, GermKind::node_with_B2,
                       GermKind::cusp_with_B2}) {
        if (s == germ_name(k)) return k;
    }
    return std::nullopt;
}

enum class Part { B1, B2 };

/// One local branch: a reduced parametrization and its divisor part.
struct LocalBranch {
    Part part;
    Series x, y;

    Rat coeff() const { return part == Part::B1 ? Rat(1) : Rat(1, 2); }
    std::size_t mult() const { return std::min(x.ord(), y.ord()); }
};

/// Analytically equivalent rational normal forms for each germ kind.
inline std::vector<LocalBranch> germ_normal_form(GermKind kind) {
    auto t = [](std::size_t d) { return Series::monomial(d); };
    auto z = [] { return Series::zero(); };
    switch (kind) {
        case GermKind::node:
            return {{Part::B1, t(1), z()}, {Part::B1, z(), t(1)}};
        case GermKind::cusp:
            return {{Part::B1, t(2), t(3)}};
        case GermKind::tacnode:
            return {{Part::B1, t(1), z()}, {Part::B1, t(1), t(2)}};
        case GermKind::ramphoid_cusp:
            return {{Part::B1, t(2), t(5)}};
        case GermKind::ordinary_triple:
            return {{Part::B2, t(1), z()}, {Part::B2, z(), t(1)}, {Part::B2, t(1), t(1)}};
        case GermKind::transverse_B1B2:
            return {{Part::B1, t(1), z()}, {Part::B2, z(), t(1)}};
        case GermKind::node_with_B2:
            return {{Part::B1, t(1), z()}, {Part::B1, z(), t(1)}, {Part::B2, t(1), t(1)}};
        case GermKind::cusp_with_B2:
            return {{Part::B1, t(2), t(3)}, {Part::B2, z(), t(1)}};
    }
    throw domain_error("germ_normal_form: unknown kind");
}

/// Number of local branches each germ kind carries (for component placement).
inline std::size_t germ_branch_count(GermKind k) { return germ_normal_form(k).size(); }

// ---------------------------------------------------------------------------
// Resolution state
// ---------------------------------------------------------------------------

/// Curve record: original germ branches (strict transforms of the input) and
/// exceptional curves born from blow-ups. Exceptional coefficients stay in
/// {0, 1/2, 1}; their self-intersections are tracked exactly.
struct Curve {
    int id;
    std::string name;
    Rat coeff;          // 1, 1/2, or for exceptional curves m - 3/2
    bool exceptional;
    Int self_int;       // exact for exceptional; cumulative -sum(mult^2) for branches
    std::size_t blowup_mult_sq = 0;  // sum of mult^2 over centers on this curve
};

/// A located curve: parametrization in the local chart of the point it sits on.
struct Occurrence {
    int curve_id;
    Series x, y;
    std::size_t mult() const { return std::min(x.ord(), y.ord()); }
};

/// Direction of a smooth-or-singular occurrence: the point on the exceptional
/// curve its strict transform would hit. Finite slope or the infinity chart.
struct Direction {
    bool infinite;
    Rat slope;  // valid when !infinite

    bool operator==(const Direction&) const = default;
    bool operator<(const Direction& o) const {
        if (infinite != o.infinite) return !infinite;  // finite slopes first
        if (infinite) return false;
        return slope < o.slope;
    }
};

inline Direction direction_of(const Occurrence& oc) {
    std::size_t ox = oc.x.ord(), oy = oc.y.ord();
    if (ox > oy) return {true, Rat(0)};
    if (oy > ox) return {false, Rat(0)};
    return {false, oc.y[oy] / oc.x[ox]};
}

struct Point {
    int id;
    std::vector<Occurrence> curves;
};

struct ResolutionOptions {
    std::size_t max_blowups = 20;
};

/// Full record of one germ resolution.
class ResolutionState {
public:
    explicit ResolutionState(GermKind kind, std::vector<LocalBranch> branches)
        : kind_(kind) {
        Point p0{next_point_id_++, {}};
        for (const auto& b : branches) {
            Curve c{next_curve_id_, branch_label(b, next_curve_id_), b.coeff(), false, Int(0), 0};
            curves_.push_back(c);
            p0.curves.push_back({next_curve_id_, b.x, b.y});
            ++next_curve_id_;
        }
        points_.push_back(std::move(p0));
    }

    const std::vector<Curve>& curves() const { return curves_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t blowup_count() const { return blowups_; }
    GermKind kind() const { return kind_; }

    /// Multiplicity m = sum coeff * mult at a point.
    Rat m_value(const Point& p) const {
        Rat m(0);
        for (const auto& oc : p.curves) m += curve(oc.curve_id).coeff * Rat(oc.mult());
        return m;
    }

    /// A point needs a blow-up when the positive part is not smooth there or
    /// the total configuration fails simple normal crossings: a singular
    /// occurrence, two positive curves meeting, three curves through the
    /// point, or two curves sharing a tangent.
    bool pending(const Point& p) const {
        std::size_t positives = 0;
        for (const auto& oc : p.curves) {
            if (oc.mult() >= 2) return true;
            if (curve(oc.curve_id).coeff > 0) ++positives;
        }
        if (positives >= 2) return true;
        if (p.curves.size() >= 3) return true;
        if (p.curves.size() == 2)
            return direction_of(p.curves[0]) == direction_of(p.curves[1]);
        return false;
    }

    std::optional<std::size_t> first_pending() const {
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (pending(points_[i])) return i;
        return std::nullopt;
    }

    /// One blow-up step at the given pending point.
    void blow_up(std::size_t point_index) {
        EISK3_REQUIRE(point_index < points_.size(), "blow_up: no such point");
        Point p = points_[point_index];
        EISK3_REQUIRE(pending(p), "blow_up: point is not pending");
        EISK3_REQUIRE(blowups_ < options_.max_blowups, "blow_up: non-termination guard tripped");
        Rat m = m_value(p);
        EISK3_REQUIRE(m == Rat(3, 2) || m == Rat(2) || m == Rat(5, 2),
                      "blow_up: multiplicity outside {3/2, 2, 5/2} (illegal configuration)");
        ++blowups_;

        // exceptional curve with coefficient m - 3/2 and self-intersection -1
        int e_id = next_curve_id_++;
        curves_.push_back({e_id, "E" + std::to_string(blowups_), m - Rat(3, 2), true, Int(-1), 0});

        // existing curves through p lose mult^2 from their self-intersection
        for (const auto& oc : p.curves) {
            Curve& c = curves_[static_cast<std::size_t>(oc.curve_id)];
            std::size_t mu = oc.mult();
            EISK3_REQUIRE(mu >= 1 && mu <= 5, "blow_up: branch order out of the asserted range");
            c.blowup_mult_sq += mu * mu;
            if (c.exceptional) c.self_int -= Int(mu) * Int(mu);
        }

        // group the transforms by tangent direction; each group lands on its
        // own point of the new exceptional curve
        std::map<Direction, std::vector<Occurrence>> groups;
        for (const auto& oc : p.curves) groups[direction_of(oc)].push_back(oc);

        points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(point_index));
        for (auto& [dir, members] : groups) {
            Point np{next_point_id_++, {}};
            for (const auto& oc : members) {
                if (!dir.infinite) {
                    Series q = oc.y.divided_by(oc.x);
                    np.curves.push_back({oc.curve_id, oc.x, q - dir.slope});
                } else {
                    np.curves.push_back({oc.curve_id, oc.x.divided_by(oc.y), oc.y});
                }
            }
            // the new exceptional curve in this chart
            if (!dir.infinite)
                np.curves.push_back({e_id, Series::zero(), Series::monomial(1)});
            else
                np.curves.push_back({e_id, Series::monomial(1), Series::zero()});
            points_.push_back(std::move(np));
        }
    }

    void resolve() {
        while (auto idx = first_pending()) blow_up(*idx);
    }

    bool terminal() const { return !first_pending().has_value(); }

    const Curve& curve(int id) const { return curves_[static_cast<std::size_t>(id)]; }

private:
    static std::string branch_label(const LocalBranch& b, int id) {
        return (b.part == Part::B1 ? "b" : "s") + std::to_string(id);
    }

    GermKind kind_;
    std::vector<Curve> curves_;
    std::vector<Point> points_;
    std::size_t blowups_ = 0;
    int next_curve_id_ = 0;
    int next_point_id_ = 0;
    ResolutionOptions options_;
};

// ---------------------------------------------------------------------------
// Dual graphs
// ---------------------------------------------------------------------------

enum class VertexClass { white, black, star, double_circle, strict_transform };

inline const char* vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::white: return "white";
        case VertexClass::black: return "black";
        case VertexClass::star: return "star";
        case VertexClass::double_circle: return "double";
        default: return "strict-transform";
    }
}

struct DualGraphVertex {
    int id;
    std::string name;
    VertexClass cls;
    Int self_int;  // meaningful for exceptional curves
    Rat coeff;
};

struct DualGraph {
    std::vector<DualGraphVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // vertex ids, i < j

    std::size_t count(VertexClass c) const {
        std::size_t n = 0;
        for (const auto& v : vertices)
            if (v.cls == c) ++n;
        return n;
    }

    const DualGraphVertex* find(int id) const {
        for (const auto& v : vertices)
            if (v.id == id) return &v;
        return nullptr;
    }

    std::vector<int> neighbors(int id) const {
        std::vector<int> out;
        for (auto [a, b] : edges) {
            if (a == id) out.push_back(b);
            if (b == id) out.push_back(a);
        }
        return out;
    }

    /// Exceptional curves only (strict transforms dropped).
    DualGraph exceptional_subgraph() const {
        DualGraph g;
        std::set<int> keep;
        for (const auto& v : vertices)
            if (v.cls != VertexClass::strict_transform) {
                g.vertices.push_back(v);
                keep.insert(v.id);
            }
        for (auto [a, b] : edges)
            if (keep.count(a) && keep.count(b)) g.edges.push_back({a, b});
        return g;
    }
};

/// Terminal classification: coefficient 1 -> (-6) double circle, 1/2 -> (-3)
/// star, 0 -> white (-1) or black (-2).
inline DualGraph dual_graph(const ResolutionState& state) {
    EISK3_REQUIRE(state.terminal(), "dual_graph: resolution not terminal");
    DualGraph g;
    for (const auto& c : state.curves()) {
        DualGraphVertex v{c.id, c.name, VertexClass::strict_transform, c.self_int, c.coeff};
        if (c.exceptional) {
            if (c.coeff == Rat(1)) {
                EISK3_REQUIRE(c.self_int == -6,
                              "dual_graph: terminal coefficient-1 curve is not a (-6)-curve");
                v.cls = VertexClass::double_circle;
            } else if (c.coeff == Rat(1, 2)) {
                EISK3_REQUIRE(c.self_int == -3,
                              "dual_graph: terminal coefficient-1/2 curve is not a (-3)-curve");
                v.cls = VertexClass::star;
            } else if (c.self_int == -1) {
                v.cls = VertexClass::white;
            } else if (c.self_int == -2) {
                v.cls = VertexClass::black;
            } else {
                throw domain_error("dual_graph: coefficient-0 curve with unexpected self-intersection");
            }
        }
        g.vertices.push_back(v);
    }
    std::set<std::pair<int, int>> edges;
    for (const auto& p : state.points()) {
        EISK3_REQUIRE(p.curves.size() <= 2, "dual_graph: non-snc terminal point");
        if (p.curves.size() == 2) {
            int a = p.curves[0].curve_id, b = p.curves[1].curve_id;
            if (a > b) std::swap(a, b);
            edges.insert({a, b});
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

struct GermResolution {
    GermKind kind;
    DualGraph graph;  // includes strict transforms
    std::size_t blowups;
};

/// Iterated blow-up under the coefficient rule until the configuration is
/// simple normal crossings with the positive part smooth and disjoint.
inline GermResolution right_resolution(GermKind kind) {
    ResolutionState st(kind, germ_normal_form(kind));
    st.resolve();
    return {kind, dual_graph(st), st.blowup_count()};
}

// ---------------------------------------------------------------------------
// Exceptional configuration on the K3 side
// ---------------------------------------------------------------------------

struct K3Graph {
    std::vector<std::string> vertices;  // all (-2)-curves
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::string dynkin;      // "A2", "D4", "E6", "E8"
    bool cyclic_action;      // order-3 action permutes components (cusp case)
};

namespace detail {

/// Adjacency matrices of the ADE graphs used here, via the lattice module.
inline std::vector<std::pair<std::string, IMat>> dynkin_targets() {
    auto adj = [](const IntegerLattice& l) {
        IMat a(l.rank(), l.rank());
        for (std::size_t i = 0; i < l.rank(); ++i)
            for (std::size_t j = 0; j < l.rank(); ++j)
                a(i, j) = (i != j && l.gram()(i, j) != 0) ? 1 : 0;
        return a;
    };
    return {{"A2", adj(make_root_lattice('A', 2))},
            {"D4", adj(make_root_lattice('D', 4))},
            {"E6", adj(make_root_lattice('E', 6))},
            {"E8", adj(make_root_lattice('E', 8))}};
}

inline bool graph_isomorphic(const IMat& a, const IMat& b) {
    if (a.rows() != b.rows()) return false;
    std::size_t n = a.rows();
    std::vector<std::size_t> perm;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() -> bool {
        if (perm.size() == n) return true;
        std::size_t i = perm.size();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                if (a(i, k) != b(j, perm[k])) ok = false;
            if (!ok) continue;
            used[j] = true;
            perm.push_back(j);
            if (rec()) return true;
            perm.pop_back();
            used[j] = false;
        }
        return false;
    };
    return rec();
}

}  // namespace detail

/// Gamma_p: take the triple cover of the terminal configuration, i.e. triple
/// every black circle and contract the stars; what remains are the (-2)-curves
/// over the singular point, and the result must be the matching Dynkin graph.
inline K3Graph k3_exceptional_graph(const GermResolution& res) {
    EISK3_REQUIRE(res.kind == GermKind::node || res.kind == GermKind::cusp ||
                      res.kind == GermKind::tacnode || res.kind == GermKind::ramphoid_cusp,
                  "k3_exceptional_graph: only branch-curve germ kinds have a Dynkin configuration");
    const DualGraph& g = res.graph;

    // upstairs vertices: whites and doubles map to one (-2)-curve each after
    // the contraction; blacks to three
    std::map<int, std::vector<std::size_t>> lift;  // downstairs id -> upstairs indices
    K3Graph out;
    for (const auto& v : g.vertices) {
        if (v.cls == VertexClass::white || v.cls == VertexClass::double_circle) {
            lift[v.id] = {out.vertices.size()};
            out.vertices.push_back(v.name);
        } else if (v.cls == VertexClass::black) {
            std::vector<std::size_t> ids;
            for (int c = 0; c < 3; ++c) {
                ids.push_back(out.vertices.size());
                out.vertices.push_back(v.name + "." + std::to_string(c));
            }
            lift[v.id] = ids;
        }
    }

    // each white preimage is a (-3)-curve; contracting its adjacent stars must
    // land it exactly on -2
    for (const auto& v : g.vertices) {
        if (v.cls != VertexClass::white) continue;
        std::size_t stars = 0;
        for (int nb : g.neighbors(v.id)) {
            const auto* w = g.find(nb);
            if (w && w->cls == VertexClass::star) ++stars;
        }
        EISK3_REQUIRE(stars == 1, "k3_exceptional_graph: white circle without a unique star neighbor");
    }

    std::set<std::pair<std::size_t, std::size_t>> edges;
    auto connect = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        if (a != b) edges.insert({a, b});
    };
    for (auto [a, b] : g.edges) {
        const auto* va = g.find(a);
        const auto* vb = g.find(b);
        if (!va || !vb) continue;
        bool a_lifts = lift.count(a), b_lifts = lift.count(b);
        if (a_lifts && b_lifts) {
            for (auto ia : lift[a])
                for (auto ib : lift[b]) {
                    // distinct copies of one black circle stay disjoint; a
                    // tripled black meets the single preimage of its neighbor
                    if (va->cls == VertexClass::black && vb->cls == VertexClass::black) continue;
                    connect(ia, ib);
                }
        }
    }
    // contract the stars: their neighbors become pairwise adjacent
    for (const auto& v : g.vertices) {
        if (v.cls != VertexClass::star) continue;
        std::vector<std::size_t> nbr;
        for (int nb : g.neighbors(v.id)) {
            auto it = lift.find(nb);
            if (it == lift.end()) continue;  // strict transforms leave the graph
            for (auto idx : it->second) nbr.push_back(idx);
        }
        for (std::size_t i = 0; i < nbr.size(); ++i)
            for (std::size_t j = i + 1; j < nbr.size(); ++j) connect(nbr[i], nbr[j]);
    }
    out.edges.assign(edges.begin(), edges.end());

    IMat adj(out.vertices.size(), out.vertices.size());
    for (auto [a, b] : out.edges) {
        adj(a, b) = 1;
        adj(b, a) = 1;
    }
    out.dynkin = "";
    for (const auto& [name, target] : detail::dynkin_targets())
        if (detail::graph_isomorphic(adj, target)) {
            out.dynkin = name;
            break;
        }
    EISK3_REQUIRE(!out.dynkin.empty(), "k3_exceptional_graph: result is not an ADE Dynkin graph");
    out.cyclic_action = (res.kind == GermKind::cusp);
    return out;
}

}  // namespace branch
}  // namespace eisk3
