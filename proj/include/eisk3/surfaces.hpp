#pragma once

#include "eisk3/branch.hpp"
#include "eisk3/classification.hpp"

#include <map>
#include <string>
#include <vector>

namespace eisk3 {
namespace branch {

/// Model surface: a Hirzebruch surface F_n (Picard basis H0, F with H0^2 = n,
/// H0.F = 1, F^2 = 0, K = -2H0 + (n-2)F) or the plane (classes = degrees,
/// K = -3).
struct SurfaceModel {
    enum class Kind { hirzebruch, plane };
    Kind kind = Kind::hirzebruch;
    long long n = 0;  // F_n parameter

    static SurfaceModel Fn(long long n) { return {Kind::hirzebruch, n}; }
    static SurfaceModel P2() { return {Kind::plane, 0}; }

    std::string name() const {
        return kind == Kind::plane ? "P2" : "F" + std::to_string(n);
    }
};

/// Divisor class: (a,b) = a H0 + b F on F_n, or (d,0) = degree d on the plane.
struct DivClass {
    long long a = 0, b = 0;

    DivClass operator+(const DivClass& o) const { return {a + o.a, b + o.b}; }
    DivClass scaled(long long c) const { return {c * a, c * b}; }
    bool operator==(const DivClass&) const = default;
};

inline long long intersect(const SurfaceModel& s, const DivClass& c, const DivClass& d) {
    if (s.kind == SurfaceModel::Kind::plane) return c.a * d.a;
    return c.a * d.a * s.n + c.a * d.b + c.b * d.a;
}

inline DivClass canonical_class(const SurfaceModel& s) {
    if (s.kind == SurfaceModel::Kind::plane) return {-3, 0};
    return {-2, s.n - 2};
}

inline long long arithmetic_genus(const SurfaceModel& s, const DivClass& c) {
    long long v = intersect(s, c, c) + intersect(s, c, canonical_class(s));
    EISK3_REQUIRE(v % 2 == 0, "arithmetic_genus: adjunction value is odd");
    return 1 + v / 2;
}

struct ComponentSpec {
    std::string id;
    DivClass cls;
    Part part;
};

struct GermPlacement {
    GermKind kind;
    std::vector<std::string> on;  // component id per local branch
};

/// A global branch configuration B1 + (1/2) B2 on a model surface.
struct BranchConfig {
    SurfaceModel surface;
    std::vector<ComponentSpec> components;
    std::vector<GermPlacement> germs;
};

/// delta-invariant each germ contributes to a component carrying all of its
/// positive-part branches (node/cusp: 1; tacnode/ramphoid cusp: 2).
inline long long germ_delta(GermKind k) {
    switch (k) {
        case GermKind::node:
        case GermKind::cusp:
            return 1;
        case GermKind::tacnode:
        case GermKind::ramphoid_cusp:
            return 2;
        default:
            return 0;
    }
}

inline std::size_t positive_branch_count(GermKind k) {
    std::size_t c = 0;
    for (const auto& b : germ_normal_form(k))
        if (b.part == Part::B1) ++c;
    return c;
}

struct GlobalInvariants {
    InvariantTuple tuple;
    long long a2 = 0, d4 = 0, e6 = 0, e8 = 0, k0 = 0;
    long long total_blowups = 0;
    bool mixed = false;         // shadow part present: the (r,a) route is off
    bool abelian_flag = false;  // B1 empty and B2 with nine components
    std::vector<GermResolution> germ_resolutions;
    std::map<std::string, long long> component_genus;  // geometric genus of B1 parts
};

/// Counting route for global invariants of a configuration:
/// r = 2 + 2a2 + 2d4 + 6e6 + 8e8, k = k0 + e6 + 2e8, n = a2 + d4 + 3e6 + 4e8,
/// g from adjunction minus delta-invariants, a = (22 - r - 4g)/2;
/// cross-checked against the (r,a) formulas.
inline GlobalInvariants global_invariants(const BranchConfig& cfg) {
    GlobalInvariants out;

    std::map<std::string, const ComponentSpec*> comps;
    for (const auto& c : cfg.components) {
        EISK3_REQUIRE(!comps.count(c.id), "global_invariants: duplicate component id " + c.id);
        comps[c.id] = &c;
    }

    // class check: 2 B1 + B2 = -3K
    DivClass total{0, 0};
    std::size_t b1_count = 0, b2_count = 0;
    for (const auto& c : cfg.components) {
        total = total + c.cls.scaled(c.part == Part::B1 ? 2 : 1);
        (c.part == Part::B1 ? b1_count : b2_count)++;
    }
    DivClass want = canonical_class(cfg.surface).scaled(-3);
    EISK3_REQUIRE(total == want, "global_invariants: 2B1+B2 is not -3K (class mismatch)");

    out.abelian_flag = (b1_count == 0 && b2_count == 9);

    // germ placements: branch counts, part matching, pairwise intersections
    std::map<std::pair<std::string, std::string>, long long> pair_local;
    std::map<std::string, long long> delta;
    for (const auto& g : cfg.germs) {
        auto branches = germ_normal_form(g.kind);
        EISK3_REQUIRE(g.on.size() == branches.size(),
                      "global_invariants: germ placement has wrong branch count");
        for (std::size_t i = 0; i < branches.size(); ++i) {
            auto it = comps.find(g.on[i]);
            EISK3_REQUIRE(it != comps.end(), "global_invariants: unknown component " + g.on[i]);
            EISK3_REQUIRE(it->second->part == branches[i].part,
                          "global_invariants: branch part does not match component part");
        }
        // local pairwise intersection numbers from the normal forms
        for (std::size_t i = 0; i < branches.size(); ++i)
            for (std::size_t j = i + 1; j < branches.size(); ++j) {
                if (g.on[i] == g.on[j]) continue;  // same component: delta, not intersection
                // order of contact between two distinct smooth-or-singular
                // branches of the normal form
                const auto& bi = branches[i];
                const auto& bj = branches[j];
                long long im;
                if (bi.mult() == 1 && bj.mult() == 1) {
                    Occurrence oi{0, bi.x, bi.y}, oj{0, bj.x, bj.y};
                    im = (direction_of(oi) == direction_of(oj)) ? 2 : 1;
                } else {
                    im = static_cast<long long>(bi.mult() * bj.mult());
                }
                auto key = std::minmax(g.on[i], g.on[j]);
                pair_local[{key.first, key.second}] += im;
            }
        std::map<std::string, std::size_t> per_comp;
        for (std::size_t i = 0; i < branches.size(); ++i)
            if (branches[i].part == Part::B1) ++per_comp[g.on[i]];
        for (auto& [id, cnt] : per_comp)
            if (cnt == positive_branch_count(g.kind)) delta[id] += germ_delta(g.kind);

        switch (g.kind) {
            case GermKind::node: ++out.a2; break;
            case GermKind::cusp: ++out.d4; break;
            case GermKind::tacnode: ++out.e6; break;
            case GermKind::ramphoid_cusp: ++out.e8; break;
            default: out.mixed = true; break;
        }
        out.germ_resolutions.push_back(right_resolution(g.kind));
        out.total_blowups += static_cast<long long>(out.germ_resolutions.back().blowups);
    }
    if (b2_count > 0) out.mixed = true;

    // every pairwise intersection among distinct components must be accounted
    // for by a germ
    for (std::size_t i = 0; i < cfg.components.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.components.size(); ++j) {
            auto key = std::minmax(cfg.components[i].id, cfg.components[j].id);
            long long expected = intersect(cfg.surface, cfg.components[i].cls, cfg.components[j].cls);
            long long placed = pair_local.count({key.first, key.second})
                                   ? pair_local[{key.first, key.second}]
                                   : 0;
            EISK3_REQUIRE(placed == expected,
                          "global_invariants: germ placement does not account for " +
                              key.first + "." + key.second + " intersections (illegal placement)");
        }

    // geometric genus of each B1 component
    long long gmax = 0;
    for (const auto& c : cfg.components) {
        if (c.part != Part::B1) continue;
        long long pa = arithmetic_genus(cfg.surface, c.cls);
        long long d = delta.count(c.id) ? delta[c.id] : 0;
        long long geo = pa - d;
        EISK3_REQUIRE(geo >= 0, "global_invariants: negative geometric genus at " + c.id);
        out.component_genus[c.id] = geo;
        gmax = std::max(gmax, geo);
    }

    // shadow part present: report counts and flags only
    if (out.mixed) return out;

    out.k0 = static_cast<long long>(b1_count) - 1;
    EISK3_REQUIRE(out.k0 >= 0, "global_invariants: no branch components");
    long long r = 2 + 2 * out.a2 + 2 * out.d4 + 6 * out.e6 + 8 * out.e8;
    long long k = out.k0 + out.e6 + 2 * out.e8;
    long long n = out.a2 + out.d4 + 3 * out.e6 + 4 * out.e8;
    long long g = gmax;
    long long twice_a = 22 - r - 4 * g;
    EISK3_REQUIRE(twice_a >= 0 && twice_a % 2 == 0,
                  "global_invariants: length a = (22 - r - 4g)/2 is not a nonnegative integer");
    long long a = twice_a / 2;
    InvariantTuple t = invariants_from_ra(r, a);
    EISK3_REQUIRE(t.valid, "global_invariants: counted (r,a) is not a valid type");
    EISK3_REQUIRE(t.g == g && t.k == k && t.n == n,
                  "global_invariants: counting route disagrees with the (r,a) formulas");
    EISK3_REQUIRE(r + n == 2 + out.total_blowups,
                  "global_invariants: Picard accounting failed (r + n != 2 + blow-ups)");
    out.tuple = t;
    return out;
}

}  // namespace branch
}  // namespace eisk3
