#pragma once

#include "eisk3/classification.hpp"
#include "eisk3/discriminant.hpp"
#include "eisk3/overlattice.hpp"
#include "eisk3/surfaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisk3 {

/// Degree of the marked-moduli projection: |O(A_E)|/2 when a > 0, else 1.
struct ProjectionDegree {
    Int value;
};

inline ProjectionDegree projection_degree(const DiscriminantForm& d) {
    if (d.is_trivial()) return {Int(1)};
    EISK3_REQUIRE(d.is_3elementary(), "projection_degree: form must be 3-elementary");
    return {orthogonal_group_order(d) / 2};
}

enum class DegreeFlag { one, dominant_only, point };

inline const char* degree_flag_name(DegreeFlag f) {
    switch (f) {
        case DegreeFlag::one: return "degree-1";
        case DegreeFlag::dominant_only: return "dominant-only";
        default: return "point";
    }
}

/// One moduli-space construction: labeling cover and stabilizer data as the
/// construction presents them, plus where the projection degree comes from.
struct CaseRecord {
    long long r, a;
    std::string surface;
    std::string branch_description;
    Int labeling_group_order;
    Int generic_stabilizer_order;
    std::string lattice_catalog_id;  // empty: use the E-side lattice of the type
    DegreeFlag expected;
    std::string note;
    std::optional<branch::BranchConfig> config;  // pure-branch model when one exists

    CaseRecord(long long r_, long long a_, std::string surface_, std::string desc,
               Int labeling, Int stab, std::string cat, DegreeFlag flag, std::string note_ = "")
        : r(r_), a(a_), surface(std::move(surface_)), branch_description(std::move(desc)),
          labeling_group_order(std::move(labeling)), generic_stabilizer_order(std::move(stab)),
          lattice_catalog_id(std::move(cat)), expected(flag), note(std::move(note_)) {
        EISK3_REQUIRE(labeling_group_order % generic_stabilizer_order == 0,
                      "case record: labeling order not divisible by stabilizer order");
    }
};

/// Discriminant form the projection degree is computed from: the invariant
/// lattice from the catalog when the case ships one, else the E-side lattice
/// of the classification entry (the two have anti-isometric forms).
inline DiscriminantForm case_discriminant(const CaseRecord& rec) {
    if (!rec.lattice_catalog_id.empty())
        return DiscriminantForm(catalog(rec.lattice_catalog_id).lattice);
    return DiscriminantForm(type_entry(rec.r, rec.a).structure.lattice);
}

inline ProjectionDegree projection_degree(const CaseRecord& rec) {
    if (rec.a == 0) return {Int(1)};
    return projection_degree(case_discriminant(rec));
}

inline Int cover_quotient_degree(const CaseRecord& rec) {
    EISK3_REQUIRE(rec.labeling_group_order % rec.generic_stabilizer_order == 0,
                  "cover_quotient_degree: non-divisible orders");
    return rec.labeling_group_order / rec.generic_stabilizer_order;
}

/// deg(P) = (projection degree) / (cover quotient degree).
inline Int period_map_degree(const CaseRecord& rec) {
    EISK3_REQUIRE(rec.expected == DegreeFlag::one || rec.expected == DegreeFlag::point,
                  "period_map_degree: case carries no degree claim");
    Int proj = projection_degree(rec).value;
    Int cover = cover_quotient_degree(rec);
    EISK3_REQUIRE(proj % cover == 0, "period_map_degree: non-integral ratio (inconsistent case data)");
    return proj / cover;
}

namespace detail {

inline branch::BranchConfig hirzebruch_config(
    long long n, std::vector<branch::ComponentSpec> comps,
    std::vector<branch::GermPlacement> germs) {
    return {branch::SurfaceModel::Fn(n), std::move(comps), std::move(germs)};
}

}  // namespace detail

/// All construction rows: nineteen degree-1 cases, the two dominant-only
/// cases, and the one-point case. The genus-4-curve and cubic-surface types
/// (2,2) and (12,5) have no construction here and appear only in the
/// classification table.
inline const std::vector<CaseRecord>& case_table() {
    static const std::vector<CaseRecord> rows = [] {
        using branch::ComponentSpec;
        using branch::GermKind;
        using branch::GermPlacement;
        using branch::Part;
        namespace br = branch;
        std::vector<CaseRecord> v;

        auto L = [](long long a, long long b) { return br::DivClass{a, b}; };
        auto node = [](std::string x, std::string y) {
            return GermPlacement{GermKind::node, {std::move(x), std::move(y)}};
        };
        auto tacnode = [](std::string x, std::string y) {
            return GermPlacement{GermKind::tacnode, {std::move(x), std::move(y)}};
        };

        // ---- g = 5 ----
        v.emplace_back(2, 0, "F6", "smooth bisection C in |L_{2,0}| plus the negative section",
                       Int(1), Int(1), "(2,0)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            6, {{"C", L(2, 0), Part::B1}, {"S", L(1, -6), Part::B1}}, {});

        // ---- g = 4 ----
        v.emplace_back(4, 1, "F6", "irreducible one-nodal C in |L_{2,0}| plus the negative section",
                       Int(2), Int(2), "(4,1)", DegreeFlag::one,
                       "hyperelliptic involution swaps the two branches at the node");
        v.back().config = detail::hirzebruch_config(
            6, {{"C", L(2, 0), Part::B1}, {"S", L(1, -6), Part::B1}}, {node("C", "C")});

        // ---- g = 3 ----
        v.emplace_back(4, 3, "F0", "one-nodal bidegree (3,3) curve (transformed quartic-plus-line model)",
                       Int(24), Int(1), "(4,3)", DegreeFlag::one,
                       "S4 labels the four quartic-line intersection points");
        v.back().config = detail::hirzebruch_config(
            0, {{"C", L(3, 3), Part::B1}}, {node("C", "C")});

        v.emplace_back(6, 2, "F6", "irreducible two-nodal C in |L_{2,0}| plus the negative section",
                       Int(8), Int(2), "(6,2)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            6, {{"C", L(2, 0), Part::B1}, {"S", L(1, -6), Part::B1}},
            {node("C", "C"), node("C", "C")});

        v.emplace_back(8, 1, "F4", "smooth C in |L_{2,0}|, a transverse fiber, the negative section",
                       Int(2), Int(2), "(8,1)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            4, {{"C", L(2, 0), Part::B1}, {"F", L(0, 1), Part::B1}, {"S", L(1, -4), Part::B1}},
            {node("C", "F"), node("C", "F"), node("F", "S")});

        v.emplace_back(10, 0, "F4", "smooth C in |L_{2,0}|, a tangent fiber, the negative section",
                       Int(1), Int(1), "(10,0)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            4, {{"C", L(2, 0), Part::B1}, {"F", L(0, 1), Part::B1}, {"S", L(1, -4), Part::B1}},
            {tacnode("C", "F"), node("F", "S")});

        // ---- g = 2 ----
        v.emplace_back(6, 4, "F0", "two-nodal bidegree (3,3) curve (transformed mixed model)",
                       Int(720), Int(1), "(6,4)", DegreeFlag::one,
                       "S6 labels the six intersection points of the mixed model");
        v.back().config = detail::hirzebruch_config(
            0, {{"C", L(3, 3), Part::B1}}, {node("C", "C"), node("C", "C")});

        v.emplace_back(8, 3, "F6", "irreducible three-nodal C in |L_{2,0}| plus the negative section",
                       Int(48), Int(2), "(8,3)", DegreeFlag::one,
                       "S3 x (S2)^3 labels nodes and branches; the hyperelliptic involution is the stabilizer");
        v.back().config = detail::hirzebruch_config(
            6, {{"C", L(2, 0), Part::B1}, {"S", L(1, -6), Part::B1}},
            {node("C", "C"), node("C", "C"), node("C", "C")});

        v.emplace_back(10, 2, "F4", "one-nodal C in |L_{2,0}|, a transverse fiber, the negative section",
                       Int(4), Int(2), "(10,2)", DegreeFlag::one,
                       "stabilizer swaps the two node branches and the two fiber points simultaneously");
        v.back().config = detail::hirzebruch_config(
            4, {{"C", L(2, 0), Part::B1}, {"F", L(0, 1), Part::B1}, {"S", L(1, -4), Part::B1}},
            {node("C", "C"), node("C", "F"), node("C", "F"), node("F", "S")});

        v.emplace_back(12, 1, "F4", "one-nodal C in |L_{2,0}|, a tangent fiber, the negative section",
                       Int(2), Int(2), "(12,1)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            4, {{"C", L(2, 0), Part::B1}, {"F", L(0, 1), Part::B1}, {"S", L(1, -4), Part::B1}},
            {node("C", "C"), tacnode("C", "F"), node("F", "S")});

        // ---- g = 1 ----
        v.emplace_back(8, 5, "P3", "cuspidal plus tangent smooth anticanonical curves on a cubic surface",
                       Int(51840), Int(1), "", DegreeFlag::one,
                       "markings of the cubic surface form the labeling cover");
        v.emplace_back(10, 4, "P3", "Eckardt-point cubic surface with a smooth anticanonical curve",
                       Int(1152), Int(2), "", DegreeFlag::one,
                       "harmonic homology acts trivially on the relevant linear system");
        v.emplace_back(12, 3, "F0", "bidegree (3,3) curve with a node and a ramphoid cusp (transformed model)",
                       Int(24), Int(1), "(12,3)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            0, {{"C", L(3, 3), Part::B1}},
            {node("C", "C"), GermPlacement{GermKind::ramphoid_cusp, {"C"}}});

        v.emplace_back(14, 2, "F2", "smooth C in |L_{2,0}|, two transverse fibers, the negative section",
                       Int(8), Int(2), "(14,2)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            2,
            {{"C", L(2, 0), Part::B1}, {"D1", L(0, 1), Part::B1}, {"D2", L(0, 1), Part::B1},
             {"S", L(1, -2), Part::B1}},
            {node("C", "D1"), node("C", "D1"), node("C", "D2"), node("C", "D2"), node("D1", "S"),
             node("D2", "S")});

        v.emplace_back(16, 1, "F2", "smooth C, one transverse and one tangent fiber, the negative section",
                       Int(2), Int(2), "(16,1)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            2,
            {{"C", L(2, 0), Part::B1}, {"F1", L(0, 1), Part::B1}, {"F2", L(0, 1), Part::B1},
             {"S", L(1, -2), Part::B1}},
            {node("C", "F1"), node("C", "F1"), tacnode("C", "F2"), node("F1", "S"), node("F2", "S")});

        v.emplace_back(18, 0, "F2", "smooth C with two tangent fibers, the negative section",
                       Int(2), Int(2), "(18,0)", DegreeFlag::one,
                       "a translation automorphism exchanges the two tangent fibers");
        v.back().config = detail::hirzebruch_config(
            2,
            {{"C", L(2, 0), Part::B1}, {"F1", L(0, 1), Part::B1}, {"F2", L(0, 1), Part::B1},
             {"S", L(1, -2), Part::B1}},
            {tacnode("C", "F1"), tacnode("C", "F2"), node("F1", "S"), node("F2", "S")});

        // ---- g = 0 ----
        v.emplace_back(8, 7, "P2 double cover", "triangle of nodal anticanonical curves, all shadow",
                       Int(1), Int(1), "", DegreeFlag::dominant_only,
                       "countable fibers only; no degree claim");
        v.emplace_back(10, 6, "P3", "cuspidal plus nodal tangent anticanonical curves on a cubic surface",
                       Int(1), Int(1), "", DegreeFlag::dominant_only,
                       "countable fibers only; no degree claim");
        v.emplace_back(14, 4, "F6", "two transverse sections in |L_{1,0}| plus the negative section",
                       Int(1440), Int(2), "(14,4)", DegreeFlag::one,
                       "S2 x S6 labels the sections and their six intersection points");
        v.back().config = detail::hirzebruch_config(
            6,
            {{"H1", L(1, 0), Part::B1}, {"H2", L(1, 0), Part::B1}, {"S", L(1, -6), Part::B1}},
            {node("H1", "H2"), node("H1", "H2"), node("H1", "H2"), node("H1", "H2"),
             node("H1", "H2"), node("H1", "H2")});

        v.emplace_back(16, 3, "F4", "two sections, a transverse fiber, the negative section",
                       Int(48), Int(2), "(16,3)", DegreeFlag::one);
        v.back().config = detail::hirzebruch_config(
            4,
            {{"H1", L(1, 0), Part::B1}, {"H2", L(1, 0), Part::B1}, {"F", L(0, 1), Part::B1},
             {"S", L(1, -4), Part::B1}},
            {node("H1", "H2"), node("H1", "H2"), node("H1", "H2"), node("H1", "H2"),
             node("H1", "F"), node("H2", "F"), node("F", "S")});

        v.emplace_back(18, 2, "F2", "two sections, two fibers, the negative section",
                       Int(8), Int(4), "(18,2)", DegreeFlag::one,
                       "stabilizer: hyperelliptic involution and a swap of both section points and fibers");
        v.back().config = detail::hirzebruch_config(
            2,
            {{"H1", L(1, 0), Part::B1}, {"H2", L(1, 0), Part::B1}, {"F1", L(0, 1), Part::B1},
             {"F2", L(0, 1), Part::B1}, {"S", L(1, -2), Part::B1}},
            {node("H1", "H2"), node("H1", "H2"), node("H1", "F1"), node("H1", "F2"),
             node("H2", "F1"), node("H2", "F2"), node("F1", "S"), node("F2", "S")});

        v.emplace_back(20, 1, "F0", "three fibers of each ruling", Int(1), Int(1), "",
                       DegreeFlag::point, "the moduli space is a single point");
        {
            std::vector<ComponentSpec> comps;
            std::vector<GermPlacement> germs;
            for (int i = 1; i <= 3; ++i) comps.push_back({"A" + std::to_string(i), L(1, 0), Part::B1});
            for (int i = 1; i <= 3; ++i) comps.push_back({"B" + std::to_string(i), L(0, 1), Part::B1});
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    germs.push_back(node("A" + std::to_string(i), "B" + std::to_string(j)));
            v.back().config = detail::hirzebruch_config(0, std::move(comps), std::move(germs));
        }

        EISK3_REQUIRE(v.size() == 22, "case_table: expected 22 records");
        return v;
    }();
    return rows;
}

inline const CaseRecord& case_record(long long r, long long a) {
    for (const auto& rec : case_table())
        if (rec.r == r && rec.a == a) return rec;
    throw domain_error("case_table: no record for (" + std::to_string(r) + "," +
                       std::to_string(a) + ")");
}

}  // namespace eisk3
