#include "eisk3/surfaces.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eisk3;
using namespace eisk3::branch;

namespace {

std::vector<std::size_t> multiplicity_sequence(GermKind kind) {
    // follow the single branch through its blow-ups
    ResolutionState st(kind, germ_normal_form(kind));
    std::vector<std::size_t> seq;
    while (auto idx = st.first_pending()) {
        const Point& p = st.points()[*idx];
        for (const auto& oc : p.curves)
            if (oc.curve_id == 0) seq.push_back(oc.mult());
        st.blow_up(*idx);
    }
    return seq;
}

}  // namespace

TEST_CASE("germ normal forms") {
    CHECK(germ_normal_form(GermKind::node).size() == 2);
    CHECK(germ_normal_form(GermKind::cusp).size() == 1);
    CHECK(germ_normal_form(GermKind::ordinary_triple).size() == 3);
    for (const auto& b : germ_normal_form(GermKind::ordinary_triple)) CHECK(b.part == Part::B2);
    CHECK(germ_normal_form(GermKind::cusp)[0].mult() == 2);

    // multiplicity sequences via the engine (hand blow-up oracle values)
    CHECK(multiplicity_sequence(GermKind::cusp) == (std::vector<std::size_t>{2, 1, 1}));
    auto rph_seq = multiplicity_sequence(GermKind::ramphoid_cusp);
    REQUIRE(rph_seq.size() >= 3);
    CHECK(rph_seq[0] == 2);
    CHECK(rph_seq[1] == 2);
    CHECK(rph_seq[2] == 1);
}

TEST_CASE("blow_up_step assigns the documented coefficients") {
    // node of B1: m = 2 -> coefficient 1/2
    {
        ResolutionState st(GermKind::node, germ_normal_form(GermKind::node));
        st.blow_up(0);
        CHECK(st.curves().back().coeff == Rat(1, 2));
        CHECK(st.curves().back().self_int == -1);
    }
    // smooth B1 meets smooth B2: m = 3/2 -> coefficient 0
    {
        ResolutionState st(GermKind::transverse_B1B2, germ_normal_form(GermKind::transverse_B1B2));
        st.blow_up(0);
        CHECK(st.curves().back().coeff == Rat(0));
    }
    // cusp of B1 on B2: m = 5/2 -> coefficient 1
    {
        ResolutionState st(GermKind::cusp_with_B2, germ_normal_form(GermKind::cusp_with_B2));
        st.blow_up(0);
        CHECK(st.curves().back().coeff == Rat(1));
    }
    // illegal configuration: an ordinary triple point of B1 has m = 3
    {
        std::vector<LocalBranch> bad = {
            {Part::B1, Series::monomial(1), Series::zero()},
            {Part::B1, Series::zero(), Series::monomial(1)},
            {Part::B1, Series::monomial(1), Series::monomial(1)},
        };
        ResolutionState st(GermKind::node, std::move(bad));
        CHECK_THROWS_AS(st.blow_up(0), domain_error);
    }
}

TEST_CASE("right resolution reproduces the four reference dual graphs") {
    struct Expect {
        GermKind kind;
        std::size_t w, b, s, d, blowups;
    };
    const Expect rows[] = {
        {GermKind::node, 2, 0, 1, 0, 3},
        {GermKind::cusp, 1, 1, 1, 0, 3},
        {GermKind::tacnode, 5, 0, 3, 1, 9},
        {GermKind::ramphoid_cusp, 6, 4 - 4, 4, 2, 12},
    };
    for (const auto& e : rows) {
        auto res = right_resolution(e.kind);
        auto ex = res.graph.exceptional_subgraph();
        CHECK(res.blowups == e.blowups);
        CHECK(ex.vertices.size() == e.w + e.b + e.s + e.d);
        CHECK(ex.count(VertexClass::white) == e.w);
        CHECK(ex.count(VertexClass::black) == e.b);
        CHECK(ex.count(VertexClass::star) == e.s);
        CHECK(ex.count(VertexClass::double_circle) == e.d);
        // terminal self-intersections by class
        for (const auto& v : ex.vertices) {
            if (v.cls == VertexClass::star) CHECK(v.self_int == -3);
            if (v.cls == VertexClass::double_circle) CHECK(v.self_int == -6);
            if (v.cls == VertexClass::white) CHECK(v.self_int == -1);
            if (v.cls == VertexClass::black) CHECK(v.self_int == -2);
        }
    }

    // node: path white - star - white
    auto node = right_resolution(GermKind::node).graph.exceptional_subgraph();
    for (const auto& v : node.vertices) {
        auto deg = node.neighbors(v.id).size();
        if (v.cls == VertexClass::star) CHECK(deg == 2);
        if (v.cls == VertexClass::white) CHECK(deg == 1);
    }

    // cusp: path black - white - star
    auto cusp = right_resolution(GermKind::cusp).graph.exceptional_subgraph();
    for (const auto& v : cusp.vertices) {
        auto deg = cusp.neighbors(v.id).size();
        if (v.cls == VertexClass::white) CHECK(deg == 2);
        else CHECK(deg == 1);
    }

    // tacnode: the double circle carries three whites; two chain stars have
    // two white neighbors, the tail star one (its other neighbor is a strict
    // transform, outside the exceptional graph)
    auto tac = right_resolution(GermKind::tacnode).graph.exceptional_subgraph();
    std::vector<std::size_t> star_degrees, white_degrees;
    for (const auto& v : tac.vertices) {
        if (v.cls == VertexClass::double_circle) CHECK(tac.neighbors(v.id).size() == 3);
        if (v.cls == VertexClass::star) star_degrees.push_back(tac.neighbors(v.id).size());
        if (v.cls == VertexClass::white) white_degrees.push_back(tac.neighbors(v.id).size());
    }
    std::sort(star_degrees.begin(), star_degrees.end());
    std::sort(white_degrees.begin(), white_degrees.end());
    CHECK(star_degrees == (std::vector<std::size_t>{1, 2, 2}));
    CHECK(white_degrees == (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST_CASE("shadow germ kinds resolve cleanly") {
    auto triple = right_resolution(GermKind::ordinary_triple);
    auto ex = triple.graph.exceptional_subgraph();
    CHECK(triple.blowups == 1);
    CHECK(ex.vertices.size() == 1);
    CHECK(ex.count(VertexClass::white) == 1);

    auto crossing = right_resolution(GermKind::transverse_B1B2);
    CHECK(crossing.blowups == 1);
    CHECK(crossing.graph.exceptional_subgraph().count(VertexClass::white) == 1);

    // the two mixed double-point kinds (first blow-up has m = 5/2, checked above)
    auto nb2 = right_resolution(GermKind::node_with_B2);
    CHECK(nb2.blowups == 8);
    auto nb2x = nb2.graph.exceptional_subgraph();
    CHECK(nb2x.count(VertexClass::white) == 5);
    CHECK(nb2x.count(VertexClass::star) == 2);
    CHECK(nb2x.count(VertexClass::double_circle) == 1);

    auto cb2 = right_resolution(GermKind::cusp_with_B2);
    CHECK(cb2.blowups == 11);
    auto cb2x = cb2.graph.exceptional_subgraph();
    CHECK(cb2x.count(VertexClass::white) == 6);
    CHECK(cb2x.count(VertexClass::star) == 3);
    CHECK(cb2x.count(VertexClass::double_circle) == 2);

    CHECK_THROWS_AS(k3_exceptional_graph(right_resolution(GermKind::ordinary_triple)), domain_error);
}

TEST_CASE("K3-side exceptional graphs are the ADE Dynkin diagrams") {
    struct Expect {
        GermKind kind;
        std::string dynkin;
        std::size_t vertices;
    };
    const Expect rows[] = {
        {GermKind::node, "A2", 2},
        {GermKind::cusp, "D4", 4},
        {GermKind::tacnode, "E6", 6},
        {GermKind::ramphoid_cusp, "E8", 8},
    };
    for (const auto& e : rows) {
        auto k3 = k3_exceptional_graph(right_resolution(e.kind));
        CHECK(k3.dynkin == e.dynkin);
        CHECK(k3.vertices.size() == e.vertices);
        CHECK(k3.cyclic_action == (e.kind == GermKind::cusp));
    }
}

TEST_CASE("global invariants on the documented configurations") {
    // F6, three-nodal C + negative section
    BranchConfig ex1{SurfaceModel::Fn(6),
                     {{"C", {2, 0}, Part::B1}, {"S", {1, -6}, Part::B1}},
                     {{GermKind::node, {"C", "C"}},
                      {GermKind::node, {"C", "C"}},
                      {GermKind::node, {"C", "C"}}}};
    auto gi = global_invariants(ex1);
    CHECK(gi.tuple.r == 8);
    CHECK(gi.tuple.a == 3);
    CHECK(gi.tuple.g == 2);
    CHECK(gi.tuple.k == 1);
    CHECK(gi.tuple.n == 3);
    CHECK(gi.component_genus.at("C") == 2);
    CHECK(gi.component_genus.at("S") == 0);
    CHECK(gi.tuple.r + gi.tuple.n == 2 + gi.total_blowups);

    // F4, smooth C tangent to a fiber, plus the negative section
    BranchConfig m100{SurfaceModel::Fn(4),
                      {{"C", {2, 0}, Part::B1}, {"F", {0, 1}, Part::B1}, {"S", {1, -4}, Part::B1}},
                      {{GermKind::tacnode, {"C", "F"}}, {GermKind::node, {"F", "S"}}}};
    auto gi2 = global_invariants(m100);
    CHECK(gi2.e6 == 1);
    CHECK(gi2.a2 == 1);
    CHECK(gi2.tuple.r == 10);
    CHECK(gi2.tuple.a == 0);
    CHECK(gi2.tuple.g == 3);
    CHECK(gi2.tuple.k == 3);
    CHECK(gi2.tuple.n == 4);

    // F6, smooth C + section: the genus-5 case
    BranchConfig m20{SurfaceModel::Fn(6),
                     {{"C", {2, 0}, Part::B1}, {"S", {1, -6}, Part::B1}},
                     {}};
    auto gi3 = global_invariants(m20);
    CHECK(gi3.tuple.r == 2);
    CHECK(gi3.tuple.a == 0);
    CHECK(gi3.tuple.g == 5);
    CHECK(gi3.tuple.k == 1);
    CHECK(gi3.tuple.n == 0);
}

TEST_CASE("global invariants error paths") {
    // class mismatch: 2B1 + B2 != -3K
    BranchConfig bad{SurfaceModel::Fn(6),
                     {{"C", {2, 0}, Part::B1}},
                     {}};
    CHECK_THROWS_AS(global_invariants(bad), domain_error);

    // illegal placement: more nodes than the intersection number allows
    BranchConfig bad2{SurfaceModel::Fn(4),
                      {{"C", {2, 0}, Part::B1}, {"F", {0, 1}, Part::B1}, {"S", {1, -4}, Part::B1}},
                      {{GermKind::node, {"C", "F"}},
                       {GermKind::node, {"C", "F"}},
                       {GermKind::node, {"C", "F"}},
                       {GermKind::node, {"F", "S"}}}};
    CHECK_THROWS_AS(global_invariants(bad2), domain_error);

    // unknown component in a placement
    BranchConfig bad3{SurfaceModel::Fn(6),
                      {{"C", {2, 0}, Part::B1}, {"S", {1, -6}, Part::B1}},
                      {{GermKind::node, {"C", "X"}}}};
    CHECK_THROWS_AS(global_invariants(bad3), domain_error);
}

TEST_CASE("series arithmetic backing the engine") {
    auto t2 = Series::monomial(2);
    auto t5 = Series::monomial(5);
    CHECK(t5.divided_by(t2).ord() == 3);
    Series u = Series::monomial(0) + Series::monomial(1);  // 1 + t
    Series q = Series::monomial(1).divided_by(u);           // t - t^2 + t^3 - ...
    CHECK(q[1] == 1);
    CHECK(q[2] == -1);
    CHECK(q[3] == 1);
    CHECK_THROWS_AS(t2.divided_by(t5), domain_error);
    CHECK_THROWS_AS(t2.divided_by(Series::zero()), domain_error);
}
