#include "eisk3/overlattice.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eisk3;

TEST_CASE("the rank-8 glue example") {
    GlueSpec spec = glue_spec_8_3();
    // glue vectors are integral against M with the documented norms
    CHECK(dot(spec.glue[0], to_rational(spec.base.gram()), spec.glue[0]) == Rat(2));
    CHECK(dot(spec.glue[1], to_rational(spec.base.gram()), spec.glue[1]) == Rat(-2));

    auto g = glue(spec);
    CHECK(g.lattice.is_even());
    CHECK(g.lattice.rank() == 8);
    CHECK(signature(g.lattice) == Signature{1, 7});
    CHECK(g.index == 3);  // the two glue classes generate one Z/3
    CHECK(g.lattice.det() * g.index * g.index == spec.base.det());
    DiscriminantForm d(g.lattice);
    CHECK(d.is_3elementary());
    CHECK(d.length() == 3);
    CHECK(orthogonal_group(d).order == 48);
}

TEST_CASE("the rank-14 glue example") {
    GlueSpec spec = glue_spec_14_2();
    auto g = glue(spec);
    CHECK(g.lattice.is_even());
    CHECK(g.lattice.rank() == 14);
    CHECK(g.index == 27);
    CHECK(g.lattice.det() * g.index * g.index == spec.base.det());
    DiscriminantForm d(g.lattice);
    CHECK(d.length() == 2);
    CHECK(genus_equal(g.lattice, parse_lattice_expr("U+E8+A2^2")));
    CHECK(orthogonal_group(d).order == 8);
}

TEST_CASE("glue with no vectors returns the base") {
    auto m = parse_lattice_expr("U+A2");
    auto g = glue({m, {}});
    CHECK(g.index == 1);
    CHECK(g.lattice.gram() == m.gram());
}

TEST_CASE("glue rejects bad vectors") {
    auto m = parse_lattice_expr("U(3)+A2");
    // not in the dual lattice
    CHECK_THROWS_AS(glue({m, {QVec{Rat(1, 5), Rat(0), Rat(0), Rat(0)}}}), domain_error);
    // non-integral pairing: norm 1/2 on <2>
    CHECK_THROWS_AS(glue({make_standard("diag(2)"), {QVec{Rat(1, 2)}}}), domain_error);
    // odd norm: e/2 on <4> pairs integrally but has norm 1
    CHECK_THROWS_AS(glue({make_standard("diag(4)"), {QVec{Rat(1, 2)}}}), domain_error);
}

TEST_CASE("invariant lattice catalog") {
    struct Expected {
        std::size_t r, a;
        Int order;
    };
    const Expected rows[] = {
        {2, 0, 1},  {4, 1, 2},    {4, 3, 48},  {6, 2, 8},  {8, 1, 2},  {10, 0, 1},
        {6, 4, 1440}, {8, 3, 48}, {10, 2, 4},  {12, 1, 2}, {12, 3, 48}, {14, 2, 8},
        {16, 1, 2}, {18, 0, 1},   {14, 4, 1440}, {16, 3, 48}, {18, 2, 4},
    };
    CHECK(marked_lattice_catalog().size() == 17);
    for (const auto& e : rows) {
        const auto& entry = catalog(e.r, e.a);
        CHECK(entry.lattice.rank() == e.r);
        DiscriminantForm d(entry.lattice);
        CHECK(d.is_3elementary());
        CHECK(d.length() == e.a);
        Signature s = signature(entry.lattice);
        CHECK(s.positive == 1);
        CHECK(s.negative == e.r - 1);
        CHECK(orthogonal_group_order(d) == e.order);
    }
    CHECK_THROWS_AS(catalog(20, 1), domain_error);
}

TEST_CASE("ample class bookkeeping") {
    auto plain = build_ample_vector(2, 0, 0);
    REQUIRE(plain.basis.size() == 3);
    CHECK(plain.coefficients[0] == pow_int(3, 20));
    CHECK(plain.coefficients[1] == pow_int(3, 10));
    CHECK(plain.coefficients[2] == pow_int(3, 10));

    auto rph = build_ample_vector(1, 0, 1);
    REQUIRE(rph.basis.size() == 2 + 8);
    // 3^5 e1 + 3^4 e2 + ... + 3^0 e6, zero on e7 and e8
    for (int i = 0; i < 6; ++i) CHECK(rph.coefficients[2 + i] == pow_int(3, 5 - i));
    CHECK(rph.coefficients[8] == 0);
    CHECK(rph.coefficients[9] == 0);

    auto tac = build_ample_vector(1, 1, 0);
    REQUIRE(tac.basis.size() == 2 + 6);
    // e3 + 9(e1+ + e1-) + 3(e2+ + e2-), zero on e4
    CHECK(tac.coefficients[2] == 9);   // e1+
    CHECK(tac.coefficients[3] == 3);   // e2+
    CHECK(tac.coefficients[4] == 1);   // e3
    CHECK(tac.coefficients[5] == 0);   // e4
    CHECK(tac.coefficients[6] == 3);   // e2-
    CHECK(tac.coefficients[7] == 9);   // e1-
}
