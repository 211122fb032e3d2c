#include "eisk3/discriminant.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eisk3;
using eisk3::testing::Lcg;

TEST_CASE("discriminant groups of the standard lattices") {
    CHECK(DiscriminantForm(make_root_lattice('E', 8)).is_trivial());

    DiscriminantForm a2(make_root_lattice('A', 2));
    REQUIRE(a2.orders() == IVec{3});
    // dual-basis oracle: invert the Gram, read the diagonal: q(gen) = -2/3 mod 2
    QMat inv = inverse(make_root_lattice('A', 2).gram());
    CHECK(inv(0, 0) == Rat(-2, 3));
    CHECK(a2.q({1}) == mod_rat(Rat(-2, 3), 2));

    DiscriminantForm u3(rescale(make_U(), 3));
    REQUIRE(u3.orders() == (IVec{3, 3}));
    CHECK(u3.q({1, 0}) == 0);
    CHECK(u3.q({0, 1}) == 0);
    CHECK((u3.b(0, 1) == Rat(1, 3) || u3.b(0, 1) == Rat(2, 3)));  // pairing of order 3
}

TEST_CASE("odd lattices are rejected") {
    CHECK_THROWS_AS(DiscriminantForm(make_I(2, 1)), domain_error);
}

TEST_CASE("is_3elementary") {
    CHECK(is_3elementary(DiscriminantForm(make_root_lattice('A', 2))).yes);
    CHECK(is_3elementary(DiscriminantForm(make_root_lattice('A', 2))).length == 1);
    auto ua22 = parse_lattice_expr("U+A2^2");
    auto te = is_3elementary(DiscriminantForm(ua22));
    CHECK(te.yes);
    CHECK(te.length == 2);
    DiscriminantForm d4(make_root_lattice('D', 4));
    CHECK(d4.orders() == (IVec{2, 2}));
    CHECK_FALSE(is_3elementary(d4).yes);
}

TEST_CASE("orthogonal group enumeration matches the order formulas") {
    CHECK(orthogonal_group(DiscriminantForm(parse_lattice_expr("U+A2"))).order == 2);
    CHECK(orthogonal_group(DiscriminantForm(parse_lattice_expr("U(3)+A2"))).order == 48);
    CHECK(f3::go_order(f3::Family::odd, 3) == 48);
    CHECK(f3::go_order(f3::Family::minus, 4) == 1440);
    CHECK(f3::go_order(f3::Family::plus, 4) == 1152);
    CHECK(f3::go_order(f3::Family::odd, 5) == 103680);
    CHECK_THROWS_AS(f3::go_order(f3::Family::odd, 4), domain_error);
    CHECK_THROWS_AS(f3::go_order(f3::Family::plus, 3), domain_error);

    // every enumerated element preserves q; -1 is present
    auto d = DiscriminantForm(parse_lattice_expr("U+A2^2"));
    auto g = orthogonal_group(d);
    auto space = d.f3_space();
    for (std::size_t i = 0; i < g.element_codes.size(); ++i)
        REQUIRE(space.preserves(g.element(i)));
    CHECK(std::binary_search(g.element_codes.begin(), g.element_codes.end(),
                             f3::encode(f3::neg_identity(space.dim()))));
    // canonical ordering: strictly increasing codes
    for (std::size_t i = 0; i + 1 < g.element_codes.size(); ++i)
        REQUIRE(g.element_codes[i] < g.element_codes[i + 1]);

    CHECK_THROWS_AS(orthogonal_group(DiscriminantForm(make_root_lattice('D', 4))), domain_error);
}

TEST_CASE("orthogonal groups of q and -q coincide elementwise") {
    for (const char* expr : {"A2", "U(3)", "U+A2^2", "U(3)+A2"}) {
        auto l = parse_lattice_expr(expr);
        auto d_pos = DiscriminantForm(l);
        auto d_neg = DiscriminantForm(rescale(l, -1));
        auto g1 = orthogonal_group(d_pos);
        auto g2 = orthogonal_group(d_neg);
        CHECK(g1.element_codes == g2.element_codes);
    }
}

TEST_CASE("induced maps on the discriminant group") {
    auto a2 = make_root_lattice('A', 2);
    IMat rho{{0, -1}, {1, -1}};
    CHECK(induced_map_on_disc(a2, rho) == f3::identity(1));
    CHECK(induced_map_on_disc(a2, -IMat::identity(2)) == f3::neg_identity(1));

    auto a2a2 = direct_sum({a2, a2});
    IMat swap_blocks(4, 4);
    swap_blocks(0, 2) = swap_blocks(1, 3) = swap_blocks(2, 0) = swap_blocks(3, 1) = 1;
    f3::Matrix swapped = induced_map_on_disc(a2a2, swap_blocks);
    f3::Matrix expect = {{0, 1}, {1, 0}};
    CHECK(swapped == expect);

    IMat not_isometry = IMat::identity(2);
    not_isometry(0, 0) = 2;
    CHECK_THROWS_AS(induced_map_on_disc(a2, not_isometry), domain_error);
}

TEST_CASE("q is independent of the coset representative") {
    Lcg rng(11);
    for (const char* expr : {"A2", "U(3)+A2", "U+A2^2"}) {
        auto l = parse_lattice_expr(expr);
        DiscriminantForm d(l);
        for (std::size_t gi = 0; gi < d.length(); ++gi) {
            QVec rep = d.generators()[gi];
            IVec coeffs(d.length(), 0);
            coeffs[gi] = 1;
            Rat q0 = d.q(coeffs);
            for (int trial = 0; trial < 20; ++trial) {
                QVec shifted = rep;
                for (std::size_t k = 0; k < shifted.size(); ++k)
                    shifted[k] += Rat(rng.range(-3, 3));
                CHECK(d.q_of_dual_vector(shifted) == q0);
            }
        }
    }
}

TEST_CASE("plus/minus detection cross-checked by brute isotropic counts") {
    // dimension 2: U(3) is plus (isotropic lines exist), A2^2 is minus
    auto plus2 = DiscriminantForm(rescale(make_U(), 3)).f3_space();
    auto minus2 = DiscriminantForm(parse_lattice_expr("A2^2")).f3_space();
    CHECK(f3::detect_family(plus2) == f3::Family::plus);
    CHECK(f3::detect_family(minus2) == f3::Family::minus);
    // dimension 4
    auto plus4 = DiscriminantForm(parse_lattice_expr("A2^4")).f3_space();
    auto minus4 = DiscriminantForm(parse_lattice_expr("U(3)+A2^2")).f3_space();
    CHECK(f3::detect_family(plus4) == f3::Family::plus);
    CHECK(f3::detect_family(minus4) == f3::Family::minus);
    // counts against the closed-form values
    CHECK(plus4.isotropic_count() == 27 + 9 - 3);
    CHECK(minus4.isotropic_count() == 27 - 9 + 3);
}

TEST_CASE("enumeration budget") {
    auto d = DiscriminantForm(parse_lattice_expr("A2^5"));
    CHECK_THROWS_AS(orthogonal_group(d, 4), domain_error);
}
