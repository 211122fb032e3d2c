#include "eisk3/eisenstein.hpp"
#include "eisk3/overlattice.hpp"
#include "eisk3/discriminant.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eisk3;
using eisk3::testing::Lcg;

TEST_CASE("verify_structure") {
    auto a2 = standard_structure_A2();
    CHECK(verify_structure(a2));
    CHECK_FALSE(verify_structure(EisensteinStructure(a2.lattice, IMat::identity(2))));
    CHECK_THROWS_AS(verify_structure(EisensteinStructure(make_standard("diag(2,2,2)"), IMat::identity(3))),
                    domain_error);  // odd rank
}

TEST_CASE("the structure on U+U(3) arises from A2+A2(-1) by a basis change") {
    // small-vector search for the isometry, independent of the shipped rho
    auto src = direct_sum({make_root_lattice('A', 2), rescale(make_root_lattice('A', 2), -1)});
    auto dst = direct_sum({make_U(), rescale(make_U(), 3)});
    auto t = testing::find_isometry_small(src.gram(), dst.gram(), 2);
    REQUIRE(t.has_value());
    IMat rho_src = block_diag<Int>({IMat{{0, -1}, {1, -1}}, IMat{{0, -1}, {1, -1}}});
    QMat tq = to_rational(*t);
    IMat rho_dst = to_integer(inverse(tq) * to_rational(rho_src) * tq);
    EisensteinStructure found(dst, rho_dst);
    CHECK(verify_structure(found));
    // the shipped structure verifies on the same Gram
    CHECK(verify_structure(standard_structure_UU3()));
}

TEST_CASE("overlattice transport reproduces structures in the E6 and E8 genera") {
    auto a2 = standard_structure_A2();
    auto dual_gen = [](std::size_t block, std::size_t blocks) {
        QVec f(2 * blocks, Rat(0));
        f[2 * block] = Rat(-2, 3);
        f[2 * block + 1] = Rat(-1, 3);
        return f;
    };
    auto add = [](QVec a, const QVec& b, int sign) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += Rat(sign) * b[i];
        return a;
    };
    auto transport = [](const GluedLattice& g, const IMat& rho) {
        QMat bt = g.basis.transposed();
        return EisensteinStructure(g.lattice, to_integer(inverse(bt) * to_rational(rho) * bt));
    };

    // E6 as an index-3 overlattice of A2^3, glued by the diagonal class
    auto sum3 = direct_sum({a2, a2, a2});
    QVec f6 = add(add(dual_gen(0, 3), dual_gen(1, 3), 1), dual_gen(2, 3), 1);
    auto g6 = glue({sum3.lattice, {f6}});
    CHECK(g6.index == 3);
    CHECK(genus_equal(g6.lattice, make_root_lattice('E', 6)));
    auto s6 = transport(g6, sum3.rho);
    CHECK(verify_structure(s6));
    CHECK(induced_map_on_disc(s6.lattice, s6.rho) == f3::identity(1));

    // E8 as an index-9 overlattice of A2^4
    auto sum4 = direct_sum({a2, a2, a2, a2});
    QVec f8a = add(add(dual_gen(0, 4), dual_gen(1, 4), 1), dual_gen(2, 4), 1);
    QVec f8b = add(add(dual_gen(1, 4), dual_gen(2, 4), -1), dual_gen(3, 4), 1);
    auto g8 = glue({sum4.lattice, {f8a, f8b}});
    CHECK(g8.index == 9);
    CHECK(genus_equal(g8.lattice, make_root_lattice('E', 8)));
    auto s8 = transport(g8, sum4.rho);
    CHECK(verify_structure(s8));
}

TEST_CASE("every catalog structure is valid and acts trivially on A_E") {
    for (const auto& entry : structure_catalog()) {
        CHECK(verify_structure(entry.structure));
        DiscriminantForm d(entry.structure.lattice);
        if (d.is_trivial()) continue;
        CHECK(induced_map_on_disc(entry.structure.lattice, entry.structure.rho) ==
              f3::identity(d.length()));
    }
}

TEST_CASE("to_hermitian on the documented examples") {
    auto h = to_hermitian(standard_structure_A2());
    REQUIRE(h.rank() == 1);
    CHECK(h(0, 0) == EisensteinInt(-3, 0));

    auto h33 = to_hermitian(standard_structure_UU3());
    REQUIRE(h33.rank() == 2);
    CHECK(is_even_hermitian(h33));
    // det <3,-3> = -9; any unimodular Hermitian change of basis preserves it
    auto d = h33.det();
    CHECK(d.b == 0);
    CHECK(d.a == Rat(-9));
    // round trip through the Z-form lands in the genus of U+U(3)
    auto back = from_hermitian(h33);
    REQUIRE(back.integral);
    CHECK(genus_equal(back.as_integer_lattice(), standard_structure_UU3().lattice));

    // block additivity on direct sums
    auto sum = direct_sum({standard_structure_A2(), standard_structure_A2()});
    auto hsum = to_hermitian(sum);
    REQUIRE(hsum.rank() == 2);
    CHECK(hsum(0, 0) == EisensteinInt(-3, 0));
    CHECK(hsum(1, 1) == EisensteinInt(-3, 0));
    CHECK(hsum(0, 1) == EisensteinInt(0, 0));
}

TEST_CASE("from_hermitian on the documented examples") {
    auto a2 = from_hermitian(HermitianLattice::diagonal({Int(-3)}));
    REQUIRE(a2.integral);
    CHECK(a2.gram == to_rational(make_root_lattice('A', 2).gram()));
    CHECK(a2.rho == IMat{{0, -1}, {1, -1}});

    auto bad = from_hermitian(HermitianLattice::diagonal({Int(-1)}));
    CHECK_FALSE(bad.integral);
    CHECK(bad.gram(0, 0) == Rat(-2, 3));
    CHECK_THROWS_AS(bad.as_integer_lattice(), domain_error);

    auto uu3 = from_hermitian(HermitianLattice::diagonal({Int(3), Int(-3)}));
    REQUIRE(uu3.integral);
    auto l = uu3.as_integer_lattice();
    CHECK(l.is_even());
    CHECK(genus_equal(l, direct_sum({make_U(), rescale(make_U(), 3)})));
}

TEST_CASE("hermitian round trip is the exact identity") {
    for (const auto& entry : structure_catalog()) {
        auto h = to_hermitian(entry.structure);
        auto back = from_hermitian(h);
        REQUIRE(back.integral);
        auto h2 = to_hermitian(back.as_structure());
        CHECK(h2 == h);
        CHECK(genus_equal(back.as_integer_lattice(), entry.structure.lattice));
    }
}

TEST_CASE("is_even_hermitian") {
    CHECK(is_even_hermitian(HermitianLattice::diagonal({Int(-3)})));
    CHECK_FALSE(is_even_hermitian(HermitianLattice::diagonal({Int(-1)})));
    CHECK(is_even_hermitian(HermitianLattice::diagonal({Int(3), Int(-3)})));
    // off-diagonal congruence a+b = 0 mod 3
    std::vector<std::vector<EisensteinInt>> h(2, std::vector<EisensteinInt>(2));
    h[0][0] = EisensteinInt(3, 0);
    h[1][1] = EisensteinInt(3, 0);
    h[0][1] = EisensteinInt(1, 2);            // 1 + 2 = 0 mod 3
    h[1][0] = h[0][1].conj();
    CHECK(is_even_hermitian(HermitianLattice(h)));
    h[0][1] = EisensteinInt(1, 1);            // 1 + 1 != 0 mod 3
    h[1][0] = h[0][1].conj();
    CHECK_FALSE(is_even_hermitian(HermitianLattice(h)));
}

TEST_CASE("evenness criterion agrees with the Z-form on random Hermitian forms") {
    Lcg rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        std::vector<std::vector<EisensteinInt>> h(m, std::vector<EisensteinInt>(m));
        for (std::size_t i = 0; i < m; ++i) {
            h[i][i] = EisensteinInt(rng.range(-6, 6), 0);
            for (std::size_t j = i + 1; j < m; ++j) {
                h[i][j] = EisensteinInt(rng.range(-3, 3), rng.range(-3, 3));
                h[j][i] = h[i][j].conj();
            }
        }
        HermitianLattice H(h);
        auto lat = from_hermitian(H);
        bool z_even = true;
        if (!lat.integral) {
            z_even = false;
        } else {
            for (std::size_t i = 0; i < lat.gram.rows(); ++i)
                if (numerator(lat.gram(i, i)) % 2 != 0) z_even = false;
        }
        CHECK(is_even_hermitian(H) == z_even);
    }
}

TEST_CASE("is_unitary") {
    auto s = standard_structure_A2();
    CHECK(is_unitary(s, s.rho));
    CHECK(is_unitary(s, -IMat::identity(2)));
    auto ss = direct_sum({s, s});
    IMat swap_blocks(4, 4);
    swap_blocks(0, 2) = swap_blocks(1, 3) = swap_blocks(2, 0) = swap_blocks(3, 1) = 1;
    CHECK(is_unitary(ss, swap_blocks));
    IMat refl = IMat::identity(4);
    refl(0, 0) = -1;  // breaks the Gram on A2
    CHECK_FALSE(is_unitary(ss, refl));
    CHECK_THROWS_AS(is_unitary(s, IMat::identity(4)), domain_error);
}

TEST_CASE("pairing identity and signature doubling") {
    Lcg rng(3);
    for (const auto& entry : structure_catalog()) {
        std::size_t n = entry.structure.lattice.rank();
        for (int trial = 0; trial < 100; ++trial) {
            IVec l(n), lp(n);
            for (std::size_t i = 0; i < n; ++i) {
                l[i] = rng.range(-3, 3);
                lp[i] = rng.range(-3, 3);
            }
            EisensteinInt p = hermitian_pairing(entry.structure, l, lp);
            Rat lhs(dot(l, entry.structure.lattice.gram(), lp));
            CHECK(lhs == Rat(2, 3) * EisensteinRat(p).real());
        }
        Signature zs = signature(entry.structure.lattice);
        Signature hs = to_hermitian(entry.structure).signature();
        CHECK(zs.positive == 2 * hs.positive);
        CHECK(zs.negative == 2 * hs.negative);
    }
}
