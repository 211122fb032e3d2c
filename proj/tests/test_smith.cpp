#include "eisk3/lattice.hpp"
#include "eisk3/smith.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eisk3;
using eisk3::testing::Lcg;

namespace {

void check_smith(const IMat& m) {
    SmithForm s = smith_normal_form(m);
    CHECK(s.p * m * s.q == s.d);
    CHECK(abs(det(s.p)) == 1);
    CHECK(abs(det(s.q)) == 1);
    std::size_t t = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i + 1 < t; ++i) {
        CHECK(s.d(i, i) >= 0);
        if (s.d(i + 1, i + 1) != 0) {
            if (s.d(i, i) != 0)
                CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
    }
    // divisors agree with the independent reduction oracle
    IVec mine;
    for (std::size_t i = 0; i < t; ++i)
        if (s.d(i, i) != 0) mine.push_back(s.d(i, i));
    std::sort(mine.begin(), mine.end());
    CHECK(mine == testing::oracle_snf_divisors(m));
}

}  // namespace

TEST_CASE("smith normal form on the documented examples") {
    SmithForm s = smith_normal_form(IMat{{2, 0}, {0, 2}});
    CHECK(s.d == IMat{{2, 0}, {0, 2}});

    SmithForm a2 = smith_normal_form(make_root_lattice('A', 2).gram());
    CHECK(a2.d(0, 0) == 1);
    CHECK(a2.d(1, 1) == 3);

    SmithForm id = smith_normal_form(IMat::identity(4));
    CHECK(id.d == IMat::identity(4));
}

TEST_CASE("smith normal form on random matrices") {
    Lcg rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.range(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.range(1, 5));
        IMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.range(-6, 6);
        check_smith(m);
    }
    // big-integer stress: Gram matrices of rank ~20 with overflowing minors
    auto big = parse_lattice_expr("U^2+A2^5+E8");
    check_smith(big.gram());
    check_smith(rescale(big, 9).gram());
}

TEST_CASE("hermite row basis spans the same group") {
    IMat rows{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 2, 1}};
    IMat h = hnf_row_basis(rows);
    CHECK(h.rows() == 3);
    // index of 3Z^3 in the generated group: |det| must divide 27
    Int d = abs(det(h));
    CHECK(27 % d == 0);
    CHECK(d == 9);  // one glue vector of order 3
}
