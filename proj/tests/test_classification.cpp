#include "eisk3/classification.hpp"
#include "eisk3/discriminant.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace eisk3;

TEST_CASE("invariants_from_ra") {
    auto t = invariants_from_ra(2, 0);
    CHECK((t.valid && t.g == 5 && t.k == 1 && t.n == 0));

    auto exc = invariants_from_ra(8, 7);
    CHECK(exc.valid);
    CHECK(exc.exceptional);
    CHECK(exc.g == 0);
    CHECK(exc.k == -1);
    CHECK(exc.n == 3);

    CHECK_FALSE(invariants_from_ra(3, 1).valid);   // parity obstruction
    CHECK_FALSE(invariants_from_ra(10, 8).valid);  // k = -1 outside (8,7)
}

TEST_CASE("the 24 types with verified lattices") {
    const auto& types = enumerate_types();
    REQUIRE(types.size() == 24);
    std::set<std::pair<long long, long long>> seen;
    for (const auto& e : types) {
        seen.insert({e.tuple.r, e.tuple.a});
        CHECK(e.structure.lattice.rank() == static_cast<std::size_t>(22 - e.tuple.r));
        CHECK(verify_structure(e.structure));
        Signature s = signature(e.structure.lattice);
        CHECK(s.positive == 2);
        CHECK(s.negative == static_cast<std::size_t>(20 - e.tuple.r));
        DiscriminantForm d(e.structure.lattice);
        CHECK(d.is_3elementary());
        CHECK(d.length() == static_cast<std::size_t>(e.tuple.a));
        if (!d.is_trivial())
            CHECK(induced_map_on_disc(e.structure.lattice, e.structure.rho) ==
                  f3::identity(d.length()));
    }
    CHECK(seen.size() == 24);

    // the g = 1 family
    std::set<std::pair<long long, long long>> g1;
    for (const auto& e : types)
        if (e.tuple.g == 1) g1.insert({e.tuple.r, e.tuple.a});
    CHECK(g1 == (std::set<std::pair<long long, long long>>{
                    {18, 0}, {16, 1}, {14, 2}, {12, 3}, {10, 4}, {8, 5}}));

    // the g = 5 type
    const auto& top = type_entry(2, 0);
    CHECK(top.lattice_label == "U^2+E8^2");
    CHECK(top.structure.lattice.rank() == 20);
}

TEST_CASE("no 25th type") {
    auto scan = scan_valid_tuples();
    CHECK(scan.size() == 24);
    // numeric validity alone admits more tuples; realizability cuts them out
    std::size_t numeric = 0;
    for (long long r = 2; r <= 20; ++r)
        for (long long a = 0; a <= 11; ++a)
            if (invariants_from_ra(r, a).valid) ++numeric;
    CHECK(numeric > 24);
    CHECK_FALSE(is_known_type(6, 0));  // numerically fine, not realizable
    CHECK(invariants_from_ra(6, 0).valid);
}

TEST_CASE("rationality statuses") {
    CHECK(rationality_status(8, 7) == Rationality::unirational_only);
    CHECK(rationality_status(10, 6) == Rationality::unirational_only);
    CHECK(rationality_status(4, 1) == Rationality::rational);
    CHECK(rationality_status(12, 5) == Rationality::external_rational);
    CHECK(rationality_status(2, 2) == Rationality::external_rational);
    std::size_t rational = 0;
    for (const auto& e : enumerate_types())
        if (e.rationality != Rationality::unirational_only) ++rational;
    CHECK(rational == 22);
    CHECK_THROWS_AS(type_entry(5, 5), domain_error);
}
