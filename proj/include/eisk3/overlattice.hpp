#pragma once

#include "eisk3/discriminant.hpp"
#include "eisk3/lattice.hpp"
#include "eisk3/smith.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eisk3 {

/// Even overlattice data: a base lattice M and glue vectors in M^vee,
/// written as rational vectors in the basis of M.
struct GlueSpec {
    IntegerLattice base;
    std::vector<QVec> glue;
};

struct GluedLattice {
    IntegerLattice lattice;
    Int index;   // [L : M]
    QMat basis;  // rows = basis of L in the coordinates of M
};

/// Lattice generated by M and the glue vectors. Demands an even integral
/// result; the basis is the Hermite-normal-form basis of the generated
/// subgroup of M^vee, so the output Gram is deterministic.
inline GluedLattice glue(const GlueSpec& spec) {
    const IMat& g = spec.base.gram();
    std::size_t n = spec.base.rank();
    // each glue vector must pair integrally with M
    for (const auto& f : spec.glue) {
        EISK3_REQUIRE(f.size() == n, "glue: vector size mismatch");
        for (std::size_t k = 0; k < n; ++k) {
            Rat s(0);
            for (std::size_t j = 0; j < n; ++j) s += f[j] * Rat(g(j, k));
            EISK3_REQUIRE(is_integral(s), "glue: vector does not lie in the dual lattice");
        }
    }
    // common denominator
    Int den = 1;
    for (const auto& f : spec.glue)
        for (const auto& x : f) den = boost::multiprecision::lcm(den, denominator(x));
    IMat rows(n + spec.glue.size(), n);
    for (std::size_t i = 0; i < n; ++i) rows(i, i) = den;
    for (std::size_t i = 0; i < spec.glue.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = spec.glue[i][j] * Rat(den);
            rows(n + i, j) = numerator(scaled);
        }
    IMat h = hnf_row_basis(rows);
    EISK3_REQUIRE(h.rows() == n, "glue: generated group does not have full rank");
    QMat basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rat(h(i, j), den);
    QMat gram_q = basis * to_rational(g) * basis.transposed();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            EISK3_REQUIRE(is_integral(gram_q(i, j)),
                          "glue: non-integral pairing among glue vectors");
        EISK3_REQUIRE(numerator(gram_q(i, i)) % 2 == 0, "glue: odd norm violates evenness");
    }
    Rat bdet = det(basis);
    Int index = denominator(bdet);  // |det basis| = 1/index
    EISK3_REQUIRE(abs(numerator(bdet)) == 1, "glue: basis determinant not of the form 1/k");
    IntegerLattice l(to_integer(gram_q), spec.base.label().empty() ? "" : "<" + spec.base.label() + ",glue>");
    return {std::move(l), index, std::move(basis)};
}

// ---------------------------------------------------------------------------
// Shipped glue data (transcribed; load-time integrality/evenness checks apply)
// ---------------------------------------------------------------------------

/// U(3) + A2^k with basis u, v, e_{1+}, e_{1-}, ..., e_{k+}, e_{k-}.
inline IntegerLattice u3_a2k(std::size_t k) {
    std::vector<IntegerLattice> parts{rescale(make_U(), 3)};
    for (std::size_t i = 0; i < k; ++i) parts.push_back(make_root_lattice('A', 2));
    return direct_sum(parts);
}

/// Overlattice of U(3)+A2^3 from 3f0 = 2(u+3v) - 3 sum(e_{i+}+e_{i-}),
/// 3f1 = u - 3v; rank 8, invariant (r,a) = (8,3).
inline GlueSpec glue_spec_8_3() {
    IntegerLattice m = u3_a2k(3);
    QVec f0{Rat(2, 3), Rat(2), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1)};
    QVec f1{Rat(1, 3), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    return {m, {f0, f1}};
}

/// Overlattice of U(3)+A2^6 with four glue vectors; rank 14, (r,a) = (14,2),
/// in the genus of U+E8+A2^2.
inline GlueSpec glue_spec_14_2() {
    IntegerLattice m = u3_a2k(6);
    auto vec = [&](Rat u, Rat v, std::map<std::pair<int, int>, Rat> e) {
        QVec out(14, Rat(0));
        out[0] = u;
        out[1] = v;
        for (auto& [key, val] : e) out[2 + 2 * (key.first - 1) + key.second] = val;
        return out;
    };
    // 3f0 = 2(u+v) - sum_{i=1..4} (2 e_{i-} + e_{i+})
    std::map<std::pair<int, int>, Rat> e0;
    for (int i = 1; i <= 4; ++i) { e0[{i, 1}] = Rat(-2, 3); e0[{i, 0}] = Rat(-1, 3); }
    QVec f0 = vec(Rat(2, 3), Rat(2, 3), e0);
    // 3f1 = v - sum over odd i in {1,3,5} of (2 e_{i+} + e_{i-})
    std::map<std::pair<int, int>, Rat> e1;
    for (int i : {1, 3, 5}) { e1[{i, 0}] = Rat(-2, 3); e1[{i, 1}] = Rat(-1, 3); }
    QVec f1 = vec(Rat(0), Rat(1, 3), e1);
    // 3f2 = v - sum over even i in {2,4,6} of (2 e_{i+} + e_{i-})
    std::map<std::pair<int, int>, Rat> e2;
    for (int i : {2, 4, 6}) { e2[{i, 0}] = Rat(-2, 3); e2[{i, 1}] = Rat(-1, 3); }
    QVec f2 = vec(Rat(0), Rat(1, 3), e2);
    // 3f3 = u - v - sum_{i=5,6} (2 e_{i-} + e_{i+})
    std::map<std::pair<int, int>, Rat> e3;
    for (int i : {5, 6}) { e3[{i, 1}] = Rat(-2, 3); e3[{i, 0}] = Rat(-1, 3); }
    QVec f3 = vec(Rat(1, 3), Rat(-1, 3), e3);
    return {m, {f0, f1, f2, f3}};
}

/// One case of the invariant-lattice table: lattice plus expected invariants.
struct MarkedLatticeCatalogEntry {
    std::string id;  // "(r,a)"
    IntegerLattice lattice;
    std::size_t expected_r;
    std::size_t expected_a;
};

inline std::string ra_key(std::size_t r, std::size_t a) {
    return "(" + std::to_string(r) + "," + std::to_string(a) + ")";
}

/// Invariant lattices L(X,G) for the cases that present one explicitly.
inline const std::vector<MarkedLatticeCatalogEntry>& marked_lattice_catalog() {
    static const std::vector<MarkedLatticeCatalogEntry> entries = [] {
        auto U = make_U();
        auto U3 = rescale(make_U(), 3);
        auto A2 = make_root_lattice('A', 2);
        auto E6 = make_root_lattice('E', 6);
        auto E8 = make_root_lattice('E', 8);
        std::vector<MarkedLatticeCatalogEntry> v;
        auto add = [&](std::size_t r, std::size_t a, IntegerLattice l) {
            v.push_back({ra_key(r, a), std::move(l), r, a});
        };
        add(2, 0, U);
        add(4, 1, direct_sum({U, A2}));
        add(4, 3, direct_sum({U3, A2}));
        add(6, 2, direct_sum({U, A2, A2}));
        add(8, 1, direct_sum({U, E6}));
        add(10, 0, direct_sum({U, E8}));
        add(6, 4, direct_sum({U3, A2, A2}));
        add(8, 3, glue(glue_spec_8_3()).lattice);
        add(10, 2, direct_sum({U, E6, A2}));
        add(12, 1, direct_sum({U, E8, A2}));
        add(12, 3, direct_sum({U, E6, A2, A2}));
        add(14, 2, glue(glue_spec_14_2()).lattice);
        add(16, 1, direct_sum({U, E6, E8}));
        add(18, 0, direct_sum({U, E8, E8}));
        add(14, 4, direct_sum({U, E6, A2, A2, A2}));
        add(16, 3, direct_sum({U, E8, A2, A2, A2}));
        add(18, 2, direct_sum({U3, E8, E8}));
        for (const auto& e : v) {
            EISK3_REQUIRE(e.lattice.rank() == e.expected_r,
                          "marked lattice catalog: rank mismatch at " + e.id);
            DiscriminantForm d(e.lattice);
            EISK3_REQUIRE(d.is_3elementary() && d.length() == e.expected_a,
                          "marked lattice catalog: discriminant mismatch at " + e.id);
        }
        return v;
    }();
    return entries;
}

inline const MarkedLatticeCatalogEntry& catalog(const std::string& id) {
    for (const auto& e : marked_lattice_catalog())
        if (e.id == id) return e;
    throw domain_error("marked lattice catalog: unknown id " + id);
}

inline const MarkedLatticeCatalogEntry& catalog(std::size_t r, std::size_t a) {
    return catalog(ra_key(r, a));
}

// ---------------------------------------------------------------------------
// Ample class bookkeeping
// ---------------------------------------------------------------------------

/// Basis symbols of the ambient marked lattice for the ample-class formula:
/// the pulled-back polarization, the fixed-curve classes, then per singular
/// point the root basis of its lattice (tacnode: e1+,e2+,e3,e4,e2-,e1-;
/// ramphoid cusp: e1..e8 with e8 the branch vertex).
struct AmpleVector {
    std::vector<std::string> basis;
    IVec coefficients;
};

inline IVec tacnode_dp_coefficients() {
    // e3 + 9(e1+ + e1-) + 3(e2+ + e2-), zero on e4
    // order: e1+, e2+, e3, e4, e2-, e1-
    return {Int(9), Int(3), Int(1), Int(0), Int(3), Int(9)};
}

inline IVec ramphoid_dp_coefficients() {
    // sum_{i=1..6} 3^{6-i} e_i, zero on e7, e8
    IVec v;
    for (int i = 1; i <= 6; ++i) v.push_back(pow_int(3, static_cast<unsigned>(6 - i)));
    v.push_back(Int(0));
    v.push_back(Int(0));
    return v;
}

/// 3^20 f*L + 3^10 sum F_i + sum D_p over the tacnodes and ramphoid cusps.
inline AmpleVector build_ample_vector(std::size_t fixed_curve_count, std::size_t tacnodes,
                                      std::size_t ramphoid_cusps) {
    EISK3_REQUIRE(fixed_curve_count >= 1, "build_ample_vector: need at least one fixed curve");
    AmpleVector out;
    out.basis.push_back("f*L");
    out.coefficients.push_back(pow_int(3, 20));
    for (std::size_t i = 0; i < fixed_curve_count; ++i) {
        out.basis.push_back("F" + std::to_string(i));
        out.coefficients.push_back(pow_int(3, 10));
    }
    static const char* tac_names[6] = {"e1+", "e2+", "e3", "e4", "e2-", "e1-"};
    for (std::size_t t = 0; t < tacnodes; ++t) {
        IVec dp = tacnode_dp_coefficients();
        for (std::size_t i = 0; i < 6; ++i) {
            out.basis.push_back("tac" + std::to_string(t) + "." + tac_names[i]);
            out.coefficients.push_back(dp[i]);
        }
    }
    for (std::size_t rph = 0; rph < ramphoid_cusps; ++rph) {
        IVec dp = ramphoid_dp_coefficients();
        for (std::size_t i = 0; i < 8; ++i) {
            out.basis.push_back("rph" + std::to_string(rph) + ".e" + std::to_string(i + 1));
            out.coefficients.push_back(dp[i]);
        }
    }
    return out;
}

}  // namespace eisk3
