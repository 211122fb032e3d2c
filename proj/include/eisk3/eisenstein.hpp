#pragma once

#include "eisk3/discriminant.hpp"
#include "eisk3/lattice.hpp"
#include "eisk3/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisk3 {

/// a + b*zeta with zeta = e^(2 pi i / 3); zeta^2 = -1 - zeta.
struct EisensteinInt {
    Int a{0}, b{0};

    EisensteinInt() = default;
    EisensteinInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    static EisensteinInt zeta() { return {0, 1}; }

    bool operator==(const EisensteinInt&) const = default;

    EisensteinInt operator+(const EisensteinInt& o) const { return {a + o.a, b + o.b}; }
    EisensteinInt operator-(const EisensteinInt& o) const { return {a - o.a, b - o.b}; }
    EisensteinInt operator-() const { return {-a, -b}; }
    EisensteinInt operator*(const EisensteinInt& o) const {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }

    EisensteinInt conj() const { return {a - b, -b}; }
    bool is_real() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
    Int norm() const { return a * a - a * b + b * b; }

    std::string str() const {
        if (b == 0) return a.str();
        return a.str() + (b > 0 ? "+" : "") + b.str() + "z";
    }
};

/// Same arithmetic with rational coefficients (used for exact Hermitian
/// diagonalization and determinants).
struct EisensteinRat {
    Rat a{0}, b{0};

    EisensteinRat() = default;
    EisensteinRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    EisensteinRat(const EisensteinInt& e) : a(e.a), b(e.b) {}

    bool operator==(const EisensteinRat&) const = default;

    EisensteinRat operator+(const EisensteinRat& o) const { return {a + o.a, b + o.b}; }
    EisensteinRat operator-(const EisensteinRat& o) const { return {a - o.a, b - o.b}; }
    EisensteinRat operator*(const EisensteinRat& o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    EisensteinRat operator/(const EisensteinRat& o) const {
        // multiply by conjugate; |o|^2 = a^2 - ab + b^2
        Rat n = o.a * o.a - o.a * o.b + o.b * o.b;
        EISK3_REQUIRE(n != 0, "eisenstein: division by zero");
        EisensteinRat t = *this * EisensteinRat{o.a - o.b, -o.b};
        return {t.a / n, t.b / n};
    }
    EisensteinRat conj() const { return {a - b, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    Rat real() const { return a - b / 2; }  // Re(a + b zeta) with zeta = -1/2 + i sqrt(3)/2
};

/// Hermitian Gram matrix over the Eisenstein integers: conjugate-symmetric,
/// real diagonal; linear in the first slot, conjugate-linear in the second.
class HermitianLattice {
public:
    explicit HermitianLattice(std::vector<std::vector<EisensteinInt>> h) : h_(std::move(h)) {
        n_ = h_.size();
        for (const auto& row : h_) EISK3_REQUIRE(row.size() == n_, "hermitian: matrix not square");
        for (std::size_t i = 0; i < n_; ++i) {
            EISK3_REQUIRE(h_[i][i].is_real(), "hermitian: diagonal entry not real");
            for (std::size_t j = 0; j < n_; ++j)
                EISK3_REQUIRE(h_[i][j] == h_[j][i].conj(), "hermitian: matrix not conjugate-symmetric");
        }
    }

    static HermitianLattice diagonal(const IVec& entries) {
        std::vector<std::vector<EisensteinInt>> h(entries.size(),
                                                  std::vector<EisensteinInt>(entries.size()));
        for (std::size_t i = 0; i < entries.size(); ++i) h[i][i] = EisensteinInt(entries[i], 0);
        return HermitianLattice(std::move(h));
    }

    std::size_t rank() const { return n_; }
    const EisensteinInt& operator()(std::size_t i, std::size_t j) const { return h_[i][j]; }
    bool operator==(const HermitianLattice& o) const { return h_ == o.h_; }

    /// Determinant over Q(zeta) (real for conjugate-symmetric input).
    EisensteinRat det() const {
        std::size_t n = n_;
        std::vector<std::vector<EisensteinRat>> a(n, std::vector<EisensteinRat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = EisensteinRat(h_[i][j]);
        EisensteinRat d{Rat(1), Rat(0)};
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && a[p][c].is_zero()) ++p;
            if (p == n) return {Rat(0), Rat(0)};
            if (p != c) { std::swap(a[p], a[c]); d = d * EisensteinRat{Rat(-1), Rat(0)}; }
            d = d * a[c][c];
            for (std::size_t i = c + 1; i < n; ++i) {
                if (a[i][c].is_zero()) continue;
                EisensteinRat f = a[i][c] / a[c][c];
                for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
            }
        }
        return d;
    }

    /// Signature of the Hermitian form (conjugate-congruence diagonalization).
    Signature signature() const {
        std::size_t n = n_;
        std::vector<std::vector<EisensteinRat>> a(n, std::vector<EisensteinRat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = EisensteinRat(h_[i][j]);
        Signature sig;
        std::vector<bool> done(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t p = n;
            for (std::size_t i = 0; i < n; ++i)
                if (!done[i] && !a[i][i].is_zero()) { p = i; break; }
            if (p == n) {
                std::size_t bi = n, bj = n;
                for (std::size_t i = 0; i < n && bi == n; ++i) {
                    if (done[i]) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        if (!done[j] && j != i && !a[i][j].is_zero()) { bi = i; bj = j; break; }
                }
                EISK3_REQUIRE(bi != n, "hermitian: degenerate form");
                // v_bi += c * v_bj with c = (v_bi, v_bj): new diagonal is 2|c|^2 > 0
                EisensteinRat c = a[bi][bj];
                for (std::size_t k = 0; k < n; ++k) a[bi][k] = a[bi][k] + c * a[bj][k];
                for (std::size_t k = 0; k < n; ++k) a[k][bi] = a[k][bi] + c.conj() * a[k][bj];
                p = bi;
            }
            EISK3_REQUIRE(a[p][p].b == 0, "hermitian: diagonal must stay real");
            if (a[p][p].a > 0) ++sig.positive; else ++sig.negative;
            EisensteinRat pv = a[p][p];
            for (std::size_t i = 0; i < n; ++i) {
                if (i == p || done[i] || a[i][p].is_zero()) continue;
                EisensteinRat f = a[i][p] / pv;
                for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[p][j];
                for (std::size_t j = 0; j < n; ++j) a[j][i] = a[j][i] - f.conj() * a[j][p];
            }
            done[p] = true;
        }
        return sig;
    }

private:
    std::vector<std::vector<EisensteinInt>> h_;
    std::size_t n_;
};

/// Order-3 fixed-point-free isometry on an even lattice.
struct EisensteinStructure {
    IntegerLattice lattice;
    IMat rho;

    EisensteinStructure(IntegerLattice l, IMat r) : lattice(std::move(l)), rho(std::move(r)) {
        EISK3_REQUIRE(rho.rows() == lattice.rank() && rho.cols() == lattice.rank(),
                      "eisenstein structure: rho size mismatch");
    }
};

/// Both structure invariants: rho^T G rho = G and rho^2 + rho + 1 = 0.
inline bool verify_structure(const EisensteinStructure& s) {
    EISK3_REQUIRE(s.lattice.rank() % 2 == 0,
                  "verify_structure: odd rank admits no fixed-point-free order-3 isometry");
    const IMat& g = s.lattice.gram();
    const IMat& r = s.rho;
    if (r.transposed() * g * r != g) return false;
    IMat acc = r * r + r + IMat::identity(r.rows());
    return acc.is_zero();
}

inline EisensteinStructure direct_sum(const std::vector<EisensteinStructure>& parts) {
    EISK3_REQUIRE(!parts.empty(), "direct_sum: empty structure list");
    std::vector<IntegerLattice> ls;
    std::vector<IMat> rs;
    for (const auto& p : parts) {
        ls.push_back(p.lattice);
        rs.push_back(p.rho);
    }
    return EisensteinStructure(direct_sum(ls), block_diag(rs));
}

inline bool is_unitary(const EisensteinStructure& s, const IMat& g) {
    EISK3_REQUIRE(g.rows() == s.rho.rows() && g.cols() == s.rho.cols(),
                  "is_unitary: dimension mismatch");
    if (g.transposed() * s.lattice.gram() * g != s.lattice.gram()) return false;
    return g * s.rho == s.rho * g;
}

// ---------------------------------------------------------------------------
// Quadratic <-> Hermitian correspondence
// ---------------------------------------------------------------------------

/// (l,l')_E = (l,l') + zeta (l, rho l') + zeta^2 (l, rho^2 l'), as a+b*zeta.
inline EisensteinInt hermitian_pairing(const EisensteinStructure& s, const IVec& l, const IVec& lp) {
    const IMat& g = s.lattice.gram();
    IVec r1 = s.rho.apply(lp);
    IVec r2 = s.rho.apply(r1);
    Int c0 = dot(l, g, lp), c1 = dot(l, g, r1), c2 = dot(l, g, r2);
    // c0 + c1 zeta + c2 zeta^2 = (c0 - c2) + (c1 - c2) zeta
    return {c0 - c2, c1 - c2};
}

/// Greedy R-basis: walk candidate lattice vectors in a deterministic order and
/// keep v whenever {chosen pairs, v, rho v} still extends to a Z-basis
/// (all Smith divisors 1). The standard basis vectors come first, so block
/// structures select block-local bases.
inline std::vector<IVec> eisenstein_basis(const EisensteinStructure& s) {
    std::size_t n = s.lattice.rank();
    std::size_t m = n / 2;
    std::vector<IVec> chosen;

    auto primitive_with = [&](const IVec& v) {
        IMat rows(2 * chosen.size() + 2, n);
        std::size_t r = 0;
        for (const auto& c : chosen) {
            IVec rc = s.rho.apply(c);
            for (std::size_t j = 0; j < n; ++j) rows(r, j) = c[j];
            ++r;
            for (std::size_t j = 0; j < n; ++j) rows(r, j) = rc[j];
            ++r;
        }
        IVec rv = s.rho.apply(v);
        for (std::size_t j = 0; j < n; ++j) rows(r, j) = v[j];
        ++r;
        for (std::size_t j = 0; j < n; ++j) rows(r, j) = rv[j];
        SmithForm sf = smith_normal_form(rows);
        std::size_t expect = 2 * chosen.size() + 2;
        for (std::size_t i = 0; i < expect; ++i)
            if (sf.d(i, i) != 1) return false;
        return true;
    };

    // candidate stream: standard vectors, then vectors with entries in
    // {-1,0,1}, then {-2..2}, ordered by bounding box and lexicographically
    auto try_candidates = [&](int bound) {
        std::vector<Int> v(n, Int(0));
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (chosen.size() == m) return;
            if (i == n) {
                bool zero = true;
                for (const auto& x : v)
                    if (x != 0) { zero = false; break; }
                if (zero) return;
                if (primitive_with(v)) chosen.push_back(v);
                return;
            }
            for (int c = -bound; c <= bound; ++c) {
                v[i] = c;
                rec(i + 1);
                if (chosen.size() == m) return;
            }
            v[i] = 0;
        };
        rec(0);
    };

    for (std::size_t i = 0; i < n && chosen.size() < m; ++i) {
        IVec e(n, Int(0));
        e[i] = 1;
        if (primitive_with(e)) chosen.push_back(e);
    }
    // fallback box search only at small rank; beyond that the standard
    // vectors must already have worked
    EISK3_REQUIRE(chosen.size() == m || n <= 10,
                  "to_hermitian: R-basis search budget exceeded at this rank");
    for (int bound = 1; bound <= 3 && chosen.size() < m; ++bound) try_candidates(bound);
    EISK3_REQUIRE(chosen.size() == m, "to_hermitian: no R-basis found within the search box");
    return chosen;
}

/// Hermitian Gram of the structure over the greedy R-basis.
inline HermitianLattice to_hermitian(const EisensteinStructure& s) {
    EISK3_REQUIRE(verify_structure(s), "to_hermitian: invalid Eisenstein structure");
    auto basis = eisenstein_basis(s);
    std::size_t m = basis.size();
    std::vector<std::vector<EisensteinInt>> h(m, std::vector<EisensteinInt>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) h[i][j] = hermitian_pairing(s, basis[i], basis[j]);
    return HermitianLattice(std::move(h));
}

/// Result of the reverse construction: the rational Gram on the basis
/// (e_1, zeta e_1, ..., e_m, zeta e_m) with rho = multiplication by zeta,
/// flagged non-integral when the Hermitian form is not even.
struct LatticeFromHermitian {
    QMat gram;
    IMat rho;
    bool integral;

    IntegerLattice as_integer_lattice(std::string label = "") const {
        EISK3_REQUIRE(integral, "from_hermitian: Gram is not integral");
        return IntegerLattice(to_integer(gram), std::move(label));
    }

    EisensteinStructure as_structure(std::string label = "") const {
        return EisensteinStructure(as_integer_lattice(std::move(label)), rho);
    }
};

/// (l,l') = (2/3) Re (l,l')_E on the interleaved basis (e_i, zeta e_i).
inline LatticeFromHermitian from_hermitian(const HermitianLattice& h) {
    std::size_t m = h.rank(), n = 2 * m;
    QMat gram(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Int& a = h(i, j).a;
            const Int& b = h(i, j).b;
            // pairings of (e_i, z e_i) against (e_j, z e_j); the form is
            // conjugate-linear in the second slot
            gram(2 * i, 2 * j) = Rat(2 * a - b, 3);           // (e_i, e_j)
            gram(2 * i, 2 * j + 1) = Rat(2 * b - a, 3);       // (e_i, z e_j) = (2/3)Re(conj(z) h)
            gram(2 * i + 1, 2 * j) = Rat(-(a + b), 3);        // (z e_i, e_j) = (2/3)Re(z h)
            gram(2 * i + 1, 2 * j + 1) = Rat(2 * a - b, 3);   // (z e_i, z e_j)
        }
    IMat rho(n, n);
    for (std::size_t i = 0; i < m; ++i) {
        // zeta * e_i = (z e_i);  zeta * (z e_i) = z^2 e_i = -e_i - z e_i
        rho(2 * i + 1, 2 * i) = 1;
        rho(2 * i, 2 * i + 1) = -1;
        rho(2 * i + 1, 2 * i + 1) = -1;
    }
    bool integral = true;
    for (std::size_t i = 0; i < n && integral; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_integral(gram(i, j))) { integral = false; break; }
    return {std::move(gram), std::move(rho), integral};
}

/// Evenness criterion on the Hermitian side: diagonal norms in 3Z and the
/// cross-term congruence a_ij + b_ij = 0 mod 3 forced by integrality of the
/// associated Z-valued form.
inline bool is_even_hermitian(const HermitianLattice& h) {
    for (std::size_t i = 0; i < h.rank(); ++i) {
        if (h(i, i).a % 3 != 0) return false;
        for (std::size_t j = i + 1; j < h.rank(); ++j)
            if (mod_floor(h(i, j).a + h(i, j).b, 3) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Catalog of standard structures (rho matrices frozen from a small search;
// verified on load)
// ---------------------------------------------------------------------------

inline EisensteinStructure standard_structure_A2() {
    return EisensteinStructure(make_root_lattice('A', 2), IMat{{0, -1}, {1, -1}});
}

inline EisensteinStructure standard_structure_A2_neg() {
    return EisensteinStructure(rescale(make_root_lattice('A', 2), -1), IMat{{0, -1}, {1, -1}});
}

inline EisensteinStructure standard_structure_UU3() {
    IntegerLattice l = direct_sum({make_U(), rescale(make_U(), 3)});
    IMat rho{{1, 0, 3, 0}, {0, -2, 0, 3}, {-1, 0, -2, 0}, {0, -1, 0, 1}};
    return EisensteinStructure(l, rho);
}

inline EisensteinStructure standard_structure_UU() {
    IntegerLattice l = direct_sum({make_U(), make_U()});
    IMat rho{{-1, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, -1, 0}, {-1, 0, 0, 0}};
    return EisensteinStructure(l, rho);
}

inline EisensteinStructure standard_structure_E6() {
    IMat rho{{0, -1, 0, 0, 0, 1},  {1, -2, 1, -1, 0, 1}, {1, -2, 1, -2, 1, 1},
             {0, -1, 1, -2, 1, 1}, {0, 0, 0, -1, 0, 1},  {0, -1, 1, -1, 0, 0}};
    return EisensteinStructure(make_root_lattice('E', 6), rho);
}

inline EisensteinStructure standard_structure_E8() {
    IMat rho{{0, 0, 1, 0, -1, 1, 0, -2},    {1, -1, 2, 0, -1, 2, -1, -4},
             {2, -1, 2, 0, -2, 4, -2, -5},  {2, -1, 2, -1, -1, 3, -1, -4},
             {2, -1, 2, -1, -1, 2, -1, -3}, {1, 0, 1, -1, 0, 1, -1, -2},
             {0, 0, 1, -1, 0, 1, -1, -1},   {1, 0, 1, 0, -1, 2, -1, -3}};
    return EisensteinStructure(make_root_lattice('E', 8), rho);
}

struct CatalogStructure {
    std::string name;
    EisensteinStructure structure;
};

inline const std::vector<CatalogStructure>& structure_catalog() {
    static const std::vector<CatalogStructure> catalog = [] {
        std::vector<CatalogStructure> c;
        c.push_back({"A2", standard_structure_A2()});
        c.push_back({"A2(-1)", standard_structure_A2_neg()});
        c.push_back({"U+U(3)", standard_structure_UU3()});
        c.push_back({"U+U", standard_structure_UU()});
        c.push_back({"E6", standard_structure_E6()});
        c.push_back({"E8", standard_structure_E8()});
        for (const auto& e : c)
            EISK3_REQUIRE(verify_structure(e.structure),
                          "structure catalog: shipped rho fails verification for " + e.name);
        return c;
    }();
    return catalog;
}

inline const EisensteinStructure& catalog_structure(const std::string& name) {
    for (const auto& e : structure_catalog())
        if (e.name == name) return e.structure;
    throw domain_error("structure catalog: unknown name " + name);
}

}  // namespace eisk3
