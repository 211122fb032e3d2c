#pragma once

#include "eisk3/f3.hpp"
#include "eisk3/lattice.hpp"
#include "eisk3/smith.hpp"

#include <functional>
#include <map>
#include <vector>

namespace eisk3 {

/// Discriminant group A_L = L^vee / L of an even nondegenerate lattice,
/// with its Q/2Z-valued quadratic form.
///
/// Generators are coset representatives in L^vee, stored as rational vectors
/// in the basis of L. Internally the group is Z^n / G Z^n in dual coordinates,
/// presented through the Smith normal form of the Gram matrix.
class DiscriminantForm {
public:
    explicit DiscriminantForm(const IntegerLattice& l)
        : rank_(l.rank()), gram_(l.gram()), gram_q_(0, 0) {
        EISK3_REQUIRE(l.is_even(), "discriminant_form: lattice must be even");
        SmithForm s = smith_normal_form(gram_);
        p_ = s.p;
        smith_d_.resize(rank_);
        for (std::size_t i = 0; i < rank_; ++i) smith_d_[i] = s.d(i, i);

        QMat ginv = inverse(gram_);
        QMat pinv = inverse(to_rational(p_));
        for (std::size_t i = 0; i < rank_; ++i) {
            if (smith_d_[i] <= 1) continue;
            orders_.push_back(smith_d_[i]);
            QVec dual(rank_);
            for (std::size_t k = 0; k < rank_; ++k) dual[k] = pinv(k, i);
            dual_gens_.push_back(dual);
            gens_.push_back(ginv.apply(dual));
        }
        std::size_t k = gens_.size();
        gram_q_ = QMat(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rat v(0);
                for (std::size_t t = 0; t < rank_; ++t) v += dual_gens_[i][t] * gens_[j][t];
                gram_q_(i, j) = v;
            }
        order_ = 1;
        for (const auto& d : orders_) order_ *= d;
    }

    std::size_t ambient_rank() const { return rank_; }
    const IVec& orders() const { return orders_; }
    std::size_t length() const { return orders_.size(); }
    const Int& order() const { return order_; }
    const std::vector<QVec>& generators() const { return gens_; }

    bool is_trivial() const { return orders_.empty(); }

    bool is_3elementary() const {
        for (const auto& d : orders_)
            if (d != 3) return false;
        return true;
    }

    /// q(sum c_i g_i) in Q/2Z, reduced into [0,2).
    Rat q(const IVec& coeffs) const {
        EISK3_REQUIRE(coeffs.size() == gens_.size(), "discriminant: coefficient count mismatch");
        Rat v(0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                v += Rat(coeffs[i] * coeffs[j]) * gram_q_(i, j);
        return mod_rat(v, 2);
    }

    /// q of an arbitrary dual vector (rational coords in the basis of L).
    Rat q_of_dual_vector(const QVec& v) const {
        EISK3_REQUIRE(v.size() == rank_, "discriminant: vector size mismatch");
        Rat s(0);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) s += v[i] * Rat(gram_(i, j)) * v[j];
        return mod_rat(s, 2);
    }

    /// b(g_i, g_j) in Q/Z, reduced into [0,1).
    Rat b(std::size_t i, std::size_t j) const { return mod_rat(gram_q_(i, j), 1); }

    /// Coefficients of the class of a dual vector in the canonical generators.
    IVec class_coordinates(const QVec& v_lattice_coords) const {
        EISK3_REQUIRE(v_lattice_coords.size() == rank_, "discriminant: vector size mismatch");
        QVec w(rank_, Rat(0));  // dual coordinates: w_k = (v, e_k)
        for (std::size_t k = 0; k < rank_; ++k) {
            Rat s(0);
            for (std::size_t j = 0; j < rank_; ++j) s += v_lattice_coords[j] * Rat(gram_(j, k));
            EISK3_REQUIRE(is_integral(s), "discriminant: vector not in the dual lattice");
            w[k] = s;
        }
        IVec out;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (smith_d_[i] <= 1) continue;
            Rat c(0);
            for (std::size_t k = 0; k < rank_; ++k) c += Rat(p_(i, k)) * w[k];
            out.push_back(mod_floor(numerator(c), smith_d_[i]));
        }
        return out;
    }

    /// GF(3) space of the form: bilinear matrix 3*b on the generators
    /// (3-elementary only). q on classes corresponds to 2 * b(x,x) there.
    f3::QuadSpace f3_space() const {
        EISK3_REQUIRE(is_3elementary() && !is_trivial(),
                      "discriminant: not a nontrivial 3-elementary form");
        std::size_t k = gens_.size();
        f3::Matrix m(k, f3::Vec(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rat t = gram_q_(i, j) * 3;
                EISK3_REQUIRE(is_integral(t), "discriminant: pairing not in (1/3)Z");
                m[i][j] = f3::norm3(static_cast<long long>(mod_floor(numerator(t), 3)));
            }
        return f3::QuadSpace(m);
    }

    /// Discriminant of the GF(3) bilinear form modulo squares (1 or 2); together
    /// with the length this classifies nondegenerate forms over GF(3).
    Int f3_det_class() const {
        f3::Matrix m = f3_space().bilinear();
        std::size_t k = m.size();
        long long detv = 1;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            while (p < k && m[p][c] == 0) ++p;
            EISK3_REQUIRE(p < k, "discriminant: degenerate GF(3) form");
            if (p != c) { std::swap(m[p], m[c]); detv = -detv; }
            detv = detv * m[c][c] % 3;
            std::uint8_t inv = m[c][c];  // 1 and 2 are self-inverse mod 3
            for (std::size_t i = c + 1; i < k; ++i) {
                std::uint8_t f = static_cast<std::uint8_t>((m[i][c] * inv) % 3);
                if (!f) continue;
                for (std::size_t j = c; j < k; ++j)
                    m[i][j] = static_cast<std::uint8_t>((m[i][j] + (3 - f) * m[c][j]) % 3);
            }
        }
        return Int(((detv % 3) + 3) % 3);
    }

private:
    std::size_t rank_;
    IMat gram_;
    IVec orders_;
    Int order_ = 1;
    std::vector<QVec> gens_;       // lattice coordinates
    std::vector<QVec> dual_gens_;  // dual coordinates
    QMat gram_q_;                  // rational pairings of generators
    IMat p_;
    IVec smith_d_;
};

inline DiscriminantForm discriminant_form(const IntegerLattice& l) { return DiscriminantForm(l); }

struct ThreeElementary {
    bool yes;
    std::size_t length;  // valid only when yes
};

inline ThreeElementary is_3elementary(const DiscriminantForm& d) {
    if (!d.is_3elementary()) return {false, 0};
    return {true, d.length()};
}

/// Full orthogonal group of a 3-elementary discriminant form: the reflection
/// set closed under products, with -1 adjoined when the reflections alone
/// miss it. Elements come back sorted (lexicographic on flattened entries).
struct FiniteOrthogonalGroup {
    std::vector<std::uint64_t> element_codes;  // packed GF(3) matrices, sorted
    std::size_t dim = 0;
    Int order = 0;

    f3::Matrix element(std::size_t i) const { return f3::decode(element_codes[i], dim); }
};

inline FiniteOrthogonalGroup orthogonal_group(const DiscriminantForm& d, std::size_t max_length = 5) {
    auto te = is_3elementary(d);
    EISK3_REQUIRE(te.yes, "orthogonal_group: form is not 3-elementary");
    if (d.is_trivial()) return FiniteOrthogonalGroup{{}, 0, 1};
    EISK3_REQUIRE(te.length <= max_length, "orthogonal_group: enumeration budget exceeded");
    auto space = d.f3_space();
    std::vector<f3::Matrix> gens;
    for (const auto& v : space.nonisotropic_vectors()) gens.push_back(space.reflection(v));
    auto codes = f3::closure(space.dim(), gens, std::size_t(1) << 22);
    auto neg = f3::encode(f3::neg_identity(space.dim()));
    if (!std::binary_search(codes.begin(), codes.end(), neg)) {
        gens.push_back(f3::neg_identity(space.dim()));
        codes = f3::closure(space.dim(), gens, std::size_t(1) << 22);
    }
    FiniteOrthogonalGroup g;
    g.dim = space.dim();
    g.element_codes = std::move(codes);
    g.order = Int(g.element_codes.size());
    EISK3_REQUIRE(g.order == f3::expected_order(space),
                  "orthogonal_group: enumerated order disagrees with the classical formula");
    return g;
}

/// |O(A)| from the classical order formulas (no enumeration).
inline Int orthogonal_group_order(const DiscriminantForm& d) {
    if (d.is_trivial()) return 1;
    EISK3_REQUIRE(d.is_3elementary(), "orthogonal_group_order: form is not 3-elementary");
    return f3::expected_order(d.f3_space());
}

/// Action of an isometry g of L on the canonical generators of A_L (3-elementary).
inline f3::Matrix induced_map_on_disc(const IntegerLattice& l, const IMat& g) {
    EISK3_REQUIRE(g.rows() == l.rank() && g.cols() == l.rank(), "induced_map_on_disc: size mismatch");
    EISK3_REQUIRE(g.transposed() * l.gram() * g == l.gram(), "induced_map_on_disc: g is not an isometry");
    DiscriminantForm d(l);
    EISK3_REQUIRE(d.is_3elementary(), "induced_map_on_disc: discriminant not 3-elementary");
    std::size_t k = d.length();
    f3::Matrix m(k, f3::Vec(k, 0));
    QMat gq = to_rational(g);
    for (std::size_t j = 0; j < k; ++j) {
        IVec coords = d.class_coordinates(gq.apply(d.generators()[j]));
        for (std::size_t i = 0; i < k; ++i)
            m[i][j] = f3::norm3(static_cast<long long>(coords[i]));
    }
    return m;
}

/// Genus comparison as used here: equal signatures plus isomorphic discriminant
/// forms. For 3-elementary forms the isomorphism class is (length, discriminant
/// class of the GF(3) form); trivial groups always match; small mixed-torsion
/// groups fall back to comparing full q-value histograms.
inline bool genus_equal(const IntegerLattice& a, const IntegerLattice& b) {
    EISK3_REQUIRE(a.is_even() && b.is_even(), "genus_equal: lattices must be even");
    if (signature(a) != signature(b)) return false;
    DiscriminantForm da(a), db(b);
    if (da.orders() != db.orders()) return false;
    if (da.is_trivial()) return true;
    if (da.is_3elementary() && db.is_3elementary())
        return da.f3_det_class() == db.f3_det_class();
    EISK3_REQUIRE(da.order() <= 4096, "genus_equal: discriminant comparison budget exceeded");
    auto table = [](const DiscriminantForm& d) {
        std::map<Rat, std::size_t> hist;
        IVec cur(d.length(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == d.length()) {
                ++hist[d.q(cur)];
                return;
            }
            for (Int c = 0; c < d.orders()[i]; ++c) {
                cur[i] = c;
                rec(i + 1);
            }
        };
        rec(0);
        return hist;
    };
    return table(da) == table(db);
}

}  // namespace eisk3
