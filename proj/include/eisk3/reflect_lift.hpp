#pragma once

#include "eisk3/discriminant.hpp"
#include "eisk3/eisenstein.hpp"
#include "eisk3/f3.hpp"
#include "eisk3/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisk3 {

/// Odd unimodular frame: quadratic form -x0^2 + x1^2 + ... + xn^2 when minus=1
/// (coordinates x0..xn), or x1^2 + ... + xn^2 when minus=0 (coordinates x1..xn).
struct OddUnimodularFrame {
    std::size_t n;
    bool minus;

    OddUnimodularFrame(std::size_t n_, bool minus_) : n(n_), minus(minus_) {
        EISK3_REQUIRE(n >= 1, "frame: n must be positive");
        EISK3_REQUIRE(minus || n <= 3, "frame: definite case requires n <= 3");
    }

    std::size_t dim() const { return n + (minus ? 1 : 0); }

    IntegerLattice lattice() const {
        return minus ? make_I(n, 1).relabeled("<1>^" + std::to_string(n) + "+<-1>")
                     : make_I(n, 0).relabeled("<1>^" + std::to_string(n));
    }

    // Gram with the sign coordinate FIRST when minus=1 (matches the lift
    // algorithm's x0); make_I puts the +1 block first, so build directly.
    IMat gram() const {
        std::size_t d = dim();
        IMat g(d, d);
        if (minus) {
            g(0, 0) = -1;
            for (std::size_t i = 1; i < d; ++i) g(i, i) = 1;
        } else {
            for (std::size_t i = 0; i < d; ++i) g(i, i) = 1;
        }
        return g;
    }

    Int norm(const IVec& v) const {
        EISK3_REQUIRE(v.size() == dim(), "frame: vector size mismatch");
        Int s = 0;
        std::size_t start = 0;
        if (minus) {
            s -= v[0] * v[0];
            start = 1;
        }
        for (std::size_t i = start; i < v.size(); ++i) s += v[i] * v[i];
        return s;
    }

    f3::QuadSpace mod3_space() const {
        std::size_t d = dim();
        f3::Matrix m(d, f3::Vec(d, 0));
        // bilinear matrix B with q = 2*b(x,x): the form q0 = sum eps_i x_i^2
        // needs b(x,x) = 2*q0 (inverse of 2), i.e. B = diag(2*eps_i)
        for (std::size_t i = 0; i < d; ++i) {
            bool neg = minus && i == 0;
            m[i][i] = neg ? 1 : 2;  // 2*(-1) = -2 = 1 mod 3
        }
        return f3::QuadSpace(m);
    }
};

struct LiftedVector {
    IVec vector;
    bool doubled;  // true when the returned lift is congruent to 2y rather than y
};

/// Lift of a non-isotropic class y in L/3L to l in L with (l,l) in {+-1,+-2}
/// and l = y or 2y componentwise mod 3. Follows the constructive proof:
/// zero coordinates are dropped, nonzero ones take square-1 or square-4
/// representatives, and x0 = 3s or 3s+1 with s picked from the effective
/// count of nonzero coordinates.
inline LiftedVector lift_reflection_vector(const OddUnimodularFrame& frame, const f3::Vec& y) {
    std::size_t d = frame.dim();
    EISK3_REQUIRE(y.size() == d, "lift: class size mismatch");
    auto space = frame.mod3_space();
    EISK3_REQUIRE(space.q(y) != 0, "lift: isotropic class");

    if (!frame.minus) {
        // definite case, n <= 3: all value-1 representatives
        IVec l(d, Int(0));
        for (std::size_t i = 0; i < d; ++i) l[i] = (y[i] == 2) ? Int(-1) : Int(y[i]);
        return {l, false};
    }

    auto build = [&](const f3::Vec& target) -> std::optional<IVec> {
        // target[0] must be 0 or 1 here
        std::vector<std::size_t> nz;
        for (std::size_t i = 1; i < d; ++i)
            if (target[i] != 0) nz.push_back(i);
        long long k = static_cast<long long>(nz.size());
        IVec l(d, Int(0));
        long long ones, fours, x0;
        if (target[0] == 0) {
            long long k3 = k / 3;
            long long s = 0;
            if (k3 > 0) {
                s = 1;
                while (!(3 * s * s - 6 * s + 4 <= k3 && k3 < 3 * (s + 1) * (s + 1) - 6 * (s + 1) + 4)) ++s;
            }
            x0 = 3 * s;
            ones = k3 + k - 3 * s * s;
            fours = 3 * s * s - k3;
        } else {
            if (k == 0) {
                l[0] = 1;  // norm -1
                return l;
            }
            long long k3 = (k - 1) / 3;
            long long s = 0;
            if (k3 > 0) {
                s = 1;
                while (!(3 * s * s - 4 * s + 2 <= k3 && k3 < 3 * (s + 1) * (s + 1) - 4 * (s + 1) + 2)) ++s;
            }
            x0 = 3 * s + 1;
            ones = k3 + k - 3 * s * s - 2 * s;
            fours = 3 * s * s + 2 * s - k3;
        }
        if (ones < 0 || fours < 0 || ones + fours != k) return std::nullopt;
        l[0] = x0;
        for (long long idx = 0; idx < k; ++idx) {
            std::size_t i = nz[idx];
            bool one = idx < ones;
            if (target[i] == 1)
                l[i] = one ? Int(1) : Int(-2);
            else
                l[i] = one ? Int(-1) : Int(2);
        }
        return l;
    };

    f3::Vec target = y;
    bool doubled = false;
    if (y[0] == 2) {  // lift 2y instead; both define the same reflection
        doubled = true;
        for (auto& c : target) c = static_cast<std::uint8_t>((2 * c) % 3);
    }
    auto l = build(target);
    EISK3_REQUIRE(l.has_value(), "lift: allocation counts went negative (unexpected)");
    Int nm = frame.norm(*l);
    EISK3_REQUIRE(nm == 1 || nm == 2 || nm == -1 || nm == -2, "lift: norm escaped {+-1,+-2}");
    return {*l, doubled};
}

struct LiftRecord {
    f3::Vec cls;
    IVec lift;
    Int norm;
    bool doubled;
};

struct SurjectivityCertificate {
    bool pass = false;
    std::string detail;
    std::size_t classes_checked = 0;
    std::vector<LiftRecord> table;
    Int reflection_group_order = 0;
    Int full_group_order = 0;
};

/// Exhaustively lift every non-isotropic class of L/3L, then confirm that the
/// lifted reflections generate the full orthogonal group of L/3L.
inline SurjectivityCertificate check_reduction_surjectivity(const OddUnimodularFrame& frame,
                                                            std::size_t budget_n = 6) {
    EISK3_REQUIRE(frame.n <= budget_n, "check_reduction_surjectivity: budget exceeded");
    auto space = frame.mod3_space();
    SurjectivityCertificate cert;
    std::vector<f3::Matrix> reflections;
    for (const auto& y : space.nonisotropic_vectors()) {
        LiftedVector lv = lift_reflection_vector(frame, y);
        Int nm = frame.norm(lv.vector);
        ++cert.classes_checked;
        cert.table.push_back({y, lv.vector, nm, lv.doubled});
        if (!(nm == 1 || nm == 2 || nm == -1 || nm == -2)) {
            cert.detail = "counterexample: norm outside {+-1,+-2}";
            return cert;
        }
        const f3::Vec& target = y;
        bool cong_y = true, cong_2y = true;
        for (std::size_t i = 0; i < target.size(); ++i) {
            auto r = f3::norm3(static_cast<long long>(mod_floor(lv.vector[i], 3)));
            if (r != target[i]) cong_y = false;
            if (r != (2 * target[i]) % 3) cong_2y = false;
        }
        if (!cong_y && !cong_2y) {
            cert.detail = "counterexample: lift not congruent to y or 2y";
            return cert;
        }
        f3::Vec lmod(target.size());
        for (std::size_t i = 0; i < target.size(); ++i)
            lmod[i] = f3::norm3(static_cast<long long>(mod_floor(lv.vector[i], 3)));
        reflections.push_back(space.reflection(lmod));
    }
    reflections.push_back(f3::neg_identity(space.dim()));
    cert.reflection_group_order = f3::group_order(space.dim(), reflections);
    cert.full_group_order = f3::expected_order(space);
    if (cert.reflection_group_order != cert.full_group_order) {
        cert.detail = "lifted reflections generate a proper subgroup";
        return cert;
    }
    cert.pass = true;
    cert.detail = "all classes lift; reflections generate the full orthogonal group";
    return cert;
}

/// g tensor id_{A2} on L tensor A2, in the Gram G_L tensor G_{A2};
/// unitary for the structure id_L tensor rho.
inline IMat tensor_unitary_image(const OddUnimodularFrame& frame, const IMat& g) {
    std::size_t d = frame.dim();
    EISK3_REQUIRE(g.rows() == d && g.cols() == d, "tensor_unitary_image: size mismatch");
    EISK3_REQUIRE(g.transposed() * frame.gram() * g == frame.gram(),
                  "tensor_unitary_image: g is not an isometry of the frame");
    return kronecker(g, IMat::identity(2));
}

/// The Eisenstein lattice L tensor A2 with structure id tensor rho.
inline EisensteinStructure tensor_structure(const OddUnimodularFrame& frame) {
    IMat gram = kronecker(frame.gram(), make_root_lattice('A', 2).gram());
    IMat rho = kronecker(IMat::identity(frame.dim()), IMat{{0, -1}, {1, -1}});
    std::string label = frame.minus ? "A2(-1)+A2^" + std::to_string(frame.n)
                                    : "A2^" + std::to_string(frame.n);
    return EisensteinStructure(IntegerLattice(gram, label), rho);
}

/// Natural generators of A_{L tensor A2}: e_i tensor w with w the generator of
/// A_{A2}, in lattice coordinates of the tensor Gram.
inline std::vector<QVec> tensor_disc_basis(const OddUnimodularFrame& frame) {
    std::size_t d = frame.dim();
    // A_{A2} generator: first dual basis vector of A2, coords (-2/3, -1/3)
    std::vector<QVec> out;
    for (std::size_t i = 0; i < d; ++i) {
        QVec v(2 * d, Rat(0));
        v[2 * i] = Rat(-2, 3);
        v[2 * i + 1] = Rat(-1, 3);
        out.push_back(v);
    }
    return out;
}

/// Reflection of the frame lattice in an integral vector of norm +-1, +-2.
inline IMat frame_reflection(const OddUnimodularFrame& frame, const IVec& l) {
    Int nm = frame.norm(l);
    EISK3_REQUIRE(nm == 1 || nm == 2 || nm == -1 || nm == -2,
                  "frame_reflection: vector norm outside {+-1,+-2}");
    std::size_t d = frame.dim();
    IMat g = frame.gram();
    IMat r(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        IVec e(d, Int(0));
        e[j] = 1;
        Int two_xl = 2 * dot(e, g, l);
        EISK3_REQUIRE(two_xl % nm == 0, "frame_reflection: reflection not integral");
        Int c = two_xl / nm;
        for (std::size_t i = 0; i < d; ++i) r(i, j) = (i == j ? 1 : 0) - c * l[i];
    }
    return r;
}

}  // namespace eisk3
