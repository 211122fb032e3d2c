#pragma once

#include "eisk3/common.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace eisk3 {
namespace f3 {

// Small dense objects over GF(3); dimensions stay <= 6 in this project
// (packed encodings fit 64 bits up to dimension 8).

constexpr std::size_t kMaxDim = 8;

using Vec = std::vector<std::uint8_t>;
using Matrix = std::vector<Vec>;  // row-major, entries 0..2

inline std::uint8_t norm3(long long x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }

inline Matrix identity(std::size_t n) {
    Matrix m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix neg_identity(std::size_t n) {
    Matrix m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
    return m;
}

inline bool is_identity(const Matrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix r(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::uint8_t v = a[i][k];
            if (!v) continue;
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] = static_cast<std::uint8_t>((r[i][j] + v * b[k][j]) % 3);
        }
    return r;
}

inline Vec act(const Matrix& a, const Vec& v) {
    std::size_t n = a.size();
    Vec r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a[i][j] * v[j];
        r[i] = static_cast<std::uint8_t>(s % 3);
    }
    return r;
}

/// Inverse in GL(n,3) by Gauss-Jordan elimination.
inline Matrix inverse(const Matrix& m) {
    std::size_t n = m.size();
    Matrix a = m, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        EISK3_REQUIRE(p < n, "f3: singular matrix");
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        if (a[c][c] == 2) {  // scale by 2 (= 1/2 mod 3)
            for (std::size_t j = 0; j < n; ++j) {
                a[c][j] = static_cast<std::uint8_t>((a[c][j] * 2) % 3);
                inv[c][j] = static_cast<std::uint8_t>((inv[c][j] * 2) % 3);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            std::uint8_t f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = static_cast<std::uint8_t>((a[i][j] + (3 - f) * a[c][j]) % 3);
                inv[i][j] = static_cast<std::uint8_t>((inv[i][j] + (3 - f) * inv[c][j]) % 3);
            }
        }
    }
    return inv;
}

inline std::uint64_t encode(const Matrix& m) {
    std::uint64_t code = 0;
    for (const auto& row : m)
        for (auto x : row) code = code * 3 + x;
    return code;
}

inline Matrix decode(std::uint64_t code, std::size_t n) {
    Matrix m(n, Vec(n, 0));
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = n; j-- > 0;) {
            m[i][j] = static_cast<std::uint8_t>(code % 3);
            code /= 3;
        }
    return m;
}

inline std::uint32_t encode_vec(const Vec& v) {
    std::uint32_t code = 0;
    for (auto x : v) code = code * 3 + x;
    return code;
}

/// Nondegenerate quadratic space over GF(3), held as the matrix B of the
/// bilinear form; the quadratic form is q(x) = 2 * b(x,x), so b is the polar
/// form of q (q(x+y) - q(x) - q(y) = b(x,y) up to the factor fixed here).
class QuadSpace {
public:
    explicit QuadSpace(Matrix bilinear) : b_(std::move(bilinear)) {
        n_ = b_.size();
        EISK3_REQUIRE(n_ >= 1 && n_ <= kMaxDim, "f3: dimension out of range");
        for (const auto& row : b_) EISK3_REQUIRE(row.size() == n_, "f3: bilinear matrix not square");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                EISK3_REQUIRE(b_[i][j] == b_[j][i], "f3: bilinear matrix not symmetric");
    }

    std::size_t dim() const { return n_; }
    const Matrix& bilinear() const { return b_; }

    std::uint8_t b(const Vec& x, const Vec& y) const {
        unsigned s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < n_; ++j) s += x[i] * b_[i][j] * y[j];
        }
        return static_cast<std::uint8_t>(s % 3);
    }

    std::uint8_t q(const Vec& x) const { return static_cast<std::uint8_t>((2 * b(x, x)) % 3); }

    bool preserves(const Matrix& g) const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t c = a; c < n_; ++c) {
                unsigned s = 0;
                for (std::size_t i = 0; i < n_; ++i)
                    for (std::size_t j = 0; j < n_; ++j) s += g[i][a] * b_[i][j] * g[j][c];
                if (s % 3 != b_[a][c]) return false;
            }
        return true;
    }

    std::vector<Vec> all_vectors() const {
        std::vector<Vec> out;
        std::size_t total = 1;
        for (std::size_t i = 0; i < n_; ++i) total *= 3;
        out.reserve(total);
        Vec v(n_, 0);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t i = n_; i-- > 0;) { v[i] = static_cast<std::uint8_t>(c % 3); c /= 3; }
            out.push_back(v);
        }
        return out;
    }

    std::vector<Vec> nonisotropic_vectors() const {
        std::vector<Vec> out;
        for (auto& v : all_vectors()) {
            bool zero = std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
            if (!zero && q(v) != 0) out.push_back(v);
        }
        return out;
    }

    std::size_t isotropic_count() const {  // includes the zero vector
        std::size_t c = 0;
        for (auto& v : all_vectors())
            if (q(v) == 0) ++c;
        return c;
    }

    /// Reflection in a non-isotropic vector a. With polar(x,y) = q(x+y)-q(x)-q(y)
    /// this is x -> x - (polar(x,a)/q(a)) a, and polar coincides with b here.
    Matrix reflection(const Vec& a) const {
        std::uint8_t qa = q(a);
        EISK3_REQUIRE(qa != 0, "f3: reflection in isotropic vector");
        std::uint8_t inv = qa;  // 1 and 2 are self-inverse mod 3
        Matrix r(n_, Vec(n_, 0));
        for (std::size_t j = 0; j < n_; ++j) {
            Vec e(n_, 0);
            e[j] = 1;
            std::uint8_t c = static_cast<std::uint8_t>((b(e, a) * inv) % 3);
            for (std::size_t i = 0; i < n_; ++i)
                r[i][j] = static_cast<std::uint8_t>(((i == j ? 1u : 0u) + (3 - c) * a[i]) % 3);
        }
        return r;
    }

private:
    Matrix b_;
    std::size_t n_;
};

enum class Family { odd, plus, minus };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::odd: return "odd";
        case Family::plus: return "plus";
        default: return "minus";
    }
}

/// Order of GO(n,3) resp. GO^+/-(n,3) by the classical formulas at q = 3.
inline Int go_order(Family family, std::size_t n) {
    EISK3_REQUIRE(n >= 1, "go_order: dimension must be positive");
    if (family == Family::odd) {
        EISK3_REQUIRE(n % 2 == 1, "go_order: odd family needs odd dimension");
        std::size_t m = (n - 1) / 2;
        Int r = 2 * pow_int(3, static_cast<unsigned>(m * m));
        for (std::size_t i = 1; i <= m; ++i) r *= pow_int(3, static_cast<unsigned>(2 * i)) - 1;
        return r;
    }
    EISK3_REQUIRE(n % 2 == 0, "go_order: plus/minus family needs even dimension");
    std::size_t m = n / 2;
    Int eps = (family == Family::plus) ? 1 : -1;
    Int r = 2 * pow_int(3, static_cast<unsigned>(m * (m - 1)));
    r *= pow_int(3, static_cast<unsigned>(m)) - eps;
    for (std::size_t i = 1; i + 1 <= m; ++i) r *= pow_int(3, static_cast<unsigned>(2 * i)) - 1;
    return r;
}

/// Type of a nondegenerate even-dimensional space by counting isotropic
/// vectors (the plus type has more).
inline Family detect_family(const QuadSpace& s) {
    std::size_t n = s.dim();
    if (n % 2 == 1) return Family::odd;
    std::size_t m = n / 2;
    std::size_t base = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) base *= 3;  // 3^(n-1)
    std::size_t shift = 1;
    for (std::size_t i = 0; i + 1 < m; ++i) shift *= 3;  // 3^(m-1)
    std::size_t c = s.isotropic_count();
    if (c == base + 2 * shift) return Family::plus;
    if (c == base - 2 * shift) return Family::minus;
    throw domain_error("f3: isotropic count matches neither type (degenerate form?)");
}

inline Int expected_order(const QuadSpace& s) { return go_order(detect_family(s), s.dim()); }

/// Full closure of a generating set under products; returns the canonical
/// (lexicographic on flattened entries) element list as packed codes.
inline std::vector<std::uint64_t> closure(std::size_t dim, const std::vector<Matrix>& gens,
                                          std::size_t budget = 1u << 21) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Matrix> frontier;
    auto push = [&](const Matrix& m) {
        if (seen.insert(encode(m)).second) frontier.push_back(m);
    };
    push(identity(dim));
    for (const auto& g : gens) push(g);
    std::size_t head = 0;
    while (head < frontier.size()) {
        EISK3_REQUIRE(seen.size() <= budget, "f3: enumeration budget exceeded");
        Matrix cur = frontier[head++];
        for (const auto& g : gens) push(mul(cur, g));
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Group order via a deterministic Schreier-Sims chain with base e_1,...,e_n
/// (pointwise stabilizer of the full base is trivial for matrix groups).
/// Used where only the order is needed; handles orders around 10^7 quickly.
class SchreierSims {
public:
    SchreierSims(std::size_t dim, const std::vector<Matrix>& gens) : n_(dim), levels_(dim) {
        for (std::size_t i = 0; i < n_; ++i) {
            Vec e(n_, 0);
            e[i] = 1;
            base_.push_back(e);
        }
        for (const auto& g : gens)
            if (!is_identity(g)) add_at(g, 0);
        for (std::size_t i = n_; i-- > 0;) complete_level(i);
    }

    Int order() const {
        Int o = 1;
        for (const auto& lv : levels_) o *= Int(std::max<std::size_t>(lv.orbit.size(), 1));
        return o;
    }

private:
    struct Level {
        std::vector<Matrix> gens;
        std::unordered_set<std::uint64_t> gen_codes;
        std::unordered_map<std::uint32_t, Matrix> orbit;  // point -> transversal rep
        bool dirty = true;
    };

    // g must fix base points 0..level-1
    void add_at(const Matrix& g, std::size_t level) {
        for (std::size_t j = level; j < n_; ++j) {
            if (levels_[j].gen_codes.insert(encode(g)).second) {
                levels_[j].gens.push_back(g);
                levels_[j].dirty = true;
            }
            if (act(g, base_[j]) != base_[j]) break;  // belongs to levels <= j only
        }
    }

    void complete_level(std::size_t i) {
        auto& lv = levels_[i];
        while (lv.dirty) {
            lv.dirty = false;
            // orbit of b_i with transversal
            lv.orbit.clear();
            std::vector<std::pair<Vec, Matrix>> frontier;
            lv.orbit[encode_vec(base_[i])] = identity(n_);
            frontier.push_back({base_[i], identity(n_)});
            std::size_t head = 0;
            while (head < frontier.size()) {
                auto [pt, rep] = frontier[head++];
                for (const auto& g : lv.gens) {
                    Vec img = act(g, pt);
                    auto code = encode_vec(img);
                    if (!lv.orbit.count(code)) {
                        Matrix moved = mul(g, rep);
                        lv.orbit[code] = moved;
                        frontier.push_back({img, moved});
                    }
                }
            }
            // Schreier generators must sift to identity through deeper levels
            for (const auto& [ptcode, rep] : lv.orbit) {
                Vec pt = point_of(ptcode);
                for (const auto& g : lv.gens) {
                    Vec img = act(g, pt);
                    const Matrix& rep2 = lv.orbit.at(encode_vec(img));
                    Matrix s = mul(inverse(rep2), mul(g, rep));
                    if (is_identity(s)) continue;
                    auto [h, lev] = sift(s, i + 1);
                    if (!is_identity(h)) {
                        add_at(h, i + 1);
                        for (std::size_t j = lev + 1; j-- > i + 1;) complete_level(j);
                    }
                }
                if (lv.dirty) break;
            }
        }
    }

    std::pair<Matrix, std::size_t> sift(Matrix g, std::size_t from) const {
        for (std::size_t i = from; i < n_; ++i) {
            Vec img = act(g, base_[i]);
            auto it = levels_[i].orbit.find(encode_vec(img));
            if (it == levels_[i].orbit.end()) return {g, i};
            g = mul(inverse(it->second), g);
        }
        EISK3_REQUIRE(is_identity(g), "f3: sift residue fixing the whole base");
        return {identity(n_), n_};
    }

    Vec point_of(std::uint32_t code) const {
        Vec v(n_, 0);
        for (std::size_t i = n_; i-- > 0;) {
            v[i] = static_cast<std::uint8_t>(code % 3);
            code /= 3;
        }
        return v;
    }

    std::size_t n_;
    std::vector<Vec> base_;
    std::vector<Level> levels_;
};

inline Int group_order(std::size_t dim, const std::vector<Matrix>& gens) {
    return SchreierSims(dim, gens).order();
}

/// Order of the subgroup of O(q) generated by all reflections together with -1.
inline Int reflection_group_order(const QuadSpace& s) {
    std::vector<Matrix> gens;
    for (const auto& v : s.nonisotropic_vectors()) gens.push_back(s.reflection(v));
    gens.push_back(neg_identity(s.dim()));
    return group_order(s.dim(), gens);
}

}  // namespace f3
}  // namespace eisk3
