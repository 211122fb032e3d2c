#pragma once

#include "eisk3/matrix.hpp"
#include "eisk3/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisk3 {

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    bool operator==(const Signature&) const = default;
};

/// Nondegenerate integral lattice given by its Gram matrix.
class IntegerLattice {
public:
    IntegerLattice(IMat gram, std::string label = "")
        : gram_(std::move(gram)), label_(std::move(label)) {
        EISK3_REQUIRE(gram_.rows() == gram_.cols(), "lattice: Gram matrix not square");
        EISK3_REQUIRE(gram_.is_symmetric(), "lattice: Gram matrix not symmetric");
        det_ = eisk3::det(gram_);
        EISK3_REQUIRE(det_ != 0, "lattice: degenerate Gram matrix");
    }

    const IMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    std::size_t rank() const { return gram_.rows(); }
    const Int& det() const { return det_; }

    bool is_even() const {
        for (std::size_t i = 0; i < rank(); ++i)
            if (gram_(i, i) % 2 != 0) return false;
        return true;
    }

    IntegerLattice relabeled(std::string label) const {
        IntegerLattice l = *this;
        l.label_ = std::move(label);
        return l;
    }

private:
    IMat gram_;
    std::string label_;
    Int det_;
};

namespace detail {

inline IMat neg_cartan(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    IMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
    for (auto [a, b] : edges) { g(a, b) += 1; g(b, a) += 1; }
    return g;
}

inline std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(char family, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    switch (family) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
            break;
        case 'D':
            EISK3_REQUIRE(n >= 4, "make_standard: D(m) needs m >= 4");
            for (std::size_t i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
            e.push_back({n - 3, n - 1});
            break;
        case 'E':
            EISK3_REQUIRE(n == 6 || n == 7 || n == 8, "make_standard: E(l) needs l in {6,7,8}");
            for (std::size_t i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
            e.push_back({2, n - 1});
            break;
        default:
            EISK3_REQUIRE(false, "make_standard: unknown root family");
    }
    return e;
}

}  // namespace detail

/// Standard building blocks. Root lattices are negative definite (diagonal -2).
inline IntegerLattice make_root_lattice(char family, std::size_t n) {
    EISK3_REQUIRE(n >= 1, "make_standard: invalid rank parameter");
    return IntegerLattice(detail::neg_cartan(n, detail::dynkin_edges(family, n)),
                          std::string(1, family) + std::to_string(n));
}

inline IntegerLattice make_U() { return IntegerLattice(IMat{{0, 1}, {1, 0}}, "U"); }

inline IntegerLattice make_diag(const IVec& ks) {
    EISK3_REQUIRE(!ks.empty(), "make_standard: diag() needs at least one entry");
    IMat g(ks.size(), ks.size());
    std::string label = "diag(";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        EISK3_REQUIRE(ks[i] != 0, "make_standard: diag entry must be nonzero");
        g(i, i) = ks[i];
        label += ks[i].str() + (i + 1 < ks.size() ? "," : "");
    }
    return IntegerLattice(g, label + ")");
}

inline IntegerLattice make_I(std::size_t p, std::size_t q) {
    EISK3_REQUIRE(p + q >= 1, "make_standard: I(p,q) needs positive rank");
    IMat g(p + q, p + q);
    for (std::size_t i = 0; i < p; ++i) g(i, i) = 1;
    for (std::size_t i = p; i < p + q; ++i) g(i, i) = -1;
    return IntegerLattice(g, "I(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

/// Standard lattices by identifier: A(n), D(m), E(6|7|8), U, diag(k1,..,kn),
/// I(p,q). Root lattices follow the negative-definite convention. Also accepts
/// the compact forms "A2", "E8" and a rescale suffix "(s)" as in "U(3)".
inline IntegerLattice make_standard(const std::string& name);

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string r;
    for (char c : s)
        if (c != ' ') r += c;
    return r;
}

}  // namespace detail

/// Direct sums of standard lattices: terms joined by '+', optional '^k'
/// powers, e.g. "U^2+A2^5+E8" or "U(3)+A2".
inline IntegerLattice parse_lattice_expr(const std::string& expr);

inline IntegerLattice rescale(const IntegerLattice& l, const Int& n) {
    EISK3_REQUIRE(n != 0, "rescale: scale factor must be nonzero");
    if (n == 1) return l;
    std::string label = l.label().empty() ? "" : l.label() + "(" + n.str() + ")";
    return IntegerLattice(l.gram().scaled(n), label);
}

inline IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts) {
    EISK3_REQUIRE(!parts.empty(), "direct_sum: empty list");
    std::vector<IMat> grams;
    std::string label;
    for (const auto& p : parts) {
        grams.push_back(p.gram());
        if (!label.empty()) label += "+";
        label += p.label();
    }
    return IntegerLattice(block_diag(grams), label);
}

/// Exact signature by rational congruence (Lagrange) diagonalization.
/// A zero diagonal with a nonzero off-diagonal pivot is handled by adding the
/// partner row/column first (splits hyperbolic blocks into +1/-1 pairs).
inline Signature signature(const QMat& gram) {
    EISK3_REQUIRE(gram.rows() == gram.cols() && gram.is_symmetric(), "signature: not symmetric");
    QMat a = gram;
    std::size_t n = a.rows();
    std::vector<bool> done(n, false);
    Signature sig;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) { p = i; break; }
        if (p == n) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && a(i, j) != 0) { bi = i; bj = j; break; }
            }
            EISK3_REQUIRE(bi != n, "signature: degenerate form");
            for (std::size_t k = 0; k < n; ++k) a(bi, k) += a(bj, k);
            for (std::size_t k = 0; k < n; ++k) a(k, bi) += a(k, bj);
            p = bi;
        }
        if (a(p, p) > 0) ++sig.positive; else ++sig.negative;
        Rat pv = a(p, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || done[i] || a(i, p) == 0) continue;
            Rat f = a(i, p) / pv;
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
            for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, p);
        }
        done[p] = true;
    }
    return sig;
}

inline Signature signature(const IntegerLattice& l) { return signature(to_rational(l.gram())); }

inline IntegerLattice make_standard(const std::string& name_raw) {
    std::string name = detail::strip_spaces(name_raw);
    EISK3_REQUIRE(!name.empty(), "make_standard: empty identifier");
    // rescale suffix "(s)" on anything but diag/I, e.g. U(3), A2(-1)
    auto paren = name.find('(');
    if (name.rfind("diag(", 0) == 0) {
        EISK3_REQUIRE(name.back() == ')', "make_standard: malformed diag(...)");
        std::string body = name.substr(5, name.size() - 6);
        IVec ks;
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            EISK3_REQUIRE(!tok.empty(), "make_standard: empty diag entry");
            ks.push_back(Int(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return make_diag(ks);
    }
    if (name.rfind("I(", 0) == 0) {
        EISK3_REQUIRE(name.back() == ')', "make_standard: malformed I(p,q)");
        std::string body = name.substr(2, name.size() - 3);
        auto comma = body.find(',');
        EISK3_REQUIRE(comma != std::string::npos, "make_standard: I(p,q) needs two parameters");
        return make_I(std::stoull(body.substr(0, comma)), std::stoull(body.substr(comma + 1)));
    }
    Int scale = 1;
    std::string head = name;
    if (paren != std::string::npos) {
        EISK3_REQUIRE(name.back() == ')', "make_standard: malformed identifier " + name_raw);
        std::string arg = name.substr(paren + 1, name.size() - paren - 2);
        head = name.substr(0, paren);
        // "A(2)" means the rank-2 root lattice; "A2(-1)" and "U(3)" rescale
        if (head.size() == 1 && (head[0] == 'A' || head[0] == 'D' || head[0] == 'E'))
            head += arg;
        else
            scale = Int(arg);
    }
    IntegerLattice base = [&]() -> IntegerLattice {
        if (head == "U") return make_U();
        EISK3_REQUIRE(head.size() >= 2 && (head[0] == 'A' || head[0] == 'D' || head[0] == 'E'),
                      "make_standard: unknown identifier " + name_raw);
        std::size_t n = std::stoull(head.substr(1));
        return make_root_lattice(head[0], n);
    }();
    return scale == 1 ? base : rescale(base, scale);
}

inline IntegerLattice parse_lattice_expr(const std::string& expr) {
    std::string s = detail::strip_spaces(expr);
    EISK3_REQUIRE(!s.empty(), "parse_lattice_expr: empty expression");
    std::vector<IntegerLattice> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        // split on '+' at depth 0
        std::size_t end = pos;
        int depth = 0;
        while (end < s.size() && (depth > 0 || s[end] != '+')) {
            if (s[end] == '(') ++depth;
            if (s[end] == ')') --depth;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        std::size_t power = 1;
        auto caret = term.rfind('^');
        if (caret != std::string::npos && term.find(')', caret) == std::string::npos) {
            power = std::stoull(term.substr(caret + 1));
            term = term.substr(0, caret);
        }
        EISK3_REQUIRE(power >= 1, "parse_lattice_expr: power must be positive");
        IntegerLattice l = make_standard(term);
        for (std::size_t i = 0; i < power; ++i) parts.push_back(l);
        pos = (end < s.size()) ? end + 1 : end;
    }
    return direct_sum(parts);
}

}  // namespace eisk3
