#pragma once

#include "eisk3/discriminant.hpp"
#include "eisk3/eisenstein.hpp"
#include "eisk3/lattice.hpp"

#include <string>
#include <vector>

namespace eisk3 {

/// Fixed-locus invariants attached to (r,a):
/// g = (22-r-2a)/4, k = (2+r-2a)/4, n = (r-2)/2.
/// The single type (8,7) is valid with k = -1 (three isolated points, no curve).
struct InvariantTuple {
    long long r = 0, a = 0, g = 0, k = 0, n = 0;
    bool valid = false;
    bool exceptional = false;  // the (8,7) case

    bool operator==(const InvariantTuple&) const = default;
};

inline InvariantTuple invariants_from_ra(long long r, long long a) {
    InvariantTuple t;
    t.r = r;
    t.a = a;
    long long gn = 22 - r - 2 * a, kn = 2 + r - 2 * a;
    if (gn % 4 != 0 || kn % 4 != 0 || (r - 2) % 2 != 0) return t;  // invalid
    t.g = gn / 4;
    t.k = kn / 4;
    t.n = (r - 2) / 2;
    if (t.g < 0 || t.n < 0) return t;
    if (t.k < 0) {
        if (r == 8 && a == 7 && t.k == -1) {
            t.valid = t.exceptional = true;
        }
        return t;
    }
    t.valid = true;
    return t;
}

enum class Rationality { rational, unirational_only, external_rational };

inline const char* rationality_name(Rationality r) {
    switch (r) {
        case Rationality::rational: return "rational";
        case Rationality::unirational_only: return "unirational-only";
        default: return "external-rational";
    }
}

/// One of the twenty-four deformation types, carrying the rank-(22-r)
/// Eisenstein lattice of signature (2, 20-r) with its order-3 structure.
struct EisensteinTypeEntry {
    InvariantTuple tuple;
    std::string lattice_label;
    EisensteinStructure structure;
    Rationality rationality;
};

namespace detail {

inline EisensteinStructure family_structure(long long g, long long a) {
    std::vector<EisensteinStructure> parts;
    auto a2 = standard_structure_A2();
    auto a2n = standard_structure_A2_neg();
    auto uu = standard_structure_UU();
    auto e8 = standard_structure_E8();
    switch (g) {
        case 0:  // A2(-1) + A2^(a-1)
            parts.push_back(a2n);
            for (long long i = 1; i < a; ++i) parts.push_back(a2);
            break;
        case 1:  // U^2 + A2^a
            parts.push_back(uu);
            for (long long i = 0; i < a; ++i) parts.push_back(a2);
            break;
        case 2:  // A2(-1) + A2^(a-1) + E8
            parts.push_back(a2n);
            for (long long i = 1; i < a; ++i) parts.push_back(a2);
            parts.push_back(e8);
            break;
        case 3:  // U^2 + A2^a + E8
            parts.push_back(uu);
            for (long long i = 0; i < a; ++i) parts.push_back(a2);
            parts.push_back(e8);
            break;
        case 4:  // A2(-1) + A2^(a-1) + E8^2
            parts.push_back(a2n);
            for (long long i = 1; i < a; ++i) parts.push_back(a2);
            parts.push_back(e8);
            parts.push_back(e8);
            break;
        case 5:  // U^2 + E8^2
            parts.push_back(uu);
            parts.push_back(e8);
            parts.push_back(e8);
            break;
        default:
            throw domain_error("classification: genus out of range");
    }
    return direct_sum(parts);
}

inline std::string family_label(long long g, long long a) {
    auto pow_label = [](const std::string& s, long long k) -> std::string {
        if (k == 0) return "";
        if (k == 1) return "+" + s;
        return "+" + s + "^" + std::to_string(k);
    };
    std::string s;
    switch (g) {
        case 0: s = "A2(-1)" + pow_label("A2", a - 1); break;
        case 1: s = "U^2" + pow_label("A2", a); break;
        case 2: s = "A2(-1)" + pow_label("A2", a - 1) + "+E8"; break;
        case 3: s = "U^2" + pow_label("A2", a) + "+E8"; break;
        case 4: s = "A2(-1)" + pow_label("A2", a - 1) + "+E8^2"; break;
        case 5: s = "U^2+E8^2"; break;
    }
    return s;
}

}  // namespace detail

inline Rationality rationality_status(long long r, long long a) {
    if ((r == 8 && a == 7) || (r == 10 && a == 6)) return Rationality::unirational_only;
    if ((r == 2 && a == 2) || (r == 12 && a == 5)) return Rationality::external_rational;
    return Rationality::rational;
}

/// The per-genus lattice families; exactly twenty-four types.
/// Ranges: g=0: a=1..7; g=1: a=0..5; g=2: a=1..4; g=3: a=0..3; g=4: a=1..2; g=5: a=0.
inline const std::vector<EisensteinTypeEntry>& enumerate_types() {
    static const std::vector<EisensteinTypeEntry> types = [] {
        std::vector<EisensteinTypeEntry> out;
        struct FamilyRange { long long g, a_lo, a_hi, base_rank; };
        // base_rank = rank of the family lattice at the listed a
        const FamilyRange fams[] = {
            {0, 1, 7, 0}, {1, 0, 5, 4}, {2, 1, 4, 8}, {3, 0, 3, 12}, {4, 1, 2, 16}, {5, 0, 0, 20},
        };
        for (const auto& f : fams) {
            for (long long a = f.a_lo; a <= f.a_hi; ++a) {
                EisensteinStructure s = detail::family_structure(f.g, a);
                long long e_rank = static_cast<long long>(s.lattice.rank());
                long long r = 22 - e_rank;
                EisensteinTypeEntry e{invariants_from_ra(r, a), detail::family_label(f.g, a),
                                      std::move(s), rationality_status(r, a)};
                EISK3_REQUIRE(e.tuple.valid, "classification: family produced invalid invariants");
                EISK3_REQUIRE(e.tuple.g == f.g, "classification: genus formula disagrees with family");
                out.push_back(std::move(e));
            }
        }
        // sort by (r, a) for stable presentation
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            return x.tuple.r != y.tuple.r ? x.tuple.r < y.tuple.r : x.tuple.a < y.tuple.a;
        });
        EISK3_REQUIRE(out.size() == 24, "classification: expected exactly 24 types");
        return out;
    }();
    return types;
}

inline const EisensteinTypeEntry& type_entry(long long r, long long a) {
    for (const auto& e : enumerate_types())
        if (e.tuple.r == r && e.tuple.a == a) return e;
    throw domain_error("classification: unknown type (" + std::to_string(r) + "," +
                       std::to_string(a) + ")");
}

inline bool is_known_type(long long r, long long a) {
    for (const auto& e : enumerate_types())
        if (e.tuple.r == r && e.tuple.a == a) return true;
    return false;
}

/// Scan r in [2,20], a in [0,11]: tuples with integral nonnegative (g,k,n)
/// (k = -1 admitted only at (8,7)) that are realizable within the six
/// families; there must be exactly the 24.
inline std::vector<std::pair<long long, long long>> scan_valid_tuples() {
    std::vector<std::pair<long long, long long>> out;
    for (long long r = 2; r <= 20; ++r)
        for (long long a = 0; a <= 11; ++a) {
            InvariantTuple t = invariants_from_ra(r, a);
            if (!t.valid) continue;
            if (is_known_type(r, a)) out.push_back({r, a});
        }
    return out;
}

}  // namespace eisk3
