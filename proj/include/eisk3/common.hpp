#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace eisk3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Domain error carrying the violated precondition/invariant by name.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

#define EISK3_REQUIRE(cond, msg)                        \
    do {                                                \
        if (!(cond)) throw ::eisk3::domain_error(msg);  \
    } while (0)

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

// Floor division and nonnegative remainder for cpp_int (cpp_int's % truncates).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

// Reduce a rational into [0, m) modulo the integer m (used for q mod 2Z, b mod Z).
inline Rat mod_rat(const Rat& x, const Int& m) {
    Int num = numerator(x), den = denominator(x);
    Int r = mod_floor(num, m * den);
    return Rat(r, den);
}

inline Int pow_int(Int base, unsigned e) {
    Int r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace eisk3
