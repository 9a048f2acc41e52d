#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <stdexcept>
#include <string>

namespace latmon {

// All lattice arithmetic is exact. Gram determinants and Smith normal form
// intermediates overflow 64 bits already at rank ~16, so everything integer
// is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }
inline int sign(const Rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor division, valid for negative numerators.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// Residue of x modulo m (m > 0), normalized to [0, m).
inline Rat rat_mod(const Rat& x, const Rat& m) {
    Rat r = x - m * Rat(floor_rat(x / m));
    if (r < 0) r += m;   // guard against any rounding-direction surprise
    if (r >= m) r -= m;
    return r;
}

// Q/2Z residue, normalized to [0, 2).
inline Rat mod2z(const Rat& x) { return rat_mod(x, Rat(2)); }

// Q/Z residue, normalized to [0, 1).
inline Rat mod1z(const Rat& x) { return rat_mod(x, Rat(1)); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace latmon
