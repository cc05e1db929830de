// include/braidcert/dynnikov.hpp — piecewise-linear coordinate action of B_n
// on integral curve coordinates, and the triviality test built on it.
//
// The state is a vector (x_1, y_1, ..., x_n, y_n) in Z^{2n}, one coordinate
// pair per puncture.  sigma_i acts only on (x_i, y_i, x_{i+1}, y_{i+1}), by
//
//     z    = x_i - x_{i+1} - min(y_i, 0) + max(y_{i+1}, 0)
//     x_i'     = x_i + max(y_i, 0) + max(max(y_{i+1}, 0) - z, 0)
//     x_{i+1}' = x_{i+1} + min(y_{i+1}, 0) + min(min(y_i, 0) + z, 0)
//     y_i'     = y_{i+1} - max(z, 0)
//     y_{i+1}' = y_i     + max(z, 0)
//
// and sigma_i^{-1} acts by the conjugate of this map under negating every x
// coordinate (the top-bottom mirror of the disc).  These update rules satisfy
// the braid relations as maps on all of Z^{2n}, and a braid word is trivial
// iff it fixes the base state (0, 1, 0, 1, ..., 0, 1).  Coordinate entries
// grow exponentially in word length, so all arithmetic is exact big-integer.

#pragma once

#include <gmpxx.h>

#include <vector>

#include "word.hpp"

namespace braidcert {

using BigInt = mpz_class;

struct CurveCoordinates {
    int strand_count = 1;
    std::vector<BigInt> coords;  // x_1, y_1, ..., x_n, y_n

    friend bool operator==(const CurveCoordinates& a, const CurveCoordinates& b) {
        return a.strand_count == b.strand_count && a.coords == b.coords;
    }
    friend bool operator!=(const CurveCoordinates& a, const CurveCoordinates& b) { return !(a == b); }
};

inline CurveCoordinates base_coordinates(int n) {
    if (n < 1) throw error("strand count must be >= 1");
    CurveCoordinates c{n, std::vector<BigInt>(static_cast<std::size_t>(2 * n))};
    for (int k = 0; k < n; ++k) {
        c.coords[static_cast<std::size_t>(2 * k)] = 0;
        c.coords[static_cast<std::size_t>(2 * k + 1)] = 1;
    }
    return c;
}

namespace detail {

inline BigInt pos(const BigInt& v) { return v > 0 ? v : BigInt(0); }
inline BigInt neg(const BigInt& v) { return v < 0 ? v : BigInt(0); }

}  // namespace detail

// Apply one letter in place.
inline void apply_letter(CurveCoordinates& c, int g) {
    validate_letter(g, c.strand_count);
    const int i = g < 0 ? -g : g;
    const std::size_t k = static_cast<std::size_t>(2 * (i - 1));
    BigInt& x1 = c.coords[k];
    BigInt& y1 = c.coords[k + 1];
    BigInt& x2 = c.coords[k + 2];
    BigInt& y2 = c.coords[k + 3];
    using detail::neg;
    using detail::pos;
    if (g > 0) {
        BigInt z = x1 - x2 - neg(y1) + pos(y2);
        BigInt zp = pos(z);
        BigInt nx1 = x1 + pos(y1) + pos(pos(y2) - z);
        BigInt nx2 = x2 + neg(y2) + neg(neg(y1) + z);
        BigInt ny1 = y2 - zp;
        BigInt ny2 = y1 + zp;
        x1 = nx1, y1 = ny1, x2 = nx2, y2 = ny2;
    } else {
        BigInt z = x2 - x1 - neg(y1) + pos(y2);
        BigInt zp = pos(z);
        BigInt nx1 = x1 - pos(y1) - pos(pos(y2) - z);
        BigInt nx2 = x2 - neg(y2) - neg(neg(y1) + z);
        BigInt ny1 = y2 - zp;
        BigInt ny2 = y1 + zp;
        x1 = nx1, y1 = ny1, x2 = nx2, y2 = ny2;
    }
}

inline CurveCoordinates act(const BraidWord& u, CurveCoordinates c) {
    if (u.strand_count != c.strand_count) throw error("strand count mismatch");
    for (int g : u.letters) apply_letter(c, g);
    return c;
}

// Triviality via the coordinate action.  The permutation and exponent-sum
// necessary conditions are checked first; they reject most nontrivial words
// without touching big integers.
inline bool is_identity_dynnikov(const BraidWord& u) {
    if (exponent_sum(u) != 0) return false;
    if (!permutation_of(u).is_identity()) return false;
    CurveCoordinates base = base_coordinates(u.strand_count);
    return act(u, base) == base;
}

}  // namespace braidcert
