// include/braidcert/burau.hpp — reduced Burau representation of B_3.
//
// 2x2 matrices over Z[t, t^{-1}]; faithful for n = 3, so it serves as an
// exact triviality oracle on three strands.

#pragma once

#include <gmpxx.h>

#include <map>

#include "word.hpp"

namespace braidcert {

// Laurent polynomial in one variable with integer coefficients.
struct LaurentPoly {
    std::map<int, mpz_class> coeff;  // exponent -> coefficient, zeros erased

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(long v) {
        LaurentPoly p;
        if (v != 0) p.coeff[0] = v;
        return p;
    }
    static LaurentPoly monomial(long v, int e) {
        LaurentPoly p;
        if (v != 0) p.coeff[e] = v;
        return p;
    }

    bool is_zero() const { return coeff.empty(); }
    bool is_one() const { return coeff.size() == 1 && coeff.count(0) && coeff.at(0) == 1; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeff) {
            mpz_class& v = r.coeff[e];
            v += c;
            if (v == 0) r.coeff.erase(e);
        }
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeff)
            for (const auto& [eb, cb] : b.coeff) {
                mpz_class& v = r.coeff[ea + eb];
                v += ca * cb;
                if (v == 0) r.coeff.erase(ea + eb);
            }
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeff == b.coeff; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
};

struct BurauMatrix {
    LaurentPoly a, b, c, d;  // [[a, b], [c, d]]

    static BurauMatrix identity() {
        return {LaurentPoly::constant(1), LaurentPoly::zero(), LaurentPoly::zero(),
                LaurentPoly::constant(1)};
    }
    bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

    friend BurauMatrix operator*(const BurauMatrix& m, const BurauMatrix& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const BurauMatrix& m, const BurauMatrix& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

namespace detail {

// sigma_1 -> [[-t, 1], [0, 1]],  sigma_2 -> [[1, 0], [t, -t]].
inline BurauMatrix burau3_letter(int g) {
    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly nil = LaurentPoly::zero();
    switch (g) {
        case 1:
            return {LaurentPoly::monomial(-1, 1), one, nil, one};
        case -1:
            return {LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(1, -1), nil, one};
        case 2:
            return {one, nil, LaurentPoly::monomial(1, 1), LaurentPoly::monomial(-1, 1)};
        case -2:
            return {one, nil, one, LaurentPoly::monomial(-1, -1)};
        default:
            throw error("burau3: letter out of range");
    }
}

}  // namespace detail

inline BurauMatrix burau3(const BraidWord& u) {
    if (u.strand_count != 3) throw error("burau3 requires exactly 3 strands");
    BurauMatrix m = BurauMatrix::identity();
    for (int g : u.letters) m = m * detail::burau3_letter(g);
    return m;
}

}  // namespace braidcert
