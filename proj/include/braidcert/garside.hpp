// include/braidcert/garside.hpp — Garside left normal form for braid words.
//
// Conventions used throughout this file:
//   * Words compose left-to-right; permutations compose the same way
//     (see word.hpp), with img[s] = end position of the strand starting at s.
//   * A simple element (permutation braid) is the positive braid in which
//     strands s < t cross exactly once when img[s] > img[t]; it is determined
//     by its permutation, and we represent it by that permutation.
//   * Starting set F(x) = { i : x = sigma_i * y with y positive }
//                       = { i : img[i-1] > img[i] }          (descents of pi)
//     Finishing set S(x) = { i : x = y * sigma_i with y positive }
//                        = descents of pi^{-1}.
//   * A pair of simple factors (f, g) is left-weighted when S(f) contains
//     F(g).  The normal form Delta^p f_1 ... f_k has every adjacent pair
//     left-weighted, no factor trivial, no factor equal to Delta.  Two words
//     represent the same braid iff their normal forms coincide; this is the
//     classical Epstein--Elrifai--Morton algorithm.

#pragma once

#include <string>
#include <vector>

#include "word.hpp"

namespace braidcert {

// Half-twist permutation: s |-> n-1-s.
inline Permutation delta_permutation(int n) {
    Permutation d(n);
    for (int s = 0; s < n; ++s) d.img[static_cast<std::size_t>(s)] = n - 1 - s;
    return d;
}

// Conjugate a simple factor by Delta: sigma_i -> sigma_{n-i}.
inline Permutation delta_flip(const Permutation& p) {
    int n = p.size();
    Permutation r(n);
    for (int s = 0; s < n; ++s) r.img[static_cast<std::size_t>(s)] = n - 1 - p.image(n - 1 - s);
    return r;
}

// Descents of pi: 1-based generator indices i with img[i-1] > img[i].
inline std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> d;
    for (int i = 1; i < p.size(); ++i)
        if (p.image(i - 1) > p.image(i)) d.push_back(i);
    return d;
}

inline std::vector<int> starting_set(const Permutation& p) { return descent_set(p); }
inline std::vector<int> finishing_set(const Permutation& p) { return descent_set(p.inverse()); }

struct GarsideNormalForm {
    int strand_count = 1;
    long long inf = 0;                  // power of Delta
    std::vector<Permutation> factors;   // simple factors, left-greedy

    friend bool operator==(const GarsideNormalForm& a, const GarsideNormalForm& b) {
        return a.strand_count == b.strand_count && a.inf == b.inf && a.factors == b.factors;
    }
    friend bool operator!=(const GarsideNormalForm& a, const GarsideNormalForm& b) { return !(a == b); }
};

namespace detail {

inline void erase_trivial_factors(std::vector<Permutation>& fs) {
    std::erase_if(fs, [](const Permutation& f) { return f.is_identity(); });
}

// Make every adjacent pair left-weighted by sliding prefix generators of the
// right factor into the left factor.  Quadratic in the factor count.
inline void left_weight_factors(int n, std::vector<Permutation>& fs) {
    erase_trivial_factors(fs);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j + 1 < fs.size(); ++j) {
            Permutation& f = fs[j];
            Permutation& g = fs[j + 1];
            while (true) {
                // find i in F(g) \ S(f)
                Permutation finv = f.inverse();
                int move = 0;
                for (int i = 1; i < n; ++i) {
                    bool in_Fg = g.image(i - 1) > g.image(i);
                    bool in_Sf = finv.image(i - 1) > finv.image(i);
                    if (in_Fg && !in_Sf) {
                        move = i;
                        break;
                    }
                }
                if (move == 0) break;
                Permutation t = transposition(n, move);
                f = compose(f, t);
                g = compose(t, g);
                changed = true;
                if (g.is_identity()) break;
            }
        }
        if (changed) erase_trivial_factors(fs);
    }
}

}  // namespace detail

inline GarsideNormalForm normal_form(const BraidWord& u) {
    const int n = u.strand_count;
    const Permutation id(n);
    const Permutation delta = delta_permutation(n);

    GarsideNormalForm nf;
    nf.strand_count = n;

    if (n == 1) return nf;

    // Rewrite as Delta^p * (simple factors).  A negative letter -i becomes
    // Delta^{-1} * r with r = Delta * sigma_i^{-1}; the Delta^{-1} is pushed to
    // the front, flipping every factor it passes.  Flips are deferred: a factor
    // created after c negative letters gets flipped once per later negative
    // letter, i.e. iff (total_neg - c) is odd.
    long long neg = 0;
    std::vector<Permutation> factors;
    std::vector<long long> born_at;  // negatives seen when the factor was created
    factors.reserve(u.letters.size());
    born_at.reserve(u.letters.size());

    for (int g : u.letters) {
        if (g > 0) {
            factors.push_back(transposition(n, g));
            born_at.push_back(neg);
        } else {
            ++neg;
            // r = Delta * sigma_i^{-1}: apply delta, then undo the crossing.
            factors.push_back(compose(delta, transposition(n, -g)));
            born_at.push_back(neg);
        }
    }
    nf.inf = -neg;
    for (std::size_t k = 0; k < factors.size(); ++k)
        if ((neg - born_at[k]) % 2 != 0) factors[k] = delta_flip(factors[k]);

    detail::left_weight_factors(n, factors);

    // Delta factors pile up at the front, trivial ones were removed.
    std::size_t lead = 0;
    while (lead < factors.size() && factors[lead] == delta) ++lead;
    nf.inf += static_cast<long long>(lead);
    nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(lead), factors.end());
    return nf;
}

// Canonical positive word for a permutation braid: repeatedly emit the
// smallest starting generator.
inline BraidWord simple_to_word(const Permutation& p, int n) {
    BraidWord w{n, {}};
    Permutation q = p;
    while (!q.is_identity()) {
        int i = 0;
        for (int k = 1; k < n; ++k)
            if (q.image(k - 1) > q.image(k)) {
                i = k;
                break;
            }
        w.letters.push_back(i);
        q = compose(transposition(n, i), q);
    }
    return w;
}

// Word for Delta_n: (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1} ... sigma_1).
inline BraidWord delta_word(int n) {
    BraidWord w{n, {}};
    for (int k = 1; k < n; ++k)
        for (int i = k; i >= 1; --i) w.letters.push_back(i);
    return w;
}

inline BraidWord normal_form_to_word(const GarsideNormalForm& nf) {
    const int n = nf.strand_count;
    BraidWord w{n, {}};
    BraidWord d = delta_word(n);
    if (nf.inf >= 0) {
        for (long long k = 0; k < nf.inf; ++k) w = compose(w, d);
    } else {
        BraidWord dinv = inverse(d);
        for (long long k = 0; k < -nf.inf; ++k) w = compose(w, dinv);
    }
    for (const auto& f : nf.factors) w = compose(w, simple_to_word(f, n));
    return w;
}

inline std::string to_string(const GarsideNormalForm& nf) {
    std::string s = "D^" + std::to_string(nf.inf);
    for (const auto& f : nf.factors) {
        s += " |";
        for (int i = 0; i < f.size(); ++i) s += ' ' + std::to_string(f.image(i) + 1);
    }
    return s;
}

inline bool is_identity_garside(const BraidWord& u) {
    GarsideNormalForm nf = normal_form(u);
    return nf.inf == 0 && nf.factors.empty();
}

inline bool equal_garside(const BraidWord& u, const BraidWord& v) {
    if (u.strand_count != v.strand_count) throw error("strand count mismatch");
    return normal_form(u) == normal_form(v);
}

}  // namespace braidcert
