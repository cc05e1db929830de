// include/braidcert/word.hpp — braid words in the Artin generators and strand permutations.

#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcert {

// Domain error: invalid words, indices out of range, mismatched strand counts.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A permutation of strand positions 0..size-1.  img[s] is the position where
// the strand starting at position s ends.  Composition is left-to-right:
// compose(p, q) applies p first, then q.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(int n) : img(static_cast<std::size_t>(n)) {
        for (int s = 0; s < n; ++s) img[static_cast<std::size_t>(s)] = s;
    }

    int size() const { return static_cast<int>(img.size()); }
    int image(int s) const { return img[static_cast<std::size_t>(s)]; }

    bool is_identity() const {
        for (int s = 0; s < size(); ++s)
            if (img[static_cast<std::size_t>(s)] != s) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation r(size());
        for (int s = 0; s < size(); ++s) r.img[static_cast<std::size_t>(img[static_cast<std::size_t>(s)])] = s;
        return r;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw error("permutation size mismatch");
    Permutation r(p.size());
    for (int s = 0; s < p.size(); ++s) r.img[static_cast<std::size_t>(s)] = q.image(p.image(s));
    return r;
}

// The transposition of positions i-1 and i (generator index i, 1-based).
inline Permutation transposition(int n, int i) {
    if (i < 1 || i >= n) throw error("transposition index out of range");
    Permutation t(n);
    std::swap(t.img[static_cast<std::size_t>(i - 1)], t.img[static_cast<std::size_t>(i)]);
    return t;
}

// A word in the Artin generators of B_n.  Letters are nonzero integers g with
// 1 <= |g| <= n-1; g > 0 encodes sigma_g, g < 0 encodes sigma_{|g|}^{-1}.
// Words are never auto-reduced; callers control normalization.
struct BraidWord {
    int strand_count = 1;
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
};

inline void validate_letter(int g, int n) {
    if (g == 0) throw error("letter 0 is not a generator");
    int a = g < 0 ? -g : g;
    if (a >= n) throw error("generator index " + std::to_string(a) + " out of range for " +
                            std::to_string(n) + " strands");
}

inline BraidWord make_word(int n, std::vector<int> letters) {
    if (n < 1) throw error("strand count must be >= 1");
    for (int g : letters) validate_letter(g, n);
    return BraidWord{n, std::move(letters)};
}

// Parse whitespace-separated signed decimal integers; the empty string is the
// identity word.
inline BraidWord parse_word(const std::string& text, int n) {
    if (n < 1) throw error("strand count must be >= 1");
    std::vector<int> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        int g = 0;
        try {
            g = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw error("malformed token '" + tok + "'");
        }
        if (pos != tok.size()) throw error("malformed token '" + tok + "'");
        validate_letter(g, n);
        letters.push_back(g);
    }
    return BraidWord{n, std::move(letters)};
}

inline std::string to_string(const BraidWord& u) {
    std::string s;
    for (std::size_t k = 0; k < u.letters.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(u.letters[k]);
    }
    return s;
}

inline BraidWord compose(const BraidWord& u, const BraidWord& v) {
    if (u.strand_count != v.strand_count) throw error("strand count mismatch");
    BraidWord w{u.strand_count, u.letters};
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

inline BraidWord inverse(const BraidWord& u) {
    BraidWord w{u.strand_count, {}};
    w.letters.reserve(u.letters.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

// Cancel adjacent pairs g, -g until none remain.
inline BraidWord free_reduce(const BraidWord& u) {
    BraidWord w{u.strand_count, {}};
    w.letters.reserve(u.letters.size());
    for (int g : u.letters) {
        if (!w.letters.empty() && w.letters.back() == -g)
            w.letters.pop_back();
        else
            w.letters.push_back(g);
    }
    return w;
}

// Image of u under B_n -> S_n, sigma_i |-> (i, i+1).
inline Permutation permutation_of(const BraidWord& u) {
    Permutation p(u.strand_count);
    for (int g : u.letters) {
        int i = (g < 0 ? -g : g) - 1;  // positions i, i+1 swap
        for (int s = 0; s < u.strand_count; ++s) {
            int& x = p.img[static_cast<std::size_t>(s)];
            if (x == i)
                x = i + 1;
            else if (x == i + 1)
                x = i;
        }
    }
    return p;
}

inline long long exponent_sum(const BraidWord& u) {
    long long e = 0;
    for (int g : u.letters) e += g > 0 ? 1 : -1;
    return e;
}

inline bool is_pure(const BraidWord& u) { return permutation_of(u).is_identity(); }

}  // namespace braidcert
