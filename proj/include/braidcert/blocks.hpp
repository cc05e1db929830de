// include/braidcert/blocks.hpp — block structures on strands: block
// crossings, cabling, tube words, block twists, block linkings, and the
// block-profile homomorphism.
//
// Blocks are consecutive strand intervals.  A braid preserving every block
// setwise induces a braid on the m "tubes"; cabling is a section of that
// collapse: it replaces each generator of B_m by the canonical block
// crossing.  The block profile counts signed crossings internal to each block
// and between each block pair (by initial strand labels), an additive
// invariant of block-preserving braids.

#pragma once

#include <string>
#include <vector>

#include "linking.hpp"
#include "word.hpp"

namespace braidcert {

struct BlockStructure {
    int strand_count = 1;
    std::vector<int> sizes;  // s_1..s_m, all >= 1, summing to strand_count

    int block_count() const { return static_cast<int>(sizes.size()); }

    // strands before block i (1-based block index)
    int offset(int i) const {
        int o = 0;
        for (int b = 1; b < i; ++b) o += sizes[static_cast<std::size_t>(b - 1)];
        return o;
    }
    int size_of(int i) const { return sizes[static_cast<std::size_t>(i - 1)]; }

    // block containing 1-based strand s
    int block_of(int s) const {
        int o = 0;
        for (int b = 1; b <= block_count(); ++b) {
            o += size_of(b);
            if (s <= o) return b;
        }
        throw error("strand out of range");
    }
};

inline BlockStructure make_blocks(std::vector<int> sizes) {
    if (sizes.empty()) throw error("block sizes must be nonempty");
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw error("block sizes must be >= 1");
        n += s;
    }
    return BlockStructure{n, std::move(sizes)};
}

inline BlockStructure uniform_blocks(int m, int s) {
    return make_blocks(std::vector<int>(static_cast<std::size_t>(m), s));
}

// True iff the permutation of u maps every block onto itself setwise.
inline bool blocks_preserved(const BraidWord& u, const BlockStructure& B) {
    if (u.strand_count != B.strand_count) throw error("strand count mismatch");
    Permutation p = permutation_of(u);
    for (int s = 1; s <= B.strand_count; ++s)
        if (B.block_of(p.image(s - 1) + 1) != B.block_of(s)) return false;
    return true;
}

namespace detail {

// Canonical word crossing the block of size p at position t with the block of
// size q at position t+1, for the current size sequence.  Positive: the
// rightmost strand of the left block moves first; exactly p*q letters, each
// cross pair crossing once and no internal crossings.  Negative: the inverse
// move on the same (p, q) arrangement, i.e. the inverse of the positive
// crossing of the swapped sizes (q, p) -- each cross pair crosses once
// negatively and the interior order is again preserved.
inline void append_crossing(std::vector<int>& letters, const std::vector<int>& cur, int t, int sign) {
    const int m = static_cast<int>(cur.size());
    if (t < 1 || t >= m) throw error("block crossing index out of range");
    int o = 0;
    for (int b = 0; b < t - 1; ++b) o += cur[static_cast<std::size_t>(b)];
    int p = cur[static_cast<std::size_t>(t - 1)];
    int q = cur[static_cast<std::size_t>(t)];
    if (sign < 0) std::swap(p, q);
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(p * q));
    for (int i = 0; i < p; ++i)
        for (int j = o + p - i; j <= o + p - i + q - 1; ++j) w.push_back(j);
    if (sign >= 0) {
        letters.insert(letters.end(), w.begin(), w.end());
    } else {
        for (auto it = w.rbegin(); it != w.rend(); ++it) letters.push_back(-*it);
    }
}

}  // namespace detail

inline BraidWord block_crossing(int t, const BlockStructure& B, int sign = +1) {
    BraidWord w{B.strand_count, {}};
    detail::append_crossing(w.letters, B.sizes, t, sign);
    return w;
}

// Cable of a braid on m strands with uniform block size s: each letter
// sigma_t^{+-} becomes the corresponding block crossing on m*s strands.
inline BraidWord cable(const BraidWord& gamma, int s) {
    if (s < 1) throw error("cable: block size must be >= 1");
    const int m = gamma.strand_count;
    BlockStructure B = uniform_blocks(m, s);
    BraidWord w{B.strand_count, {}};
    for (int g : gamma.letters) detail::append_crossing(w.letters, B.sizes, g < 0 ? -g : g, g);
    return w;
}

// Structured words on tubes: interleaved interior braids and block crossings.
// Token indices refer to current block positions (crossings swap the blocks,
// and their sizes, in place).
struct TubeToken {
    enum class Kind { Interior, Cross };
    Kind kind;
    int index = 0;  // Interior: block position 1..m; Cross: adjacent position 1..m-1
    int sign = +1;  // Cross only
    BraidWord word;  // Interior only; strand_count must equal the block's current size

    static TubeToken cross(int t, int sign) { return TubeToken{Kind::Cross, t, sign, {}}; }
    static TubeToken interior(int i, BraidWord w) {
        return TubeToken{Kind::Interior, i, +1, std::move(w)};
    }
};

using TubeWord = std::vector<TubeToken>;

// Collapse map: drop interiors, send Cross(t, s) to sigma_t^s on m strands.
inline BraidWord tube_projection(const TubeWord& w, const BlockStructure& B) {
    const int m = B.block_count();
    BraidWord out{m, {}};
    for (const auto& tok : w) {
        if (tok.kind == TubeToken::Kind::Cross) {
            if (tok.index < 1 || tok.index >= m) throw error("tube word: cross index out of range");
            out.letters.push_back(tok.sign >= 0 ? tok.index : -tok.index);
        } else {
            if (tok.index < 1 || tok.index > m) throw error("tube word: block index out of range");
        }
    }
    return out;
}

// Expand a tube word to a braid word on the underlying strands, tracking the
// block sizes through the crossings.
inline BraidWord tube_to_word(const TubeWord& w, const BlockStructure& B) {
    std::vector<int> cur = B.sizes;
    const int m = static_cast<int>(cur.size());
    BraidWord out{B.strand_count, {}};
    for (const auto& tok : w) {
        if (tok.kind == TubeToken::Kind::Cross) {
            detail::append_crossing(out.letters, cur, tok.index, tok.sign);
            std::swap(cur[static_cast<std::size_t>(tok.index - 1)], cur[static_cast<std::size_t>(tok.index)]);
        } else {
            if (tok.index < 1 || tok.index > m) throw error("tube word: block index out of range");
            int size = cur[static_cast<std::size_t>(tok.index - 1)];
            if (tok.word.strand_count != size)
                throw error("tube word: interior word does not match block size");
            int o = 0;
            for (int b = 0; b < tok.index - 1; ++b) o += cur[static_cast<std::size_t>(b)];
            for (int g : tok.word.letters) out.letters.push_back(g > 0 ? g + o : g - o);
        }
    }
    return out;
}

// Tube form of cable(): one Cross token per letter.
inline TubeWord cable_tube(const BraidWord& gamma) {
    TubeWord w;
    w.reserve(gamma.letters.size());
    for (int g : gamma.letters) w.push_back(TubeToken::cross(g < 0 ? -g : g, g < 0 ? -1 : +1));
    return w;
}

// Full twist on block i: ((sigma_a ... sigma_{a+s-2})^s) for block size s >= 2,
// empty for a singleton block.  Central in the block's braid subgroup.
inline BraidWord block_twist(int i, const BlockStructure& B) {
    if (i < 1 || i > B.block_count()) throw error("block index out of range");
    const int s = B.size_of(i);
    const int a = B.offset(i) + 1;
    BraidWord w{B.strand_count, {}};
    if (s < 2) return w;
    for (int rep = 0; rep < s; ++rep)
        for (int g = a; g <= a + s - 2; ++g) w.letters.push_back(g);
    return w;
}

// Block analogue of the pure generator A_{j,k}: bring block k next to block j
// by positive crossings, cross the pair twice, and undo the moves.  Trivial
// block permutation; linking 1 on every strand pair between blocks j and k,
// 0 elsewhere.
inline BraidWord block_linking(int j, int k, const BlockStructure& B) {
    const int m = B.block_count();
    if (!(1 <= j && j < k && k <= m)) throw error("block_linking: need 1 <= j < k <= m");
    std::vector<int> cur = B.sizes;
    BraidWord w{B.strand_count, {}};
    auto move = [&](int t, int sign) {
        detail::append_crossing(w.letters, cur, t, sign);
        std::swap(cur[static_cast<std::size_t>(t - 1)], cur[static_cast<std::size_t>(t)]);
    };
    for (int t = k - 1; t > j; --t) move(t, +1);
    move(j, +1);
    move(j, +1);
    for (int t = j + 1; t < k; ++t) move(t, -1);
    return w;
}

// Signed internal and cross crossing counts of a block-preserving braid, by
// initial strand labels.  Additive under composition.
struct BlockProfile {
    int block_count = 1;
    std::vector<long long> internal_counts;  // Theta_1..Theta_m
    std::vector<long long> cross_counts;     // X_{jk}, lexicographic pair order

    long long internal(int i) const { return internal_counts[static_cast<std::size_t>(i - 1)]; }
    long long cross(int j, int k) const {
        return cross_counts[static_cast<std::size_t>(pair_index(j, k, block_count))];
    }
    // Theta_1..Theta_m then X_{jk} in lexicographic order; rows of the rank matrix.
    std::vector<long long> as_vector() const {
        std::vector<long long> v = internal_counts;
        v.insert(v.end(), cross_counts.begin(), cross_counts.end());
        return v;
    }
    friend bool operator==(const BlockProfile& a, const BlockProfile& b) {
        return a.block_count == b.block_count && a.internal_counts == b.internal_counts &&
               a.cross_counts == b.cross_counts;
    }
};

inline BlockProfile block_profile(const BraidWord& u, const BlockStructure& B) {
    if (!blocks_preserved(u, B)) throw error("word does not preserve the block structure");
    const int n = B.strand_count;
    const int m = B.block_count();
    BlockProfile p{m, std::vector<long long>(static_cast<std::size_t>(m), 0),
                   std::vector<long long>(static_cast<std::size_t>(m * (m - 1) / 2), 0)};
    std::vector<int> occupant(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) occupant[static_cast<std::size_t>(q)] = q + 1;
    for (int g : u.letters) {
        int i = (g < 0 ? -g : g) - 1;
        int s = occupant[static_cast<std::size_t>(i)];
        int t = occupant[static_cast<std::size_t>(i + 1)];
        int bs = B.block_of(s), bt = B.block_of(t);
        int sign = g > 0 ? 1 : -1;
        if (bs == bt)
            p.internal_counts[static_cast<std::size_t>(bs - 1)] += sign;
        else
            p.cross_counts[static_cast<std::size_t>(pair_index(bs < bt ? bs : bt, bs < bt ? bt : bs, m))] += sign;
        std::swap(occupant[static_cast<std::size_t>(i)], occupant[static_cast<std::size_t>(i + 1)]);
    }
    return p;
}

}  // namespace braidcert
