// include/braidcert/linking.hpp — strand-pair linking numbers of pure braids.
//
// The linking matrix realizes the abelianization of the pure braid group onto
// Z^{n(n-1)/2}: entry {i, j} is half the signed count of crossings between the
// strands with *initial* labels i and j (labels are starting positions, at the
// bottom of the braid).  With that convention, conjugation transforms entries
// by lk(g u g^{-1})_{s,t} = lk(u)_{pi(s), pi(t)} where pi = permutation_of(g).

#pragma once

#include <string>
#include <vector>

#include "word.hpp"

namespace braidcert {

// Index of pair {i, j}, 1 <= i < j <= n, in lexicographic order.
inline int pair_index(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw error("invalid strand pair");
    // pairs (1,2),(1,3),...,(1,n),(2,3),...
    return (i - 1) * n - (i - 1) * i / 2 + (j - i) - 1;
}

struct LinkingMatrix {
    int strand_count = 1;
    std::vector<long long> entries;  // lexicographic pair order, n(n-1)/2 values

    long long at(int i, int j) const {
        return entries[static_cast<std::size_t>(pair_index(i, j, strand_count))];
    }
    friend bool operator==(const LinkingMatrix& a, const LinkingMatrix& b) {
        return a.strand_count == b.strand_count && a.entries == b.entries;
    }
};

// Signed crossing counts per initial-label pair; requires a pure braid.
inline LinkingMatrix linking_matrix(const BraidWord& u) {
    if (!is_pure(u)) throw error("not a pure braid");
    const int n = u.strand_count;
    LinkingMatrix m{n, std::vector<long long>(static_cast<std::size_t>(n * (n - 1) / 2), 0)};
    std::vector<int> occupant(static_cast<std::size_t>(n));  // position -> initial label
    for (int p = 0; p < n; ++p) occupant[static_cast<std::size_t>(p)] = p + 1;
    for (int g : u.letters) {
        int i = (g < 0 ? -g : g) - 1;
        int s = occupant[static_cast<std::size_t>(i)];
        int t = occupant[static_cast<std::size_t>(i + 1)];
        int lo = s < t ? s : t, hi = s < t ? t : s;
        m.entries[static_cast<std::size_t>(pair_index(lo, hi, n))] += g > 0 ? 1 : -1;
        std::swap(occupant[static_cast<std::size_t>(i)], occupant[static_cast<std::size_t>(i + 1)]);
    }
    for (auto& e : m.entries) {
        if (e % 2 != 0) throw error("internal: odd crossing count for a pure braid");
        e /= 2;
    }
    return m;
}

// Standard pure generator A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}.
inline BraidWord pure_generator(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw error("pure_generator: need 1 <= i < j <= n");
    BraidWord w{n, {}};
    for (int k = j - 1; k > i; --k) w.letters.push_back(k);
    w.letters.push_back(i);
    w.letters.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k) w.letters.push_back(-k);
    return w;
}

}  // namespace braidcert
