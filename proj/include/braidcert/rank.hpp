// include/braidcert/rank.hpp — exact integer matrix rank by fraction-free
// (Bareiss) elimination.  The rank is over Q; no divisions other than the
// exact Bareiss quotients are performed.

#pragma once

#include <gmpxx.h>

#include <vector>

#include "word.hpp"

namespace braidcert {

inline int integer_rank(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::vector<std::vector<mpz_class>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != ncols) throw error("integer_rank: ragged rows");
        std::vector<mpz_class> row;
        row.reserve(ncols);
        for (long long v : r) row.emplace_back(static_cast<long>(v));
        a.push_back(std::move(row));
    }

    const std::size_t nrows = a.size();
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && a[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            for (std::size_t c = col + 1; c < ncols; ++c) {
                mpz_class num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[r][c] = q;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace braidcert
