#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "splitspin/scalar.hpp"

namespace splitspin::detail {

/// Determinant of a sparse lower Hessenberg matrix (entries vanish above the
/// superdiagonal) by the classical leading-minor recurrence
///
///   d_k = sum over entries M[k-1][i] of  (-1)^(k-1-i) * M[k-1][i]
///         * (prod of superdiagonal entries sup[i..k-2]) * d_i.
///
/// `rows[r]` lists the in-band entries (col, value) of row r with col <= r,
/// sorted by column; `sup[r]` is M[r][r+1].  Rows in this artifact carry a
/// bounded number of entries within a fixed band, so evaluation is linear in
/// the matrix size.
template <class T>
T hessenberg_det(const std::vector<std::vector<std::pair<index_t, T>>>& rows,
                 const std::vector<T>& sup, const T& one) {
    const std::size_t m = rows.size();
    std::vector<T> d(m + 1);
    d[0] = one;
    for (std::size_t k = 1; k <= m; ++k) {
        const auto& row = rows[k - 1];
        T acc{};
        T prod = one;
        index_t walked = static_cast<index_t>(k) - 1;
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            const index_t col = it->first;
            while (walked > col) {
                --walked;
                prod = prod * sup[static_cast<std::size_t>(walked)];
            }
            T term = it->second * prod * d[static_cast<std::size_t>(col)];
            if ((static_cast<index_t>(k) - 1 - col) % 2 != 0) term = -term;
            acc = acc + term;
        }
        d[k] = std::move(acc);
    }
    return d[m];
}

} // namespace splitspin::detail
