#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "splitspin/scalar.hpp"
#include "splitspin/split_quat.hpp"

namespace splitspin {

enum class seq_kind { padovan, perrin, custom };

inline std::string to_string(seq_kind k) {
    switch (k) {
        case seq_kind::padovan: return "padovan";
        case seq_kind::perrin: return "perrin";
        case seq_kind::custom: return "custom";
    }
    return "?";
}

/// A third-order recurrence family a(n+3) = s*a(n+1) + t*a(n).
///
/// The named kinds fix the seeds (padovan: 1,1,1; perrin: 3,0,2); s and t
/// default to 1 and may be generalized.  Custom kinds carry caller seeds.
template <class S>
struct seq_spec {
    seq_kind kind = seq_kind::padovan;
    S s = scalar_of<S>(1);
    S t = scalar_of<S>(1);
    std::array<S, 3> seeds{scalar_of<S>(1), scalar_of<S>(1), scalar_of<S>(1)};

    static seq_spec padovan(S s = scalar_of<S>(1), S t = scalar_of<S>(1)) {
        return {seq_kind::padovan, std::move(s), std::move(t),
                {scalar_of<S>(1), scalar_of<S>(1), scalar_of<S>(1)}};
    }
    static seq_spec perrin(S s = scalar_of<S>(1), S t = scalar_of<S>(1)) {
        return {seq_kind::perrin, std::move(s), std::move(t),
                {scalar_of<S>(3), scalar_of<S>(0), scalar_of<S>(2)}};
    }
    static seq_spec custom(std::array<S, 3> seeds, S s = scalar_of<S>(1), S t = scalar_of<S>(1)) {
        return {seq_kind::custom, std::move(s), std::move(t), std::move(seeds)};
    }

    /// Plain Padovan or Perrin: named kind with s = t = 1.  Closed forms
    /// (Binet, EGF) exist only here.
    bool classic() const {
        return kind != seq_kind::custom && s == scalar_of<S>(1) && t == scalar_of<S>(1);
    }

    friend bool operator==(const seq_spec& a, const seq_spec& b) {
        return a.kind == b.kind && a.s == b.s && a.t == b.t && a.seeds == b.seeds;
    }
};

namespace detail {
inline void require_index(index_t n, index_t lo, const char* what) {
    if (n < lo)
        throw index_out_of_range(std::string(what) + ": n=" + std::to_string(n) +
                                 " (requires n >= " + std::to_string(lo) + ")");
}
} // namespace detail

/// Exact n-th term by iteration, O(n) ring operations and O(1) memory.
template <class S>
S seq_term_iter(const seq_spec<S>& spec, index_t n) {
    detail::require_index(n, 0, "seq_term_iter");
    if (n < 3) return spec.seeds[static_cast<std::size_t>(n)];
    S a = spec.seeds[0], b = spec.seeds[1], c = spec.seeds[2];
    for (index_t i = 3; i <= n; ++i) {
        S next = S(spec.s * b + spec.t * a);
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
    }
    return c;
}

/// Four consecutive terms a(n)..a(n+3) in one pass.
template <class S>
std::array<S, 4> seq_window(const seq_spec<S>& spec, index_t n) {
    detail::require_index(n, 0, "seq_window");
    std::array<S, 4> w{spec.seeds[0], spec.seeds[1], spec.seeds[2],
                       S(spec.s * spec.seeds[1] + spec.t * spec.seeds[0])};
    for (index_t i = 1; i <= n; ++i) {
        S next = S(spec.s * w[2] + spec.t * w[1]);
        w[0] = std::move(w[1]);
        w[1] = std::move(w[2]);
        w[2] = std::move(w[3]);
        w[3] = std::move(next);
    }
    return w;
}

/// First `count` terms.
template <class S>
std::vector<S> seq_table(const seq_spec<S>& spec, index_t count) {
    std::vector<S> table;
    if (count <= 0) return table;
    table.reserve(static_cast<std::size_t>(count));
    for (index_t i = 0; i < count && i < 3; ++i)
        table.push_back(spec.seeds[static_cast<std::size_t>(i)]);
    for (index_t i = 3; i < count; ++i)
        table.push_back(S(spec.s * table[static_cast<std::size_t>(i - 2)] +
                          spec.t * table[static_cast<std::size_t>(i - 3)]));
    return table;
}

/// Split Padovan/Perrin quaternion: a(n) + a(n+1) i + a(n+2) j + a(n+3) k.
template <class S>
split_quat<S> seq_quaternion(const seq_spec<S>& spec, index_t n) {
    auto w = seq_window(spec, n);
    return {std::move(w[0]), std::move(w[1]), std::move(w[2]), std::move(w[3])};
}

// --- companion matrix ------------------------------------------------------

/// Row-major 3x3 matrix over the exact scalar ring.
template <class S>
struct mat3 {
    std::array<std::array<S, 3>, 3> m{};

    static mat3 identity() {
        mat3 r;
        for (int i = 0; i < 3; ++i) r.m[i][i] = scalar_of<S>(1);
        return r;
    }

    friend mat3 operator*(const mat3& a, const mat3& b) {
        mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = S(a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] +
                              a.m[i][2] * b.m[2][j]);
        return r;
    }

    friend bool operator==(const mat3& a, const mat3& b) { return a.m == b.m; }

    std::array<S, 3> operator*(const std::array<S, 3>& v) const {
        return {S(m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2]),
                S(m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2]),
                S(m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2])};
    }
};

/// Companion matrix shifting the window (a(n), a(n+1), a(n+2)).
/// Rows (0,1,0), (0,0,1), (t,s,0); the classic instance has last row (1,1,0).
template <class S>
mat3<S> qmatrix(const seq_spec<S>& spec) {
    mat3<S> q;
    q.m[0][1] = scalar_of<S>(1);
    q.m[1][2] = scalar_of<S>(1);
    q.m[2][0] = spec.t;
    q.m[2][1] = spec.s;
    return q;
}

/// Exact Q^n by binary exponentiation, O(log n) matrix products.
template <class S>
mat3<S> qmatrix_power(const seq_spec<S>& spec, index_t n) {
    detail::require_index(n, 0, "qmatrix_power");
    mat3<S> result = mat3<S>::identity();
    mat3<S> base = qmatrix(spec);
    auto e = static_cast<unsigned long long>(n);
    while (e > 0) {
        if (e & 1ULL) result = result * base;
        e >>= 1ULL;
        if (e > 0) base = base * base;
    }
    return result;
}

// --- characteristic roots and closed forms (classic kinds only) ------------

/// Roots of x^3 - x - 1 = 0 plus the Binet coefficients of the Padovan form.
/// alpha is the real (plastic-ratio) root; beta and gamma are conjugate.
struct char_roots {
    double alpha;
    cplx beta, gamma;
    double sigma1;
    cplx sigma2, sigma3;
};

/// Computed once, Newton-polished to full double precision.
const char_roots& padovan_roots();

struct binet_value {
    double value;     ///< real part of the closed-form evaluation
    big_int rounded;  ///< nearest integer, exact match with iteration within bounds
};

/// Scalar Binet closed form for the classic kinds.  Reliable rounding is
/// documented for n <= 30 at double precision (in practice far further).
binet_value seq_term_binet(const seq_spec<big_int>& spec, index_t n, double rel_tol = 1e-9);

/// Perrin from Padovan: R(n) = 3 P(n-5) + 2 P(n-4), defined for n >= 5.
big_int perrin_from_padovan(index_t n);

/// Padovan from Perrin: P(n-1) = (R(n-3) + 8 R(n-2) + 10 R(n-1)) / 23 with the
/// division exact, defined for n >= 3.
big_int padovan_from_perrin(index_t n);

} // namespace splitspin
