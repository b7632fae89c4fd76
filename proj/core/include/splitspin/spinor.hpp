#pragma once

#include <array>
#include <utility>

#include "splitspin/hyper.hpp"
#include "splitspin/sequence.hpp"
#include "splitspin/split_quat.hpp"

namespace splitspin {

/// Two-component column of hyperbolic numbers; the image of a split
/// quaternion under the linear injection
///
///   f(q0 + q1 i + q2 j + q3 k) = [q0 + q3 j; -q1 + q2 j].
template <class S>
struct spinor {
    hyper<S> c1{};
    hyper<S> c2{};

    spinor() = default;
    spinor(hyper<S> a, hyper<S> b) : c1(std::move(a)), c2(std::move(b)) {}

    friend spinor operator+(const spinor& a, const spinor& b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
    friend spinor operator-(const spinor& a, const spinor& b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
    friend spinor operator-(const spinor& a) { return {-a.c1, -a.c2}; }
    friend spinor operator*(const S& w, const spinor& a) { return {w * a.c1, w * a.c2}; }
    friend spinor operator*(const spinor& a, const S& w) { return w * a; }
    /// Componentwise scaling by a hyperbolic scalar (used by j * spinor).
    friend spinor operator*(const hyper<S>& w, const spinor& a) { return {w * a.c1, w * a.c2}; }

    friend bool operator==(const spinor& a, const spinor& b) { return a.c1 == b.c1 && a.c2 == b.c2; }
    friend bool operator!=(const spinor& a, const spinor& b) { return !(a == b); }
};

template <class S>
spinor<S> to_spinor(const split_quat<S>& q) {
    return {hyper<S>(q.q0, q.q3), hyper<S>(S(-q.q1), q.q2)};
}

/// The fixed matrix C = [0 1; -1 0] applied to a column: C [x; y] = [y; -x].
/// C*C = -I.
template <class S>
spinor<S> apply_c(const spinor<S>& x) {
    return {x.c2, -x.c1};
}

enum class conj_kind { star, bar, tilde, mate };

/// Componentwise hyperbolic conjugate ("ordinary hyperbolic conjugate").
template <class S>
spinor<S> bar(const spinor<S>& x) {
    return {conj(x.c1), conj(x.c2)};
}

/// Image of the quaternion conjugate under f: star(f(q)) = f(conj(q)).
template <class S>
spinor<S> star(const spinor<S>& x) {
    return {conj(x.c1), -x.c2};
}

/// j * C * bar(x).
template <class S>
spinor<S> tilde(const spinor<S>& x) {
    return hyper<S>::unit_j() * apply_c(bar(x));
}

/// The hyperbolic mate: -C * bar(x).
template <class S>
spinor<S> mate(const spinor<S>& x) {
    return -apply_c(bar(x));
}

template <class S>
spinor<S> spinor_conjugate(const spinor<S>& x, conj_kind kind) {
    switch (kind) {
        case conj_kind::star: return star(x);
        case conj_kind::bar: return bar(x);
        case conj_kind::tilde: return tilde(x);
        case conj_kind::mate: return mate(x);
    }
    return x;
}

// --- sequence spinors -------------------------------------------------------

/// n-th sequence spinor [a(n) + a(n+3) j; -a(n+1) + a(n+2) j] by iteration.
template <class S>
spinor<S> spinor_term_iter(const seq_spec<S>& spec, index_t n) {
    auto w = seq_window(spec, n);
    return {hyper<S>(std::move(w[0]), std::move(w[3])),
            hyper<S>(S(-w[1]), std::move(w[2]))};
}

/// The three seed spinors of the family.
template <class S>
std::array<spinor<S>, 3> spinor_seeds(const seq_spec<S>& spec) {
    auto t = seq_table(spec, 6);
    auto at = [&](index_t k) -> const S& { return t[static_cast<std::size_t>(k)]; };
    std::array<spinor<S>, 3> out;
    for (index_t k = 0; k < 3; ++k)
        out[static_cast<std::size_t>(k)] =
            spinor<S>(hyper<S>(at(k), at(k + 3)), hyper<S>(S(-at(k + 1)), at(k + 2)));
    return out;
}

/// Norm as the scalar part of bar(x)^t x; the j part of that product always
/// vanishes, and for sequence spinors the value equals the norm of the
/// materialized quaternion: a(n)^2 + a(n+1)^2 - a(n+2)^2 - a(n+3)^2.
template <class S>
S spinor_scalar_norm(const spinor<S>& x) {
    hyper<S> product = conj(x.c1) * x.c1 + conj(x.c2) * x.c2;
    if (!scalar_is_zero(product.hy))
        throw divisibility_violation("spinor norm has nonzero j part");
    return product.re;
}

template <class S>
S spinor_norm(const seq_spec<S>& spec, index_t n) {
    return spinor_scalar_norm(spinor_term_iter(spec, n));
}

// --- closed forms (classic kinds) -------------------------------------------

/// Spinor-valued Binet constants A (at alpha), B (at beta), C (at gamma):
/// each is [1 + r^3 j; r(-1 + r j)] at the corresponding root r.
spinor<cplx> binet_constant(const cplx& root);

/// Closed-form evaluation over complex doubles.  Padovan weights the root
/// powers by sigma1..sigma3; Perrin uses the bare power sums.
spinor<cplx> spinor_term_binet(const seq_spec<big_int>& spec, index_t n);

/// Rounds a complex-float spinor that should be integral; throws
/// precision_exceeded when imaginary residues exceed the tolerance.
spinor<big_int> round_spinor(const spinor<cplx>& x, double rel_tol = 1e-9);

// --- partial sums ------------------------------------------------------------

enum class sum_stride { all, even, odd };

inline std::string to_string(sum_stride s) {
    switch (s) {
        case sum_stride::all: return "all";
        case sum_stride::even: return "even";
        case sum_stride::odd: return "odd";
    }
    return "?";
}

/// Closed forms for partial sums with s = t = 1:
///   sum_{n=0..m} x(n)      = x(m+5)  - x(4)
///   sum_{n=0..m} x(2n)     = x(2m+3) - x(1)
///   sum_{n=0..m} x(2n+1)   = x(2m+4) - x(2)
template <class S>
spinor<S> spinor_partial_sum(const seq_spec<S>& spec, index_t m, sum_stride stride) {
    detail::require_index(m, 0, "spinor_partial_sum");
    switch (stride) {
        case sum_stride::all:
            return spinor_term_iter(spec, m + 5) - spinor_term_iter(spec, 4);
        case sum_stride::even:
            return spinor_term_iter(spec, 2 * m + 3) - spinor_term_iter(spec, 1);
        case sum_stride::odd:
            return spinor_term_iter(spec, 2 * m + 4) - spinor_term_iter(spec, 2);
    }
    throw std::invalid_argument("bad stride");
}

/// Direct-summation oracle for the closed forms above.
template <class S>
spinor<S> spinor_partial_sum_direct(const seq_spec<S>& spec, index_t m, sum_stride stride) {
    detail::require_index(m, 0, "spinor_partial_sum_direct");
    const index_t top = stride == sum_stride::all ? m : 2 * m + 1;
    auto table = seq_table(spec, top + 4);
    auto term = [&](index_t n) {
        auto at = [&](index_t k) -> const S& { return table[static_cast<std::size_t>(k)]; };
        return spinor<S>(hyper<S>(at(n), at(n + 3)), hyper<S>(S(-at(n + 1)), at(n + 2)));
    };
    spinor<S> acc;
    for (index_t n = 0; n <= m; ++n) {
        switch (stride) {
            case sum_stride::all: acc = acc + term(n); break;
            case sum_stride::even: acc = acc + term(2 * n); break;
            case sum_stride::odd: acc = acc + term(2 * n + 1); break;
        }
    }
    return acc;
}

// --- relations between the two classic families ------------------------------

enum class relation_kind { perrin_from_padovan, padovan_from_perrin };

/// perrin_from_padovan (n >= 5): 3 psi(n-5) + 2 psi(n-4), equal to phi(n).
/// padovan_from_perrin (n >= 3): (phi(n-3) + 8 phi(n-2) + 10 phi(n-1)) / 23,
/// equal to psi(n-1); every coefficient divides exactly by 23.
spinor<big_int> spinor_relation(relation_kind kind, index_t n);

} // namespace splitspin
