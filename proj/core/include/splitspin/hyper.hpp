#pragma once

#include <utility>

#include "splitspin/scalar.hpp"

namespace splitspin {

/// Hyperbolic (split-complex) number a + b*j with j*j = +1.
///
/// The plane has zero divisors: (1+j)(1-j) = 0, so inversion is partial and
/// only available over field scalars.
template <class S>
struct hyper {
    S re{};
    S hy{};

    hyper() = default;
    hyper(S r) : re(std::move(r)) {}
    hyper(S r, S h) : re(std::move(r)), hy(std::move(h)) {}

    static hyper unit_j() { return hyper(scalar_of<S>(0), scalar_of<S>(1)); }

    friend hyper operator+(const hyper& a, const hyper& b) { return {S(a.re + b.re), S(a.hy + b.hy)}; }
    friend hyper operator-(const hyper& a, const hyper& b) { return {S(a.re - b.re), S(a.hy - b.hy)}; }
    friend hyper operator-(const hyper& a) { return {S(-a.re), S(-a.hy)}; }

    friend hyper operator*(const hyper& a, const hyper& b) {
        return {S(a.re * b.re + a.hy * b.hy), S(a.re * b.hy + a.hy * b.re)};
    }
    friend hyper operator*(const S& w, const hyper& a) { return {S(w * a.re), S(w * a.hy)}; }
    friend hyper operator*(const hyper& a, const S& w) { return w * a; }

    friend bool operator==(const hyper& a, const hyper& b) { return a.re == b.re && a.hy == b.hy; }
    friend bool operator!=(const hyper& a, const hyper& b) { return !(a == b); }
};

template <class S>
hyper<S> conj(const hyper<S>& a) {
    return {a.re, S(-a.hy)};
}

/// Split-complex modulus a*conj(a) = re^2 - hy^2; may be negative or zero.
template <class S>
S norm(const hyper<S>& a) {
    return S(a.re * a.re - a.hy * a.hy);
}

template <class S>
bool is_null(const hyper<S>& a) {
    return scalar_is_zero(norm(a));
}

/// conj(a)/norm(a); throws non_invertible on the null cone.
template <class S>
hyper<S> inverse(const hyper<S>& a) {
    static_assert(is_field_scalar_v<S>, "hyperbolic inversion needs a field scalar");
    const S n = norm(a);
    if (scalar_is_zero(n))
        throw non_invertible(scalar_text(a.re) + "+" + scalar_text(a.hy) + "j");
    return {S(a.re / n), S(-a.hy / n)};
}

/// The two idempotent channels x.re +- x.hy; multiplication factors through them.
template <class S>
S channel_plus(const hyper<S>& a) { return S(a.re + a.hy); }

template <class S>
S channel_minus(const hyper<S>& a) { return S(a.re - a.hy); }

} // namespace splitspin
