#pragma once

#include <utility>

#include "splitspin/scalar.hpp"

namespace splitspin {

/// Split quaternion q0 + q1*i + q2*j + q3*k over the unit table
///
///   i^2 = -1,  j^2 = k^2 = +1,  ijk = 1,
///   ij = -ji = k,  jk = -kj = -i,  ki = -ik = j.
///
/// Associative, non-commutative; the norm q0^2+q1^2-q2^2-q3^2 is
/// multiplicative and can take any sign.
template <class S>
struct split_quat {
    S q0{}, q1{}, q2{}, q3{};

    split_quat() = default;
    split_quat(S a, S b, S c, S d)
        : q0(std::move(a)), q1(std::move(b)), q2(std::move(c)), q3(std::move(d)) {}

    friend split_quat operator+(const split_quat& a, const split_quat& b) {
        return {S(a.q0 + b.q0), S(a.q1 + b.q1), S(a.q2 + b.q2), S(a.q3 + b.q3)};
    }
    friend split_quat operator-(const split_quat& a, const split_quat& b) {
        return {S(a.q0 - b.q0), S(a.q1 - b.q1), S(a.q2 - b.q2), S(a.q3 - b.q3)};
    }
    friend split_quat operator-(const split_quat& a) {
        return {S(-a.q0), S(-a.q1), S(-a.q2), S(-a.q3)};
    }
    friend split_quat operator*(const S& w, const split_quat& a) {
        return {S(w * a.q0), S(w * a.q1), S(w * a.q2), S(w * a.q3)};
    }
    friend split_quat operator*(const split_quat& a, const S& w) { return w * a; }

    friend split_quat operator*(const split_quat& a, const split_quat& b) {
        return {S(a.q0 * b.q0 - a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3),
                S(a.q0 * b.q1 + a.q1 * b.q0 - a.q2 * b.q3 + a.q3 * b.q2),
                S(a.q0 * b.q2 + a.q2 * b.q0 - a.q1 * b.q3 + a.q3 * b.q1),
                S(a.q0 * b.q3 + a.q3 * b.q0 + a.q1 * b.q2 - a.q2 * b.q1)};
    }

    friend bool operator==(const split_quat& a, const split_quat& b) {
        return a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2 && a.q3 == b.q3;
    }
    friend bool operator!=(const split_quat& a, const split_quat& b) { return !(a == b); }
};

template <class S>
split_quat<S> conj(const split_quat<S>& q) {
    return {q.q0, S(-q.q1), S(-q.q2), S(-q.q3)};
}

template <class S>
S norm(const split_quat<S>& q) {
    return S(q.q0 * q.q0 + q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3);
}

template <class S>
bool vector_part_is_zero(const split_quat<S>& q) {
    return scalar_is_zero(q.q1) && scalar_is_zero(q.q2) && scalar_is_zero(q.q3);
}

} // namespace splitspin
