#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "splitspin/errors.hpp"

namespace splitspin {

using big_int = mpz_class;
using big_rat = mpq_class;
using cplx = std::complex<double>;

using index_t = std::int64_t;

template <class S>
inline constexpr bool is_exact_scalar_v =
    std::is_same_v<S, big_int> || std::is_same_v<S, big_rat>;

/// Scalars that support division (needed by hyperbolic inversion).
template <class S>
inline constexpr bool is_field_scalar_v =
    std::is_same_v<S, big_rat> || std::is_same_v<S, double> || std::is_same_v<S, cplx>;

template <class S>
S scalar_of(long v) {
    if constexpr (std::is_same_v<S, cplx>) {
        return cplx(static_cast<double>(v), 0.0);
    } else {
        return S(v);
    }
}

inline double to_double(const big_int& v) { return v.get_d(); }
inline double to_double(const big_rat& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

inline std::string scalar_text(const big_int& v) { return v.get_str(); }

inline std::string scalar_text(const big_rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline std::string scalar_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

template <class S> bool scalar_is_zero(const S& v) { return v == 0; }
inline bool scalar_is_zero(const cplx& v) { return v == cplx(0.0, 0.0); }

template <class S> bool scalar_is_negative(const S& v) { return v < 0; }

template <class S> S scalar_abs(const S& v) { return v < 0 ? S(-v) : v; }

/// Parses "p" or "p/q" (optionally signed) into a canonical rational.
inline big_rat parse_rational(const std::string& text) {
    big_rat value;
    if (text.empty() || value.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    value.canonicalize();
    return value;
}

inline bool is_integral(const big_rat& v) { return v.get_den() == 1; }

/// Exact division by a small positive constant; integers must divide evenly.
inline big_int exact_div(const big_int& value, long divisor) {
    if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(divisor)))
        throw divisibility_violation(value.get_str() + " not divisible by " + std::to_string(divisor));
    big_int quotient;
    mpz_divexact_ui(quotient.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(divisor));
    return quotient;
}

inline big_rat exact_div(const big_rat& value, long divisor) {
    return big_rat(value / divisor);
}

/// Nearest-integer rounding of a complex scalar that is supposed to be a real
/// integer; the imaginary residue must sit below the tolerance.
inline big_int round_to_integer(const cplx& v, double rel_tol) {
    const double scale = std::max(1.0, std::fabs(v.real()));
    if (std::fabs(v.imag()) > rel_tol * scale)
        throw precision_exceeded("imaginary residue " + std::to_string(v.imag()));
    const double r = std::round(v.real());
    big_int out;
    mpz_set_d(out.get_mpz_t(), r);
    return out;
}

} // namespace splitspin
