#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "splitspin/hyper.hpp"
#include "splitspin/spinor.hpp"
#include "splitspin/split_quat.hpp"

namespace splitspin {

using ordered_json = nlohmann::ordered_json;

/// Canonical text for a hyperbolic number: "a+bj" with normalized signs and
/// unit coefficients elided, e.g. "1-2j", "-1+j", "2j", "0".
template <class S>
std::string render(const hyper<S>& h) {
    const bool re0 = scalar_is_zero(h.re);
    const bool hy0 = scalar_is_zero(h.hy);
    if (re0 && hy0) return "0";
    std::string out;
    if (!re0) out += scalar_text(h.re);
    if (!hy0) {
        if (scalar_is_negative(h.hy)) {
            out += "-";
        } else if (!re0) {
            out += "+";
        }
        const S mag = scalar_abs(h.hy);
        if (!(mag == scalar_of<S>(1))) out += scalar_text(mag);
        out += "j";
    }
    return out;
}

template <class S>
std::string render(const spinor<S>& x) {
    return "[" + render(x.c1) + "; " + render(x.c2) + "]";
}

/// "q0+q1i+q2j+q3k" with the same sign/coefficient conventions.
template <class S>
std::string render(const split_quat<S>& q) {
    struct part {
        const S* v;
        const char* unit;
    };
    const part parts[] = {{&q.q0, ""}, {&q.q1, "i"}, {&q.q2, "j"}, {&q.q3, "k"}};
    std::string out;
    for (const auto& p : parts) {
        if (scalar_is_zero(*p.v)) continue;
        if (scalar_is_negative(*p.v)) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        const S mag = scalar_abs(*p.v);
        if (p.unit[0] == '\0' || !(mag == scalar_of<S>(1))) out += scalar_text(mag);
        out += p.unit;
    }
    return out.empty() ? "0" : out;
}

/// Exact scalars serialize as decimal strings so nothing is lost in transit.
template <class S>
ordered_json to_json(const hyper<S>& h) {
    if constexpr (is_exact_scalar_v<S>) {
        return ordered_json{{"re", scalar_text(h.re)}, {"hy", scalar_text(h.hy)}};
    } else {
        return ordered_json{{"re", h.re}, {"hy", h.hy}};
    }
}

template <class S>
ordered_json to_json(const spinor<S>& x) {
    return ordered_json{{"c1", to_json(x.c1)}, {"c2", to_json(x.c2)}};
}

template <class S>
ordered_json to_json(const split_quat<S>& q) {
    if constexpr (is_exact_scalar_v<S>) {
        return ordered_json{{"q0", scalar_text(q.q0)},
                            {"q1", scalar_text(q.q1)},
                            {"q2", scalar_text(q.q2)},
                            {"q3", scalar_text(q.q3)}};
    } else {
        return ordered_json{{"q0", q.q0}, {"q1", q.q1}, {"q2", q.q2}, {"q3", q.q3}};
    }
}

} // namespace splitspin
