#include <cmath>

#include "splitspin/sequence.hpp"
#include "splitspin/spinor.hpp"

namespace splitspin {

namespace {

// One real root alpha (the plastic ratio) and a conjugate complex pair.
// Cardano seeds the real root; Newton polishes it to the last bit.
char_roots compute_roots() {
    const double d = std::sqrt(23.0 / 3.0) / 6.0;
    double alpha = std::cbrt(0.5 + d) + std::cbrt(0.5 - d);
    for (int i = 0; i < 8; ++i) {
        const double f = alpha * alpha * alpha - alpha - 1.0;
        const double fp = 3.0 * alpha * alpha - 1.0;
        alpha -= f / fp;
    }

    // x^3 - x - 1 = (x - alpha)(x^2 + alpha x + 1/alpha): the pair follows
    // from sum 0 and product 1 of the three roots.
    const double half = -alpha / 2.0;
    const double imag = std::sqrt(4.0 / alpha - alpha * alpha) / 2.0;
    const cplx beta(half, imag);
    const cplx gamma(half, -imag);

    const cplx a(alpha, 0.0);
    const cplx sigma1 = (beta - 1.0) * (gamma - 1.0) / ((a - beta) * (a - gamma));
    const cplx sigma2 = (a - 1.0) * (gamma - 1.0) / ((beta - a) * (beta - gamma));
    const cplx sigma3 = (a - 1.0) * (beta - 1.0) / ((gamma - a) * (gamma - beta));

    return {alpha, beta, gamma, sigma1.real(), sigma2, sigma3};
}

} // namespace

const char_roots& padovan_roots() {
    static const char_roots roots = compute_roots();
    return roots;
}

binet_value seq_term_binet(const seq_spec<big_int>& spec, index_t n, double rel_tol) {
    detail::require_index(n, 0, "seq_term_binet");
    if (!spec.classic())
        throw std::invalid_argument("closed forms exist only for plain padovan/perrin");
    const auto& r = padovan_roots();
    const cplx a(r.alpha, 0.0);
    cplx value;
    if (spec.kind == seq_kind::padovan) {
        value = r.sigma1 * std::pow(a, cplx(static_cast<double>(n))) +
                r.sigma2 * std::pow(r.beta, cplx(static_cast<double>(n))) +
                r.sigma3 * std::pow(r.gamma, cplx(static_cast<double>(n)));
    } else {
        value = std::pow(a, cplx(static_cast<double>(n))) +
                std::pow(r.beta, cplx(static_cast<double>(n))) +
                std::pow(r.gamma, cplx(static_cast<double>(n)));
    }
    return {value.real(), round_to_integer(value, rel_tol)};
}

big_int perrin_from_padovan(index_t n) {
    detail::require_index(n, 5, "perrin_from_padovan");
    const auto spec = seq_spec<big_int>::padovan();
    return big_int(3 * seq_term_iter(spec, n - 5) + 2 * seq_term_iter(spec, n - 4));
}

big_int padovan_from_perrin(index_t n) {
    detail::require_index(n, 3, "padovan_from_perrin");
    const auto spec = seq_spec<big_int>::perrin();
    const auto w = seq_window(spec, n - 3);
    const big_int sum = w[0] + 8 * w[1] + 10 * w[2];
    return exact_div(sum, 23);
}

spinor<cplx> binet_constant(const cplx& root) {
    const cplx one(1.0, 0.0);
    return {hyper<cplx>(one, root * root * root),
            hyper<cplx>(-root, root * root)};
}

spinor<cplx> spinor_term_binet(const seq_spec<big_int>& spec, index_t n) {
    detail::require_index(n, 0, "spinor_term_binet");
    if (!spec.classic())
        throw std::invalid_argument("closed forms exist only for plain padovan/perrin");
    const auto& r = padovan_roots();
    const cplx a(r.alpha, 0.0);
    const cplx an = std::pow(a, cplx(static_cast<double>(n)));
    const cplx bn = std::pow(r.beta, cplx(static_cast<double>(n)));
    const cplx gn = std::pow(r.gamma, cplx(static_cast<double>(n)));
    const spinor<cplx> A = binet_constant(a);
    const spinor<cplx> B = binet_constant(r.beta);
    const spinor<cplx> C = binet_constant(r.gamma);
    if (spec.kind == seq_kind::padovan)
        return cplx(r.sigma1) * an * A + r.sigma2 * bn * B + r.sigma3 * gn * C;
    return an * A + bn * B + gn * C;
}

spinor<big_int> round_spinor(const spinor<cplx>& x, double rel_tol) {
    return {hyper<big_int>(round_to_integer(x.c1.re, rel_tol), round_to_integer(x.c1.hy, rel_tol)),
            hyper<big_int>(round_to_integer(x.c2.re, rel_tol), round_to_integer(x.c2.hy, rel_tol))};
}

spinor<big_int> spinor_relation(relation_kind kind, index_t n) {
    const auto pad = seq_spec<big_int>::padovan();
    const auto per = seq_spec<big_int>::perrin();
    if (kind == relation_kind::perrin_from_padovan) {
        detail::require_index(n, 5, "spinor_relation(perrin_from_padovan)");
        return big_int(3) * spinor_term_iter(pad, n - 5) +
               big_int(2) * spinor_term_iter(pad, n - 4);
    }
    detail::require_index(n, 3, "spinor_relation(padovan_from_perrin)");
    const spinor<big_int> combo = spinor_term_iter(per, n - 3) +
                                  big_int(8) * spinor_term_iter(per, n - 2) +
                                  big_int(10) * spinor_term_iter(per, n - 1);
    return {hyper<big_int>(exact_div(combo.c1.re, 23), exact_div(combo.c1.hy, 23)),
            hyper<big_int>(exact_div(combo.c2.re, 23), exact_div(combo.c2.hy, 23))};
}

} // namespace splitspin
