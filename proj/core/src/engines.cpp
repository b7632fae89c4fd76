#include "splitspin/engines.hpp"

#include <cmath>
#include <sstream>

namespace splitspin {

namespace detail {

hyper<big_rat> cereceda_channel(const hyper<big_rat>& w0, const hyper<big_rat>& w1,
                                const hyper<big_rat>& w2, const big_rat& s, const big_rat& t,
                                index_t n) {
    using H = hyper<big_rat>;
    const index_t m = n + 1;
    const H one(big_rat(1));
    std::vector<std::vector<std::pair<index_t, H>>> rows(static_cast<std::size_t>(m));
    std::vector<H> sup(m > 1 ? static_cast<std::size_t>(m - 1) : 0, one);

    rows[0].emplace_back(0, w0);
    if (m > 1) rows[1].emplace_back(0, -w1);
    if (m > 2) {
        rows[2].emplace_back(1, -w2);
        sup[1] = inverse(w0);
    }
    if (m > 3) {
        rows[3].emplace_back(1, H(t) * w0);
        rows[3].emplace_back(2, H(big_rat(-s)));
    }
    for (index_t rho = 4; rho < m; ++rho) {
        rows[static_cast<std::size_t>(rho)].emplace_back(rho - 2, H(t));
        rows[static_cast<std::size_t>(rho)].emplace_back(rho - 1, H(big_rat(-s)));
    }
    return hessenberg_det(rows, sup, one);
}

} // namespace detail

namespace {

spinor<double> realify_checked(const spinor<cplx>& x, double rel_tol) {
    const cplx channels[4] = {x.c1.re, x.c1.hy, x.c2.re, x.c2.hy};
    for (const cplx& c : channels) {
        const double scale = std::max(1.0, std::fabs(c.real()));
        if (std::fabs(c.imag()) > rel_tol * scale)
            throw precision_exceeded("imaginary residue " + std::to_string(c.imag()));
    }
    return realify_lossy(x);
}

} // namespace

egf_result egf_eval(const seq_spec<big_int>& spec, double y, bool poisson, index_t terms,
                    double rel_tol) {
    if (!spec.classic())
        throw std::invalid_argument("exponential generating function needs plain padovan/perrin");
    if (terms < 1) throw std::invalid_argument("egf_eval needs terms >= 1");
    if (!std::isfinite(y)) throw std::invalid_argument("egf_eval needs a finite y");
    if (std::fabs(y) > 20.0)
        throw std::invalid_argument("egf_eval is documented for |y| <= 20 at double precision");

    const auto& r = padovan_roots();
    const cplx a(r.alpha, 0.0);

    // closed form from the roots and the spinor-valued coefficients
    const spinor<cplx> A = binet_constant(a);
    const spinor<cplx> B = binet_constant(r.beta);
    const spinor<cplx> C = binet_constant(r.gamma);
    spinor<cplx> closed;
    if (spec.kind == seq_kind::padovan) {
        closed = cplx(r.sigma1) * std::exp(a * y) * A + r.sigma2 * std::exp(r.beta * y) * B +
                 r.sigma3 * std::exp(r.gamma * y) * C;
    } else {
        closed = std::exp(a * y) * A + std::exp(r.beta * y) * B + std::exp(r.gamma * y) * C;
    }

    // truncated series: exact terms, floated at accumulation time
    const auto table = seq_table(spec, terms + 3);
    auto at = [&](index_t k) { return to_double(table[static_cast<std::size_t>(k)]); };
    spinor<double> series;
    double weight = 1.0; // y^k / k!
    for (index_t k = 0; k < terms; ++k) {
        series.c1.re += at(k) * weight;
        series.c1.hy += at(k + 3) * weight;
        series.c2.re += -at(k + 1) * weight;
        series.c2.hy += at(k + 2) * weight;
        weight *= y / static_cast<double>(k + 1);
    }

    // analytic truncation tail: every component of the k-th term is bounded
    // by C_kind * alpha^k, so the omitted mass is below a geometric series
    const double abs_ay = r.alpha * std::fabs(y);
    const double c_kind =
        spec.kind == seq_kind::padovan
            ? r.sigma1 * std::pow(r.alpha, 3) + 2.0 * std::abs(r.sigma2) * std::pow(std::abs(r.beta), 3)
            : std::pow(r.alpha, 3) + 2.0 * std::pow(std::abs(r.beta), 3);
    const double q = abs_ay / static_cast<double>(terms + 1);
    if (q >= 1.0)
        throw precision_exceeded("truncation count " + std::to_string(terms) +
                                 " too small for y=" + std::to_string(y));
    double head = 1.0;
    for (index_t k = 1; k <= terms; ++k) head *= abs_ay / static_cast<double>(k);
    double tail_bound = c_kind * head / (1.0 - q);

    if (poisson) {
        const double damp = std::exp(-y);
        closed = cplx(damp) * closed;
        series = damp * series;
        tail_bound *= damp;
    }
    if (tail_bound > rel_tol)
        throw precision_exceeded("tail bound " + std::to_string(tail_bound) +
                                 " above tolerance; raise --terms");

    const spinor<double> closed_real = realify_checked(closed, rel_tol);
    const double dev = std::max({std::fabs(closed_real.c1.re - series.c1.re),
                                 std::fabs(closed_real.c1.hy - series.c1.hy),
                                 std::fabs(closed_real.c2.re - series.c2.re),
                                 std::fabs(closed_real.c2.hy - series.c2.hy)});
    return {closed_real, series, dev, tail_bound};
}

std::string bench_csv(const bench_run& run) {
    std::ostringstream out;
    out << "backend,n,rep,wall_ns,digest\n";
    for (const auto& rec : run.records) {
        for (std::size_t rep = 0; rep < rec.wall_ns.size(); ++rep) {
            out << to_string(rec.backend) << ',' << rec.n << ',' << rep + 1 << ','
                << rec.wall_ns[rep] << ',' << rec.digest << '\n';
        }
    }
    return out.str();
}

} // namespace splitspin
