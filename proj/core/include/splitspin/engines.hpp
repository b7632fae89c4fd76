#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitspin/detail/hessenberg.hpp"
#include "splitspin/render.hpp"
#include "splitspin/sequence.hpp"
#include "splitspin/spinor.hpp"

namespace splitspin {

// --- backends ----------------------------------------------------------------

enum class backend_id { iter, matpow, det_banded, det_cereceda, binet };

inline std::string to_string(backend_id b) {
    switch (b) {
        case backend_id::iter: return "iter";
        case backend_id::matpow: return "matpow";
        case backend_id::det_banded: return "det_banded";
        case backend_id::det_cereceda: return "det_cereceda";
        case backend_id::binet: return "binet";
    }
    return "?";
}

inline std::optional<backend_id> parse_backend(const std::string& name) {
    if (name == "iter") return backend_id::iter;
    if (name == "matpow") return backend_id::matpow;
    if (name == "det_banded") return backend_id::det_banded;
    if (name == "det_cereceda") return backend_id::det_cereceda;
    if (name == "binet") return backend_id::binet;
    return std::nullopt;
}

inline std::vector<backend_id> all_backends() {
    return {backend_id::iter, backend_id::matpow, backend_id::det_banded,
            backend_id::det_cereceda, backend_id::binet};
}

/// Rounding of the Binet closed form is trusted up to this index at double
/// precision; beyond it the float backend is skipped rather than compared.
inline constexpr index_t binet_trusted_max = 30;

/// Cost guard for the determinant backends in benchmarks and cross-checks.
inline constexpr index_t det_bench_max = 2000;

// --- matrix-power backend ------------------------------------------------------

/// Q^n is formed by binary exponentiation; its first row gives the
/// coefficients of the term in the three seed spinors.
template <class S>
spinor<S> term_matpow(const seq_spec<S>& spec, index_t n) {
    detail::require_index(n, 0, "term_matpow");
    const mat3<S> p = qmatrix_power(spec, n);
    const auto seeds = spinor_seeds(spec);
    return p.m[0][0] * seeds[0] + p.m[0][1] * seeds[1] + p.m[0][2] * seeds[2];
}

// --- banded-determinant backend -------------------------------------------------

namespace detail {

/// Cofactor of column 0 at seed row r in the (n+1)x(n+1) banded matrix whose
/// first column holds the seeds, whose superdiagonal is -1 and whose rows
/// i >= 3 carry t at column i-2 and s at column i-1.  Deleting row r and
/// column 0 leaves a lower Hessenberg minor, so its determinant falls to the
/// linear recurrence in hessenberg.hpp.
template <class S>
S banded_first_column_cofactor(const seq_spec<S>& spec, index_t n, index_t r) {
    const index_t m = n; // minor size
    std::vector<std::vector<std::pair<index_t, S>>> rows(static_cast<std::size_t>(m));
    std::vector<S> sup(m > 1 ? static_cast<std::size_t>(m - 1) : 0, scalar_of<S>(0));
    const S minus_one = scalar_of<S>(-1);
    for (index_t rho = 0; rho < m; ++rho) {
        const index_t i = rho < r ? rho : rho + 1; // row index in the full matrix
        auto& row = rows[static_cast<std::size_t>(rho)];
        if (i >= 3) {
            row.emplace_back(i - 3, spec.t); // full column i-2, minus the deleted column
            row.emplace_back(i - 2, spec.s);
        }
        if (i <= n - 1) {
            // the -1 at full position (i, i+1) lands on the minor's diagonal
            // for rows above the deleted seed row, on its superdiagonal below
            if (rho < r) {
                row.emplace_back(rho, minus_one);
            } else {
                sup[static_cast<std::size_t>(rho)] = minus_one;
            }
        }
    }
    S det = hessenberg_det(rows, sup, scalar_of<S>(1));
    if (r % 2 != 0) det = S(-det);
    return det;
}

} // namespace detail

/// The three first-column cofactors; they express the term in the seeds and
/// equal the first row of Q^n.
template <class S>
std::array<S, 3> det_banded_cofactors(const seq_spec<S>& spec, index_t n) {
    detail::require_index(n, 0, "det_banded_cofactors");
    std::array<S, 3> cof{scalar_of<S>(0), scalar_of<S>(0), scalar_of<S>(0)};
    const index_t seed_rows = std::min<index_t>(n, 2);
    for (index_t r = 0; r <= seed_rows; ++r)
        cof[static_cast<std::size_t>(r)] = detail::banded_first_column_cofactor(spec, n, r);
    return cof;
}

template <class S>
spinor<S> term_det_banded(const seq_spec<S>& spec, index_t n) {
    const auto cof = det_banded_cofactors(spec, n);
    const auto seeds = spinor_seeds(spec);
    return cof[0] * seeds[0] + cof[1] * seeds[1] + cof[2] * seeds[2];
}

// --- inverse-seeded determinant backend -----------------------------------------

namespace detail {

template <class S>
seq_spec<big_rat> to_rational_spec(const seq_spec<S>& spec) {
    if constexpr (std::is_same_v<S, big_rat>) {
        return spec;
    } else {
        return {spec.kind, big_rat(spec.s), big_rat(spec.t),
                {big_rat(spec.seeds[0]), big_rat(spec.seeds[1]), big_rat(spec.seeds[2])}};
    }
}

/// One spinor channel of the inverse-seeded determinant: a lower Hessenberg
/// matrix over hyperbolic rationals whose first rows hold +-seed values and
/// 1/w0, and whose tail rows carry (t, -s) under a unit superdiagonal.
hyper<big_rat> cereceda_channel(const hyper<big_rat>& w0, const hyper<big_rat>& w1,
                                const hyper<big_rat>& w2, const big_rat& s, const big_rat& t,
                                index_t n);

} // namespace detail

/// Term via the determinant construction whose second row needs 1/psi_0
/// componentwise.  Returns nullopt when either component of psi_0 is on the
/// null cone (true for both classic kinds), instead of inventing a value.
template <class S>
std::optional<spinor<S>> term_det_cereceda(const seq_spec<S>& spec, index_t n) {
    detail::require_index(n, 0, "term_det_cereceda");
    const seq_spec<big_rat> rat = detail::to_rational_spec(spec);
    const auto seeds = spinor_seeds(rat);
    if (is_null(seeds[0].c1) || is_null(seeds[0].c2)) return std::nullopt;
    spinor<big_rat> out(
        detail::cereceda_channel(seeds[0].c1, seeds[1].c1, seeds[2].c1, rat.s, rat.t, n),
        detail::cereceda_channel(seeds[0].c2, seeds[1].c2, seeds[2].c2, rat.s, rat.t, n));
    if constexpr (std::is_same_v<S, big_rat>) {
        return out;
    } else {
        auto as_int = [](const big_rat& v) {
            if (!is_integral(v))
                throw divisibility_violation("determinant produced a non-integer: " + scalar_text(v));
            return big_int(v.get_num());
        };
        return spinor<S>(hyper<S>(as_int(out.c1.re), as_int(out.c1.hy)),
                         hyper<S>(as_int(out.c2.re), as_int(out.c2.hy)));
    }
}

// --- backend dispatch -------------------------------------------------------------

template <class S>
spinor<S> spinor_term(const seq_spec<S>& spec, index_t n, backend_id backend) {
    switch (backend) {
        case backend_id::iter:
            return spinor_term_iter(spec, n);
        case backend_id::matpow:
            return term_matpow(spec, n);
        case backend_id::det_banded:
            return term_det_banded(spec, n);
        case backend_id::det_cereceda: {
            auto r = term_det_cereceda(spec, n);
            if (!r)
                throw unsupported_instance(
                    "det_cereceda needs both components of psi_0 off the null cone");
            return *r;
        }
        case backend_id::binet:
            if constexpr (std::is_same_v<S, big_int>) {
                return round_spinor(spinor_term_binet(spec, n));
            } else {
                throw std::invalid_argument("binet backend needs the integer scalar ring");
            }
    }
    throw std::invalid_argument("unknown backend");
}

/// Drops imaginary residues; display-only helper for float spinors.
inline spinor<double> realify_lossy(const spinor<cplx>& x) {
    return {hyper<double>(x.c1.re.real(), x.c1.hy.real()),
            hyper<double>(x.c2.re.real(), x.c2.hy.real())};
}

// --- generating function ------------------------------------------------------------

/// N(x) / (1 - s x^2 - t x^3) with a spinor-valued numerator of degree <= 2:
/// N = psi0 + psi1 x + (psi2 - s psi0) x^2.
template <class S>
struct gen_function {
    std::array<spinor<S>, 3> numerator;
    S s, t;

    /// Power-series coefficients by the division recurrence
    /// c_k = s c_(k-2) + t c_(k-3) for k >= 3, seeded by the numerator.
    std::vector<spinor<S>> coefficients(index_t count) const {
        std::vector<spinor<S>> out;
        if (count <= 0) return out;
        out.reserve(static_cast<std::size_t>(count));
        out.push_back(numerator[0]);
        if (count > 1) out.push_back(numerator[1]);
        if (count > 2) out.push_back(numerator[2] + s * numerator[0]);
        for (index_t k = 3; k < count; ++k)
            out.push_back(s * out[static_cast<std::size_t>(k - 2)] +
                          t * out[static_cast<std::size_t>(k - 3)]);
        return out;
    }
};

template <class S>
gen_function<S> make_gen_function(const seq_spec<S>& spec) {
    if (spec.kind == seq_kind::custom)
        throw std::invalid_argument("generating function is defined for the named kinds");
    const auto seeds = spinor_seeds(spec);
    return {{seeds[0], seeds[1], seeds[2] - spec.s * seeds[0]}, spec.s, spec.t};
}

template <class S>
std::vector<spinor<S>> gf_coefficients(const seq_spec<S>& spec, index_t count) {
    if (count < 1) throw std::invalid_argument("gf_coefficients needs count >= 1");
    return make_gen_function(spec).coefficients(count);
}

// --- exponential / Poisson generating function -----------------------------------------

struct egf_result {
    spinor<double> closed;   ///< closed form from roots and Binet constants
    spinor<double> series;   ///< truncated series, exact terms floated late
    double max_deviation;    ///< componentwise |closed - series|, max over 4 channels
    double tail_bound;       ///< analytic bound on the truncation error
};

/// Evaluates the exponential generating function (optionally Poisson-damped
/// by e^-y) both ways.  |y| <= 20 is the documented double-precision window.
egf_result egf_eval(const seq_spec<big_int>& spec, double y, bool poisson, index_t terms,
                    double rel_tol = 1e-9);

// --- digests ------------------------------------------------------------------------------

/// FNV-1a (64-bit) over the canonical text rendering; stable across runs and
/// platforms because the rendering is canonical decimal.
inline std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

template <class S>
std::string spinor_digest(const spinor<S>& x) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(render(x))));
    return buf;
}

// --- cross-check ---------------------------------------------------------------------------

struct disagreement {
    std::string backend_a, backend_b;
    index_t n;
    std::string lhs, rhs;
};

struct check_result {
    bool ok = true;
    std::vector<std::string> notes;
    std::optional<disagreement> failure;
};

/// Asserts that every requested backend reproduces the iteration backend on
/// 0..n_max: exact backends value-for-value, binet after rounding inside its
/// trusted index range.  Unsupported combinations are skipped with a note.
template <class S>
check_result cross_check(const seq_spec<S>& spec, index_t n_max,
                         const std::vector<backend_id>& backends, double rel_tol = 1e-9) {
    detail::require_index(n_max, 0, "cross_check");
    if (backends.empty()) throw std::invalid_argument("cross_check needs at least one backend");
    check_result result;

    // reference terms in one pass
    auto table = seq_table(spec, n_max + 4);
    auto reference = [&](index_t n) {
        auto at = [&](index_t k) -> const S& { return table[static_cast<std::size_t>(k)]; };
        return spinor<S>(hyper<S>(at(n), at(n + 3)), hyper<S>(S(-at(n + 1)), at(n + 2)));
    };

    for (backend_id b : backends) {
        if (b == backend_id::iter) continue;
        if (b == backend_id::binet) {
            if constexpr (std::is_same_v<S, big_int>) {
                if (!spec.classic()) {
                    result.notes.push_back("binet: skipped (no closed form for this spec)");
                    continue;
                }
                const index_t top = std::min(n_max, binet_trusted_max);
                for (index_t n = 0; n <= top; ++n) {
                    const spinor<cplx> approx = spinor_term_binet(spec, n);
                    const spinor<S> want = reference(n);
                    const cplx channels[4] = {approx.c1.re, approx.c1.hy, approx.c2.re, approx.c2.hy};
                    const double wanted[4] = {to_double(want.c1.re), to_double(want.c1.hy),
                                              to_double(want.c2.re), to_double(want.c2.hy)};
                    bool within = true;
                    for (int c = 0; c < 4; ++c)
                        within = within && std::abs(channels[c] - cplx(wanted[c])) <=
                                               rel_tol * std::max(1.0, std::fabs(wanted[c]));
                    if (!within || round_spinor(approx, rel_tol) != want) {
                        result.ok = false;
                        result.failure = {"iter", "binet", n, render(want),
                                          render(realify_lossy(approx))};
                        return result;
                    }
                }
                if (n_max > top)
                    result.notes.push_back("binet: compared up to n=" + std::to_string(top) +
                                           " (documented precision bound)");
            } else {
                result.notes.push_back("binet: skipped (integer ring only)");
            }
            continue;
        }
        if (b == backend_id::det_cereceda) {
            if (!term_det_cereceda(spec, 0)) {
                result.notes.push_back("det_cereceda: skipped (psi_0 has a null component)");
                continue;
            }
        }
        for (index_t n = 0; n <= n_max; ++n) {
            spinor<S> got;
            if (b == backend_id::det_cereceda) {
                got = *term_det_cereceda(spec, n);
            } else {
                got = spinor_term(spec, n, b);
            }
            const spinor<S> want = reference(n);
            if (got != want) {
                result.ok = false;
                result.failure = {"iter", to_string(b), n, render(want), render(got)};
                return result;
            }
        }
    }
    return result;
}

// --- benchmark harness ----------------------------------------------------------------------

struct bench_record {
    backend_id backend;
    index_t n;
    std::vector<long long> wall_ns; ///< one sample per repetition
    std::string digest;             ///< digest of the canonical rendering

    long long min_ns() const { return *std::min_element(wall_ns.begin(), wall_ns.end()); }
    long long median_ns() const {
        std::vector<long long> s = wall_ns;
        std::sort(s.begin(), s.end());
        return s[s.size() / 2];
    }
};

struct bench_run {
    std::vector<bench_record> records;
    std::vector<std::string> notes;
};

/// Times each (backend, n) pair after verifying that all exact backends agree
/// digest-for-digest at that n.  Guarded combinations are skipped with notes.
template <class S>
bench_run benchmark_run(const seq_spec<S>& spec, const std::vector<index_t>& n_values,
                        const std::vector<backend_id>& backends, int repetitions) {
    if (repetitions < 3) throw std::invalid_argument("benchmark_run needs repetitions >= 3");
    if (backends.empty()) throw std::invalid_argument("benchmark_run needs at least one backend");
    bench_run run;

    auto evaluate = [&](backend_id b, index_t n) { return spinor_term(spec, n, b); };

    for (index_t n : n_values) {
        detail::require_index(n, 0, "benchmark_run");
        std::vector<backend_id> active;
        for (backend_id b : backends) {
            if ((b == backend_id::det_banded || b == backend_id::det_cereceda) && n > det_bench_max) {
                run.notes.push_back(to_string(b) + ": skipped at n=" + std::to_string(n) +
                                    " (cost guard n <= " + std::to_string(det_bench_max) + ")");
                continue;
            }
            if (b == backend_id::binet) {
                if (!std::is_same_v<S, big_int> || !spec.classic()) {
                    run.notes.push_back("binet: skipped (no closed form for this spec)");
                    continue;
                }
                if (n > binet_trusted_max) {
                    run.notes.push_back("binet: skipped at n=" + std::to_string(n) +
                                        " (documented precision bound n <= " +
                                        std::to_string(binet_trusted_max) + ")");
                    continue;
                }
            }
            if (b == backend_id::det_cereceda && !term_det_cereceda(spec, 0)) {
                run.notes.push_back("det_cereceda: skipped (psi_0 has a null component)");
                continue;
            }
            active.push_back(b);
        }
        if (active.empty()) continue;

        // digest agreement before any timing is reported
        std::vector<std::string> digests;
        for (backend_id b : active) digests.push_back(spinor_digest(evaluate(b, n)));
        for (std::size_t i = 1; i < active.size(); ++i) {
            if (digests[i] != digests[0])
                throw backend_disagreement(to_string(active[0]), to_string(active[i]),
                                           n, digests[0], digests[i]);
        }

        for (std::size_t i = 0; i < active.size(); ++i) {
            bench_record rec{active[i], n, {}, digests[i]};
            rec.wall_ns.reserve(static_cast<std::size_t>(repetitions));
            for (int rep = 0; rep < repetitions; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                const spinor<S> value = evaluate(active[i], n);
                const auto stop = std::chrono::steady_clock::now();
                if (spinor_digest(value) != digests[i])
                    throw backend_disagreement(to_string(active[i]), to_string(active[i]), n,
                                               digests[i], spinor_digest(value));
                rec.wall_ns.push_back(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
            }
            run.records.push_back(std::move(rec));
        }
    }
    return run;
}

/// CSV with one row per repetition: backend,n,rep,wall_ns,digest.
std::string bench_csv(const bench_run& run);

// --- identity audit ----------------------------------------------------------------------

struct audit_counterexample {
    index_t n;
    spinor<big_int> lhs, rhs;
};

struct audit_entry {
    std::string id;
    index_t lo = 0, hi = 0;
    bool exact = false;
    std::optional<audit_counterexample> counterexample;
};

struct audit_report {
    index_t n_max = 0;
    std::vector<audit_entry> entries;
};

/// Evaluates both sides of every registered identity exactly over its valid
/// index range up to n_max.  A mismatch records the smallest failing index
/// with both values; it is a finding, not a failure.
audit_report identity_audit(index_t n_max);

ordered_json to_json(const audit_report& report);
std::string render_table(const audit_report& report);

} // namespace splitspin
