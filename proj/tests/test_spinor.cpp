#include <doctest.h>

#include <random>

#include "splitspin/render.hpp"
#include "splitspin/spinor.hpp"

using namespace splitspin;

namespace {

using H = hyper<big_int>;
using SP = spinor<big_int>;
using Q = split_quat<big_int>;

const seq_spec<big_int> pad = seq_spec<big_int>::padovan();
const seq_spec<big_int> per = seq_spec<big_int>::perrin();

SP sp(long a, long b, long c, long d) {
    return {H(big_int(a), big_int(b)), H(big_int(c), big_int(d))};
}

std::mt19937_64 rng(0xabcdef);

Q random_quat() {
    std::uniform_int_distribution<long> d(-40, 40);
    return {big_int(d(rng)), big_int(d(rng)), big_int(d(rng)), big_int(d(rng))};
}

} // namespace

TEST_CASE("the map carries the seed quaternions to the printed seed spinors") {
    CHECK(to_spinor(Q(1, 1, 1, 2)) == sp(1, 2, -1, 1));   // first padovan spinor
    CHECK(to_spinor(Q(3, 0, 2, 3)) == sp(3, 3, 0, 2));    // first perrin spinor
    CHECK(to_spinor(Q(0, 0, 0, 0)) == sp(0, 0, 0, 0));
}

TEST_CASE("the map is linear and injective") {
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const Q q = random_quat(), p = random_quat();
        const big_int w(d(rng));
        CHECK(to_spinor(q + p) == to_spinor(q) + to_spinor(p));
        CHECK(to_spinor(w * q) == w * to_spinor(q));
        if (to_spinor(q) == sp(0, 0, 0, 0)) CHECK(q == Q(0, 0, 0, 0));
    }
}

TEST_CASE("sequence spinor terms and seeds") {
    CHECK(spinor_term_iter(pad, 0) == sp(1, 2, -1, 1));
    CHECK(spinor_term_iter(pad, 1) == sp(1, 2, -1, 2));
    CHECK(spinor_term_iter(pad, 2) == sp(1, 3, -2, 2));
    CHECK(spinor_term_iter(pad, 4) == sp(2, 5, -3, 4));
    CHECK(spinor_term_iter(pad, 5) == sp(3, 7, -4, 5));
    CHECK(spinor_term_iter(per, 0) == sp(3, 3, 0, 2));
    CHECK(spinor_term_iter(per, 1) == sp(0, 2, -2, 3));
    CHECK(spinor_term_iter(per, 2) == sp(2, 5, -3, 2));
    CHECK(spinor_term_iter(per, 4) == sp(2, 7, -5, 5));

    const auto seeds = spinor_seeds(per);
    CHECK(seeds[0] == spinor_term_iter(per, 0));
    CHECK(seeds[1] == spinor_term_iter(per, 1));
    CHECK(seeds[2] == spinor_term_iter(per, 2));

    // terms agree with materializing the quaternion and mapping it
    for (const auto& spec : {pad, per})
        for (index_t n = 0; n <= 64; ++n)
            CHECK(spinor_term_iter(spec, n) == to_spinor(seq_quaternion(spec, n)));
}

TEST_CASE("recurrence holds exactly for spinor terms") {
    for (const auto& spec : {pad, per}) {
        const auto table = seq_table(spec, 508);
        auto term = [&](index_t n) {
            auto at = [&](index_t k) { return table[static_cast<std::size_t>(k)]; };
            return SP(H(at(n), at(n + 3)), H(big_int(-at(n + 1)), at(n + 2)));
        };
        for (index_t n = 0; n + 3 <= 500; ++n)
            CHECK(term(n + 3) == spec.s * term(n + 1) + spec.t * term(n));
    }
}

TEST_CASE("C matrix squares to minus the identity") {
    for (int trial = 0; trial < 50; ++trial) {
        const SP x = to_spinor(random_quat());
        CHECK(apply_c(apply_c(x)) == -x);
    }
}

TEST_CASE("conjugation operators at the first padovan spinor") {
    const SP psi0 = spinor_term_iter(pad, 0);
    CHECK(star(psi0) == sp(1, -2, 1, -1));
    CHECK(bar(psi0) == sp(1, -2, -1, -1));
    CHECK(tilde(psi0) == sp(-1, -1, 2, -1));
    CHECK(mate(psi0) == sp(1, 1, 1, -2));
    CHECK(spinor_conjugate(psi0, conj_kind::star) == star(psi0));
    CHECK(spinor_conjugate(psi0, conj_kind::bar) == bar(psi0));
    CHECK(spinor_conjugate(psi0, conj_kind::tilde) == tilde(psi0));
    CHECK(spinor_conjugate(psi0, conj_kind::mate) == mate(psi0));
}

TEST_CASE("star is the image of quaternion conjugation") {
    for (int trial = 0; trial < 200; ++trial) {
        const Q q = random_quat();
        CHECK(star(to_spinor(q)) == to_spinor(conj(q)));
    }
}

TEST_CASE("conjugation matrix relations hold structurally") {
    const H j = H::unit_j();
    for (const auto& spec : {pad, per}) {
        for (index_t n = 0; n <= 200; ++n) {
            const SP x = spinor_term_iter(spec, n);
            CHECK(bar(x) == apply_c(mate(x)));
            CHECK(mate(x) == -(j * tilde(x)));
            CHECK(bar(x) == -(j * apply_c(tilde(x))));
        }
    }
}

TEST_CASE("sum and difference against star and bar reduce to sequence terms") {
    for (const auto& spec : {pad, per}) {
        const auto table = seq_table(spec, 210);
        auto a = [&](index_t k) { return table[static_cast<std::size_t>(k)]; };
        for (index_t n = 0; n <= 200; ++n) {
            const SP x = spinor_term_iter(spec, n);
            CHECK(x + star(x) == SP(H(2 * a(n), 0), H(0, 0)));
            CHECK(x - star(x) == SP(H(0, 2 * a(n + 3)), H(big_int(-2 * a(n + 1)), 2 * a(n + 2))));
            CHECK(x + bar(x) == SP(H(2 * a(n), 0), H(big_int(-2 * a(n + 1)), 0)));
            CHECK(x - bar(x) == SP(H(0, 2 * a(n + 3)), H(0, 2 * a(n + 2))));
            // adding the mate shifts the first component three steps
            const SP pm = x + mate(x);
            CHECK(pm.c1 == H(a(n + 3), a(n + 5)));
            CHECK(pm.c2 == H(a(n) - a(n + 1), a(n + 2) - a(n + 3)));
        }
        for (index_t n = 1; n <= 200; ++n) {
            const SP x = spinor_term_iter(spec, n);
            CHECK(x + tilde(x) == SP(H(big_int(-a(n - 1)), a(n)), H(a(n), a(n - 1))));
        }
    }
}

TEST_CASE("norm matches the quaternion norm along both paths") {
    CHECK(spinor_norm(pad, 0) == big_int(-3));
    CHECK(spinor_norm(per, 0) == big_int(-4));
    for (const auto& spec : {pad, per})
        for (index_t n = 0; n <= 200; ++n)
            CHECK(spinor_norm(spec, n) == norm(seq_quaternion(spec, n)));
}

TEST_CASE("spinor closed form rounds to the exact terms") {
    const auto& roots = padovan_roots();
    const spinor<cplx> A = binet_constant(cplx(roots.alpha, 0.0));
    // first component of the alpha constant is 1 + (alpha+1) j
    CHECK(A.c1.re.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(A.c1.hy.real() == doctest::Approx(roots.alpha + 1.0).epsilon(1e-12));
    CHECK(std::fabs(A.c1.hy.imag()) < 1e-12);

    CHECK(round_spinor(spinor_term_binet(per, 0)) == sp(3, 3, 0, 2));
    CHECK(round_spinor(spinor_term_binet(pad, 5)) == sp(3, 7, -4, 5));
    for (const auto& spec : {pad, per})
        for (index_t n = 0; n <= 30; ++n)
            CHECK(round_spinor(spinor_term_binet(spec, n)) == spinor_term_iter(spec, n));
}

TEST_CASE("partial sums equal their closed forms") {
    CHECK(spinor_partial_sum(pad, 0, sum_stride::all) == sp(1, 2, -1, 1));
    CHECK(spinor_partial_sum_direct(pad, 0, sum_stride::all) == sp(1, 2, -1, 1));
    CHECK(spinor_partial_sum(per, 0, sum_stride::even) == sp(3, 3, 0, 2));
    CHECK(spinor_partial_sum_direct(per, 0, sum_stride::even) == sp(3, 3, 0, 2));
    CHECK(spinor_partial_sum(pad, 3, sum_stride::odd) ==
          spinor_term_iter(pad, 10) - spinor_term_iter(pad, 2));
    CHECK(spinor_partial_sum_direct(pad, 3, sum_stride::odd) == sp(11, 25, -14, 19));

    for (const auto& spec : {pad, per})
        for (auto stride : {sum_stride::all, sum_stride::even, sum_stride::odd})
            for (index_t m = 0; m <= 60; ++m)
                CHECK(spinor_partial_sum(spec, m, stride) ==
                      spinor_partial_sum_direct(spec, m, stride));
}

TEST_CASE("family relations produce the exact counterpart spinor") {
    CHECK(spinor_relation(relation_kind::perrin_from_padovan, 5) == sp(5, 10, -5, 7));
    CHECK(spinor_relation(relation_kind::perrin_from_padovan, 5) == spinor_term_iter(per, 5));
    CHECK(spinor_relation(relation_kind::padovan_from_perrin, 4) == spinor_term_iter(pad, 3));
    CHECK_THROWS_AS(spinor_relation(relation_kind::perrin_from_padovan, 4), index_out_of_range);
    CHECK_THROWS_AS(spinor_relation(relation_kind::padovan_from_perrin, 2), index_out_of_range);

    for (index_t n = 5; n <= 120; ++n)
        CHECK(spinor_relation(relation_kind::perrin_from_padovan, n) == spinor_term_iter(per, n));
    for (index_t n = 3; n <= 120; ++n)
        CHECK(spinor_relation(relation_kind::padovan_from_perrin, n) == spinor_term_iter(pad, n - 1));
}

TEST_CASE("spinor text and json rendering") {
    CHECK(render(spinor_term_iter(pad, 2)) == "[1+3j; -2+2j]");
    CHECK(render(spinor_term_iter(per, 0)) == "[3+3j; 2j]");
    CHECK(render(spinor_term_iter(pad, 0)) == "[1+2j; -1+j]");
    CHECK(to_json(spinor_term_iter(per, 0)).dump() ==
          R"({"c1":{"re":"3","hy":"3"},"c2":{"re":"0","hy":"2"}})");

    // json round-trips through the documented schema
    const auto j = to_json(spinor_term_iter(pad, 7));
    const auto parsed = ordered_json::parse(j.dump());
    CHECK(big_int(parsed["c1"]["re"].get<std::string>()) == seq_term_iter(pad, 7));
    CHECK(big_int(parsed["c1"]["hy"].get<std::string>()) == seq_term_iter(pad, 10));
}
