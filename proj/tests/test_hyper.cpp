#include <doctest.h>

#include <random>

#include "splitspin/hyper.hpp"
#include "splitspin/render.hpp"

using namespace splitspin;

namespace {

using H = hyper<big_int>;
using HQ = hyper<big_rat>;

std::mt19937_64 rng(0x5eedu);

H random_hyper(long span = 50) {
    std::uniform_int_distribution<long> dist(-span, span);
    return {big_int(dist(rng)), big_int(dist(rng))};
}

} // namespace

TEST_CASE("hyper ring operations are componentwise") {
    const H x(1, 2);
    CHECK(x + x == H(2, 4));
    CHECK(x - x == H(0, 0));
    CHECK(big_int(3) * x == H(3, 6));
    CHECK(-x == H(-1, -2));
}

TEST_CASE("hyper multiplication: j*j = 1 and the null pair annihilates") {
    CHECK(H::unit_j() * H::unit_j() == H(1, 0));
    CHECK(H(1, 1) * H(1, -1) == H(0, 0));
    // j * (-P1 - P2 j) with P1 = P2 = 1 swaps the components
    CHECK(H::unit_j() * H(-1, -1) == H(-1, -1));
    CHECK(H::unit_j() * H(-1, 2) == H(2, -1));
}

TEST_CASE("hyper conjugation is a multiplicative involution") {
    CHECK(conj(H(1, 2)) == H(1, -2));
    CHECK(conj(conj(H(5, -3))) == H(5, -3));
    CHECK(conj(H(1, 1) * H(2, 1)) == H(3, -3));
    CHECK(conj(H(1, 1)) * conj(H(2, 1)) == H(3, -3));
}

TEST_CASE("hyper norm values and the null cone") {
    CHECK(norm(H(1, 2)) == big_int(-3));
    CHECK(norm(H(1, 1)) == big_int(0));
    CHECK(norm(H(3, 0)) == big_int(9));
    CHECK(is_null(H(1, 1)));
    CHECK(is_null(H(2, -2)));
    CHECK(!is_null(H(1, 2)));
}

TEST_CASE("hyper inversion over rationals") {
    const HQ two(big_rat(2), big_rat(0));
    CHECK(inverse(two) == HQ(big_rat(1, 2), big_rat(0)));

    const HQ x(big_rat(1), big_rat(2));
    const HQ inv = inverse(x);
    CHECK(inv == HQ(big_rat(-1, 3), big_rat(2, 3)));
    CHECK(x * inv == HQ(big_rat(1), big_rat(0)));

    CHECK_THROWS_AS(inverse(HQ(big_rat(1), big_rat(1))), non_invertible);
}

TEST_CASE("hyper ring axioms on random triples") {
    for (int trial = 0; trial < 200; ++trial) {
        const H a = random_hyper(), b = random_hyper(), c = random_hyper();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(conj(a * b) == conj(a) * conj(b));
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}

TEST_CASE("idempotent channels split multiplication") {
    // e+- = (1 +- j)/2 are idempotent, orthogonal, and sum to 1
    const HQ ep(big_rat(1, 2), big_rat(1, 2));
    const HQ em(big_rat(1, 2), big_rat(-1, 2));
    CHECK(ep * ep == ep);
    CHECK(em * em == em);
    CHECK(ep * em == HQ(big_rat(0), big_rat(0)));
    CHECK(ep + em == HQ(big_rat(1), big_rat(0)));

    for (int trial = 0; trial < 200; ++trial) {
        const H a = random_hyper(), b = random_hyper();
        CHECK(channel_plus(a * b) == channel_plus(a) * channel_plus(b));
        CHECK(channel_minus(a * b) == channel_minus(a) * channel_minus(b));
    }
}

TEST_CASE("hyper text rendering normalizes signs and unit coefficients") {
    CHECK(render(H(1, -2)) == "1-2j");
    CHECK(render(H(-1, 1)) == "-1+j");
    CHECK(render(H(0, 0)) == "0");
    CHECK(render(H(0, 2)) == "2j");
    CHECK(render(H(0, -1)) == "-j");
    CHECK(render(H(3, 3)) == "3+3j");
    CHECK(render(H(7, 0)) == "7");
    CHECK(render(HQ(big_rat(1, 2), big_rat(-3, 4))) == "1/2-3/4j");
}

TEST_CASE("hyper json uses decimal strings for exact scalars") {
    const ordered_json j = to_json(H(3, -12));
    CHECK(j.dump() == R"({"re":"3","hy":"-12"})");
}
