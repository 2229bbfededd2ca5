#include <doctest.h>

#include <random>

#include "majo/majorization.hpp"
#include "test_util.hpp"

using namespace majo;
using majo::testutil::Rng;

namespace {

const ProbVector& demo_p() {
    static ProbVector p({rat(1, 2), rat(1, 2), rat(0)});
    return p;
}
const ProbVector& demo_q() {
    static ProbVector q({rat(2, 3), rat(1, 6), rat(1, 6)});
    return q;
}

SubDistribution indicator(std::size_t w, std::size_t dim) {
    std::vector<Rat> t(dim, Rat(0));
    t[w - 1] = 1;
    return SubDistribution(std::move(t));
}

}  // namespace

TEST_CASE("ky_fan on a worked pair") {
    CHECK(ky_fan(demo_p(), 2) == 1);
    CHECK(ky_fan(demo_q(), 1) == rat(2, 3));
    CHECK(ky_fan(demo_q(), 2) == rat(5, 6));
    CHECK(ky_fan(demo_p(), 3) == 1);
    CHECK(ky_fan(demo_p(), 7) == 1);  // w past the dimension
    CHECK_THROWS_AS(ky_fan(demo_p(), 0), std::invalid_argument);
}

TEST_CASE("game_payoff") {
    // Indicator games collapse to Ky-Fan norms.
    for (std::size_t w = 1; w <= 3; ++w)
        CHECK(game_payoff(demo_q(), indicator(w, 3)) == ky_fan(demo_q(), w));
    CHECK(game_payoff(demo_q(), SubDistribution({rat(1, 2), rat(1, 2)})) == rat(3, 4));
    CHECK(game_payoff(demo_q(), SubDistribution({rat(0), rat(0), rat(0)})) == 0);
}

TEST_CASE("an incomparable pair") {
    CHECK_FALSE(majorizes(demo_p(), demo_q()));
    CHECK_FALSE(majorizes(demo_q(), demo_p()));
    CHECK(majorization_violation(demo_p(), demo_q()) == 1);  // q wins the w=1 game
    CHECK(majorization_violation(demo_q(), demo_p()) == 2);  // p wins the w=2 game
}

TEST_CASE("uniform is the minimum") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = 2 + trial % 4;
        ProbVector p = testutil::rand_prob(rng, d);
        ProbVector u(std::vector<Rat>(d, Rat(1, static_cast<unsigned long>(d))));
        CHECK(majorizes(p, u));
    }
}

TEST_CASE("majorizes agrees with a sampled-game oracle") {
    Rng rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t d = 2 + trial % 3;
        ProbVector p = testutil::rand_prob(rng, d);
        ProbVector q = testutil::rand_prob(rng, d + trial % 2);
        bool verdict = majorizes(p, q);
        if (verdict) {
            // No sampled game may contradict a true verdict.
            for (int g = 0; g < (trial < 100 ? 100 : 5); ++g) {
                SubDistribution t = testutil::rand_subdist(rng, std::max(p.dim(), q.dim()));
                CHECK(game_payoff(q, t) <= game_payoff(p, t));
            }
        } else {
            auto w = majorization_violation(p, q);
            REQUIRE(w.has_value());
            CHECK(ky_fan(q, *w) > ky_fan(p, *w));
        }
    }
}

TEST_CASE("pre-order laws on random triples") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        ProbVector a = testutil::rand_prob(rng, 4);
        ProbVector b = testutil::rand_prob(rng, 4);
        ProbVector c = testutil::rand_prob(rng, 4);
        CHECK(majorizes(a, a));  // reflexive
        if (majorizes(a, b) && majorizes(b, c)) CHECK(majorizes(a, c));
    }
}

TEST_CASE("permutation invariance") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        ProbVector p = testutil::rand_prob(rng, 4);
        ProbVector q = testutil::rand_prob(rng, 4);
        Perm s = testutil::rand_perm(rng, 4);
        ProbVector ps(apply_perm(s, p.p));
        CHECK(majorizes(p, q) == majorizes(ps, q));
        CHECK(majorizes(q, p) == majorizes(q, ps));
    }
}

TEST_CASE("ky_fan increments are non-increasing in w") {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        ProbVector p = testutil::rand_prob(rng, 5);
        Rat prev_inc = ky_fan(p, 1);
        for (std::size_t w = 2; w <= 6; ++w) {
            Rat inc = ky_fan(p, w) - ky_fan(p, w - 1);
            CHECK(inc >= 0);
            CHECK(inc <= prev_inc);
            prev_inc = inc;
        }
    }
}

TEST_CASE("tensor games: resources never reverse the pre-order") {
    ProbVector point({rat(1), rat(0)});
    ProbVector u2({rat(1, 2), rat(1, 2)});
    CHECK(tensor_game_payoff(u2, u2, 2) == rat(1, 2));
    Rng rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        ProbVector p = testutil::rand_prob(rng, 3);
        ProbVector s = testutil::rand_prob(rng, 3);
        // Tensoring with a point mass changes nothing.
        for (std::size_t w = 1; w <= 3; ++w)
            CHECK(tensor_game_payoff(p, point, w) == ky_fan(p, w));
        ProbVector q = testutil::rand_prob(rng, 3);
        if (majorizes(p, q))
            for (std::size_t w = 1; w <= 9; ++w)
                CHECK(tensor_game_payoff(p, s, w) >= tensor_game_payoff(q, s, w));
    }
}
