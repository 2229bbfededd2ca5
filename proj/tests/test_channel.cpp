#include <doctest.h>

#include <random>

#include "majo/channel.hpp"
#include "majo/majorization.hpp"
#include "test_util.hpp"

using namespace majo;
using majo::testutil::Rng;

namespace {

// Independent oracle: enumerate every deterministic strategy z -> x.
Rat brute_chan_payoff(const ChannelMatrix& m, const ChanGameSpec& t) {
    Rat total = 0;
    for (std::size_t z = 0; z < t.T.cols; ++z) {
        std::vector<Rat> r = u_apply(t.T.col(z));
        Rat best = 0;
        for (std::size_t x = 0; x < m.inputs(); ++x) {
            Rat v = 0;
            for (std::size_t y = 0; y < std::min(r.size(), m.outputs()); ++y)
                v += r[y] * m.P(y, x);
            if (x == 0 || v > best) best = v;
        }
        total += best;
    }
    return total;
}

ChannelMatrix chan(std::size_t m, std::size_t n, std::vector<Rat> a) {
    Mat p(m, n);
    p.a = std::move(a);
    return ChannelMatrix(p);
}

ChannelMatrix bsc(const Rat& eps) {
    return chan(2, 2, {1 - eps, eps, eps, 1 - eps});
}

}  // namespace

TEST_CASE("ChannelMatrix normalization") {
    ChannelMatrix c = chan(2, 2, {rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 2)});
    CHECK(c.P(0, 0) == rat(3, 4));
    CHECK(c.P(1, 0) == rat(1, 4));
    CHECK(c.col_perms[0] == Perm{1, 0});
    CHECK(c.col_perms[1] == identity_perm(2));
    CHECK_THROWS_AS(chan(2, 1, {rat(1, 2), rat(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(chan(2, 1, {rat(3, 2), rat(-1, 2)}), std::invalid_argument);
}

TEST_CASE("constructors and tensor products") {
    // Sorted form: every column of the identity collapses onto the top slot.
    for (std::size_t x = 0; x < 3; ++x) CHECK(identity_channel(3).P(0, x) == 1);
    CHECK(identity_channel(3).col_perms[2] == Perm{1, 2, 0});
    ChannelMatrix r = randomizing_channel(2);
    CHECK(r.P(0, 0) == rat(1, 2));
    CHECK(r.inputs() == 2);
    ChannelMatrix t = tensor_channel(identity_channel(2), randomizing_channel(2));
    CHECK(t.outputs() == 4);
    CHECK(t.inputs() == 4);
    for (std::size_t x = 0; x < 4; ++x) CHECK(vec_sum(t.P.col(x)) == 1);
}

TEST_CASE("chan_payoff matches the strategy-enumeration oracle") {
    Rng rng(103);
    for (int trial = 0; trial < 300; ++trial) {
        ChannelMatrix m = testutil::rand_channel(rng, 2 + trial % 3, 2 + trial % 2);
        ChanGameSpec t(testutil::rand_game_matrix(rng, 2 + trial % 3, 1 + trial % 3));
        ChanPayoffResult res = chan_payoff(m, t);
        CHECK(res.value == brute_chan_payoff(m, t));
        Rat v = 0;
        for (std::size_t z = 0; z < t.T.cols; ++z) {
            std::vector<Rat> r = u_apply(t.T.col(z));
            for (std::size_t y = 0; y < std::min(r.size(), m.outputs()); ++y)
                v += r[y] * m.P(y, res.strategy[z]);
        }
        CHECK(v == res.value);
    }
}

TEST_CASE("vector_game_payoff: binary symmetric channel with a w=1 game") {
    // A single guess-the-output game on BSC(1/4): best input gives 3/4.
    CHECK(vector_game_payoff(bsc(rat(1, 4)), SubDistribution({rat(1), rat(0)})) == rat(3, 4));
    // Guessing the bottom slot wins whenever either output occurs.
    CHECK(vector_game_payoff(bsc(rat(1, 4)), SubDistribution({rat(0), rat(1)})) == 1);
}

TEST_CASE("identity is the top and randomizing the bottom") {
    Rng rng(107);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = 2 + trial % 2, n = 2 + trial % 3;
        ChannelMatrix c = testutil::rand_channel(rng, m, n);
        CHECK(chan_majorizes(c, identity_channel(m)).verdict);
        CHECK(chan_majorizes(randomizing_channel(m), c).verdict);
    }
}

TEST_CASE("chan_majorizes: simulation direction always holds") {
    Rng rng(109);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 2 + trial % 2, n = 2 + trial % 2;
        ChannelMatrix nchan = testutil::rand_channel(rng, m, n);
        // M = V N S: output relabeling after, input mixing before.
        Perm v = testutil::rand_perm(rng, m);
        Mat s = testutil::rand_col_stochastic(rng, n, 2 + trial % 3);
        ChannelMatrix mchan{mat_mul(perm_matrix(v), mat_mul(nchan.P, s))};
        ChanMajResult res = chan_majorizes(mchan, nchan);
        CHECK(res.verdict);
        const auto* w = std::get_if<ChanWitness>(&res.proof);
        REQUIRE(w != nullptr);
        CHECK(verify_chan_witness(*w, mchan, nchan));
    }
}

TEST_CASE("BSC degradation order") {
    // BSC(eps) weakens monotonically toward eps = 1/2.
    CHECK(chan_majorizes(bsc(rat(1, 4)), bsc(rat(1, 8))).verdict);
    CHECK_FALSE(chan_majorizes(bsc(rat(1, 8)), bsc(rat(1, 4))).verdict);
    CHECK(chan_majorizes(bsc(rat(1, 2)), bsc(rat(1, 3))).verdict);
    // A failed comparison ships a game that separates strictly.
    ChanMajResult res = chan_majorizes(bsc(rat(1, 8)), bsc(rat(1, 4)));
    const auto* g = std::get_if<DistinguishingChanGame>(&res.proof);
    REQUIRE(g != nullptr);
    CHECK(verify_chan_distinguishing(*g, bsc(rat(1, 8)), bsc(rat(1, 4))));
    CHECK(chan_payoff(bsc(rat(1, 8)), g->game).value > chan_payoff(bsc(rat(1, 4)), g->game).value);
}

TEST_CASE("pre-order laws") {
    Rng rng(113);
    for (int trial = 0; trial < 30; ++trial) {
        ChannelMatrix a = testutil::rand_channel(rng, 3, 2);
        ChannelMatrix b = testutil::rand_channel(rng, 3, 2);
        ChannelMatrix c = testutil::rand_channel(rng, 3, 2);
        CHECK(chan_majorizes(a, a).verdict);
        if (chan_majorizes(a, b).verdict && chan_majorizes(b, c).verdict)
            CHECK(chan_majorizes(a, c).verdict);
    }
}

TEST_CASE("f_monotone closed forms and monotonicity") {
    Rng rng(127);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = 2 + trial % 2;
        ChannelMatrix p = testutil::rand_channel(rng, m, 2 + trial % 3);
        // Against the identity reference, f sums the per-column maxima of N's
        // first sorted entries... for N = identity the overlap is maximal.
        Rat f_id = f_monotone(identity_channel(m), p);
        Rat f_rand = f_monotone(randomizing_channel(m), p);
        CHECK(f_id >= f_rand);

        ChannelMatrix n1 = testutil::rand_channel(rng, m, 2);
        ChannelMatrix n2 = testutil::rand_channel(rng, m, 2);
        ChanMajResult res = chan_majorizes(n2, n1);
        if (res.verdict) CHECK(f_monotone(n1, p) >= f_monotone(n2, p));
    }
}

TEST_CASE("f_monotone equals a scaled game payoff") {
    // Columns of the reference channel, pushed through U^-1, form a channel
    // game whose payoff reproduces f exactly after scaling.
    Rng rng(131);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = 2 + trial % 2;
        ChannelMatrix p = testutil::rand_channel(rng, m, 2 + trial % 2);
        ChannelMatrix n = testutil::rand_channel(rng, m, 2 + trial % 3);
        Mat t = mat_mul(u_inverse(m), p.P);  // sorted columns -> non-negative game
        ChanGameSpec game{t};
        CHECK(chan_payoff(n, game).value == f_monotone(n, p));
    }
}

TEST_CASE("output padding: trailing zero output rows are immaterial") {
    ChannelMatrix two = bsc(rat(1, 4));
    ChannelMatrix padded = chan(3, 2, {rat(3, 4), rat(1, 4), rat(1, 4), rat(3, 4), rat(0), rat(0)});
    CHECK(chan_majorizes(two, padded).verdict);
    CHECK(chan_majorizes(padded, two).verdict);
}
