#include <doctest.h>

#include <cmath>
#include <random>

#include "majo/entropy.hpp"
#include "test_util.hpp"

using namespace majo;
using majo::testutil::Rng;

namespace {

constexpr double kTol = 1e-12;

ChannelMatrix bsc(const Rat& eps) {
    Mat p(2, 2);
    p.a = {1 - eps, eps, eps, 1 - eps};
    return ChannelMatrix(p);
}

}  // namespace

TEST_CASE("shannon entropy closed forms") {
    CHECK(shannon(ProbVector({rat(1), rat(0), rat(0)})) == 0.0);
    CHECK(shannon(ProbVector({rat(1, 2), rat(1, 2)})) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(shannon(ProbVector({rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)})) ==
          doctest::Approx(2.0).epsilon(kTol));
    // H(3/4, 1/4), frozen from an independent 30-digit computation.
    CHECK(std::abs(shannon(ProbVector({rat(3, 4), rat(1, 4)})) -
                   0.811278124459132863909695792039) < kTol);
    // log2(3), frozen from an independent 30-digit computation.
    CHECK(std::abs(shannon(ProbVector({rat(1, 3), rat(1, 3), rat(1, 3)})) -
                   1.58496250072115618145373894395) < kTol);
}

TEST_CASE("binary_entropy") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(kTol));
    // h2(1/10), frozen from an independent 30-digit computation.
    CHECK(std::abs(binary_entropy(0.1) - 0.468995593589281221253589330383) < kTol);
    CHECK(std::abs(binary_entropy(0.25) - 0.811278124459132863909695792039) < kTol);
}

TEST_CASE("channel_entropy: minimum over inputs, ties to the smallest") {
    CHECK(channel_entropy(identity_channel(4)).bits == 0.0);
    CHECK(channel_entropy(randomizing_channel(4)).bits == doctest::Approx(2.0).epsilon(kTol));
    CHECK(channel_entropy(identity_channel(4)).minimizing_input == 0);

    Mat p(2, 3);
    p.a = {rat(1, 2), rat(3, 4), rat(1), rat(1, 2), rat(1, 4), rat(0)};
    ChannelEntropyResult r = channel_entropy(ChannelMatrix(p));
    CHECK(r.bits == 0.0);
    CHECK(r.minimizing_input == 2);

    CHECK(std::abs(channel_entropy(bsc(rat(1, 4))).bits - 0.811278124459132863909695792039) < kTol);
    CHECK(channel_entropy(bsc(rat(1, 4))).minimizing_input == 0);
}

TEST_CASE("entropy is monotone under channel majorization (spot checks)") {
    Rng rng(137);
    for (int trial = 0; trial < 30; ++trial) {
        ChannelMatrix a = testutil::rand_channel(rng, 3, 2);
        ChannelMatrix b = testutil::rand_channel(rng, 3, 2);
        if (chan_majorizes(a, b).verdict)
            CHECK(channel_entropy(b).bits <= channel_entropy(a).bits + kTol);
    }
}

TEST_CASE("entropy is additive under tensor products") {
    Rng rng(139);
    for (int trial = 0; trial < 30; ++trial) {
        ChannelMatrix a = testutil::rand_channel(rng, 2 + trial % 2, 2);
        ChannelMatrix b = testutil::rand_channel(rng, 2, 2 + trial % 2);
        double lhs = channel_entropy(tensor_channel(a, b)).bits;
        double rhs = channel_entropy(a).bits + channel_entropy(b).bits;
        CHECK(std::abs(lhs - rhs) < kTol);
    }
}

TEST_CASE("check_entropy_axioms") {
    Rng rng(149);
    std::vector<std::pair<ChannelMatrix, ChannelMatrix>> pairs;
    for (int i = 0; i < 10; ++i) {
        // Degraded pairs so the monotonicity leg actually fires.
        ChannelMatrix n = testutil::rand_channel(rng, 3, 2);
        Mat s = testutil::rand_col_stochastic(rng, 2, 2);
        pairs.emplace_back(ChannelMatrix(mat_mul(n.P, s)), n);
    }
    AxiomReport rep = check_entropy_axioms(pairs);
    CHECK(rep.ok());
    CHECK(rep.monotonicity_checked == 10);
    CHECK(rep.additivity_checked == 10);
}

TEST_CASE("continuity bound") {
    ContinuityReport same = continuity_bound_check(bsc(rat(1, 4)), bsc(rat(1, 4)));
    CHECK(same.epsilon == 0.0);
    CHECK(same.entropy_gap == 0.0);
    CHECK(same.holds);

    ContinuityReport close = continuity_bound_check(bsc(rat(1, 4)), bsc(rat(3, 10)));
    CHECK(close.epsilon == doctest::Approx(0.05).epsilon(kTol));
    CHECK(close.holds);

    Rng rng(151);
    for (int trial = 0; trial < 50; ++trial) {
        ChannelMatrix n = testutil::rand_channel(rng, 4, 3);
        ChannelMatrix m = testutil::rand_channel(rng, 4, 3);
        ContinuityReport rep = continuity_bound_check(n, m);
        if (rep.epsilon <= 1.0 - 1.0 / 4.0) {
            CHECK(rep.holds);
            CHECK(rep.entropy_gap <= rep.bound + kTol);
        }
    }
}
