#ifndef MAJO_SIM_HPP
#define MAJO_SIM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "majo/channel.hpp"
#include "majo/conditional.hpp"
#include "majo/linalg.hpp"

namespace majo {

// SplitMix64: 64-bit state, one mixing pass per draw. Trials run in fixed
// blocks with per-block derived seeds so transcripts merge associatively and
// reproduce bit-identically for a given seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // 53-bit mantissa uniform in [0, 1).
    double uniform();
    // Inverse-CDF sample from non-negative weights; returns weights.size()
    // when the residual mass 1 - sum(weights) is hit.
    std::size_t sample(const std::vector<double>& weights);
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t block);

struct SimConfig {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct SimResult {
    std::uint64_t wins = 0;
    std::uint64_t trials = 0;
    double estimate = 0;
    double std_error = 0;
};

SimResult simulate_dice_game(const ProbVector& p, const SubDistribution& t, const SimConfig& cfg);

// Strategy defaults to the optimal one from cond_payoff; an override maps
// each revealed x to a game column z.
SimResult simulate_cond_game(const JointDistribution& P, const CondGameSpec& T,
                             const SimConfig& cfg,
                             const std::optional<std::vector<std::size_t>>& strategy = {});

// Strategy maps each announced z to a channel input x.
SimResult simulate_chan_game(const ChannelMatrix& M, const ChanGameSpec& T, const SimConfig& cfg,
                             const std::optional<std::vector<std::size_t>>& strategy = {});

}  // namespace majo

#endif
