#include "majo/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace majo {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kBlock = 4096;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<double> to_doubles(const std::vector<Rat>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat_to_double(v[i]);
    return out;
}

// Distribution sample (weights sum to 1): clamps fp residue to the last
// positive index.
std::size_t sample_dist(SplitMix64& g, const std::vector<double>& w) {
    double u = g.uniform();
    double acc = 0;
    std::size_t last = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] <= 0) continue;
        acc += w[i];
        last = i;
        if (u < acc) return i;
    }
    return last;
}

SimResult finish(std::uint64_t wins, std::uint64_t trials) {
    SimResult r;
    r.wins = wins;
    r.trials = trials;
    r.estimate = static_cast<double>(wins) / static_cast<double>(trials);
    r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(trials));
    return r;
}

template <typename TrialFn>
SimResult run_blocks(const SimConfig& cfg, TrialFn&& trial) {
    if (cfg.trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
    std::uint64_t wins = 0;
    std::uint64_t done = 0;
    for (std::uint64_t block = 0; done < cfg.trials; ++block) {
        SplitMix64 g(mix_seed(cfg.seed, block));
        std::uint64_t count = std::min(kBlock, cfg.trials - done);
        for (std::uint64_t i = 0; i < count; ++i)
            if (trial(g)) ++wins;
        done += count;
    }
    return finish(wins, cfg.trials);
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state += kGolden;
    return mix64(state);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t SplitMix64::sample(const std::vector<double>& weights) {
    double u = uniform();
    double acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size();  // residual mass: no game
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t block) {
    return mix64(seed ^ ((block + 1) * kGolden));
}

SimResult simulate_dice_game(const ProbVector& p, const SubDistribution& t,
                             const SimConfig& cfg) {
    std::vector<double> td = to_doubles(t.t);
    std::vector<double> pd = to_doubles(sort_desc(p.p).sorted);
    return run_blocks(cfg, [&](SplitMix64& g) {
        std::size_t k = g.sample(td);  // w = k + 1; residual index = loss
        std::size_t y = sample_dist(g, pd);
        return k < td.size() && y <= k;
    });
}

SimResult simulate_cond_game(const JointDistribution& P, const CondGameSpec& T,
                             const SimConfig& cfg,
                             const std::optional<std::vector<std::size_t>>& strategy) {
    std::vector<std::size_t> f = strategy ? *strategy : cond_payoff(P, T).strategy;
    if (f.size() != P.m()) throw std::invalid_argument("simulate_cond_game: bad strategy size");
    for (std::size_t z : f)
        if (z >= T.T.cols) throw std::invalid_argument("simulate_cond_game: strategy out of range");

    std::vector<double> rowm(P.m());
    std::vector<std::vector<Rat>> rows(P.m());
    std::vector<std::vector<double>> rowd(P.m());
    for (std::size_t x = 0; x < P.m(); ++x) {
        rows[x] = P.P.row(x);
        Rat mass = vec_sum(rows[x]);
        rowm[x] = rat_to_double(mass);
        rowd[x].assign(P.n(), 0.0);
        if (mass > 0)
            for (std::size_t j = 0; j < P.n(); ++j) rowd[x][j] = rat_to_double(rows[x][j] / mass);
    }
    std::vector<std::vector<double>> cols(T.T.cols);
    for (std::size_t z = 0; z < T.T.cols; ++z) cols[z] = to_doubles(T.T.col(z));

    return run_blocks(cfg, [&](SplitMix64& g) {
        std::size_t x = sample_dist(g, rowm);
        std::size_t y = sample_dist(g, rowd[x]);  // rank within the sorted row
        std::size_t k = g.sample(cols[f[x]]);     // residual index = loss
        return k < cols[f[x]].size() && y <= k;
    });
}

SimResult simulate_chan_game(const ChannelMatrix& M, const ChanGameSpec& T, const SimConfig& cfg,
                             const std::optional<std::vector<std::size_t>>& strategy) {
    Rat total = vec_sum(T.T.a);
    if (total > 1)
        throw std::invalid_argument(
            "simulate_chan_game: total game mass exceeds 1, not a samplable game");
    std::vector<std::size_t> f = strategy ? *strategy : chan_payoff(M, T).strategy;
    if (f.size() != T.T.cols) throw std::invalid_argument("simulate_chan_game: bad strategy size");
    for (std::size_t x : f)
        if (x >= M.inputs()) throw std::invalid_argument("simulate_chan_game: strategy out of range");

    std::vector<double> zm(T.T.cols);
    std::vector<std::vector<double>> wcond(T.T.cols);
    for (std::size_t z = 0; z < T.T.cols; ++z) {
        std::vector<Rat> tz = T.T.col(z);
        Rat mass = vec_sum(tz);
        zm[z] = rat_to_double(mass);
        wcond[z].assign(tz.size(), 0.0);
        if (mass > 0)
            for (std::size_t w = 0; w < tz.size(); ++w) wcond[z][w] = rat_to_double(tz[w] / mass);
    }
    std::vector<std::vector<double>> coldist(M.inputs());
    for (std::size_t x = 0; x < M.inputs(); ++x) coldist[x] = to_doubles(M.P.col(x));

    return run_blocks(cfg, [&](SplitMix64& g) {
        std::size_t z = g.sample(zm);  // residual: host never starts a game
        if (z >= zm.size()) return false;
        std::size_t y = sample_dist(g, coldist[f[z]]);  // rank within sorted column
        std::size_t k = sample_dist(g, wcond[z]);       // w = k + 1
        return y <= k;
    });
}

}  // namespace majo
