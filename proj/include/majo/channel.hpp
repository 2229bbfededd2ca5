#ifndef MAJO_CHANNEL_HPP
#define MAJO_CHANNEL_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "majo/linalg.hpp"

namespace majo {

// Classical channel (p_{y|x}): columns are the conditional output
// distributions, each summing to 1. Stored column-sorted non-increasing with
// the sorting permutations retained.
struct ChannelMatrix {
    Mat P;                        // column-sorted form
    std::vector<Perm> col_perms;  // original row index -> sorted position, per column

    explicit ChannelMatrix(const Mat& raw);
    std::size_t outputs() const { return P.rows; }
    std::size_t inputs() const { return P.cols; }
};

ChannelMatrix identity_channel(std::size_t d);
ChannelMatrix randomizing_channel(std::size_t d);
// Kronecker product of transition matrices.
ChannelMatrix tensor_channel(const ChannelMatrix& a, const ChannelMatrix& b);

// Channel game (t_{wz}): non-negative, every column sum <= 1.
struct ChanGameSpec {
    Mat T;

    explicit ChanGameSpec(Mat t);
};

struct ChanWitness {
    struct Term {
        Perm V;  // output permutation
        Mat S;   // input pre-processing, sub-stochastic
    };
    std::vector<Term> terms;
};

struct DistinguishingChanGame {
    ChanGameSpec game;  // Prob(M) > Prob(N) on this game
};

struct ChanPayoffResult {
    Rat value;
    std::vector<std::size_t> strategy;  // optimal input per z, ties to smallest x
};

// Prob_T(M) = sum_z max_x r_z . p_x with r_z = u_apply(t_z).
ChanPayoffResult chan_payoff(const ChannelMatrix& M, const ChanGameSpec& T);

// Single-column game: max_x game_payoff(p_x, t).
Rat vector_game_payoff(const ChannelMatrix& M, const SubDistribution& t);

struct ChanMajResult {
    bool verdict;  // true iff M ~< N (N simulates M)
    std::variant<ChanWitness, DistinguishingChanGame> proof;
};

// Decides M ~< N by exact LP feasibility of U^T Q <= U^T P S over
// sub-stochastic S; proofs re-verified exactly. Output dimensions are
// padded with zero rows to a common size.
ChanMajResult chan_majorizes(const ChannelMatrix& M, const ChannelMatrix& N);

// Checks sum_z S_z column stochastic and sum_z V_z P S_z == Q exactly
// (sorted-form matrices, common output padding).
bool verify_chan_witness(const ChanWitness& w, const ChannelMatrix& M, const ChannelMatrix& N);

bool verify_chan_distinguishing(const DistinguishingChanGame& g, const ChannelMatrix& M,
                                const ChannelMatrix& N);

// f_P(N) = sum_k max_x sum_y q_{y|k} p_{y|x} over the sorted columns of the
// reference channel P and of N; exact.
Rat f_monotone(const ChannelMatrix& N, const ChannelMatrix& P);

}  // namespace majo

#endif
