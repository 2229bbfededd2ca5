#ifndef MAJO_CONDITIONAL_HPP
#define MAJO_CONDITIONAL_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "majo/linalg.hpp"

namespace majo {

// Correlated source (p_xy): rows indexed by the revealed value x, columns by
// the hidden value y, total mass 1. Stored with each row sorted
// non-increasing; the per-row sorting permutations are retained.
struct JointDistribution {
    Mat P;                        // row-sorted form
    std::vector<Perm> row_perms;  // original column index -> sorted position, per row

    explicit JointDistribution(const Mat& raw);
    std::size_t m() const { return P.rows; }
    std::size_t n() const { return P.cols; }
};

// Conditional game (t_{w|z}): columns t_z, each column sum <= 1.
struct CondGameSpec {
    Mat T;

    explicit CondGameSpec(Mat t);
};

struct CondWitness {
    struct Term {
        Mat S;   // m x m sub-stochastic
        Perm V;  // column permutation of P
    };
    std::vector<Term> terms;
};

struct DistinguishingCondGame {
    CondGameSpec game;  // Prob(Q) > Prob(P) on this game
};

struct CondPayoffResult {
    Rat value;
    std::vector<std::size_t> strategy;  // optimal z per revealed x, ties to smallest z
};

// Prob_T(P) = sum_x max_z r_z . p_x with r_z = u_apply(t_z).
CondPayoffResult cond_payoff(const JointDistribution& P, const CondGameSpec& T);

struct CondMajResult {
    bool verdict;  // true iff P conditionally majorizes Q
    std::variant<CondWitness, DistinguishingCondGame> proof;
};

// Decides Q ~<_c P by exact LP feasibility of QU <= SPU over column
// stochastic S. Both the witness and the distinguishing game are re-verified
// in exact arithmetic before being returned. Inputs of different shapes are
// padded with zero rows/columns.
CondMajResult cond_majorizes(const JointDistribution& P, const JointDistribution& Q);

// Checks sum_z S_z column stochastic and sum_z S_z P V_z == Q exactly
// (sorted-form matrices).
bool verify_cond_witness(const CondWitness& w, const JointDistribution& P,
                         const JointDistribution& Q);

bool verify_cond_distinguishing(const DistinguishingCondGame& g, const JointDistribution& P,
                                const JointDistribution& Q);

}  // namespace majo

#endif
