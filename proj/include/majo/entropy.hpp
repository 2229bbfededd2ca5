#ifndef MAJO_ENTROPY_HPP
#define MAJO_ENTROPY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "majo/channel.hpp"
#include "majo/linalg.hpp"

namespace majo {

// Entropies are reported in bits (base-2 logarithms).
double shannon(const ProbVector& p);

double binary_entropy(double eps);

struct ChannelEntropyResult {
    double bits;
    std::size_t minimizing_input;  // ties to smallest x
};

// H(N) = min over inputs of the Shannon entropy of the output column.
ChannelEntropyResult channel_entropy(const ChannelMatrix& N);

struct AxiomViolation {
    std::string what;
    double lhs = 0, rhs = 0;
};

struct AxiomReport {
    std::size_t monotonicity_checked = 0;
    std::size_t additivity_checked = 0;
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks monotonicity under channel majorization and additivity under tensor
// products at tolerance 1e-12 over the given pairs.
AxiomReport check_entropy_axioms(const std::vector<std::pair<ChannelMatrix, ChannelMatrix>>& pairs);

struct ContinuityReport {
    double epsilon;      // max_x total-variation distance between output columns
    double entropy_gap;  // |H(N) - H(M)|
    double bound;        // eps*log2(m-1) + h2(eps)
    bool holds;
};

// Fannes-Audenaert style bound applied to the minimizing columns; valid for
// epsilon <= 1 - 1/m.
ContinuityReport continuity_bound_check(const ChannelMatrix& N, const ChannelMatrix& M);

}  // namespace majo

#endif
