#ifndef MAJO_DECOMP_HPP
#define MAJO_DECOMP_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "majo/linalg.hpp"

namespace majo {

struct DoublyStochastic {
    Mat mat;

    explicit DoublyStochastic(Mat m);
    std::size_t dim() const { return mat.rows; }
};

struct NotMajorizedError : std::invalid_argument {
    std::size_t violated_prefix;  // first k whose partial-sum test fails (1-based)
    explicit NotMajorizedError(std::size_t k);
};

// b = a D with D a product of at most dim-1 T-transforms plus the sorting
// permutations (row-vector convention). Requires b ~< a with equal totals.
DoublyStochastic hlp_transfer(const std::vector<Rat>& a, const std::vector<Rat>& b);

// Classical majorization test used as hlp_transfer's precondition: prefix
// sums of b-sorted dominated by a-sorted, equality at the full sum.
// Returns 0 when it holds, otherwise the first violated prefix (1-based).
std::size_t majorization_defect(const std::vector<Rat>& a, const std::vector<Rat>& b);

struct BirkhoffDecomposition {
    struct Term {
        Rat weight;
        Perm perm;  // weight * perm_matrix(perm) summed over terms = source
    };
    std::vector<Term> terms;
};

// Greedy bottleneck-matching peeling; term count <= (n-1)^2 + 1 and the
// reconstruction is exact.
BirkhoffDecomposition birkhoff(const DoublyStochastic& d);

Mat birkhoff_reconstruct(const BirkhoffDecomposition& dec, std::size_t n);

}  // namespace majo

#endif
