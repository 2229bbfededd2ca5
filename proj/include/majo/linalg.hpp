#ifndef MAJO_LINALG_HPP
#define MAJO_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "majo/rat.hpp"

namespace majo {

// Dense row-major matrix of exact rationals.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;  // rows * cols entries

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const Mat& o) const = default;

    std::vector<Rat> row(std::size_t r) const;
    std::vector<Rat> col(std::size_t c) const;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_scale(const Rat& s, const Mat& x);
Mat transpose(const Mat& x);
Mat identity_mat(std::size_t n);

// mat * column vector and row vector * mat.
std::vector<Rat> mat_vec(const Mat& x, const std::vector<Rat>& v);
std::vector<Rat> vec_mat(const std::vector<Rat>& v, const Mat& x);

// Permutation stored as an image map: applying perm to v yields w with
// w[perm[i]] = v[i] (perm[i] is the destination of original index i).
using Perm = std::vector<std::size_t>;

bool is_permutation(const Perm& p);
Perm identity_perm(std::size_t n);
Perm invert_perm(const Perm& p);
std::vector<Rat> apply_perm(const Perm& p, const std::vector<Rat>& v);

// Matrix with M[i][perm[i]] = 1, so (row vector v) * M = apply_perm(perm, v).
Mat perm_matrix(const Perm& p);

// Stable non-increasing sort; returned perm maps original index to sorted
// position, ties broken by original index.
struct SortResult {
    std::vector<Rat> sorted;
    Perm perm;
};
SortResult sort_desc(const std::vector<Rat>& v);

// Upper triangular matrix of ones on and above the diagonal.
Mat u_matrix(std::size_t m);
Mat u_inverse(std::size_t m);

// r_x = sum_{k>=x} t_k; suffix sums of t, non-increasing for t >= 0.
std::vector<Rat> u_apply(const std::vector<Rat>& t);

// Finite probability distribution: entries >= 0, total exactly 1.
struct ProbVector {
    std::vector<Rat> p;

    explicit ProbVector(std::vector<Rat> entries);
    std::size_t dim() const { return p.size(); }
};

// Non-negative entries with total <= 1.
struct SubDistribution {
    std::vector<Rat> t;

    explicit SubDistribution(std::vector<Rat> entries);
    std::size_t dim() const { return t.size(); }
    Rat mass() const { return vec_sum(t); }
};

}  // namespace majo

#endif
