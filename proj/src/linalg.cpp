#include "majo/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace majo {

std::vector<Rat> Mat::row(std::size_t r) const {
    std::vector<Rat> out(cols);
    for (std::size_t j = 0; j < cols; ++j) out[j] = (*this)(r, j);
    return out;
}

std::vector<Rat> Mat::col(std::size_t c) const {
    std::vector<Rat> out(rows);
    for (std::size_t i = 0; i < rows; ++i) out[i] = (*this)(i, c);
    return out;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& xik = x(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

Mat mat_add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("mat_add: dimension mismatch");
    Mat z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

Mat mat_scale(const Rat& s, const Mat& x) {
    Mat z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = s * x.a[i];
    return z;
}

Mat transpose(const Mat& x) {
    Mat z(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
    return z;
}

Mat identity_mat(std::size_t n) {
    Mat z(n, n);
    for (std::size_t i = 0; i < n; ++i) z(i, i) = 1;
    return z;
}

std::vector<Rat> mat_vec(const Mat& x, const std::vector<Rat>& v) {
    if (x.cols != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Rat> out(x.rows, Rat(0));
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            if (x(i, j) != 0) out[i] += x(i, j) * v[j];
    return out;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& v, const Mat& x) {
    if (x.rows != v.size()) throw std::invalid_argument("vec_mat: dimension mismatch");
    std::vector<Rat> out(x.cols, Rat(0));
    for (std::size_t i = 0; i < x.rows; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < x.cols; ++j)
            if (x(i, j) != 0) out[j] += v[i] * x(i, j);
    }
    return out;
}

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (std::size_t v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

Perm invert_perm(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
    return q;
}

std::vector<Rat> apply_perm(const Perm& p, const std::vector<Rat>& v) {
    if (p.size() != v.size()) throw std::invalid_argument("apply_perm: dimension mismatch");
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[p[i]] = v[i];
    return out;
}

Mat perm_matrix(const Perm& p) {
    if (!is_permutation(p)) throw std::invalid_argument("perm_matrix: not a permutation");
    Mat m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(i, p[i]) = 1;
    return m;
}

SortResult sort_desc(const std::vector<Rat>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
    SortResult res;
    res.sorted.resize(v.size());
    res.perm.resize(v.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        res.sorted[pos] = v[order[pos]];
        res.perm[order[pos]] = pos;
    }
    return res;
}

Mat u_matrix(std::size_t m) {
    if (m < 1) throw std::invalid_argument("u_matrix: dimension must be >= 1");
    Mat u(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) u(i, j) = 1;
    return u;
}

Mat u_inverse(std::size_t m) {
    if (m < 1) throw std::invalid_argument("u_inverse: dimension must be >= 1");
    Mat u(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        u(i, i) = 1;
        if (i + 1 < m) u(i, i + 1) = -1;
    }
    return u;
}

std::vector<Rat> u_apply(const std::vector<Rat>& t) {
    std::vector<Rat> r(t.size());
    Rat acc = 0;
    for (std::size_t i = t.size(); i-- > 0;) {
        acc += t[i];
        r[i] = acc;
    }
    return r;
}

ProbVector::ProbVector(std::vector<Rat> entries) : p(std::move(entries)) {
    for (const Rat& x : p)
        if (x < 0) throw std::invalid_argument("ProbVector: negative entry");
    if (vec_sum(p) != 1)
        throw std::invalid_argument("ProbVector: total mass " + rat_to_string(vec_sum(p)) + " != 1");
}

SubDistribution::SubDistribution(std::vector<Rat> entries) : t(std::move(entries)) {
    for (const Rat& x : t)
        if (x < 0) throw std::invalid_argument("SubDistribution: negative entry");
    if (vec_sum(t) > 1)
        throw std::invalid_argument("SubDistribution: total mass exceeds 1");
}

}  // namespace majo
