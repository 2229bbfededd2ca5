#include "majo/decomp.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace majo {

DoublyStochastic::DoublyStochastic(Mat m) : mat(std::move(m)) {
    if (mat.rows != mat.cols)
        throw std::invalid_argument("DoublyStochastic: matrix not square");
    for (const Rat& x : mat.a)
        if (x < 0) throw std::invalid_argument("DoublyStochastic: negative entry");
    for (std::size_t i = 0; i < mat.rows; ++i) {
        if (vec_sum(mat.row(i)) != 1)
            throw std::invalid_argument("DoublyStochastic: row sum != 1");
        if (vec_sum(mat.col(i)) != 1)
            throw std::invalid_argument("DoublyStochastic: column sum != 1");
    }
}

NotMajorizedError::NotMajorizedError(std::size_t k)
    : std::invalid_argument("hlp_transfer: partial-sum condition fails at prefix " +
                            std::to_string(k)),
      violated_prefix(k) {}

std::size_t majorization_defect(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("majorization_defect: dimension mismatch");
    std::vector<Rat> as = sort_desc(a).sorted, bs = sort_desc(b).sorted;
    Rat sa = 0, sb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += as[k];
        sb += bs[k];
        if (sb > sa) return k + 1;
        if (k + 1 == a.size() && sb != sa) return k + 1;
    }
    return 0;
}

DoublyStochastic hlp_transfer(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (std::size_t k = majorization_defect(a, b)) throw NotMajorizedError(k);
    const std::size_t n = a.size();
    SortResult sa = sort_desc(a), sb = sort_desc(b);

    // T-transform chain on the sorted vectors.
    std::vector<Rat> cur = sa.sorted;
    const std::vector<Rat>& tgt = sb.sorted;
    Mat d = identity_mat(n);
    for (;;) {
        // Largest j with cur_j > tgt_j, then smallest k > j with cur_k < tgt_k.
        std::size_t j = n, kk = n;
        for (std::size_t i = n; i-- > 0;)
            if (cur[i] > tgt[i]) {
                j = i;
                break;
            }
        if (j == n) break;  // cur == tgt
        for (std::size_t i = j + 1; i < n; ++i)
            if (cur[i] < tgt[i]) {
                kk = i;
                break;
            }
        Rat delta = std::min(Rat(cur[j] - tgt[j]), Rat(tgt[kk] - cur[kk]));
        Rat t = delta / (cur[j] - cur[kk]);
        Mat tt = identity_mat(n);
        tt(j, j) = 1 - t;
        tt(kk, kk) = 1 - t;
        tt(j, kk) = t;
        tt(kk, j) = t;
        d = mat_mul(d, tt);
        cur[j] -= delta;
        cur[kk] += delta;
    }

    // b = a P_a D_s P_b^{-1}.
    Mat full = mat_mul(perm_matrix(sa.perm), mat_mul(d, perm_matrix(invert_perm(sb.perm))));
    if (vec_mat(a, full) != b) throw std::logic_error("hlp_transfer: reconstruction failed");
    return DoublyStochastic(std::move(full));
}

namespace {

// Kuhn augmenting-path matching over the support {R[i][j] >= tau}.
bool try_kuhn(const Mat& r, const Rat& tau, std::size_t row, std::vector<std::size_t>& match_col,
              std::vector<bool>& used) {
    for (std::size_t j = 0; j < r.cols; ++j) {
        if (used[j] || r(row, j) < tau || r(row, j) == 0) continue;
        used[j] = true;
        if (match_col[j] == r.cols || try_kuhn(r, tau, match_col[j], match_col, used)) {
            match_col[j] = row;
            return true;
        }
    }
    return false;
}

bool perfect_matching(const Mat& r, const Rat& tau, Perm& out) {
    const std::size_t n = r.rows;
    std::vector<std::size_t> match_col(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> used(n, false);
        if (!try_kuhn(r, tau, i, match_col, used)) return false;
    }
    out.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) out[match_col[j]] = j;
    return true;
}

}  // namespace

BirkhoffDecomposition birkhoff(const DoublyStochastic& d) {
    const std::size_t n = d.dim();
    Mat r = d.mat;
    Rat remaining = 1;
    BirkhoffDecomposition dec;
    while (remaining > 0) {
        // Bottleneck choice: the largest threshold still admitting a perfect
        // matching keeps the term count within (n-1)^2 + 1.
        std::set<Rat, std::greater<Rat>> values;
        for (const Rat& x : r.a)
            if (x > 0) values.insert(x);
        Perm pi;
        bool found = false;
        for (const Rat& tau : values)
            if (perfect_matching(r, tau, pi)) {
                found = true;
                break;
            }
        if (!found) throw std::logic_error("birkhoff: no perfect matching on support");
        Rat theta = r(0, pi[0]);
        for (std::size_t i = 1; i < n; ++i) theta = std::min(theta, Rat(r(i, pi[i])));
        for (std::size_t i = 0; i < n; ++i) r(i, pi[i]) -= theta;
        dec.terms.push_back({theta, pi});
        remaining -= theta;
    }
    if (birkhoff_reconstruct(dec, n) != d.mat)
        throw std::logic_error("birkhoff: reconstruction failed");
    return dec;
}

Mat birkhoff_reconstruct(const BirkhoffDecomposition& dec, std::size_t n) {
    Mat acc(n, n);
    for (const auto& term : dec.terms)
        for (std::size_t i = 0; i < n; ++i) acc(i, term.perm[i]) += term.weight;
    return acc;
}

}  // namespace majo
