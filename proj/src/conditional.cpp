#include "majo/conditional.hpp"

#include <algorithm>
#include <stdexcept>

#include "majo/decomp.hpp"
#include "majo/lp.hpp"

namespace majo {

JointDistribution::JointDistribution(const Mat& raw) {
    Rat total = 0;
    for (const Rat& x : raw.a) {
        if (x < 0) throw std::invalid_argument("JointDistribution: negative entry");
        total += x;
    }
    if (total != 1)
        throw std::invalid_argument("JointDistribution: total mass " + rat_to_string(total) +
                                    " != 1");
    P = Mat(raw.rows, raw.cols);
    row_perms.reserve(raw.rows);
    for (std::size_t x = 0; x < raw.rows; ++x) {
        SortResult s = sort_desc(raw.row(x));
        for (std::size_t j = 0; j < raw.cols; ++j) P(x, j) = s.sorted[j];
        row_perms.push_back(std::move(s.perm));
    }
}

CondGameSpec::CondGameSpec(Mat t) : T(std::move(t)) {
    for (const Rat& x : T.a)
        if (x < 0) throw std::invalid_argument("CondGameSpec: negative entry");
    for (std::size_t z = 0; z < T.cols; ++z)
        if (vec_sum(T.col(z)) > 1)
            throw std::invalid_argument("CondGameSpec: column sum exceeds 1");
}

CondPayoffResult cond_payoff(const JointDistribution& P, const CondGameSpec& T) {
    std::vector<std::vector<Rat>> r(T.T.cols);
    for (std::size_t z = 0; z < T.T.cols; ++z) r[z] = u_apply(T.T.col(z));
    CondPayoffResult res;
    res.value = 0;
    res.strategy.resize(P.m());
    if (T.T.cols == 0) return res;
    for (std::size_t x = 0; x < P.m(); ++x) {
        std::vector<Rat> px = P.P.row(x);
        Rat best;
        std::size_t best_z = 0;
        for (std::size_t z = 0; z < T.T.cols; ++z) {
            Rat v = dot(r[z], px);  // zero-padded on either side
            if (z == 0 || v > best) {
                best = v;
                best_z = z;
            }
        }
        res.value += best;
        res.strategy[x] = best_z;
    }
    return res;
}

namespace {

// Zero rows and columns appended (sorted order is preserved).
Mat pad_joint(const Mat& p, std::size_t m, std::size_t n) {
    Mat out(m, n);
    for (std::size_t i = 0; i < p.rows; ++i)
        for (std::size_t j = 0; j < p.cols; ++j) out(i, j) = p(i, j);
    return out;
}

void common_shape(const JointDistribution& P, const JointDistribution& Q, Mat& p, Mat& q) {
    std::size_t m = std::max(P.m(), Q.m());
    std::size_t n = std::max(P.n(), Q.n());
    p = pad_joint(P.P, m, n);
    q = pad_joint(Q.P, m, n);
}

}  // namespace

bool verify_cond_witness(const CondWitness& w, const JointDistribution& P,
                         const JointDistribution& Q) {
    Mat p, q;
    common_shape(P, Q, p, q);
    const std::size_t m = p.rows, n = p.cols;
    Mat ssum(m, m), acc(m, n);
    for (const auto& term : w.terms) {
        if (term.S.rows != m || term.S.cols != m || term.V.size() != n) return false;
        if (!is_permutation(term.V)) return false;
        for (const Rat& x : term.S.a)
            if (x < 0) return false;
        ssum = mat_add(ssum, term.S);
        acc = mat_add(acc, mat_mul(term.S, mat_mul(p, perm_matrix(term.V))));
    }
    for (std::size_t x = 0; x < m; ++x)
        if (vec_sum(ssum.col(x)) != 1) return false;
    return acc == q;
}

bool verify_cond_distinguishing(const DistinguishingCondGame& g, const JointDistribution& P,
                                const JointDistribution& Q) {
    return cond_payoff(Q, g.game).value > cond_payoff(P, g.game).value;
}

CondMajResult cond_majorizes(const JointDistribution& P, const JointDistribution& Q) {
    Mat p, q;
    common_shape(P, Q, p, q);
    const std::size_t m = p.rows, n = p.cols;

    // LP over s_{w|x} >= 0 (m*m variables):
    //   for each (w, j):  sum_x (p_x U)_j s_{w|x} >= (q_w U)_j
    //   for each x:       sum_w s_{w|x} = 1
    Mat pu = mat_mul(p, u_matrix(n));
    Mat qu = mat_mul(q, u_matrix(n));
    auto var = [m](std::size_t w, std::size_t x) { return w * m + x; };

    LpFeasibilityProblem prob;
    const std::size_t krows = m * n + m;
    prob.A = Mat(krows, m * m);
    prob.b.assign(krows, Rat(0));
    prob.sense.assign(krows, RowSense::Geq);
    prob.nonneg.assign(m * m, true);
    std::size_t row = 0;
    for (std::size_t w = 0; w < m; ++w)
        for (std::size_t j = 0; j < n; ++j, ++row) {
            for (std::size_t x = 0; x < m; ++x) prob.A(row, var(w, x)) = pu(x, j);
            prob.b[row] = qu(w, j);
        }
    for (std::size_t x = 0; x < m; ++x, ++row) {
        for (std::size_t w = 0; w < m; ++w) prob.A(row, var(w, x)) = 1;
        prob.b[row] = 1;
        prob.sense[row] = RowSense::Eq;
    }

    LpOutcome lp = solve_feasibility(prob);
    CondMajResult res;
    if (lp.status == LpStatus::Feasible) {
        res.verdict = true;
        CondWitness w;
        for (std::size_t wr = 0; wr < m; ++wr) {
            // q_w = (sum_x s_{w|x} p_x) D_w, then D_w split into permutations.
            std::vector<Rat> mix(n, Rat(0));
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t j = 0; j < n; ++j) mix[j] += lp.primal[var(wr, x)] * p(x, j);
            DoublyStochastic dw = hlp_transfer(mix, q.row(wr));
            BirkhoffDecomposition bd = birkhoff(dw);
            for (const auto& term : bd.terms) {
                CondWitness::Term t;
                t.S = Mat(m, m);
                for (std::size_t x = 0; x < m; ++x)
                    t.S(wr, x) = term.weight * lp.primal[var(wr, x)];
                t.V = term.perm;
                w.terms.push_back(std::move(t));
            }
        }
        if (!verify_cond_witness(w, P, Q))
            throw std::logic_error("cond_majorizes: witness verification failed");
        res.proof = std::move(w);
    } else {
        res.verdict = false;
        // Farkas multipliers on the inequality rows become the columns of a
        // distinguishing game, rescaled to column sums <= 1.
        Mat t(n, m);
        Rat max_col_sum = 0;
        std::size_t row2 = 0;
        for (std::size_t w = 0; w < m; ++w) {
            Rat col_sum = 0;
            for (std::size_t j = 0; j < n; ++j, ++row2) {
                t(j, w) = lp.dual_certificate[row2];
                col_sum += t(j, w);
            }
            max_col_sum = std::max(max_col_sum, col_sum);
        }
        if (max_col_sum > 1)
            for (Rat& x : t.a) x /= max_col_sum;
        DistinguishingCondGame g{CondGameSpec(std::move(t))};
        if (!verify_cond_distinguishing(g, P, Q))
            throw std::logic_error("cond_majorizes: certificate verification failed");
        res.proof = std::move(g);
    }
    return res;
}

}  // namespace majo
