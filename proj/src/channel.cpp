#include "majo/channel.hpp"

#include <algorithm>
#include <stdexcept>

#include "majo/decomp.hpp"
#include "majo/lp.hpp"
#include "majo/majorization.hpp"

namespace majo {

ChannelMatrix::ChannelMatrix(const Mat& raw) {
    if (raw.rows == 0 || raw.cols == 0)
        throw std::invalid_argument("ChannelMatrix: empty matrix");
    for (const Rat& x : raw.a)
        if (x < 0) throw std::invalid_argument("ChannelMatrix: negative entry");
    for (std::size_t x = 0; x < raw.cols; ++x)
        if (vec_sum(raw.col(x)) != 1)
            throw std::invalid_argument("ChannelMatrix: column " + std::to_string(x) +
                                        " sum != 1");
    P = Mat(raw.rows, raw.cols);
    col_perms.reserve(raw.cols);
    for (std::size_t x = 0; x < raw.cols; ++x) {
        SortResult s = sort_desc(raw.col(x));
        for (std::size_t y = 0; y < raw.rows; ++y) P(y, x) = s.sorted[y];
        col_perms.push_back(std::move(s.perm));
    }
}

ChannelMatrix identity_channel(std::size_t d) { return ChannelMatrix(identity_mat(d)); }

ChannelMatrix randomizing_channel(std::size_t d) {
    Mat m(d, d);
    for (Rat& x : m.a) x = Rat(1, static_cast<unsigned long>(d));
    return ChannelMatrix(m);
}

ChannelMatrix tensor_channel(const ChannelMatrix& a, const ChannelMatrix& b) {
    Mat t(a.outputs() * b.outputs(), a.inputs() * b.inputs());
    for (std::size_t ya = 0; ya < a.outputs(); ++ya)
        for (std::size_t xa = 0; xa < a.inputs(); ++xa)
            for (std::size_t yb = 0; yb < b.outputs(); ++yb)
                for (std::size_t xb = 0; xb < b.inputs(); ++xb)
                    t(ya * b.outputs() + yb, xa * b.inputs() + xb) = a.P(ya, xa) * b.P(yb, xb);
    return ChannelMatrix(t);
}

ChanGameSpec::ChanGameSpec(Mat t) : T(std::move(t)) {
    for (const Rat& x : T.a)
        if (x < 0) throw std::invalid_argument("ChanGameSpec: negative entry");
    for (std::size_t z = 0; z < T.cols; ++z)
        if (vec_sum(T.col(z)) > 1)
            throw std::invalid_argument("ChanGameSpec: column sum exceeds 1");
}

ChanPayoffResult chan_payoff(const ChannelMatrix& M, const ChanGameSpec& T) {
    ChanPayoffResult res;
    res.value = 0;
    res.strategy.resize(T.T.cols);
    for (std::size_t z = 0; z < T.T.cols; ++z) {
        std::vector<Rat> r = u_apply(T.T.col(z));
        Rat best;
        std::size_t best_x = 0;
        for (std::size_t x = 0; x < M.inputs(); ++x) {
            Rat v = dot(r, M.P.col(x));
            if (x == 0 || v > best) {
                best = v;
                best_x = x;
            }
        }
        res.value += best;
        res.strategy[z] = best_x;
    }
    return res;
}

Rat vector_game_payoff(const ChannelMatrix& M, const SubDistribution& t) {
    Mat col(t.dim(), 1);
    for (std::size_t i = 0; i < t.dim(); ++i) col(i, 0) = t.t[i];
    return chan_payoff(M, ChanGameSpec(std::move(col))).value;
}

namespace {

Mat pad_rows(const Mat& p, std::size_t m) {
    Mat out(m, p.cols);
    for (std::size_t i = 0; i < p.rows; ++i)
        for (std::size_t j = 0; j < p.cols; ++j) out(i, j) = p(i, j);
    return out;
}

// Zero output rows appended; columns stay sorted and stochastic.
void common_outputs(const ChannelMatrix& M, const ChannelMatrix& N, Mat& q, Mat& p) {
    std::size_t m = std::max(M.outputs(), N.outputs());
    q = pad_rows(M.P, m);
    p = pad_rows(N.P, m);
}

}  // namespace

bool verify_chan_witness(const ChanWitness& w, const ChannelMatrix& M, const ChannelMatrix& N) {
    Mat q, p;
    common_outputs(M, N, q, p);
    const std::size_t m = p.rows, n = p.cols, nq = q.cols;
    Mat ssum(n, nq), acc(m, nq);
    for (const auto& term : w.terms) {
        if (term.S.rows != n || term.S.cols != nq || term.V.size() != m) return false;
        if (!is_permutation(term.V)) return false;
        for (const Rat& x : term.S.a)
            if (x < 0) return false;
        ssum = mat_add(ssum, term.S);
        acc = mat_add(acc, mat_mul(perm_matrix(term.V), mat_mul(p, term.S)));
    }
    for (std::size_t x = 0; x < nq; ++x)
        if (vec_sum(ssum.col(x)) != 1) return false;
    return acc == q;
}

bool verify_chan_distinguishing(const DistinguishingChanGame& g, const ChannelMatrix& M,
                                const ChannelMatrix& N) {
    return chan_payoff(M, g.game).value > chan_payoff(N, g.game).value;
}

ChanMajResult chan_majorizes(const ChannelMatrix& M, const ChannelMatrix& N) {
    Mat q, p;
    common_outputs(M, N, q, p);
    const std::size_t m = p.rows, n = p.cols, nq = q.cols;

    // LP over s_{x|x'} >= 0 (n*nq variables):
    //   for each (x', i):  sum_x (U^T P)_{i,x} s_{x|x'} >= (U^T Q)_{i,x'}
    //   for each x':       -sum_x s_{x|x'} >= -1
    // Column sums land on exactly 1 because row i = m forces >= 1.
    Mat utp = mat_mul(transpose(u_matrix(m)), p);
    Mat utq = mat_mul(transpose(u_matrix(m)), q);
    auto var = [n](std::size_t x, std::size_t xp) { return xp * n + x; };

    LpFeasibilityProblem prob;
    const std::size_t krows = m * nq + nq;
    prob.A = Mat(krows, n * nq);
    prob.b.assign(krows, Rat(0));
    prob.sense.assign(krows, RowSense::Geq);
    prob.nonneg.assign(n * nq, true);
    std::size_t row = 0;
    for (std::size_t xp = 0; xp < nq; ++xp)
        for (std::size_t i = 0; i < m; ++i, ++row) {
            for (std::size_t x = 0; x < n; ++x) prob.A(row, var(x, xp)) = utp(i, x);
            prob.b[row] = utq(i, xp);
        }
    for (std::size_t xp = 0; xp < nq; ++xp, ++row) {
        for (std::size_t x = 0; x < n; ++x) prob.A(row, var(x, xp)) = -1;
        prob.b[row] = -1;
    }

    LpOutcome lp = solve_feasibility(prob);
    ChanMajResult res;
    if (lp.status == LpStatus::Feasible) {
        res.verdict = true;
        ChanWitness w;
        for (std::size_t xp = 0; xp < nq; ++xp) {
            // q_{x'} = D_{x'} (sum_x s_{x|x'} p_x) with D_{x'} split per column.
            std::vector<Rat> mix(m, Rat(0));
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < m; ++y) mix[y] += lp.primal[var(x, xp)] * p(y, x);
            DoublyStochastic d = hlp_transfer(mix, q.col(xp));
            BirkhoffDecomposition bd = birkhoff(d);
            for (const auto& term : bd.terms) {
                ChanWitness::Term t;
                // hlp_transfer acts on row vectors; the column action is the
                // transpose, i.e. the inverse permutations.
                t.V = invert_perm(term.perm);
                t.S = Mat(n, nq);
                for (std::size_t x = 0; x < n; ++x)
                    t.S(x, xp) = term.weight * lp.primal[var(x, xp)];
                w.terms.push_back(std::move(t));
            }
        }
        if (!verify_chan_witness(w, M, N))
            throw std::logic_error("chan_majorizes: witness verification failed");
        res.proof = std::move(w);
    } else {
        res.verdict = false;
        Mat t(m, nq);
        Rat max_col_sum = 0;
        std::size_t row2 = 0;
        for (std::size_t xp = 0; xp < nq; ++xp) {
            Rat col_sum = 0;
            for (std::size_t i = 0; i < m; ++i, ++row2) {
                t(i, xp) = lp.dual_certificate[row2];
                col_sum += t(i, xp);
            }
            max_col_sum = std::max(max_col_sum, col_sum);
        }
        if (max_col_sum > 1)
            for (Rat& x : t.a) x /= max_col_sum;
        DistinguishingChanGame g{ChanGameSpec(std::move(t))};
        if (!verify_chan_distinguishing(g, M, N))
            throw std::logic_error("chan_majorizes: certificate verification failed");
        res.proof = std::move(g);
    }
    return res;
}

Rat f_monotone(const ChannelMatrix& N, const ChannelMatrix& P) {
    Rat total = 0;
    for (std::size_t k = 0; k < P.inputs(); ++k) {
        std::vector<Rat> qk = P.P.col(k);
        Rat best;
        for (std::size_t x = 0; x < N.inputs(); ++x) {
            Rat v = dot(qk, N.P.col(x));
            if (x == 0 || v > best) best = v;
        }
        total += best;
    }
    return total;
}

}  // namespace majo
