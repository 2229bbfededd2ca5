#include "majo/lp.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace majo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct ExpandedRow {
    std::vector<Rat> coef;  // over expanded variables
    Rat rhs;
    std::size_t orig;  // original row index
    int sign;          // +1 for the row itself, -1 for the negated Eq copy
};

void validate(const LpFeasibilityProblem& p) {
    const std::size_t k = p.A.rows, n = p.A.cols;
    if (p.b.size() != k || p.sense.size() != k || p.nonneg.size() != n)
        throw std::invalid_argument("solve_feasibility: inconsistent problem dimensions");
}

void verify_outcome(const LpFeasibilityProblem& p, const LpOutcome& out) {
    const std::size_t k = p.A.rows, n = p.A.cols;
    if (out.status == LpStatus::Feasible) {
        const std::vector<Rat>& x = out.primal;
        if (x.size() != n) throw std::logic_error("lp: primal size mismatch");
        for (std::size_t j = 0; j < n; ++j)
            if (p.nonneg[j] && x[j] < 0) throw std::logic_error("lp: primal sign violation");
        std::vector<Rat> ax = mat_vec(p.A, x);
        for (std::size_t i = 0; i < k; ++i) {
            bool ok = p.sense[i] == RowSense::Geq ? ax[i] >= p.b[i] : ax[i] == p.b[i];
            if (!ok) throw std::logic_error("lp: primal constraint violation");
        }
    } else {
        const std::vector<Rat>& y = out.dual_certificate;
        if (y.size() != k) throw std::logic_error("lp: dual size mismatch");
        for (std::size_t i = 0; i < k; ++i)
            if (p.sense[i] == RowSense::Geq && y[i] < 0)
                throw std::logic_error("lp: dual sign violation");
        std::vector<Rat> yta = vec_mat(y, p.A);
        for (std::size_t j = 0; j < yta.size(); ++j) {
            bool ok = p.nonneg[j] ? yta[j] <= 0 : yta[j] == 0;
            if (!ok) throw std::logic_error("lp: dual A condition violated");
        }
        if (dot(y, p.b) <= 0) throw std::logic_error("lp: dual objective not positive");
    }
}

}  // namespace

LpOutcome solve_feasibility(const LpFeasibilityProblem& prob) {
    validate(prob);
    const std::size_t k = prob.A.rows, n = prob.A.cols;

    // Free variables split into difference pairs x = x+ - x-.
    std::vector<std::size_t> pos_col(n), neg_col(n, kNone);
    std::size_t nv = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos_col[j] = nv++;
        if (!prob.nonneg[j]) neg_col[j] = nv++;
    }

    // Eq rows become two Geq rows.
    std::vector<ExpandedRow> rows;
    for (std::size_t i = 0; i < k; ++i) {
        ExpandedRow r;
        r.coef.assign(nv, Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            r.coef[pos_col[j]] = prob.A(i, j);
            if (neg_col[j] != kNone) r.coef[neg_col[j]] = -prob.A(i, j);
        }
        r.rhs = prob.b[i];
        r.orig = i;
        r.sign = 1;
        rows.push_back(r);
        if (prob.sense[i] == RowSense::Eq) {
            ExpandedRow r2 = r;
            for (Rat& c : r2.coef) c = -c;
            r2.rhs = -r.rhs;
            r2.sign = -1;
            rows.push_back(r2);
        }
    }
    const std::size_t m = rows.size();

    // Standard form: scale rows so rhs >= 0, add surplus (-sigma) and
    // artificial (+1) columns. Phase one minimizes the artificial sum.
    std::vector<int> sigma(m, 1);
    const std::size_t ncols = nv + m + m;  // structural | surplus | artificial
    const std::size_t art0 = nv + m;
    // Tableau: m constraint rows plus objective row; last column is rhs.
    std::vector<std::vector<Rat>> tab(m + 1, std::vector<Rat>(ncols + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].rhs < 0) sigma[i] = -1;
        for (std::size_t j = 0; j < nv; ++j) tab[i][j] = sigma[i] * rows[i].coef[j];
        tab[i][nv + i] = -sigma[i];
        tab[i][art0 + i] = 1;
        tab[i][ncols] = sigma[i] * rows[i].rhs;
    }
    // Objective row holds reduced costs c_j - c_B B^{-1} A_j for min sum(artificials).
    for (std::size_t j = 0; j <= ncols; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += tab[i][j];
        tab[m][j] = (j >= art0 && j < ncols ? Rat(1) : Rat(0)) - s;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = art0 + i;

    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t enter = kNone;
        for (std::size_t j = 0; j < ncols; ++j)
            if (tab[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == kNone) break;
        // Ratio test, ties broken by smallest basis index.
        std::size_t leave = kNone;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = tab[i][ncols] / tab[i][enter];
            if (leave == kNone || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == kNone)
            throw std::logic_error("lp: phase-one objective unbounded");  // cannot happen
        Rat piv = tab[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j) tab[leave][j] /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    LpOutcome out;
    // Objective row rhs is -optimum of the phase-one problem.
    if (tab[m][ncols] < 0) {
        out.status = LpStatus::Infeasible;
        // y_i = 1 - reduced_cost(artificial i); map through row scaling and
        // fold the Eq-row pairs back into one free multiplier.
        out.dual_certificate.assign(k, Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            Rat y = Rat(1) - tab[m][art0 + i];
            out.dual_certificate[rows[i].orig] += rows[i].sign * sigma[i] * y;
        }
    } else {
        out.status = LpStatus::Feasible;
        std::vector<Rat> xv(nv, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < nv) xv[basis[i]] = tab[i][ncols];
        out.primal.assign(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            out.primal[j] = xv[pos_col[j]];
            if (neg_col[j] != kNone) out.primal[j] -= xv[neg_col[j]];
        }
    }
    verify_outcome(prob, out);
    return out;
}

}  // namespace majo
