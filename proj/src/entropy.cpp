#include "majo/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace majo {

namespace {
constexpr double kTol = 1e-12;
}

double shannon(const ProbVector& p) {
    double h = 0;
    for (const Rat& x : p.p) {
        if (x == 0) continue;
        double v = rat_to_double(x);
        h -= v * std::log2(v);
    }
    return h < 0 ? 0 : h;
}

double binary_entropy(double eps) {
    if (eps <= 0 || eps >= 1) return 0;
    return -eps * std::log2(eps) - (1 - eps) * std::log2(1 - eps);
}

ChannelEntropyResult channel_entropy(const ChannelMatrix& N) {
    ChannelEntropyResult res{0, 0};
    for (std::size_t x = 0; x < N.inputs(); ++x) {
        double h = shannon(ProbVector(N.P.col(x)));
        if (x == 0 || h < res.bits) {
            res.bits = h;
            res.minimizing_input = x;
        }
    }
    return res;
}

AxiomReport check_entropy_axioms(
    const std::vector<std::pair<ChannelMatrix, ChannelMatrix>>& pairs) {
    AxiomReport rep;
    for (const auto& [m, n] : pairs) {
        double hm = channel_entropy(m).bits;
        double hn = channel_entropy(n).bits;
        if (chan_majorizes(m, n).verdict) {
            ++rep.monotonicity_checked;
            if (hm < hn - kTol)
                rep.violations.push_back({"monotonicity: H(M) < H(N) while M ~< N", hm, hn});
        }
        ++rep.additivity_checked;
        double ht = channel_entropy(tensor_channel(n, m)).bits;
        if (std::abs(ht - hn - hm) > kTol)
            rep.violations.push_back({"additivity: H(N (x) M) != H(N) + H(M)", ht, hn + hm});
    }
    return rep;
}

ContinuityReport continuity_bound_check(const ChannelMatrix& N, const ChannelMatrix& M) {
    if (N.outputs() != M.outputs() || N.inputs() != M.inputs())
        throw std::invalid_argument("continuity_bound_check: shape mismatch");
    const std::size_t m = N.outputs();
    // Columns are compared in the caller's input labelling; the stored sorted
    // form only permutes outputs, which leaves total variation per input
    // unchanged only if we undo the per-column sorts. Compare via the sorted
    // columns' exact difference against the original labelling instead.
    Rat eps_rat = 0;
    for (std::size_t x = 0; x < N.inputs(); ++x) {
        // Undo sorting: entry for original output y sits at sorted position
        // col_perms[x][y].
        Rat tv = 0;
        for (std::size_t y = 0; y < m; ++y) {
            Rat a = N.P(N.col_perms[x][y], x);
            Rat b = M.P(M.col_perms[x][y], x);
            tv += abs(a - b);
        }
        tv /= 2;
        eps_rat = std::max(eps_rat, tv);
    }
    ContinuityReport rep;
    rep.epsilon = rat_to_double(eps_rat);
    rep.entropy_gap = std::abs(channel_entropy(N).bits - channel_entropy(M).bits);
    rep.bound = (m > 1 ? rep.epsilon * std::log2(static_cast<double>(m - 1)) : 0.0) +
                binary_entropy(rep.epsilon);
    rep.holds = rep.entropy_gap <= rep.bound + kTol;
    return rep;
}

}  // namespace majo
