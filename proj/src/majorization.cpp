#include "majo/majorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace majo {

Rat ky_fan(const ProbVector& p, std::size_t w) {
    if (w < 1) throw std::invalid_argument("ky_fan: w must be >= 1");
    std::vector<Rat> sorted = sort_desc(p.p).sorted;
    Rat s = 0;
    for (std::size_t i = 0; i < w && i < sorted.size(); ++i) s += sorted[i];
    return s;
}

Rat game_payoff(const ProbVector& p, const SubDistribution& t) {
    std::vector<Rat> r = u_apply(t.t);
    std::vector<Rat> sorted = sort_desc(p.p).sorted;
    return dot(r, sorted);
}

std::optional<std::size_t> majorization_violation(const ProbVector& p, const ProbVector& q) {
    std::size_t d = std::max(p.dim(), q.dim());
    for (std::size_t w = 1; w <= d; ++w)
        if (ky_fan(q, w) > ky_fan(p, w)) return w;
    return std::nullopt;
}

bool majorizes(const ProbVector& p, const ProbVector& q) {
    return !majorization_violation(p, q).has_value();
}

Rat tensor_game_payoff(const ProbVector& p, const ProbVector& s, std::size_t w) {
    if (w < 1) throw std::invalid_argument("tensor_game_payoff: w must be >= 1");
    std::vector<Rat> prod;
    prod.reserve(p.dim() * s.dim());
    for (const Rat& a : p.p)
        for (const Rat& b : s.p) prod.push_back(a * b);
    return ky_fan(ProbVector(std::move(prod)), w);
}

}  // namespace majo
