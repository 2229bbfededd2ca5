#ifndef MAJO_MAJORIZATION_HPP
#define MAJO_MAJORIZATION_HPP

#include <cstddef>
#include <optional>

#include "majo/linalg.hpp"

namespace majo {

// Sum of the w largest components; 1 for w >= dim (components past the
// dimension count as zero).
Rat ky_fan(const ProbVector& p, std::size_t w);

// r . p-sorted with r = u_apply(t), i.e. sum_k t_k ||p||_(k).
Rat game_payoff(const ProbVector& p, const SubDistribution& t);

// p majorizes q: every w-game favours p. Decided by the finite sweep over
// w = 1..max(dim); payoffs are non-negative combinations of Ky-Fan norms.
bool majorizes(const ProbVector& p, const ProbVector& q);

// Smallest w whose Ky-Fan comparison fails, when majorizes(p, q) is false.
std::optional<std::size_t> majorization_violation(const ProbVector& p, const ProbVector& q);

// ||p (x) s||_(w): the w-game played with an extra resource dice.
Rat tensor_game_payoff(const ProbVector& p, const ProbVector& s, std::size_t w);

}  // namespace majo

#endif
