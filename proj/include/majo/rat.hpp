#ifndef MAJO_RAT_HPP
#define MAJO_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace majo {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) and the integer parts are arbitrary precision.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n", "n/d" and decimal strings like "0.25" (converted via an
// exact power-of-ten denominator).
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline Rat vec_sum(const std::vector<Rat>& v) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    return s;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    // Zero-padded dot product: indices past either length contribute 0.
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    Rat s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace majo

#endif
