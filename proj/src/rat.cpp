#include "majo/rat.hpp"

#include <cctype>

namespace majo {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
        // Decimal: exact power-of-ten denominator.
        std::string digits;
        bool neg = false;
        std::size_t frac_len = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == '-' && i == 0) {
                neg = true;
            } else if (c == '+' && i == 0) {
                // ignore
            } else if (c == '.') {
                if (i != dot_pos) throw std::invalid_argument("rat_from_string: bad decimal '" + s + "'");
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(c);
                if (i > dot_pos) ++frac_len;
            } else {
                throw std::invalid_argument("rat_from_string: bad decimal '" + s + "'");
            }
        }
        if (digits.empty()) throw std::invalid_argument("rat_from_string: bad decimal '" + s + "'");
        mpz_class num(digits, 10);
        if (neg) num = -num;
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace majo
