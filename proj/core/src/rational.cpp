#include "eqspec/rational.hpp"

#include <stdexcept>

namespace eqspec {

Rational rational_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty rational literal");

    const auto dot = t.find('.');
    if (dot != std::string::npos) {
        // decimal literal -> exact rational
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        const std::size_t frac_len = t.size() - dot - 1;
        bool neg = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            neg = digits[0] == '-';
            digits.erase(0, 1);
        }
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad decimal literal: " + s);
        Integer num(digits, 10);
        Integer den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    try {
        Rational r(t);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

}  // namespace eqspec
