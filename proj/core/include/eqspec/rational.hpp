#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eqspec {

using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer pow2(unsigned long n) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), n);
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// "3", "-3/4", "0.1" (decimal -> exact rational)
Rational rational_from_string(const std::string& s);

}  // namespace eqspec
