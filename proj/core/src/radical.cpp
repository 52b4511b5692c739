#include "eqspec/radical.hpp"

#include <cmath>
#include <stdexcept>

namespace eqspec {
namespace {

// Split n (n > 0) into s^2 * f with f squarefree, by trial division.
// Radicands arising from factorial ratios have only small prime factors,
// so trial division up to sqrt(n) terminates quickly.
void extract_square(const Integer& n, Integer& square_root, Integer& squarefree) {
    square_root = 1;
    squarefree = 1;
    Integer rest = n;
    for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned count = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++count;
        }
        if (count == 0) continue;
        for (unsigned i = 0; i + 1 < count; i += 2) square_root *= p;
        if (count % 2) squarefree *= p;
    }
    squarefree *= rest;  // remaining prime (multiplicity one)
}

}  // namespace

void RadicalRational::assign(const Rational& q, const Rational& radicand) {
    if (radicand < 0) throw std::domain_error("RadicalRational: negative radicand");
    if (q == 0 || radicand == 0) {
        q_ = 0;
        t_ = 1;
        return;
    }
    // q*sqrt(a/b) = (q/b)*sqrt(a*b)
    Rational qq = q;
    Integer t = radicand.get_num() * radicand.get_den();
    qq /= Rational(radicand.get_den());
    Integer root, free;
    extract_square(t, root, free);
    qq *= Rational(root);
    qq.canonicalize();
    q_ = qq;
    t_ = free;
}

Rational RadicalRational::rational_value() const {
    if (t_ != 1) throw std::logic_error("RadicalRational: value is irrational");
    return q_;
}

double RadicalRational::to_double() const {
    return q_.get_d() * std::sqrt(t_.get_d());
}

std::string RadicalRational::to_string() const {
    if (t_ == 1) return q_.get_str();
    return q_.get_str() + "*sqrt(" + t_.get_str() + ")";
}

RadicalRational RadicalRational::operator-() const {
    RadicalRational r = *this;
    r.q_ = -r.q_;
    return r;
}

RadicalRational& RadicalRational::operator+=(const RadicalRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (t_ != o.t_)
        throw std::logic_error("RadicalRational: mismatched radicands in addition");
    q_ += o.q_;
    if (q_ == 0) t_ = 1;
    return *this;
}

RadicalRational& RadicalRational::operator-=(const RadicalRational& o) {
    return *this += -o;
}

RadicalRational& RadicalRational::operator*=(const RadicalRational& o) {
    if (is_zero() || o.is_zero()) {
        q_ = 0;
        t_ = 1;
        return *this;
    }
    const Rational q = q_ * o.q_;
    const Rational t = Rational(t_ * o.t_);
    assign(q, t);
    return *this;
}

RadicalRational& RadicalRational::operator/=(const RadicalRational& o) {
    if (o.is_zero()) throw std::domain_error("RadicalRational: division by zero");
    if (is_zero()) return *this;
    // 1/sqrt(t) = sqrt(t)/t
    const Rational q = q_ / (o.q_ * Rational(o.t_));
    const Rational t = Rational(t_ * o.t_);
    assign(q, t);
    return *this;
}

}  // namespace eqspec
