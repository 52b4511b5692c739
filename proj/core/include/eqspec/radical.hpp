#pragma once

#include <string>

#include "eqspec/rational.hpp"

namespace eqspec {

// Exact number q * sqrt(t). Canonical form: t is a squarefree positive
// integer (rational radicands are absorbed: q*sqrt(a/b) = (q/b)*sqrt(ab),
// square factors move into q). Zero is q = 0, t = 1.
//
// Addition requires matching radicands; the Hermite-basis recursion is
// closed under this form, so a mismatch is a logic error, not a rounding
// concern.
class RadicalRational {
public:
    RadicalRational() : q_(0), t_(1) {}
    explicit RadicalRational(const Rational& q) : q_(q), t_(1) {}
    RadicalRational(const Rational& q, const Rational& radicand) { assign(q, radicand); }

    static RadicalRational sqrt_of(const Rational& radicand) {
        return RadicalRational(Rational(1), radicand);
    }

    const Rational& coefficient() const noexcept { return q_; }
    const Integer& radicand() const noexcept { return t_; }

    bool is_zero() const noexcept { return q_ == 0; }
    bool is_rational() const noexcept { return t_ == 1; }

    // Exact rational value; throws std::logic_error if the radicand is not 1.
    Rational rational_value() const;

    double to_double() const;
    std::string to_string() const;  // "p/q" or "p/q*sqrt(t)"

    RadicalRational operator-() const;
    RadicalRational& operator+=(const RadicalRational& o);
    RadicalRational& operator-=(const RadicalRational& o);
    RadicalRational& operator*=(const RadicalRational& o);
    RadicalRational& operator/=(const RadicalRational& o);

    friend RadicalRational operator+(RadicalRational a, const RadicalRational& b) {
        return a += b;
    }
    friend RadicalRational operator-(RadicalRational a, const RadicalRational& b) {
        return a -= b;
    }
    friend RadicalRational operator*(RadicalRational a, const RadicalRational& b) {
        return a *= b;
    }
    friend RadicalRational operator/(RadicalRational a, const RadicalRational& b) {
        return a /= b;
    }
    friend bool operator==(const RadicalRational& a, const RadicalRational& b) {
        return a.q_ == b.q_ && a.t_ == b.t_;
    }

private:
    void assign(const Rational& q, const Rational& radicand);

    Rational q_;
    Integer t_;
};

}  // namespace eqspec
