#pragma once

#include <span>
#include <string>
#include <vector>

#include "eqspec/rational.hpp"

namespace eqspec {

// Polynomial with exact rational coefficients, ascending powers.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    static RationalPoly constant(const Rational& v) {
        return RationalPoly(std::vector<Rational>{v});
    }

    // Exact Lagrange/Newton interpolation through (x[i], y[i]).
    static RationalPoly interpolate(std::span<const Rational> x,
                                    std::span<const Rational> y);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& s);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.c_ == b.c_;
    }

    std::string to_string(const std::string& var = "k") const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace eqspec
