#include "eqspec/ratpoly.hpp"

#include <stdexcept>

namespace eqspec {

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
    for (auto& ci : c_) ci *= s;
    trim();
    return *this;
}

RationalPoly RationalPoly::interpolate(std::span<const Rational> x,
                                       std::span<const Rational> y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("interpolate: need matching nonempty points");
    const std::size_t n = x.size();

    // Newton divided differences
    std::vector<Rational> dd(y.begin(), y.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);

    // expand Newton form to monomial coefficients: acc = acc*(t - x[ii]) + dd[ii]
    std::vector<Rational> coeff{dd[n - 1]};
    for (std::size_t ii = n - 1; ii-- > 0;) {
        std::vector<Rational> next(coeff.size() + 1, Rational(0));
        for (std::size_t j = 0; j < coeff.size(); ++j) {
            next[j + 1] += coeff[j];
            next[j] -= coeff[j] * x[ii];
        }
        next[0] += dd[ii];
        coeff = std::move(next);
    }
    return RationalPoly(std::move(coeff));
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const bool neg = c_[i] < 0;
        Rational a = neg ? Rational(-c_[i]) : c_[i];
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const bool unit = (a == 1) && i > 0;
        if (!unit) out += a.get_str();
        if (i >= 1) {
            if (!unit) out += "*";
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace eqspec
