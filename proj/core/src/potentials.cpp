#include "eqspec/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "eqspec/constants.hpp"
#include "eqspec/errors.hpp"

namespace eqspec {

PotentialModel PotentialModel::truncated(double v0_ev, double d_nm) {
    if (v0_ev <= 0.0 || d_nm <= 0.0)
        throw std::invalid_argument("truncated well needs V0 > 0 and d > 0");
    return {TruncatedHarmonic{v0_ev, d_nm}, DomainSide::full_line};
}

PotentialModel PotentialModel::isotonic(double a, DomainSide side) {
    if (a <= 0.0) throw std::invalid_argument("isotonic needs A > 0");
    if (side == DomainSide::full_line)
        throw std::invalid_argument("isotonic is singular at 0: pick a half line");
    return {Isotonic{a}, side};
}

PotentialModel PotentialModel::darboux(unsigned m) {
    return {Darboux{m},
            (m % 2 == 1) ? DomainSide::positive : DomainSide::full_line};
}

PotentialModel PotentialModel::tabulated(std::vector<double> x,
                                         std::vector<double> v) {
    if (x.size() != v.size() || x.size() < 2)
        throw std::invalid_argument("tabulated potential needs matching x/V arrays");
    return {Tabulated{std::move(x), std::move(v)}, DomainSide::full_line};
}

std::string PotentialModel::name() const {
    struct Visitor {
        std::string operator()(const Harmonic&) const { return "harmonic"; }
        std::string operator()(const TruncatedHarmonic&) const {
            return "truncated_harmonic";
        }
        std::string operator()(const Isotonic&) const { return "isotonic"; }
        std::string operator()(const Darboux& d) const {
            return "darboux(" + std::to_string(d.m) + ")";
        }
        std::string operator()(const Tabulated&) const { return "tabulated"; }
    };
    return std::visit(Visitor{}, family);
}

RationalPoly darboux_polynomial(unsigned m) {
    std::vector<Rational> coeffs(m + 1, Rational(0));
    if (m % 2 == 0) {
        const unsigned half = m / 2;
        for (unsigned k = 0; k <= half; ++k) {
            Integer num;
            mpz_ui_pow_ui(num.get_mpz_t(), 4, k);
            coeffs[2 * k] = Rational(num, factorial(half - k) * factorial(2 * k));
        }
    } else {
        const unsigned half = (m - 1) / 2;
        for (unsigned k = 0; k <= half; ++k) {
            Integer num;
            mpz_ui_pow_ui(num.get_mpz_t(), 4, k);
            coeffs[2 * k + 1] =
                Rational(num, factorial(half - k) * factorial(2 * k + 1));
        }
    }
    for (auto& c : coeffs) c.canonicalize();
    return RationalPoly(std::move(coeffs));
}

double darboux_potential(unsigned m, double xi) {
    const RationalPoly p = darboux_polynomial(m);
    double pv = 0.0, dv = 0.0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        pv = pv * xi + c[i].get_d();
        if (i >= 1) dv = dv * xi + static_cast<double>(i) * c[i].get_d();
    }
    const double log_deriv = dv / pv;
    const double t = log_deriv + xi;
    return -0.5 * xi * xi - (2.0 / 3.0) * (2.0 * m + 1.0) + t * t;
}

namespace {

void check_side(const Grid1D& grid, DomainSide side, const char* what) {
    const double h = grid.spacing();
    if (side == DomainSide::positive && grid.x_min() < h * (1.0 - 1e-12)) {
        char msg[96];
        std::snprintf(msg, sizeof msg,
                      "%s: grid must stay at least one spacing right of 0", what);
        throw NumericError(msg, 0);
    }
    if (side == DomainSide::negative && grid.x_max() > -h * (1.0 - 1e-12)) {
        char msg[96];
        std::snprintf(msg, sizeof msg,
                      "%s: grid must stay at least one spacing left of 0", what);
        throw NumericError(msg, static_cast<long>(grid.size()) - 1);
    }
}

}  // namespace

std::vector<double> evaluate(const PotentialModel& model, const Grid1D& grid) {
    std::vector<double> v(grid.size());

    if (std::holds_alternative<Harmonic>(model.family)) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double x = grid.node(i);
            v[i] = 0.5 * x * x;
        }
        return v;
    }
    if (const auto* t = std::get_if<TruncatedHarmonic>(&model.family)) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double x = grid.node(i);
            const double r = 2.0 * x / t->d_nm;
            v[i] = (std::abs(x) >= 0.5 * t->d_nm) ? t->v0_ev : t->v0_ev * r * r;
        }
        return v;
    }
    if (const auto* iso = std::get_if<Isotonic>(&model.family)) {
        check_side(grid, model.side, "isotonic");
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double x = grid.node(i);
            if (x == 0.0)
                throw NumericError("isotonic: grid touches the singular point",
                                   static_cast<long>(i));
            v[i] = x * x / 8.0 + iso->a / (x * x);
        }
        return v;
    }
    if (const auto* d = std::get_if<Darboux>(&model.family)) {
        if (d->m % 2 == 1) check_side(grid, model.side, "darboux");
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double x = grid.node(i);
            if (d->m % 2 == 1 && x == 0.0)
                throw NumericError("darboux: grid touches the singular point",
                                   static_cast<long>(i));
            v[i] = darboux_potential(d->m, x);
        }
        return v;
    }
    const auto& tab = std::get<Tabulated>(model.family);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = grid.node(i);
        if (x < tab.x.front() - 1e-12 || x > tab.x.back() + 1e-12) {
            char msg[80];
            std::snprintf(msg, sizeof msg, "tabulated: node %zu outside table", i);
            throw NumericError(msg, static_cast<long>(i));
        }
        auto it = std::lower_bound(tab.x.begin(), tab.x.end(), x);
        if (it == tab.x.begin()) ++it;
        if (it == tab.x.end()) --it;
        const std::size_t hi = static_cast<std::size_t>(it - tab.x.begin());
        const double x0 = tab.x[hi - 1], x1 = tab.x[hi];
        const double w = (x - x0) / (x1 - x0);
        v[i] = (1.0 - w) * tab.values[hi - 1] + w * tab.values[hi];
    }
    return v;
}

ClosedFormSpectrum reference_spectrum(const PotentialModel& model, unsigned) {
    ClosedFormSpectrum s;
    if (std::holds_alternative<Harmonic>(model.family)) {
        s.spacing = 1.0;
        s.ground_offset = 0.5;
        s.first_gap = 1.0;
        s.description = "eps_n = n + 1/2";
        return s;
    }
    if (const auto* t = std::get_if<TruncatedHarmonic>(&model.family)) {
        const double de = (2.0 / t->d_nm) *
                          std::sqrt(2.0 * t->v0_ev * constants::hbar_sq_over_me_eV_nm2);
        s.spacing = de;
        s.ground_offset = 0.5 * de;
        s.first_gap = de;
        s.valid_below = 0.9 * t->v0_ev;
        s.description = "E_n = dE (n + 1/2), dE = (2 hbar / d) sqrt(2 V0 / m*)";
        return s;
    }
    if (const auto* iso = std::get_if<Isotonic>(&model.family)) {
        s.spacing = 1.0;
        s.ground_offset = 0.5 + 0.25 * std::sqrt(1.0 + 8.0 * iso->a);
        s.first_gap = 1.0;
        s.description = "eps_n = 1/2 + n + (1/4) sqrt(1 + 8A)";
        return s;
    }
    if (const auto* d = std::get_if<Darboux>(&model.family)) {
        if (d->m % 2 == 0) {
            s.spacing = 1.0;
            s.first_gap = 1.0 + d->m;  // ground state lowered by m = 2*(m/2)
            s.absolute_known = false;
            s.description = "spacing 1 above the ground state; gap 1 + m";
        } else {
            s.spacing = 2.0;
            s.first_gap = 2.0;
            s.absolute_known = false;
            s.description = "half-line ladder with spacing 2";
        }
        return s;
    }
    throw std::invalid_argument("reference_spectrum: tabulated family unsupported");
}

double isotonic_state(double a, unsigned n, double xi) {
    if (a <= 0.0) throw std::invalid_argument("isotonic_state: A > 0 required");
    if (xi <= 0.0) throw std::invalid_argument("isotonic_state: xi > 0 required");

    const double s = 0.5 * std::sqrt(1.0 + 8.0 * a);  // sqrt(1+8A)/2
    const double u = 0.5 * xi * xi;

    // J_n(xi) = sum_k (-1)^k C(n,k) Gamma(s+1)/Gamma(s+1+k) u^k
    double jn = 0.0;
    for (unsigned k = 0; k <= n; ++k) {
        const double binom =
            std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                     std::lgamma(n - k + 1.0));
        const double gamma_ratio = std::exp(std::lgamma(s + 1.0) - std::lgamma(s + 1.0 + k));
        const double term = binom * gamma_ratio * std::pow(u, static_cast<double>(k));
        jn += (k % 2 == 0) ? term : -term;
    }
    const double log_cn2 = 0.5 * std::log(2.0) + std::lgamma(s + 1.0 + n) -
                           std::lgamma(n + 1.0) - 2.0 * std::lgamma(s + 1.0);
    const double cn = std::exp(0.5 * log_cn2);
    return cn * jn * std::pow(u, 0.5 * (s + 0.5)) * std::exp(-0.25 * xi * xi);
}

}  // namespace eqspec
