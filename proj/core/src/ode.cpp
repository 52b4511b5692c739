#include "eqspec/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "eqspec/errors.hpp"

namespace eqspec {
namespace {

bool finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

class Stepper {
public:
    explicit Stepper(const OdeRhs& rhs, std::size_t dim) : rhs_(rhs) {
        for (auto* k : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &tmp_, &err_}) k->resize(dim);
    }

    // Classic RK4step; returns false on non-finite derivative.
    bool rk4(double xi, std::vector<double>& y, double h) {
        const std::size_t d = y.size();
        rhs_(xi, y, k1_);
        for (std::size_t i = 0; i < d; ++i) tmp_[i] = y[i] + 0.5 * h * k1_[i];
        rhs_(xi + 0.5 * h, tmp_, k2_);
        for (std::size_t i = 0; i < d; ++i) tmp_[i] = y[i] + 0.5 * h * k2_[i];
        rhs_(xi + 0.5 * h, tmp_, k3_);
        for (std::size_t i = 0; i < d; ++i) tmp_[i] = y[i] + h * k3_[i];
        rhs_(xi + h, tmp_, k4_);
        for (std::size_t i = 0; i < d; ++i)
            y[i] += (h / 6.0) * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
        return finite(y);
    }

    // Cash-Karp embedded 4(5); fills err_ with the difference estimate.
    bool cash_karp(double xi, const std::vector<double>& y, double h,
                   std::vector<double>& out) {
        static constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
        static constexpr double b21 = 0.2;
        static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
        static constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
        static constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0,
                                b54 = 35.0 / 27.0;
        static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                                b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                                b65 = 253.0 / 4096.0;
        static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                                c6 = 512.0 / 1771.0;
        static constexpr double dc1 = c1 - 2825.0 / 27648.0, dc3 = c3 - 18575.0 / 48384.0,
                                dc4 = c4 - 13525.0 / 55296.0, dc5 = -277.0 / 14336.0,
                                dc6 = c6 - 0.25;
        const std::size_t d = y.size();
        rhs_(xi, y, k1_);
        for (std::size_t i = 0; i < d; ++i) tmp_[i] = y[i] + h * b21 * k1_[i];
        rhs_(xi + a2 * h, tmp_, k2_);
        for (std::size_t i = 0; i < d; ++i)
            tmp_[i] = y[i] + h * (b31 * k1_[i] + b32 * k2_[i]);
        rhs_(xi + a3 * h, tmp_, k3_);
        for (std::size_t i = 0; i < d; ++i)
            tmp_[i] = y[i] + h * (b41 * k1_[i] + b42 * k2_[i] + b43 * k3_[i]);
        rhs_(xi + a4 * h, tmp_, k4_);
        for (std::size_t i = 0; i < d; ++i)
            tmp_[i] = y[i] + h * (b51 * k1_[i] + b52 * k2_[i] + b53 * k3_[i] + b54 * k4_[i]);
        rhs_(xi + a5 * h, tmp_, k5_);
        for (std::size_t i = 0; i < d; ++i)
            tmp_[i] = y[i] + h * (b61 * k1_[i] + b62 * k2_[i] + b63 * k3_[i] +
                                  b64 * k4_[i] + b65 * k5_[i]);
        rhs_(xi + a6 * h, tmp_, k6_);
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = y[i] + h * (c1 * k1_[i] + c3 * k3_[i] + c4 * k4_[i] + c6 * k6_[i]);
            err_[i] = h * (dc1 * k1_[i] + dc3 * k3_[i] + dc4 * k4_[i] + dc5 * k5_[i] +
                           dc6 * k6_[i]);
        }
        return finite(out);
    }

    const std::vector<double>& error() const { return err_; }

private:
    const OdeRhs& rhs_;
    std::vector<double> k1_, k2_, k3_, k4_, k5_, k6_, tmp_, err_;
};

}  // namespace

Trajectory integrate_rk(const OdeRhs& rhs, const OdeState& from, double to,
                        const RkControls& controls,
                        std::span<const double> output_nodes) {
    const double dir = (to >= from.xi) ? 1.0 : -1.0;
    const std::size_t dim = from.y.size();
    Stepper st(rhs, dim);

    {
        std::vector<double> d0(dim);
        rhs(from.xi, from.y, d0);
        if (!finite(d0))
            throw NumericError("integrate_rk: non-finite derivative at start");
    }

    Trajectory traj;
    traj.states.reserve(output_nodes.size());
    double xi = from.xi;
    std::vector<double> y = from.y;
    std::size_t next_out = 0;
    if (next_out < output_nodes.size() &&
        std::abs(output_nodes[next_out] - xi) < 1e-14) {
        traj.states.push_back({xi, y});
        ++next_out;
    }

    const double h_base = std::abs(controls.step) * dir;
    double h_try = controls.adaptive ? h_base : 0.0;

    while ((to - xi) * dir > 1e-14 && next_out < output_nodes.size()) {
        const double target = output_nodes[next_out];
        double h = controls.adaptive ? h_try : h_base;
        if ((target - xi) * dir <= std::abs(h) + 1e-15) h = target - xi;
        if ((to - xi) * dir < std::abs(h)) h = to - xi;

        bool ok;
        if (!controls.adaptive) {
            ok = st.rk4(xi, y, h);
            if (!ok) {
                if (controls.blowup_cap > 0.0) break;
                char msg[96];
                std::snprintf(msg, sizeof msg,
                              "integrate_rk: non-finite state near xi=%.6g", xi);
                throw NumericError(msg);
            }
            xi += h;
        } else {
            std::vector<double> ynew(dim);
            for (;;) {
                ok = st.cash_karp(xi, y, h, ynew);
                double errmax = 0.0;
                if (ok) {
                    for (std::size_t i = 0; i < dim; ++i) {
                        const double sc =
                            controls.abs_tol + controls.rel_tol * std::abs(ynew[i]);
                        errmax = std::max(errmax, std::abs(st.error()[i]) / sc);
                    }
                }
                if (ok && errmax <= 1.0) {
                    xi += h;
                    y = ynew;
                    const double grow =
                        (errmax > 0.0) ? 0.9 * std::pow(errmax, -0.2) : 5.0;
                    h_try = h * std::min(5.0, std::max(1.0, grow));
                    break;
                }
                const double shrink =
                    ok ? std::max(0.1, 0.9 * std::pow(errmax, -0.25)) : 0.1;
                h *= shrink;
                if (std::abs(h) < controls.min_step) {
                    if (controls.blowup_cap > 0.0) {
                        ok = false;
                        break;
                    }
                    char msg[96];
                    std::snprintf(msg, sizeof msg,
                                  "integrate_rk: step underflow at xi=%.6g", xi);
                    throw NumericError(msg);
                }
            }
            if (!ok) break;
        }

        if (controls.blowup_cap > 0.0 && std::abs(y[0]) > controls.blowup_cap) {
            traj.complete = false;
            break;
        }
        if (std::abs(xi - target) < 1e-12) {
            traj.states.push_back({xi, y});
            ++next_out;
        }
    }

    traj.complete = traj.complete && next_out >= output_nodes.size();
    traj.last_xi = xi;
    return traj;
}

}  // namespace eqspec
