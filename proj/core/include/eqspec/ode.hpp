#pragma once

#include <functional>
#include <span>
#include <vector>

namespace eqspec {

struct OdeState {
    double xi = 0.0;
    std::vector<double> y;
};

// dy/dxi = f(xi, y); writes the derivative into dydxi (same length as y).
using OdeRhs =
    std::function<void(double xi, std::span<const double> y, std::span<double> dydxi)>;

struct RkControls {
    double step = 1e-4;        // fixed step size (classic RK4)
    bool adaptive = false;     // embedded Cash-Karp 4(5) pair instead
    double rel_tol = 1e-10;    // adaptive only
    double abs_tol = 1e-12;    // adaptive only
    double min_step = 1e-12;   // adaptive: below this -> step underflow error
    double blowup_cap = 0.0;   // stop (do not throw) once |y[0]| exceeds; 0 = off
};

struct Trajectory {
    std::vector<OdeState> states;  // at the requested output nodes, in order
    bool complete = true;          // false when stopped early by blowup_cap
    double last_xi = 0.0;          // last integrated position
};

// Integrate from `from` toward `to` (either direction), sampling the state
// at `output_nodes` (must be sorted in the direction of travel; the first
// node may coincide with from.xi). Fixed-step RK4 lands exactly on each
// output node; the adaptive pair clips steps to the nodes.
// Throws NumericError on a non-finite right-hand side at the start, or on
// adaptive step underflow; with blowup_cap set, later blowups end the
// trajectory early with complete = false.
Trajectory integrate_rk(const OdeRhs& rhs, const OdeState& from, double to,
                        const RkControls& controls,
                        std::span<const double> output_nodes);

}  // namespace eqspec
