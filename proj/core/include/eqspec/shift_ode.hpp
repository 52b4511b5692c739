#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqspec/grid.hpp"

namespace eqspec {

// Which statement of the third-order ladder condition fixes the initial data.
// The trajectory itself is always integrated in the regular explicit
// fourth-order form W'''' = 12 W'^2 + 12 W W'' + 4 xi^2 W'' + 12 xi W', which
// stays well defined across xi = 0; the two first integrals provide the
// missing jet entries at the anchor and certify the result.
enum class OdeForm {
    full_fourth_order,   // all of W, W', W'', W''' given at xi0
    first_integral_A,    // W, W', W'' given; W''' from the A-integral
    first_integral_AB,   // W, W' given; W'' from the AB-integral, then W'''
};

enum class Branch { plus, minus };

struct ShiftOdeProblem {
    OdeForm form = OdeForm::first_integral_A;
    double A = 0.0;
    double B = 0.0;           // only meaningful for first_integral_AB
    Branch branch = Branch::plus;  // sign of the AB-integral square root
    double xi0 = 1.0;
    double w0 = 0.0, w1 = 0.0, w2 = 0.0, w3 = 0.0;  // jet entries as applicable
    double xi_left = -6.0, xi_right = 6.0;

    static ShiftOdeProblem preset(const std::string& name);  // type1/type2/type3
};

struct InitialJet {
    std::array<double, 4> w;  // W, W', W'', W''' at xi0
    double A = 0.0;           // constants of both integrals for this jet
    double B = 0.0;
};

// Completes the jet at the anchor and reports the (A, B) pair the full
// trajectory conserves. Throws NumericError("branch infeasible at anchor")
// when the AB radicand is negative.
InitialJet derive_initial_jet(const ShiftOdeProblem& problem);

struct GeneratedPotential {
    std::vector<double> xi;  // nodes actually reached (subset of the grid)
    std::vector<double> u;   // U = W + xi^2/2
    std::vector<double> w, w1, w2, w3;
    std::vector<double> residual;          // max of both integral residuals
    std::vector<double> singularities;     // last good xi per blown-up side
    double max_residual = 0.0;             // over certified (non-singular) nodes
    bool accepted = false;                 // max_residual < 1e-4
    double A = 0.0, B = 0.0;
    double h_ode = 0.0;
};

struct GenerateOptions {
    double h_ode = 1e-4;      // fixed RK4 step in xi
    double blowup_cap = 1e6;  // |W| above this marks a singularity
    double certify_cap = 1e4; // residual certified where |W| <= this
};

// Integrates outward from xi0 over the grid and certifies the local relative
// residuum of both first integrals (residual normalized per node by the
// largest additive term). Nodes past a blow-up are dropped and the stop
// positions recorded as singularity markers.
GeneratedPotential generate(const ShiftOdeProblem& problem, const Grid1D& grid,
                            const GenerateOptions& opts = {});

// Local relative residuum profiles of the two first integrals for given
// samples of W and its derivatives. residual_ab is empty when B is not given.
struct ResidualProfile {
    std::vector<double> residual_a;
    std::vector<double> residual_ab;
};

ResidualProfile check_residual(std::span<const double> xi,
                               std::span<const double> w,
                               std::span<const double> w1,
                               std::span<const double> w2,
                               std::span<const double> w3, double a_const,
                               std::optional<double> b_const);

}  // namespace eqspec
