#pragma once

#include <span>

#include "eqspec/grid.hpp"
#include "eqspec/tridiag.hpp"

namespace eqspec {

// Energy/length scale of a solve. Dimensionless: -(1/2) d^2/dxi^2 + U.
// Physical: -(hbar^2 / 2 m*) d^2/dx^2 + V with x in nm and V in eV.
struct SolveScale {
    bool physical = false;
    double mass_ratio = 1.0;     // m*/m_e (physical solves)
    double hbar_omega_ev = 1.0;  // energy quantum used to map eps -> E

    // kinetic prefactor c in H = -c d2/dx2 + V, in the active units
    double kinetic() const;

    static SolveScale dimensionless() { return {}; }
    static SolveScale for_mass(double mass_ratio_in) {
        return {true, mass_ratio_in, 1.0};
    }
};

// Discretize H = -c d^2/dx^2 + V on the interior nodes of `grid` with
// hard-zero (Dirichlet) boundaries at both ends: a 3-point stencil gives
// diagonal 2c/h^2 + V_i and off-diagonal -c/h^2.
// Throws NumericError naming the index of a non-finite potential sample.
TridiagonalSym build_hamiltonian(std::span<const double> potential_samples,
                                 const Grid1D& grid, const SolveScale& scale);

}  // namespace eqspec
