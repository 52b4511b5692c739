#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqspec/grid.hpp"
#include "eqspec/hamiltonian.hpp"
#include "eqspec/potentials.hpp"
#include "eqspec/shift_ode.hpp"

namespace eqspec {

struct EigenSolution {
    std::vector<double> energies;               // strictly ascending
    std::vector<std::vector<double>> states;    // interior nodes, grid-orthonormal
    Grid1D grid;                                // includes the Dirichlet endpoints
    SolveScale scale;
    std::vector<double> potential;              // samples on the full grid
    std::string boundary_policy = "dirichlet";
    bool boundary_ok = true;  // endpoint potential above the top solved level
};

EigenSolution solve_potential(std::span<const double> potential_samples,
                              const Grid1D& grid, const SolveScale& scale,
                              std::size_t k);
EigenSolution solve_potential(const PotentialModel& model, const Grid1D& grid,
                              const SolveScale& scale, std::size_t k);
// Solves between the reached ends of a generated trajectory (marked
// singularities act as hard walls).
EigenSolution solve_generated(const GeneratedPotential& gen,
                              const SolveScale& scale, std::size_t k);

struct LinearFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
};
struct QuadraticFit {
    double a = 0.0, b = 0.0, c = 0.0, r2 = 0.0;
};

LinearFit fit_linear(std::span<const double> x, std::span<const double> y);
QuadraticFit fit_quadratic(std::span<const double> x, std::span<const double> y);

struct SpectrumReport {
    std::size_t window_lo = 0, window_hi = 0;  // [lo, hi)
    std::vector<double> spacings;
    double mean_spacing = 0.0;
    double cv = 0.0;  // sample std / mean
    LinearFit energy_fit;  // E_n vs n over the window
};

// Spacings, their coefficient of variation, and the least-squares line of
// E_n vs n over levels [lo, hi). Requires at least 3 levels.
SpectrumReport spacing_report(const EigenSolution& sol, std::size_t lo,
                              std::size_t hi);

struct ClassifyOptions {
    double min_amplitude = 0.5;   // peak-to-valley needed to call a dip a well
    double pair_distance = 2.0;   // a lone dip is not an oscillating region
    double region_halfwidth = 1.0;
    double ipr_factor = 0.7;      // class-1 needs IPR >= factor * window median
};

struct StateClassification {
    std::vector<int> label;        // 1 = localized in oscillations, 2 = delocalized
    std::vector<double> ipr;       // h * sum psi^4
    std::vector<double> mean_x;
    std::vector<double> spread_x;
    std::vector<double> confidence;  // margin of the IPR test, clipped to [0, 1]
    std::vector<int> region;       // oscillating-region index for class-1, -1 else
    std::vector<std::pair<double, double>> regions;  // region intervals
    bool split = false;            // false when everything landed in one class
    ClassifyOptions options_used;
};

// Deterministic two-class assignment: class-1 when the state's IPR clears
// a fraction of the window median and its mean position sits inside an
// oscillating region (paired potential dips of sufficient amplitude).
StateClassification classify_states(const EigenSolution& sol,
                                    const ClassifyOptions& opts = {});

// Spacings between consecutive same-class states in [lo, hi); class-1 lists
// are taken per oscillating region and pooled. Rung healing repairs artifacts
// of borderline states near avoided crossings: sub-half-median gaps merge
// (one of the pair is the same rung seen twice) and near-multiple gaps are
// divided down (a rung the classifier missed).
struct ClassSpacings {
    std::vector<double> raw;
    std::vector<double> healed;
    double mean = 0.0;
    double cv = 0.0;
};

ClassSpacings class_spacings(const EigenSolution& sol,
                             const StateClassification& cls, int label,
                             std::size_t lo, std::size_t hi);

// Shift-operator application on numerical eigenstates.
struct ShiftOperatorContext {
    int order = 1;
    double isotonic_a = 0.0;
    // order-3 data on the full grid
    std::vector<double> u, du, d3u;

    static ShiftOperatorContext harmonic();
    static ShiftOperatorContext isotonic(double a);
    static ShiftOperatorContext from_generated(const GeneratedPotential& gen,
                                               const EigenSolution& sol);
    static ShiftOperatorContext from_samples(std::span<const double> u,
                                             const Grid1D& grid);
};

// overlap[n] = |<psi_{n+1}, L psi_n>| / (||psi_{n+1}|| ||L psi_n||).
std::vector<double> apply_shift_operator(const EigenSolution& sol,
                                         const ShiftOperatorContext& ctx);

// ||(xi + d/dxi) psi_n|| / ||psi_n||; vanishes on the harmonic ground state.
double lowering_norm_ratio(const EigenSolution& sol, std::size_t n);

}  // namespace eqspec
