#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqspec/grid.hpp"
#include "eqspec/ratpoly.hpp"

namespace eqspec {

// Which side of a singular point the model lives on.
enum class DomainSide { full_line, positive, negative };

struct Harmonic {};  // U = xi^2 / 2

struct TruncatedHarmonic {  // V = V0 for |x| >= d/2, V0 (2x/d)^2 inside
    double v0_ev;
    double d_nm;
};

struct Isotonic {  // U = xi^2/8 + A/xi^2, singular at 0
    double a;
};

struct Darboux {  // U_m built from the polynomial P_m; odd m singular at 0
    unsigned m;
};

struct Tabulated {
    std::vector<double> x;
    std::vector<double> values;
};

struct PotentialModel {
    std::variant<Harmonic, TruncatedHarmonic, Isotonic, Darboux, Tabulated> family;
    DomainSide side = DomainSide::full_line;

    static PotentialModel harmonic() { return {Harmonic{}, DomainSide::full_line}; }
    static PotentialModel truncated(double v0_ev, double d_nm);
    static PotentialModel isotonic(double a, DomainSide side = DomainSide::positive);
    static PotentialModel darboux(unsigned m);
    static PotentialModel tabulated(std::vector<double> x, std::vector<double> v);

    std::string name() const;
};

// Pointwise values on the grid. Singular families reject grids touching the
// singular point (error names the offending node).
std::vector<double> evaluate(const PotentialModel& model, const Grid1D& grid);

// Closed-form level structure where available.
struct ClosedFormSpectrum {
    double spacing = 0.0;       // consecutive-level spacing (upper ladder)
    double ground_offset = 0.0; // eps_0, meaningful when absolute_known
    double first_gap = 0.0;     // eps_1 - eps_0
    bool absolute_known = true; // darboux ladders assert structure only
    double valid_below = 0.0;   // truncated well: agreement holds below this
    std::string description;

    double level(unsigned n) const {
        if (n == 0) return ground_offset;
        return ground_offset + first_gap + spacing * (n - 1);
    }
};

ClosedFormSpectrum reference_spectrum(const PotentialModel& model, unsigned n_max);

// Normalized isotonic eigenstate psi_n(xi) on xi > 0 (closed form).
double isotonic_state(double a, unsigned n, double xi);

// Exact-coefficient polynomial P_m of the third-order ladder family;
// parity of P_m equals the parity of m.
RationalPoly darboux_polynomial(unsigned m);

// U_m evaluated from P_m and its exact derivative (converted to double only
// at the evaluation point).
double darboux_potential(unsigned m, double xi);

}  // namespace eqspec
