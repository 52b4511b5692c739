#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqspec/constants.hpp"

namespace eqspec {

struct FilmRecord {
    std::string source;
    double d_nm = 0.0;      // thickness, converted to nm on load
    double de_mev = 0.0;    // level spacing
    std::optional<double> sigma_mev;
};

struct FilmDataset {
    std::vector<FilmRecord> records;
    double d_bl_nm = constants::default_bilayer_nm;
};

// CSV columns: source,d_value,d_unit(nm|BL),dE_meV[,sigma_meV]; header required.
// Bilayer thicknesses are converted via d_bl_nm. Malformed rows raise IoError
// with the offending line number; an empty body raises "no records".
FilmDataset load_dataset(const std::string& path,
                         double d_bl_nm = constants::default_bilayer_nm);

enum class FitModel { fixed_inverse, power_law };

struct FitResult {
    FitModel model = FitModel::fixed_inverse;
    double c_ev_nm = 0.0;  // dE = C / d  (C in eV nm)
    double alpha = 1.0;    // power_law exponent; 1 by definition otherwise
    double alpha_ci_lo = 0.0, alpha_ci_hi = 0.0;  // bootstrap 95% band
    double v0_over_mstar_ev = 0.0;  // C^2 / (8 hbar^2/m_e)
    double r_squared = 0.0;
    std::size_t n_records = 0;
};

// fixed_inverse: weighted least squares of dE against 1/d through the origin.
// power_law: weighted least squares in log-log space, dE = C * d^-alpha, with
// a deterministic residual bootstrap for the alpha confidence band.
FitResult fit_inverse_law(const FilmDataset& data, FitModel model);

struct TruncatedCrossCheck {
    double de_formula_mev = 0.0;  // (2 hbar / d) sqrt(2 V0/m*)
    std::vector<double> levels_ev;       // numeric levels below 0.9 V0
    std::vector<double> spacings_mev;    // between those levels
    double max_rel_deviation = 0.0;      // of spacings against the formula
    bool enough_levels = true;           // >= 2 levels below 0.9 V0
};

// Solves the truncated well numerically (m* = m_e, V0 = ratio * 1 eV) and
// compares all level spacings below 0.9 V0 with the closed-form spacing.
TruncatedCrossCheck cross_validate_truncated(double v0_over_mstar_ev, double d_nm);

}  // namespace eqspec
