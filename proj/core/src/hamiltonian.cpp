#include "eqspec/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "eqspec/constants.hpp"
#include "eqspec/errors.hpp"

namespace eqspec {

double SolveScale::kinetic() const {
    if (!physical) return 0.5;
    if (mass_ratio <= 0.0)
        throw std::invalid_argument("SolveScale: mass ratio must be positive");
    return 0.5 * constants::hbar_sq_over_me_eV_nm2 / mass_ratio;
}

TridiagonalSym build_hamiltonian(std::span<const double> potential_samples,
                                 const Grid1D& grid, const SolveScale& scale) {
    if (potential_samples.size() != grid.size())
        throw std::invalid_argument("build_hamiltonian: samples do not match grid");
    for (std::size_t i = 0; i < potential_samples.size(); ++i) {
        if (!std::isfinite(potential_samples[i])) {
            char msg[80];
            std::snprintf(msg, sizeof msg,
                          "build_hamiltonian: non-finite potential at node %zu", i);
            throw NumericError(msg, static_cast<long>(i));
        }
    }

    const double c = scale.kinetic();
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    const std::size_t n_in = grid.size() - 2;  // interior nodes only

    TridiagonalSym m;
    m.diagonal.resize(n_in);
    m.off_diagonal.assign(n_in - 1, -c * inv_h2);
    for (std::size_t i = 0; i < n_in; ++i)
        m.diagonal[i] = 2.0 * c * inv_h2 + potential_samples[i + 1];
    return m;
}

}  // namespace eqspec
