#include "eqspec/fd.hpp"

#include <stdexcept>

#include "eqspec/errors.hpp"

namespace eqspec {

std::vector<double> fd_derivative(std::span<const double> samples,
                                  const Grid1D& grid, int order) {
    const std::size_t n = samples.size();
    if (n != grid.size())
        throw std::invalid_argument("fd_derivative: samples do not match grid");
    if (order < 1 || order > 4)
        throw std::invalid_argument("fd_derivative: order must be 1..4");
    const std::size_t halo = (order <= 2) ? 1 : 2;
    if (n < 2 * halo + 1)
        throw std::invalid_argument("fd_derivative: grid too small for requested order");

    const double h = grid.spacing();
    const auto f = samples;
    std::vector<double> d(n);

    switch (order) {
        case 1: {
            const double c = 1.0 / (2.0 * h);
            for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * c;
            d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * c;
            d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * c;
            break;
        }
        case 2: {
            const double c = 1.0 / (h * h);
            for (std::size_t i = 1; i + 1 < n; ++i)
                d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * c;
            d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * c;
            d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * c;
            break;
        }
        case 3: {
            const double c = 1.0 / (2.0 * h * h * h);
            for (std::size_t i = 2; i + 2 < n; ++i)
                d[i] = (-f[i - 2] + 2.0 * f[i - 1] - 2.0 * f[i + 1] + f[i + 2]) * c;
            // one-sided stencil, first order
            const double c1 = 1.0 / (h * h * h);
            for (std::size_t i : {std::size_t{0}, std::size_t{1}})
                d[i] = (-f[i] + 3.0 * f[i + 1] - 3.0 * f[i + 2] + f[i + 3]) * c1;
            for (std::size_t i : {n - 2, n - 1})
                d[i] = (f[i] - 3.0 * f[i - 1] + 3.0 * f[i - 2] - f[i - 3]) * c1;
            break;
        }
        case 4: {
            const double c = 1.0 / (h * h * h * h);
            for (std::size_t i = 2; i + 2 < n; ++i)
                d[i] = (f[i - 2] - 4.0 * f[i - 1] + 6.0 * f[i] - 4.0 * f[i + 1] + f[i + 2]) * c;
            for (std::size_t i : {std::size_t{0}, std::size_t{1}})
                d[i] = (f[i] - 4.0 * f[i + 1] + 6.0 * f[i + 2] - 4.0 * f[i + 3] + f[i + 4]) * c;
            for (std::size_t i : {n - 2, n - 1})
                d[i] = (f[i] - 4.0 * f[i - 1] + 6.0 * f[i - 2] - 4.0 * f[i - 3] + f[i - 4]) * c;
            break;
        }
    }
    return d;
}

}  // namespace eqspec
