#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eqspec {

// Uniform 1D grid. Node i sits at x_min + i*spacing(), spacing derived from
// the bounds so that node 0 and node n_points-1 land on x_min and x_max.
class Grid1D {
public:
    Grid1D(double x_min, double x_max, std::size_t n_points)
        : x_min_(x_min), x_max_(x_max), n_(n_points) {
        if (!(x_min < x_max))
            throw std::invalid_argument("Grid1D: x_min must be < x_max");
        if (n_points < 3)
            throw std::invalid_argument("Grid1D: need at least 3 points");
        h_ = (x_max - x_min) / static_cast<double>(n_points - 1);
    }

    // Grid with a requested spacing; the actual spacing is the largest
    // h' <= h_max that divides the interval into whole steps.
    static Grid1D with_spacing(double x_min, double x_max, double h_max) {
        if (h_max <= 0.0)
            throw std::invalid_argument("Grid1D: spacing must be positive");
        const auto steps =
            static_cast<std::size_t>(std::max(2.0, std::ceil((x_max - x_min) / h_max)));
        return Grid1D(x_min, x_max, steps + 1);
    }

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }

    double node(std::size_t i) const noexcept {
        return x_min_ + static_cast<double>(i) * h_;
    }

    std::vector<double> nodes() const {
        std::vector<double> x(n_);
        for (std::size_t i = 0; i < n_; ++i) x[i] = node(i);
        return x;
    }

private:
    double x_min_, x_max_, h_;
    std::size_t n_;
};

}  // namespace eqspec
