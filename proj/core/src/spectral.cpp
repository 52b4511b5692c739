#include "eqspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eqspec/errors.hpp"
#include "eqspec/fd.hpp"
#include "eqspec/tridiag.hpp"

namespace eqspec {

EigenSolution solve_potential(std::span<const double> potential_samples,
                              const Grid1D& grid, const SolveScale& scale,
                              std::size_t k) {
    const TridiagonalSym m = build_hamiltonian(potential_samples, grid, scale);
    EigenPairs pairs = eigensolve(m, k, grid.spacing());

    EigenSolution sol{std::move(pairs.values), std::move(pairs.vectors), grid,
                      scale,
                      {potential_samples.begin(), potential_samples.end()}};
    const double wall =
        std::min(potential_samples.front(), potential_samples.back());
    sol.boundary_ok = wall >= sol.energies.back();
    return sol;
}

EigenSolution solve_potential(const PotentialModel& model, const Grid1D& grid,
                              const SolveScale& scale, std::size_t k) {
    return solve_potential(evaluate(model, grid), grid, scale, k);
}

EigenSolution solve_generated(const GeneratedPotential& gen,
                              const SolveScale& scale, std::size_t k) {
    if (gen.xi.size() < 3)
        throw NumericError("solve_generated: trajectory too short");
    const Grid1D grid(gen.xi.front(), gen.xi.back(), gen.xi.size());
    return solve_potential(gen.u, grid, scale, k);
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n)
        throw std::invalid_argument("fit_linear: need >= 2 matching points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += e * e;
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    f.r2 = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

QuadraticFit fit_quadratic(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 3 || y.size() != n)
        throw std::invalid_argument("fit_quadratic: need >= 3 matching points");
    // normal equations for [a b c] on basis [x^2, x, 1]
    double s[5] = {0, 0, 0, 0, 0};  // sums of x^0..x^4
    double t[3] = {0, 0, 0};        // sums of y x^0..x^2
    for (std::size_t i = 0; i < n; ++i) {
        double p = 1.0;
        for (int d = 0; d <= 4; ++d) {
            s[d] += p;
            if (d <= 2) t[d] += y[i] * p;
            p *= x[i];
        }
    }
    double m[3][4] = {{s[4], s[3], s[2], t[2]},
                      {s[3], s[2], s[1], t[1]},
                      {s[2], s[1], s[0], t[0]}};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    QuadraticFit q;
    q.a = m[0][3] / m[0][0];
    q.b = m[1][3] / m[1][1];
    q.c = m[2][3] / m[2][2];
    double ss_res = 0, ss_tot = 0, ybar = t[0] / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (q.a * x[i] * x[i] + q.b * x[i] + q.c);
        ss_res += e * e;
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    q.r2 = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
    return q;
}

SpectrumReport spacing_report(const EigenSolution& sol, std::size_t lo,
                              std::size_t hi) {
    if (hi > sol.energies.size()) hi = sol.energies.size();
    if (hi < lo + 3)
        throw std::invalid_argument("spacing_report: window shorter than 3 levels");
    SpectrumReport r;
    r.window_lo = lo;
    r.window_hi = hi;
    std::vector<double> idx;
    for (std::size_t n = lo; n < hi; ++n) idx.push_back(static_cast<double>(n));
    r.energy_fit = fit_linear(idx, std::span(sol.energies).subspan(lo, hi - lo));
    for (std::size_t n = lo; n + 1 < hi; ++n)
        r.spacings.push_back(sol.energies[n + 1] - sol.energies[n]);
    const double mean =
        std::accumulate(r.spacings.begin(), r.spacings.end(), 0.0) /
        static_cast<double>(r.spacings.size());
    double var = 0.0;
    for (double s : r.spacings) var += (s - mean) * (s - mean);
    var /= static_cast<double>(r.spacings.size() - 1);
    r.mean_spacing = mean;
    r.cv = (mean != 0.0) ? std::sqrt(var) / std::abs(mean) : 0.0;
    return r;
}

namespace {

std::vector<double> oscillation_well_positions(const EigenSolution& sol,
                                               const ClassifyOptions& opts) {
    const auto& u = sol.potential;
    const std::size_t n = u.size();
    std::vector<std::size_t> minima, maxima;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (u[i] < u[i - 1] && u[i] <= u[i + 1]) minima.push_back(i);
        if (u[i] > u[i - 1] && u[i] >= u[i + 1]) maxima.push_back(i);
    }
    std::vector<double> qualifying;
    for (std::size_t i : minima) {
        double amp = 0.0;
        for (std::size_t j : maxima) {  // nearest enclosing maxima
            if (j < i) amp = std::max(amp, u[j] - u[i]);
            if (j > i) {
                amp = std::max(amp, u[j] - u[i]);
                break;
            }
        }
        if (amp >= opts.min_amplitude) qualifying.push_back(sol.grid.node(i));
    }
    // lone dips (the global well of a smooth potential) are not oscillations
    std::vector<double> paired;
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
        const bool left_ok =
            i > 0 && qualifying[i] - qualifying[i - 1] <= opts.pair_distance;
        const bool right_ok = i + 1 < qualifying.size() &&
                              qualifying[i + 1] - qualifying[i] <= opts.pair_distance;
        if (left_ok || right_ok) paired.push_back(qualifying[i]);
    }
    return paired;
}

}  // namespace

StateClassification classify_states(const EigenSolution& sol,
                                    const ClassifyOptions& opts) {
    const std::size_t k = sol.energies.size();
    if (k < 2)
        throw std::invalid_argument("classify_states: need at least 2 states");
    const double h = sol.grid.spacing();

    StateClassification out;
    out.options_used = opts;
    out.label.resize(k);
    out.ipr.resize(k);
    out.mean_x.resize(k);
    out.spread_x.resize(k);
    out.confidence.resize(k);
    out.region.assign(k, -1);

    for (std::size_t s = 0; s < k; ++s) {
        const auto& psi = sol.states[s];
        double p4 = 0.0, mx = 0.0, mx2 = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            const double x = sol.grid.node(i + 1);
            const double p2 = psi[i] * psi[i];
            p4 += psi[i] * psi[i] * psi[i] * psi[i];
            mx += x * p2;
            mx2 += x * x * p2;
        }
        out.ipr[s] = h * p4;
        out.mean_x[s] = h * mx;
        out.spread_x[s] = std::sqrt(std::max(0.0, h * mx2 - out.mean_x[s] * out.mean_x[s]));
    }

    const std::vector<double> wells = oscillation_well_positions(sol, opts);
    // region intervals: merge well neighborhoods that touch
    for (double w : wells) {
        const double lo = w - opts.region_halfwidth, hi = w + opts.region_halfwidth;
        if (!out.regions.empty() && lo <= out.regions.back().second)
            out.regions.back().second = hi;
        else
            out.regions.emplace_back(lo, hi);
    }

    std::vector<double> sorted_ipr = out.ipr;
    std::nth_element(sorted_ipr.begin(), sorted_ipr.begin() + k / 2,
                     sorted_ipr.end());
    const double median = sorted_ipr[k / 2];
    const double threshold = opts.ipr_factor * median;

    for (std::size_t s = 0; s < k; ++s) {
        int region = -1;
        for (std::size_t r = 0; r < out.regions.size(); ++r) {
            if (out.mean_x[s] >= out.regions[r].first &&
                out.mean_x[s] <= out.regions[r].second) {
                region = static_cast<int>(r);
                break;
            }
        }
        const bool localized = out.ipr[s] >= threshold;
        out.label[s] = (localized && region >= 0) ? 1 : 2;
        out.region[s] = (out.label[s] == 1) ? region : -1;
        out.confidence[s] = (threshold > 0)
                                ? std::min(1.0, std::abs(out.ipr[s] - threshold) /
                                                    threshold)
                                : 1.0;
    }
    const auto n1 = std::count(out.label.begin(), out.label.end(), 1);
    out.split = n1 > 0 && n1 < static_cast<long>(k);
    return out;
}

namespace {

std::vector<double> heal_spacings(std::vector<double> sp) {
    if (sp.size() < 2) return sp;
    auto median_of = [](std::vector<double> v) {
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        return v[v.size() / 2];
    };
    // merge sub-half-median gaps (the same rung counted twice)
    for (;;) {
        const double med = median_of(sp);
        std::size_t worst = sp.size();
        for (std::size_t i = 0; i < sp.size(); ++i)
            if (sp[i] < 0.5 * med &&
                (worst == sp.size() || sp[i] < sp[worst]))
                worst = i;
        if (worst == sp.size() || sp.size() < 2) break;
        // merge into whichever neighbor gap lands closer to the median
        if (worst == 0) {
            sp[1] += sp[0];
            sp.erase(sp.begin());
        } else if (worst + 1 == sp.size()) {
            sp[worst - 1] += sp[worst];
            sp.pop_back();
        } else {
            const double left = sp[worst - 1] + sp[worst];
            const double right = sp[worst] + sp[worst + 1];
            if (std::abs(left - med) <= std::abs(right - med)) {
                sp[worst - 1] = left;
                sp.erase(sp.begin() + static_cast<long>(worst));
            } else {
                sp[worst + 1] = right;
                sp.erase(sp.begin() + static_cast<long>(worst));
            }
        }
    }
    // divide down near-multiples (rungs the classifier missed)
    const double med = median_of(sp);
    for (double& s : sp) {
        const long mult = std::lround(s / med);
        if (mult >= 2) s /= static_cast<double>(mult);
    }
    return sp;
}

}  // namespace

ClassSpacings class_spacings(const EigenSolution& sol,
                             const StateClassification& cls, int label,
                             std::size_t lo, std::size_t hi) {
    if (hi > sol.energies.size()) hi = sol.energies.size();
    ClassSpacings out;
    // class-1 per oscillating region, class-2 as one list
    const int max_region =
        cls.regions.empty() ? 0 : static_cast<int>(cls.regions.size());
    const int groups = (label == 1) ? std::max(1, max_region) : 1;
    for (int g = 0; g < groups; ++g) {
        std::vector<double> energies;
        for (std::size_t n = lo; n < hi; ++n) {
            if (cls.label[n] != label) continue;
            if (label == 1 && groups > 1 && cls.region[n] != g) continue;
            energies.push_back(sol.energies[n]);
        }
        for (std::size_t i = 0; i + 1 < energies.size(); ++i)
            out.raw.push_back(energies[i + 1] - energies[i]);
    }
    out.healed = heal_spacings(out.raw);
    if (!out.healed.empty()) {
        out.mean = std::accumulate(out.healed.begin(), out.healed.end(), 0.0) /
                   static_cast<double>(out.healed.size());
        if (out.healed.size() > 1) {
            double var = 0.0;
            for (double s : out.healed) var += (s - out.mean) * (s - out.mean);
            var /= static_cast<double>(out.healed.size() - 1);
            out.cv = std::sqrt(var) / std::abs(out.mean);
        }
    }
    return out;
}

ShiftOperatorContext ShiftOperatorContext::harmonic() {
    ShiftOperatorContext c;
    c.order = 1;
    return c;
}

ShiftOperatorContext ShiftOperatorContext::isotonic(double a) {
    ShiftOperatorContext c;
    c.order = 2;
    c.isotonic_a = a;
    return c;
}

ShiftOperatorContext ShiftOperatorContext::from_generated(
    const GeneratedPotential& gen, const EigenSolution& sol) {
    ShiftOperatorContext c;
    c.order = 3;
    // derivatives of U = W + xi^2/2 straight from the trajectory state
    const std::size_t n = sol.grid.size();
    c.u.resize(n);
    c.du.resize(n);
    c.d3u.resize(n);
    // map grid nodes onto the trajectory samples (same spacing by design)
    std::size_t offset = 0;
    while (offset < gen.xi.size() &&
           gen.xi[offset] < sol.grid.x_min() - 1e-9)
        ++offset;
    if (offset + n > gen.xi.size())
        throw std::invalid_argument(
            "ShiftOperatorContext: solution grid not within trajectory");
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = gen.xi[offset + i];
        c.u[i] = gen.u[offset + i];
        c.du[i] = gen.w1[offset + i] + xi;
        c.d3u[i] = gen.w3[offset + i];
    }
    return c;
}

ShiftOperatorContext ShiftOperatorContext::from_samples(
    std::span<const double> u, const Grid1D& grid) {
    ShiftOperatorContext c;
    c.order = 3;
    c.u.assign(u.begin(), u.end());
    c.du = fd_derivative(u, grid, 1);
    c.d3u = fd_derivative(u, grid, 3);
    return c;
}

namespace {

// psi arrives on interior nodes; pad with the Dirichlet zeros so the stencil
// derivatives see the whole grid.
std::vector<double> padded(const std::vector<double>& interior) {
    std::vector<double> full(interior.size() + 2, 0.0);
    std::copy(interior.begin(), interior.end(), full.begin() + 1);
    return full;
}

double inner(const std::vector<double>& a, const std::vector<double>& b, double h) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * h;
}

}  // namespace

std::vector<double> apply_shift_operator(const EigenSolution& sol,
                                         const ShiftOperatorContext& ctx) {
    const std::size_t k = sol.energies.size();
    if (k < 2) return {};
    if (ctx.order == 3 && (ctx.u.empty() || ctx.du.empty() || ctx.d3u.empty()))
        throw std::invalid_argument(
            "apply_shift_operator: order 3 needs potential derivatives");
    const double h = sol.grid.spacing();
    const std::size_t n_in = sol.states[0].size();

    std::vector<double> overlaps;
    overlaps.reserve(k - 1);
    for (std::size_t s = 0; s + 1 < k; ++s) {
        const std::vector<double> full = padded(sol.states[s]);
        const std::vector<double> d1 = fd_derivative(full, sol.grid, 1);
        std::vector<double> lpsi(n_in);
        if (ctx.order == 1) {
            for (std::size_t i = 0; i < n_in; ++i) {
                const double x = sol.grid.node(i + 1);
                lpsi[i] = -x * full[i + 1] + d1[i + 1];
            }
        } else if (ctx.order == 2) {
            const std::vector<double> d2 = fd_derivative(full, sol.grid, 2);
            for (std::size_t i = 0; i < n_in; ++i) {
                const double x = sol.grid.node(i + 1);
                const double alpha0 =
                    0.25 * x * x - 2.0 * ctx.isotonic_a / (x * x) - 0.5;
                lpsi[i] = alpha0 * full[i + 1] - x * d1[i + 1] - d2[i + 1];
            }
        } else {
            const std::vector<double> d2 = fd_derivative(full, sol.grid, 2);
            const std::vector<double> d3 = fd_derivative(full, sol.grid, 3);
            for (std::size_t i = 0; i < n_in; ++i) {
                const double x = sol.grid.node(i + 1);
                const double u = ctx.u[i + 1];
                const double du = ctx.du[i + 1];
                const double d3u = ctx.d3u[i + 1];
                const double alpha0 = 3.0 * u * du - 0.25 * d3u -
                                      0.5 * (x * x + 3.0) * du + 0.5 * x;
                const double alpha1 = 0.5 * x * x - 3.0 * u - 1.0;
                lpsi[i] = alpha0 * full[i + 1] + alpha1 * d1[i + 1] -
                          x * d2[i + 1] + d3[i + 1];
            }
        }
        const double denom = std::sqrt(inner(lpsi, lpsi, h) *
                                       inner(sol.states[s + 1], sol.states[s + 1], h));
        overlaps.push_back(
            denom > 0 ? std::abs(inner(lpsi, sol.states[s + 1], h)) / denom : 0.0);
    }
    return overlaps;
}

double lowering_norm_ratio(const EigenSolution& sol, std::size_t n) {
    const std::vector<double> full = padded(sol.states.at(n));
    const std::vector<double> d1 = fd_derivative(full, sol.grid, 1);
    const double h = sol.grid.spacing();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < sol.states[n].size(); ++i) {
        const double x = sol.grid.node(i + 1);
        const double v = x * full[i + 1] + d1[i + 1];
        num += v * v;
        den += full[i + 1] * full[i + 1];
    }
    return std::sqrt(num / den);
}

}  // namespace eqspec
