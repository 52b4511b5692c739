#include "eqspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "eqspec/errors.hpp"

namespace eqspec {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gershgorin bounds for the spectrum.
std::pair<double, double> spectrum_bounds(const TridiagonalSym& m) {
    const std::size_t n = m.size();
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(m.off_diagonal[i - 1]);
        if (i + 1 < n) r += std::abs(m.off_diagonal[i]);
        lo = std::min(lo, m.diagonal[i] - r);
        hi = std::max(hi, m.diagonal[i] + r);
    }
    return {lo, hi};
}

// Solve (T - shift I) x = b with partial-pivoting LU specialized to
// tridiagonal structure (dgttrf/dgtts2 scheme); overwrites b with the solution.
void shifted_solve(const TridiagonalSym& m, double shift, std::vector<double>& b) {
    const std::size_t n = m.size();
    std::vector<double> d(n), du(n, 0.0), dl(n, 0.0), du2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = m.diagonal[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) du[i] = dl[i] = m.off_diagonal[i];

    const double tiny = kEps * kEps;
    std::vector<char> swapped(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) < tiny) d[i] = (d[i] < 0.0) ? -tiny : tiny;
            const double fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            const double old_next = d[i + 1];
            d[i + 1] = du[i] - fact * old_next;
            du[i] = old_next;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            swapped[i] = 1;
        }
    }
    if (std::abs(d[n - 1]) < tiny) d[n - 1] = (d[n - 1] < 0.0) ? -tiny : tiny;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (swapped[i]) std::swap(b[i], b[i + 1]);
        b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= d[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t ii = n; ii >= 3; --ii) {
        const std::size_t i = ii - 3;
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

std::size_t sturm_count(const TridiagonalSym& m, double x) {
    const std::size_t n = m.size();
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e2 = (i > 0) ? m.off_diagonal[i - 1] * m.off_diagonal[i - 1] : 0.0;
        q = m.diagonal[i] - x - ((i > 0) ? e2 / q : 0.0);
        if (q == 0.0) q = kEps * (std::abs(m.diagonal[i]) + std::sqrt(e2) + 1.0);
        if (q < 0.0) ++count;
    }
    return count;
}

EigenPairs eigensolve(const TridiagonalSym& m, std::size_t k, double weight) {
    const std::size_t n = m.size();
    if (m.off_diagonal.size() + 1 != n)
        throw std::invalid_argument("eigensolve: off-diagonal length must be n-1");
    if (k < 1 || k > n)
        throw std::invalid_argument("eigensolve: k must be in [1, n]");
    if (weight <= 0.0)
        throw std::invalid_argument("eigensolve: inner-product weight must be positive");

    auto [lo0, hi0] = spectrum_bounds(m);
    const double scale = std::max({std::abs(lo0), std::abs(hi0), 1.0});

    EigenPairs out;
    out.values.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        double lo = lo0, hi = hi0;
        for (int it = 0; it < 200 && (hi - lo) > 4.0 * kEps * scale; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(m, mid) > j)
                hi = mid;
            else
                lo = mid;
        }
        out.values[j] = 0.5 * (lo + hi);
    }

    // Inverse iteration per eigenvalue; deterministic start vector.
    out.vectors.resize(k);
    const double res_tol = std::max(1e-8, 50.0 * kEps * scale);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> v(n);
        unsigned long long lcg = 0x9e3779b97f4a7c15ULL + j;
        for (std::size_t i = 0; i < n; ++i) {
            lcg = lcg * 6364136223846793005ULL + 1442695040888963407ULL;
            v[i] = 0.5 + static_cast<double>(lcg >> 11) / 9007199254740992.0;
        }
        const double shift = out.values[j] + kEps * scale;

        double resid = std::numeric_limits<double>::max();
        const int max_iter = 50;
        for (int it = 0; it < max_iter; ++it) {
            shifted_solve(m, shift, v);
            // orthogonalize against previously accepted vectors
            for (std::size_t p = 0; p < j; ++p) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += v[i] * out.vectors[p][i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= dot * out.vectors[p][i];
            }
            const double nv = norm2(v);
            if (!(nv > 0.0) || !std::isfinite(nv))
                throw NumericError("eigensolve: inverse iteration broke down",
                                   static_cast<long>(j));
            for (double& x : v) x /= nv;

            // residual ||Tv - lambda v||
            resid = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double r = (m.diagonal[i] - out.values[j]) * v[i];
                if (i > 0) r += m.off_diagonal[i - 1] * v[i - 1];
                if (i + 1 < n) r += m.off_diagonal[i] * v[i + 1];
                resid += r * r;
            }
            resid = std::sqrt(resid);
            if (resid <= res_tol) break;
        }
        if (resid > res_tol)
            throw NumericError("eigensolve: eigenpair failed to converge",
                               static_cast<long>(j));

        // normalize under the grid inner product and fix the sign
        const double s = 1.0 / std::sqrt(weight);
        double vmax = 0.0;
        for (double x : v) vmax = std::max(vmax, std::abs(x));
        double sign = 1.0;
        for (double x : v) {
            if (std::abs(x) > 1e-6 * vmax) {
                sign = (x > 0.0) ? 1.0 : -1.0;
                break;
            }
        }
        for (double& x : v) x *= s * sign;
        out.vectors[j] = std::move(v);
    }
    return out;
}

}  // namespace eqspec
