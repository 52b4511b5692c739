#include "eqspec/perturbation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace eqspec::perturbation {
namespace {

// One step of the ladder recursion applied to a band vector over n:
// out[n] = sqrt((n+1)/2) in[n+1] + sqrt(n/2) in[n-1].
std::map<unsigned, RadicalRational> ladder_step(
    const std::map<unsigned, RadicalRational>& in) {
    std::map<unsigned, RadicalRational> out;
    for (const auto& [n, v] : in) {
        if (v.is_zero()) continue;
        // raise target: n -> n+1 carries sqrt((n+1)/2)
        {
            const RadicalRational f = RadicalRational::sqrt_of(Rational(n + 1, 2));
            out[n + 1] += f * v;
        }
        if (n > 0) {
            const RadicalRational f = RadicalRational::sqrt_of(Rational(n, 2));
            out[n - 1] += f * v;
        }
    }
    return out;
}

// Band row u^{(j)}_{m, .}: all nonzero <m|xi^j|n> for fixed m.
std::map<unsigned, RadicalRational> element_row(unsigned m, unsigned j) {
    std::map<unsigned, RadicalRational> row;
    row[m] = RadicalRational(Rational(1));
    for (unsigned step = 0; step < j; ++step) row = ladder_step(row);
    return row;
}

Rational require_rational(const RadicalRational& v, const char* what) {
    if (!v.is_rational())
        throw std::logic_error(std::string("perturbation: ") + what +
                               " failed radical cancellation");
    return v.rational_value();
}

}  // namespace

RadicalRational matrix_element(unsigned m, unsigned n, unsigned j) {
    if ((m + n + j) % 2 != 0) return {};
    if ((m > n ? m - n : n - m) > j) return {};
    const auto row = element_row(m, j);
    const auto it = row.find(n);
    return it == row.end() ? RadicalRational{} : it->second;
}

RationalPoly diagonal_polynomial(unsigned j) {
    if (j % 2 != 0)
        throw std::invalid_argument(
            "diagonal_polynomial: diagonal vanishes for odd j");
    const unsigned deg = j / 2;
    std::vector<Rational> xs, ys;
    for (unsigned k = 0; k <= deg; ++k) {
        xs.emplace_back(k);
        ys.push_back(require_rational(matrix_element(k, k, j), "diagonal element"));
    }
    const RationalPoly p = RationalPoly::interpolate(xs, ys);
    // degree certification at one extra point
    const unsigned kx = deg + 1;
    const Rational expect =
        require_rational(matrix_element(kx, kx, j), "diagonal element");
    if (p.eval(Rational(kx)) != expect)
        throw std::logic_error("diagonal_polynomial: degree certification failed");
    return p;
}

RationalPoly offdiagonal_polynomial(unsigned j, unsigned l) {
    if (l < 1 || l > j)
        throw std::invalid_argument("offdiagonal_polynomial: need 1 <= l <= j");
    if ((j - l) % 2 != 0)
        throw std::invalid_argument(
            "offdiagonal_polynomial: element vanishes for odd j-l");
    const unsigned deg = (j - l) / 2;
    auto p_value = [&](unsigned k) {
        const RadicalRational u = matrix_element(k, k - l, j);
        const RadicalRational w = RadicalRational::sqrt_of(
            Rational(factorial(k), pow2(l) * factorial(k - l)));
        return require_rational(u / w, "p_kl reduction");
    };
    std::vector<Rational> xs, ys;
    for (unsigned k = l; k <= l + deg; ++k) {
        xs.emplace_back(k);
        ys.push_back(p_value(k));
    }
    const RationalPoly p = RationalPoly::interpolate(xs, ys);
    const unsigned kx = l + deg + 1;
    if (p.eval(Rational(kx)) != p_value(kx))
        throw std::logic_error("offdiagonal_polynomial: degree certification failed");
    return p;
}

namespace {

// u_mn = sum_j u[j] * u^{(j)}_{mn}; nonzero terms share one radicand since
// contributing j all have the parity of m+n.
RadicalRational combined_element(unsigned m, unsigned n,
                                 const std::vector<Rational>& u) {
    RadicalRational acc;
    for (unsigned j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        RadicalRational term = matrix_element(m, n, j);
        if (term.is_zero()) continue;
        acc += RadicalRational(u[j]) * term;
    }
    return acc;
}

}  // namespace

PerturbationSeries correction_series(unsigned k, const std::vector<Rational>& u,
                                     unsigned p_max) {
    if (p_max < 1) throw std::invalid_argument("correction_series: p_max >= 1");
    const unsigned band = static_cast<unsigned>(u.size());  // max |m-n| per factor

    PerturbationSeries out;
    out.k = k;

    // intermediate normalization: c_kk^(0) = 1, c_kk^(p>=1) = 0
    std::map<unsigned, RadicalRational> c_prev;
    c_prev[k] = RadicalRational(Rational(1));
    std::vector<std::map<unsigned, RadicalRational>> c_all;  // c^(1..)
    std::vector<Rational> eps;                               // eps^(1..)

    const auto u_elem = [&](unsigned a, unsigned b) { return combined_element(a, b, u); };

    for (unsigned p = 1; p <= p_max; ++p) {
        // eps_k^(p) = sum_n u_kn c_kn^(p-1)
        RadicalRational eps_acc;
        for (const auto& [n, c] : c_prev) {
            if (c.is_zero()) continue;
            const RadicalRational ukn = u_elem(k, n);
            if (!ukn.is_zero()) eps_acc += ukn * c;
        }
        eps.push_back(eps_acc.is_zero()
                          ? Rational(0)
                          : require_rational(eps_acc, "energy correction"));

        // c_km^(p) over the band |m-k| <= band*p
        std::map<unsigned, RadicalRational> c_next;
        const unsigned m_lo = (k > band * p) ? k - band * p : 0;
        const unsigned m_hi = k + band * p;
        const Rational u_kk =
            u_elem(k, k).is_zero() ? Rational(0) : u_elem(k, k).rational_value();
        for (unsigned m = m_lo; m <= m_hi; ++m) {
            if (m == k) continue;
            RadicalRational acc;
            // sum_n u_mn c_kn^(p-1): n limited to the band of c_prev
            for (const auto& [n, c] : c_prev) {
                if (c.is_zero()) continue;
                const RadicalRational umn = u_elem(m, n);
                if (!umn.is_zero()) acc += umn * c;
            }
            // - u_kk c_km^(p-1)
            if (u_kk != 0) {
                const auto it = c_prev.find(m);
                if (it != c_prev.end())
                    acc -= RadicalRational(u_kk) * it->second;
            }
            // - sum_{q=2}^{p-1} eps^(q) c_km^(p-q)
            for (unsigned q = 2; q + 1 <= p; ++q) {
                if (eps[q - 1] == 0) continue;
                const auto& c_pq = c_all[p - q - 1];
                const auto it = c_pq.find(m);
                if (it != c_pq.end())
                    acc -= RadicalRational(eps[q - 1]) * it->second;
            }
            if (acc.is_zero()) continue;
            // denominator eps_k^(0) - eps_m^(0) = 2(k - m)
            const Rational denom(2 * (static_cast<long>(k) - static_cast<long>(m)));
            c_next[m] = acc * RadicalRational(1 / denom);
        }
        c_all.push_back(c_next);
        c_prev = std::move(c_next);
    }

    out.corrections = std::move(eps);
    out.mixing = std::move(c_all);
    return out;
}

namespace {

Rational eps_correction(unsigned k, unsigned j, unsigned p) {
    std::vector<Rational> u(j + 1, Rational(0));
    u[j] = 1;
    return correction_series(k, u, p).corrections[p - 1];
}

}  // namespace

long correction_degree(unsigned j, unsigned p) {
    if (p < 1) throw std::invalid_argument("correction_degree: p >= 1");
    long guess;
    if (p == 1)
        guess = j / 2;
    else if (p == 2)
        guess = static_cast<long>(j) - 1;
    else
        guess = (3L * j) / 2 - 2;
    guess = std::max(guess, 0L);
    const long cap = static_cast<long>(p) * static_cast<long>(j) + 2;

    for (long d = guess; d <= cap; ++d) {
        std::vector<Rational> xs, ys;
        for (long k = 0; k <= d; ++k) {
            xs.emplace_back(k);
            ys.push_back(eps_correction(static_cast<unsigned>(k), j, p));
        }
        const RationalPoly poly = RationalPoly::interpolate(xs, ys);
        const long kx = d + 1;
        if (poly.eval(Rational(kx)) ==
            eps_correction(static_cast<unsigned>(kx), j, p))
            return poly.degree() < 0 ? 0 : poly.degree();
    }
    throw std::logic_error("correction_degree: no certified degree below cap");
}

EquidistanceVerdict equidistance_verdict(const std::vector<Rational>& u,
                                         unsigned p_max, unsigned k_lo,
                                         unsigned k_hi) {
    if (k_hi < k_lo + 2)
        throw std::invalid_argument("equidistance_verdict: range must span >= 3 k");
    EquidistanceVerdict v;
    for (unsigned p = 1; p <= p_max; ++p) {
        std::vector<Rational> vals;
        for (unsigned k = k_lo; k <= k_hi; ++k)
            vals.push_back(correction_series(k, u, p).corrections[p - 1]);
        std::vector<Rational> diffs;
        for (std::size_t i = 0; i + 1 < vals.size(); ++i)
            diffs.push_back(vals[i + 1] - vals[i]);
        v.spacing_table.push_back(diffs);

        bool affine = true;
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
            if (diffs[i + 1] != diffs[i]) affine = false;
        if (!affine && v.equidistant) {
            v.equidistant = false;
            v.violating_order = p;
            std::vector<Rational> xs;
            for (unsigned k = k_lo; k <= k_hi; ++k) xs.emplace_back(k);
            v.violating_degree = RationalPoly::interpolate(xs, vals).degree();
        }
    }
    return v;
}

}  // namespace eqspec::perturbation
