#pragma once

#include <map>
#include <vector>

#include "eqspec/radical.hpp"
#include "eqspec/ratpoly.hpp"

namespace eqspec::perturbation {

// Convention used throughout this module: H = -d^2/dxi^2 + xi^2 + lambda*u(xi)
// with unperturbed levels eps_k^(0) = 2k + 1. Matrix elements are taken in
// the orthonormal oscillator eigenbasis (identical for both unit choices).

// Exact <m| xi^j |n>. Zero when m+n+j is odd or |m-n| > j.
RadicalRational matrix_element(unsigned m, unsigned n, unsigned j);

// Exact diagonal u_kk^(j) as a polynomial in k of degree j/2 (even j only;
// odd j throws: the diagonal vanishes). Reconstructed by interpolation and
// certified with one extra evaluation point.
RationalPoly diagonal_polynomial(unsigned j);

// Exact p_kl^(j) with u_{k,k-l}^(j) = sqrt(k!/(2^l (k-l)!)) * p_kl^(j);
// degree (j-l)/2. Requires 1 <= l <= j and j-l even.
RationalPoly offdiagonal_polynomial(unsigned j, unsigned l);

struct PerturbationSeries {
    unsigned k = 0;
    std::vector<Rational> corrections;  // corrections[p-1] = eps_k^(p); exact
    // c_{km}^{(p)} for p = 1..p_max; each map holds the nonzero band
    std::vector<std::map<unsigned, RadicalRational>> mixing;
};

// Rayleigh-Schroedinger corrections for u(xi) = sum_j u[j] xi^j up to p_max.
// All sums are finite by the band structure |m-n| <= j; every eps_k^(p)
// comes out exactly rational (radical cancellation over closed index cycles).
PerturbationSeries correction_series(unsigned k, const std::vector<Rational>& u,
                                     unsigned p_max);

// Certified degree in k of eps_k^(p) for the monomial perturbation xi^j:
// evaluates exactly at enough integers, interpolates, and confirms with an
// extra point. Expected: j/2 (p=1, even j), j-1 (p=2), 3j/2-2 (p=3, even j).
long correction_degree(unsigned j, unsigned p);

struct EquidistanceVerdict {
    bool equidistant = true;
    unsigned violating_order = 0;  // first p whose eps_k^(p) is not affine in k
    long violating_degree = 0;     // degree of that correction over the range
    // first differences eps_{k+1}^(p) - eps_k^(p) per order (exact)
    std::vector<std::vector<Rational>> spacing_table;
};

// Exact affinity check of every correction order over k in [k_lo, k_hi].
EquidistanceVerdict equidistance_verdict(const std::vector<Rational>& u,
                                         unsigned p_max, unsigned k_lo,
                                         unsigned k_hi);

}  // namespace eqspec::perturbation
