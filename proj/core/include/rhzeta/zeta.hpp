// zeta.hpp - Hurwitz zeta reference values and the truncation-error model
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rhz {

/// sum_{n=0}^{n_terms-1} (n + a)^(-s), accumulated in ascending n.
std::complex<double> dirichlet_truncated(std::complex<double> s, double a, std::size_t n_terms);

/// zeta(s, a) for Re s > 1 + 1e-6 and 0 < a <= 1.
///
/// Euler-Maclaurin: M explicit terms, then the integral term
/// (M+a)^(1-s)/(s-1), the half term (M+a)^(-s)/2 and Bernoulli corrections
/// through B_6. M starts at max(16, |s|) and doubles until the first
/// neglected (B_8) correction is below 1e-12 relative to the result.
/// Throws OutOfDomain otherwise.
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

/// Rigorous bound on |zeta(s,a) - dirichlet_truncated(s,a,N)| from comparing
/// the tail with an integral: (N - 1 + a)^(1-sigma) / (sigma - 1).
double integral_tail_bound(double sigma, double a, std::size_t n_terms);

/// Magnitude of the leading asymptotic error term at t = 0: N^(1-sigma)/(sigma-1).
/// N is real so that n_min(sigma) can be fed back in.
double truncation_error_estimate(double n_terms, double sigma);

/// (sigma - 1)^(-1/(sigma - 1)): where truncation_error_estimate reaches 1.
/// Real valued; callers round up.
double n_min(double sigma);

struct DomainPoint {
    double sigma = 0.0;
    double n_min = 0.0;           // real value of n_min(sigma), may be +inf
    std::size_t n_required = 1;   // ceil(n_min), at least 1, saturated at the cap
    double t_max = 0.0;           // coherence window [0, t_max]; +inf when unbounded
    bool feasible = true;         // false when n_min exceeds the cap
};

inline constexpr std::size_t kDefaultLevelCap = 1000000;

std::vector<DomainPoint> accessible_domain(std::span<const double> sigma_grid, std::optional<double> t_coh,
                                           std::size_t n_cap = kDefaultLevelCap);

}  // namespace rhz
