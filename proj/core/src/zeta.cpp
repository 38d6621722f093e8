#include "rhzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rhzeta/errors.hpp"
#include "rhzeta/io.hpp"

namespace rhz {

namespace {

using Complex = std::complex<double>;

constexpr double kDomainGuard = 1e-6;
constexpr double kRelativeTarget = 1e-12;
constexpr std::size_t kMaxExplicitTerms = std::size_t{1} << 24;

// (n + a)^(-s) via exp(-s ln(n+a)); the phase t ln(n+a) is formed in long
// double so large |t| keeps full double accuracy.
Complex dirichlet_term(Complex s, double base) {
    const long double l = std::log(static_cast<long double>(base));
    const double mag = std::exp(-s.real() * static_cast<double>(l));
    if (s.imag() == 0.0) return {mag, 0.0};
    const long double phase = -static_cast<long double>(s.imag()) * l;
    return {mag * static_cast<double>(std::cos(phase)), mag * static_cast<double>(std::sin(phase))};
}

void require_a(double a) {
    if (!(a > 0.0 && a <= 1.0)) throw InvalidParameter("a must satisfy 0 < a <= 1");
}

// B_{2k} / (2k)! for k = 1..4.
constexpr double kBernoulliOverFactorial[4] = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
};

struct EulerMaclaurin {
    Complex value;
    double neglected;
};

EulerMaclaurin euler_maclaurin(Complex s, double a, std::size_t m) {
    Complex head(0.0, 0.0);
    for (std::size_t n = 0; n < m; ++n) head += dirichlet_term(s, static_cast<double>(n) + a);

    const double x = static_cast<double>(m) + a;
    const Complex x_pow = dirichlet_term(s, x);  // x^(-s)
    Complex tail = x * x_pow / (s - 1.0) + 0.5 * x_pow;

    // Term k: B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * x^(-s-2k+1)
    Complex rising = s;
    Complex power = x_pow / x;
    for (int k = 0; k < 3; ++k) {
        tail += kBernoulliOverFactorial[k] * rising * power;
        rising *= (s + static_cast<double>(2 * k + 1)) * (s + static_cast<double>(2 * k + 2));
        power /= x * x;
    }
    const double neglected = std::abs(kBernoulliOverFactorial[3] * rising * power);
    return {head + tail, neglected};
}

}  // namespace

Complex dirichlet_truncated(Complex s, double a, std::size_t n_terms) {
    require_a(a);
    if (n_terms < 1) throw InvalidParameter("dirichlet_truncated: n_terms must be >= 1");
    Complex acc(0.0, 0.0);
    for (std::size_t n = 0; n < n_terms; ++n) acc += dirichlet_term(s, static_cast<double>(n) + a);
    return acc;
}

Complex hurwitz_zeta(Complex s, double a) {
    require_a(a);
    if (!(s.real() > 1.0 + kDomainGuard) || !std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw OutOfDomain("hurwitz_zeta: Re s = " + io::format_real(s.real()) +
                          " is outside the convergent half-plane Re s > 1");
    }
    auto m = static_cast<std::size_t>(std::max(16.0, std::ceil(std::abs(s))));
    for (;;) {
        const EulerMaclaurin em = euler_maclaurin(s, a, m);
        if (em.neglected <= kRelativeTarget * std::abs(em.value) || m >= kMaxExplicitTerms) return em.value;
        m *= 2;
    }
}

double integral_tail_bound(double sigma, double a, std::size_t n_terms) {
    if (!(sigma > 1.0)) throw InvalidParameter("integral_tail_bound: sigma must exceed 1");
    if (n_terms < 1) throw InvalidParameter("integral_tail_bound: n_terms must be >= 1");
    const double x = static_cast<double>(n_terms) - 1.0 + a;
    return std::pow(x, 1.0 - sigma) / (sigma - 1.0);
}

double truncation_error_estimate(double n_terms, double sigma) {
    if (!(sigma > 1.0)) throw InvalidParameter("truncation_error_estimate: sigma must exceed 1");
    if (!(n_terms > 0.0)) throw InvalidParameter("truncation_error_estimate: n_terms must be positive");
    return std::pow(n_terms, 1.0 - sigma) / (sigma - 1.0);
}

double n_min(double sigma) {
    if (!(sigma > 1.0)) throw InvalidParameter("n_min: sigma must exceed 1");
    const double d = sigma - 1.0;
    return std::pow(d, -1.0 / d);
}

std::vector<DomainPoint> accessible_domain(std::span<const double> sigma_grid, std::optional<double> t_coh,
                                           std::size_t n_cap) {
    if (t_coh && !(*t_coh > 0.0)) throw InvalidParameter("accessible_domain: t_coh must be positive");
    if (n_cap < 1) throw InvalidParameter("accessible_domain: level cap must be >= 1");

    std::vector<DomainPoint> out;
    out.reserve(sigma_grid.size());
    for (double sigma : sigma_grid) {
        DomainPoint p;
        p.sigma = sigma;
        p.n_min = n_min(sigma);
        p.t_max = t_coh ? *t_coh : std::numeric_limits<double>::infinity();
        const auto cap = static_cast<double>(n_cap);
        // Relative slack absorbs the last-bit error of pow at exact integers (e.g. 3125).
        const double needed = std::ceil(p.n_min * (1.0 - 1e-12));
        if (!std::isfinite(p.n_min) || needed > cap) {
            p.n_required = n_cap;
            p.feasible = false;
        } else {
            p.n_required = std::max<std::size_t>(1, static_cast<std::size_t>(needed));
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace rhz
