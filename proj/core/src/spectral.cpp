#include "rhzeta/spectral.hpp"

#include <cmath>
#include <string>

#include "rhzeta/errors.hpp"
#include "rhzeta/io.hpp"

namespace rhz {

void SimulationParams::validate() const {
    if (n_levels < 1) {
        throw InvalidParameter("n_levels must be >= 1");
    }
    if (!(a > 0.0 && a <= 1.0)) {
        throw InvalidParameter("a must satisfy 0 < a <= 1 (got " + io::format_real(a) + ")");
    }
    if (!(sigma > 1.0) || !std::isfinite(sigma)) {
        throw InvalidParameter("sigma must satisfy sigma > 1 for the Dirichlet series to converge (got " +
                               io::format_real(sigma) + ")");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw InvalidParameter("omega must be positive (got " + io::format_real(omega) + ")");
    }
}

Spectrum log_spectrum(const SimulationParams& params) {
    params.validate();
    Spectrum s;
    s.energies.resize(params.n_levels);
    for (std::size_t n = 0; n < params.n_levels; ++n) {
        s.energies[n] = std::log(static_cast<double>(n) + params.a);
    }
    return s;
}

AmplitudeVector riemann_amplitudes(const SimulationParams& params) {
    params.validate();
    AmplitudeVector c;
    c.amplitudes.resize(params.n_levels);

    // Dirichlet weights at t = 0, summed in ascending n.
    double weight_sum = 0.0;
    for (std::size_t n = 0; n < params.n_levels; ++n) {
        const double base = static_cast<double>(n) + params.a;
        c.amplitudes[n] = std::pow(base, -0.5 * params.sigma);
        weight_sum += std::pow(base, -params.sigma);
    }
    c.norm_constant = 1.0 / std::sqrt(weight_sum);

    // Normalize by the realized vector norm so sum C_n^2 = 1 to round-off.
    double sq = 0.0;
    for (double v : c.amplitudes) sq += v * v;
    const double inv = 1.0 / std::sqrt(sq);
    for (double& v : c.amplitudes) v *= inv;
    return c;
}

}  // namespace rhz
