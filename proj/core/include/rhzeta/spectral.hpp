// spectral.hpp - parameter space, logarithmic spectrum and Riemann-state amplitudes
#pragma once

#include <cstddef>
#include <vector>

namespace rhz {

/// The quadruple (N, a, sigma, omega) that fixes both the spectrum and the
/// initial-state weights. Energies everywhere in the library are expressed in
/// units of hbar*omega; omega only enters when a physical time is converted
/// to the Dirichlet exponent s = sigma + i*omega*t.
struct SimulationParams {
    std::size_t n_levels = 5;
    double a = 1.0;
    double sigma = 2.0;
    double omega = 1.0;

    /// Throws InvalidParameter unless N >= 1, 0 < a <= 1, sigma > 1, omega > 0.
    void validate() const;
};

/// E_n = ln(n + a), n = 0..N-1, strictly increasing.
struct Spectrum {
    std::vector<double> energies;

    std::size_t size() const noexcept { return energies.size(); }
};

/// C_n = norm_constant * (n + a)^(-sigma/2), unit Euclidean norm.
struct AmplitudeVector {
    std::vector<double> amplitudes;
    double norm_constant = 1.0;

    std::size_t size() const noexcept { return amplitudes.size(); }
};

Spectrum log_spectrum(const SimulationParams& params);

AmplitudeVector riemann_amplitudes(const SimulationParams& params);

}  // namespace rhz
