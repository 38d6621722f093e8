// evolution.hpp - unitary evolution of |0> and the autocorrelation <0|psi(t)>
//
// Energies are in units of hbar*omega, so the phase accumulated by
// eigenvalue lambda over physical time t is lambda * omega * t.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "rhzeta/spectral.hpp"
#include "rhzeta/synthesis.hpp"

namespace rhz {

using Complex = std::complex<double>;

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 50.0;
    std::size_t n_points = 2001;
    std::optional<double> t_coh;  // samples with t > t_coh are dropped

    void validate() const;

    /// Uniform samples from t_start to t_end inclusive, minus anything past t_coh.
    std::vector<double> samples() const;
};

enum class EvolutionMethod { spectral, ode };

struct AutocorrelationSeries {
    std::vector<double> times;
    std::vector<Complex> amplitudes;
    EvolutionMethod method = EvolutionMethod::spectral;
};

struct StateTrajectory {
    std::vector<double> times;
    std::vector<std::vector<Complex>> states;
};

struct OdeEvolution {
    StateTrajectory trajectory;
    AutocorrelationSeries autocorrelation;
    double max_norm_drift = 0.0;
};

inline constexpr double kDefaultOdeStep = 1e-3;

/// a(t) = sum_n V[0][n]^2 exp(-i lambda_n omega t), summed in ascending n.
AutocorrelationSeries evolve_spectral(const SymmetricTridiagonal& tri, const TimeGrid& grid, double omega = 1.0);

/// Classical RK4 on i dc/dt = omega H c from c(0) = e_0. Between consecutive
/// samples the interval is split into the fewest equal sub-steps no longer
/// than `step`. Throws StepTooLarge if | |c|^2 - 1 | exceeds 1e-6.
OdeEvolution evolve_ode(const SymmetricTridiagonal& tri, const TimeGrid& grid, double step = kDefaultOdeStep,
                        double omega = 1.0);

struct ZetaSample {
    Complex s;
    Complex value;
};

/// Maps each sample to s = sigma + i omega t. Normalized mode returns a(t),
/// i.e. S_N(s)/S_N(sigma); otherwise a(t) * S_N(sigma).
std::vector<ZetaSample> zeta_estimate(const AutocorrelationSeries& series, const SimulationParams& params,
                                      bool normalized);

}  // namespace rhz
