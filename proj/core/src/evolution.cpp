#include "rhzeta/evolution.hpp"

#include <cmath>
#include <string>

#include "rhzeta/errors.hpp"
#include "rhzeta/io.hpp"
#include "rhzeta/verification.hpp"
#include "rhzeta/zeta.hpp"

namespace rhz {

namespace {

constexpr double kMaxNormDrift = 1e-6;

// y = -i * omega * H * c for tridiagonal H.
void apply_generator(const SymmetricTridiagonal& h, double omega, const std::vector<Complex>& c,
                     std::vector<Complex>& y) {
    const std::size_t n = c.size();
    const Complex minus_i_omega(0.0, -omega);
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = h.diagonal[i] * c[i];
        if (i > 0) acc += h.offdiagonal[i - 1] * c[i - 1];
        if (i + 1 < n) acc += h.offdiagonal[i] * c[i + 1];
        y[i] = minus_i_omega * acc;
    }
}

class Rk4Integrator {
public:
    Rk4Integrator(const SymmetricTridiagonal& h, double omega)
        : h_(h), omega_(omega), n_(h.order()), k1_(n_), k2_(n_), k3_(n_), k4_(n_), tmp_(n_), carry_(n_) {}

    // Kahan-compensated state update.
    void step(std::vector<Complex>& c, double dt) {
        apply_generator(h_, omega_, c, k1_);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = c[i] + 0.5 * dt * k1_[i];
        apply_generator(h_, omega_, tmp_, k2_);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = c[i] + 0.5 * dt * k2_[i];
        apply_generator(h_, omega_, tmp_, k3_);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = c[i] + dt * k3_[i];
        apply_generator(h_, omega_, tmp_, k4_);
        for (std::size_t i = 0; i < n_; ++i) {
            const Complex inc = (dt / 6.0) * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]) - carry_[i];
            const Complex next = c[i] + inc;
            carry_[i] = (next - c[i]) - inc;
            c[i] = next;
        }
    }

private:
    const SymmetricTridiagonal& h_;
    double omega_;
    std::size_t n_;
    std::vector<Complex> k1_, k2_, k3_, k4_, tmp_, carry_;
};

double norm_drift(const std::vector<Complex>& c) {
    double s = 0.0;
    for (const auto& x : c) s += std::norm(x);
    return std::abs(s - 1.0);
}

}  // namespace

void TimeGrid::validate() const {
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end)) {
        throw InvalidParameter("time grid requires t_start < t_end");
    }
    if (n_points < 2) throw InvalidParameter("time grid requires at least 2 points");
    if (t_coh && !(*t_coh > 0.0)) throw InvalidParameter("coherence time must be positive");
}

std::vector<double> TimeGrid::samples() const {
    validate();
    std::vector<double> ts;
    ts.reserve(n_points);
    const double span = t_end - t_start;
    const double denom = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = (i + 1 == n_points) ? t_end : t_start + span * (static_cast<double>(i) / denom);
        if (t_coh && t > *t_coh) continue;
        ts.push_back(t);
    }
    return ts;
}

AutocorrelationSeries evolve_spectral(const SymmetricTridiagonal& tri, const TimeGrid& grid, double omega) {
    const EigenDecomposition eig = eigh_tridiagonal(tri);
    const std::size_t n = tri.order();
    std::vector<double> weights(n);
    for (std::size_t k = 0; k < n; ++k) weights[k] = eig.eigenvectors(0, k) * eig.eigenvectors(0, k);

    AutocorrelationSeries out;
    out.method = EvolutionMethod::spectral;
    out.times = grid.samples();
    out.amplitudes.resize(out.times.size());
    for (std::size_t i = 0; i < out.times.size(); ++i) {
        // Phase in extended precision: lambda * t reaches ~1e2, where one
        // double ulp already exceeds the eigensolver error.
        const long double wt = static_cast<long double>(omega) * out.times[i];
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const long double phase = -static_cast<long double>(eig.eigenvalues[k]) * wt;
            acc += weights[k] * Complex(static_cast<double>(std::cos(phase)), static_cast<double>(std::sin(phase)));
        }
        out.amplitudes[i] = acc;
    }
    return out;
}

OdeEvolution evolve_ode(const SymmetricTridiagonal& tri, const TimeGrid& grid, double step, double omega) {
    if (!(step > 0.0) || !std::isfinite(step)) throw InvalidParameter("integrator step must be positive");
    const std::size_t n = tri.order();
    if (n == 0) throw DegenerateInput("evolve_ode: empty Hamiltonian");

    OdeEvolution out;
    out.autocorrelation.method = EvolutionMethod::ode;
    const std::vector<double> ts = grid.samples();

    std::vector<Complex> c(n, Complex(0.0, 0.0));
    c[0] = 1.0;
    Rk4Integrator rk(tri, omega);
    double now = 0.0;

    for (double target : ts) {
        const double span = target - now;
        if (span != 0.0) {
            const auto substeps = static_cast<std::size_t>(std::ceil(std::abs(span) / step - 1e-9));
            const double dt = span / static_cast<double>(substeps);
            for (std::size_t k = 0; k < substeps; ++k) rk.step(c, dt);
            now = target;
        }
        const double drift = norm_drift(c);
        out.max_norm_drift = std::max(out.max_norm_drift, drift);
        if (drift > kMaxNormDrift) {
            throw StepTooLarge("evolve_ode: norm drift " + io::format_real(drift) + " at t = " + io::format_real(target) +
                               " exceeds 1e-6; reduce the step");
        }
        out.trajectory.times.push_back(target);
        out.trajectory.states.push_back(c);
        out.autocorrelation.times.push_back(target);
        out.autocorrelation.amplitudes.push_back(c[0]);
    }
    return out;
}

std::vector<ZetaSample> zeta_estimate(const AutocorrelationSeries& series, const SimulationParams& params,
                                      bool normalized) {
    params.validate();
    const double scale = normalized ? 1.0 : dirichlet_truncated(Complex(params.sigma, 0.0), params.a, params.n_levels).real();
    std::vector<ZetaSample> out;
    out.reserve(series.times.size());
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        out.push_back({Complex(params.sigma, params.omega * series.times[i]), scale * series.amplitudes[i]});
    }
    return out;
}

}  // namespace rhz
