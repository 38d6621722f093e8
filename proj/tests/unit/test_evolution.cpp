#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "rhzeta/errors.hpp"
#include "rhzeta/evolution.hpp"
#include "rhzeta/zeta.hpp"

using namespace rhz;

namespace {

const SimulationParams kGolden{5, 0.5, 2.0, 1.0};

double max_deviation(const AutocorrelationSeries& x, const AutocorrelationSeries& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.amplitudes.size(); ++i) m = std::max(m, std::abs(x.amplitudes[i] - y.amplitudes[i]));
    return m;
}

}  // namespace

TEST_CASE("TimeGrid: endpoints and spacing") {
    const TimeGrid g{0.0, 50.0, 2001, std::nullopt};
    const auto ts = g.samples();
    REQUIRE(ts.size() == 2001);
    CHECK(ts.front() == 0.0);
    CHECK(ts.back() == 50.0);
    CHECK(ts[1] == doctest::Approx(0.025));
}

TEST_CASE("TimeGrid: coherence cutoff drops samples without moving the rest") {
    const TimeGrid full{0.0, 50.0, 101, std::nullopt};
    const TimeGrid cut{0.0, 50.0, 101, 10.0};
    const auto a = full.samples();
    const auto b = cut.samples();
    REQUIRE(b.size() == 21);
    CHECK(b.back() == 10.0);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(a[i] == b[i]);

    const SymmetricTridiagonal h = synthesize(kGolden);
    const auto sa = evolve_spectral(h, full);
    const auto sb = evolve_spectral(h, cut);
    for (std::size_t i = 0; i < sb.times.size(); ++i) CHECK(sa.amplitudes[i] == sb.amplitudes[i]);
}

TEST_CASE("TimeGrid: validation") {
    CHECK_THROWS_AS(TimeGrid({1.0, 1.0, 10, std::nullopt}).samples(), InvalidParameter);
    CHECK_THROWS_AS(TimeGrid({0.0, 1.0, 1, std::nullopt}).samples(), InvalidParameter);
    CHECK_THROWS_AS(TimeGrid({0.0, 1.0, 10, 0.0}).samples(), InvalidParameter);
}

TEST_CASE("evolve_spectral: a(0) = 1 and |a| <= 1") {
    const auto s = evolve_spectral(synthesize(kGolden), {0.0, 50.0, 2001, std::nullopt});
    CHECK(std::abs(s.amplitudes[0] - Complex(1.0, 0.0)) < 1e-14);
    for (const auto& a : s.amplitudes) REQUIRE(std::abs(a) <= 1.0 + 1e-14);
}

TEST_CASE("evolve_spectral: single level with zero energy is stationary") {
    const auto s = evolve_spectral(synthesize({1, 1.0, 2.0, 1.0}), {0.0, 20.0, 41, std::nullopt});
    for (const auto& a : s.amplitudes) REQUIRE(a == Complex(1.0, 0.0));
}

TEST_CASE("evolve_spectral: autocorrelation equals the normalized Dirichlet sum") {
    for (const SimulationParams& p : {kGolden, SimulationParams{50, 1.0, 1.5, 1.0}, SimulationParams{20, 0.3, 3.0, 2.0}}) {
        const auto s = evolve_spectral(synthesize(p), {0.0, 50.0, 501, std::nullopt}, p.omega);
        const std::complex<double> z0 = test::dirichlet_direct({p.sigma, 0.0}, p.a, p.n_levels);
        double dev = 0.0;
        for (std::size_t i = 0; i < s.times.size(); ++i) {
            const auto ref = test::dirichlet_direct({p.sigma, p.omega * s.times[i]}, p.a, p.n_levels) / z0;
            dev = std::max(dev, std::abs(s.amplitudes[i] - ref));
        }
        CHECK(dev < 1e-10);
    }
}

TEST_CASE("evolve_spectral: time reversal conjugates the amplitude") {
    const auto s = evolve_spectral(synthesize(kGolden), {-10.0, 10.0, 201, std::nullopt});
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        const std::size_t j = s.times.size() - 1 - i;
        REQUIRE(std::abs(s.amplitudes[i] - std::conj(s.amplitudes[j])) < 1e-13);
    }
}

TEST_CASE("evolve_spectral: omega rescales time") {
    const SymmetricTridiagonal h = synthesize(kGolden);
    const auto fast = evolve_spectral(h, {0.0, 10.0, 101, std::nullopt}, 2.0);
    const auto slow = evolve_spectral(h, {0.0, 20.0, 101, std::nullopt}, 1.0);
    CHECK(max_deviation(fast, slow) < 1e-13);
}

TEST_CASE("evolve_ode: single level is a pure phase") {
    const SymmetricTridiagonal h{{0.7}, {}};
    const OdeEvolution o = evolve_ode(h, {0.0, 10.0, 11, std::nullopt});
    for (std::size_t i = 0; i < o.autocorrelation.times.size(); ++i) {
        const double t = o.autocorrelation.times[i];
        REQUIRE(std::abs(o.autocorrelation.amplitudes[i] - std::polar(1.0, -0.7 * t)) < 1e-12);
    }
    CHECK(o.max_norm_drift < 1e-12);
}

TEST_CASE("evolve_ode: agrees with the spectral route and is fourth order") {
    const SymmetricTridiagonal h = synthesize(kGolden);
    const TimeGrid g{0.0, 10.0, 201, std::nullopt};
    const auto ref = evolve_spectral(h, g);
    const OdeEvolution coarse = evolve_ode(h, g, 1e-2);
    const OdeEvolution fine = evolve_ode(h, g, 5e-3);
    const double d1 = max_deviation(coarse.autocorrelation, ref);
    const double d2 = max_deviation(fine.autocorrelation, ref);
    CHECK(d1 < 1e-6);
    CHECK(d1 / d2 > 12.0);
    CHECK(coarse.max_norm_drift < 1e-6);
    REQUIRE(fine.trajectory.states.size() == 201);
    for (const auto& c : fine.trajectory.states) {
        double sq = 0.0;
        for (const auto& x : c) sq += std::norm(x);
        REQUIRE(std::abs(sq - 1.0) < 1e-6);
    }
}

TEST_CASE("evolve_ode: starts from site 0 at t = 0 even for negative windows") {
    const SymmetricTridiagonal h = synthesize(kGolden);
    const TimeGrid g{-5.0, 5.0, 21, std::nullopt};
    CHECK(max_deviation(evolve_ode(h, g).autocorrelation, evolve_spectral(h, g)) < 1e-9);
}

TEST_CASE("evolve_ode: errors") {
    const SymmetricTridiagonal h = synthesize(kGolden);
    CHECK_THROWS_AS(evolve_ode(h, {0.0, 50.0, 11, std::nullopt}, 1.5), StepTooLarge);
    CHECK_THROWS_AS(evolve_ode(h, {0.0, 1.0, 11, std::nullopt}, 0.0), InvalidParameter);
    CHECK_THROWS_AS(evolve_ode(h, {0.0, 1.0, 11, std::nullopt}, -1e-3), InvalidParameter);
}

TEST_CASE("zeta_estimate: mapping to the Dirichlet exponent") {
    const SimulationParams p{5, 1.0, 2.0, 1.5};
    const auto s = evolve_spectral(synthesize(p), {0.0, 4.0, 5, std::nullopt}, p.omega);

    const auto norm = zeta_estimate(s, p, true);
    CHECK(norm[0].s == Complex(2.0, 0.0));
    CHECK(norm[2].s == Complex(2.0, 3.0));
    CHECK(std::abs(norm[0].value - Complex(1.0, 0.0)) < 1e-15);

    const auto raw = zeta_estimate(s, p, false);
    CHECK(raw[0].value.real() == doctest::Approx(5269.0 / 3600.0).epsilon(1e-13));
    CHECK(std::abs(raw[0].value.imag()) < 1e-15);
}

TEST_CASE("zeta_estimate: normalized estimate lies within the tail bound of the zeta ratio") {
    for (double a : {1.0, 0.5}) {
        const SimulationParams p{5, a, 2.0, 1.0};
        const auto s = evolve_spectral(synthesize(p), {0.0, 50.0, 2001, std::nullopt});
        const auto est = zeta_estimate(s, p, true);
        const double z0 = hurwitz_zeta({p.sigma, 0.0}, a).real();
        const double bound = 2.0 * integral_tail_bound(p.sigma, a, p.n_levels) / z0;
        for (const auto& e : est) REQUIRE(std::abs(e.value - hurwitz_zeta(e.s, a) / z0) <= bound);
    }
}
