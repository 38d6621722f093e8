#include "rhzeta/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rhzeta/errors.hpp"
#include "rhzeta/io.hpp"

namespace rhz {

namespace {

constexpr double kBendRatio = 100.0;

std::string fmt(double v) { return io::format_real(v); }

void require_consistent(const SymmetricTridiagonal& tri) {
    if (tri.order() == 0) throw InvalidParameter("empty Hamiltonian");
    if (tri.offdiagonal.size() != tri.order() - 1) {
        throw DimensionMismatch("off-diagonal must have N-1 entries");
    }
}

// d_n for J_n < kappa, NaN otherwise.
std::vector<double> spacings_for(const SymmetricTridiagonal& tri, const FabricationConstants& fab) {
    std::vector<double> d(tri.offdiagonal.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        const double j = tri.offdiagonal[k];
        d[k] = (j > 0.0 && j < fab.kappa) ? std::log(fab.kappa / j) / fab.alpha
                                          : std::numeric_limits<double>::quiet_NaN();
    }
    return d;
}

double cos_tilt(double energy_step, double spacing, const FabricationConstants& fab) {
    return energy_step * fab.radius * fab.lambda_bar / (fab.n_s * spacing);
}

}  // namespace

SpinChainParams spin_chain_params(const SymmetricTridiagonal& tri) {
    SpinChainParams p{tri.offdiagonal, tri.diagonal, 0.0};
    p.dropped_offset = -std::accumulate(tri.diagonal.begin(), tri.diagonal.end(), 0.0);
    return p;
}

SymmetricTridiagonal to_tridiagonal(const SpinChainParams& spin) {
    return {spin.fields, spin.couplings};
}

void FabricationConstants::validate() const {
    const double all[] = {kappa, alpha, radius, lambda_bar, n_s, e0};
    const char* names[] = {"kappa", "alpha", "radius", "lambda_bar", "n_s", "e0"};
    for (std::size_t i = 0; i < 6; ++i) {
        if (!(all[i] > 0.0) || !std::isfinite(all[i])) {
            throw InvalidParameter(std::string("fabrication constant ") + names[i] + " must be positive and finite");
        }
    }
}

WaveguideDesign waveguide_layout(const SymmetricTridiagonal& tri, const FabricationConstants& fab) {
    fab.validate();
    require_consistent(tri);
    const std::size_t bonds = tri.offdiagonal.size();

    for (std::size_t k = 0; k < bonds; ++k) {
        if (!(tri.offdiagonal[k] > 0.0)) {
            throw InvalidParameter("waveguide_layout: coupling J[" + std::to_string(k) + "] must be positive");
        }
    }
    const auto jmax = std::max_element(tri.offdiagonal.begin(), tri.offdiagonal.end());
    if (jmax != tri.offdiagonal.end() && *jmax >= fab.kappa) {
        throw CouplingTooStrong("coupling J[" + std::to_string(jmax - tri.offdiagonal.begin()) + "] = " + fmt(*jmax) +
                                " is not below kappa = " + fmt(fab.kappa) + "; minimum kappa must exceed " +
                                fmt(*jmax));
    }

    WaveguideDesign w;
    w.fab = fab;
    w.spacings = spacings_for(tri, fab);
    w.energy_offset = tri.diagonal[0];

    const double dmax = bonds ? *std::max_element(w.spacings.begin(), w.spacings.end()) : 0.0;
    if (!(fab.radius > kBendRatio * dmax)) {
        throw BendRadiusTooSmall("bend radius " + fmt(fab.radius) + " is not much larger than the widest spacing " +
                                 fmt(dmax) + "; minimum radius must exceed " + fmt(kBendRatio * dmax));
    }

    w.angles.resize(bonds);
    w.couplings.resize(bonds);
    w.x.assign(tri.order(), 0.0);
    w.y.assign(tri.order(), 0.0);
    w.detunings.assign(tri.order(), 0.0);
    for (std::size_t k = 0; k < bonds; ++k) {
        const double step = tri.diagonal[k + 1] - tri.diagonal[k];
        const double c = cos_tilt(step, w.spacings[k], fab);
        if (std::abs(c) > 1.0) {
            const double r_max = fab.n_s * w.spacings[k] / (std::abs(step) * fab.lambda_bar);
            throw TiltInfeasible("bond " + std::to_string(k) + " needs |cos theta| = " + fmt(std::abs(c)) +
                                 " > 1; maximum radius for this bond is " + fmt(r_max));
        }
        w.angles[k] = std::acos(c);
        w.couplings[k] = fab.kappa * std::exp(-fab.alpha * w.spacings[k]);
        // x offset from c itself, not cos(acos(c)).
        w.x[k + 1] = w.x[k] + w.spacings[k] * c;
        w.y[k + 1] = w.y[k] + w.spacings[k] * std::sin(w.angles[k]);
    }
    for (std::size_t n = 0; n < tri.order(); ++n) {
        w.detunings[n] = fab.n_s * w.x[n] / (fab.radius * fab.lambda_bar);
    }
    return w;
}

std::vector<double> reconstructed_couplings(const WaveguideDesign& design) {
    std::vector<double> j(design.spacings.size());
    for (std::size_t k = 0; k < j.size(); ++k) j[k] = design.fab.kappa * std::exp(-design.fab.alpha * design.spacings[k]);
    return j;
}

std::vector<double> reconstructed_energy_steps(const WaveguideDesign& design) {
    std::vector<double> db(design.spacings.size());
    const double scale = design.fab.n_s / (design.fab.radius * design.fab.lambda_bar);
    for (std::size_t k = 0; k < db.size(); ++k) db[k] = scale * (design.x[k + 1] - design.x[k]);
    return db;
}

FeasibilityReport feasibility_report(const SymmetricTridiagonal& tri, const FabricationConstants& fab) {
    fab.validate();
    require_consistent(tri);
    const std::size_t bonds = tri.offdiagonal.size();
    const std::vector<double> d = spacings_for(tri, fab);

    FeasibilityReport rep;
    rep.coupling_margins.resize(bonds);
    rep.tilt_margins.resize(bonds);
    rep.radius_max = std::numeric_limits<double>::infinity();
    double dmax = 0.0;
    bool spacing_ok = true;
    for (std::size_t k = 0; k < bonds; ++k) {
        const double j = tri.offdiagonal[k];
        rep.coupling_margins[k] = fab.kappa - j;
        rep.kappa_min = std::max(rep.kappa_min, j);
        if (std::isnan(d[k])) {
            spacing_ok = false;
            rep.tilt_margins[k] = std::numeric_limits<double>::quiet_NaN();
            rep.flagged_bonds.push_back(k);
            continue;
        }
        dmax = std::max(dmax, d[k]);
        const double step = tri.diagonal[k + 1] - tri.diagonal[k];
        rep.tilt_margins[k] = 1.0 - std::abs(cos_tilt(step, d[k], fab));
        if (step != 0.0) rep.radius_max = std::min(rep.radius_max, fab.n_s * d[k] / (std::abs(step) * fab.lambda_bar));
        if (!(rep.tilt_margins[k] >= 0.0)) rep.flagged_bonds.push_back(k);
    }
    rep.radius_min = kBendRatio * dmax;
    rep.bend_margin = fab.radius - rep.radius_min;
    rep.feasible = spacing_ok && rep.flagged_bonds.empty() && rep.bend_margin > 0.0;
    return rep;
}

}  // namespace rhz
