// design.hpp - hardware parameters for the synthesized chain: spin-chain
// couplings/fields and a circularly bent waveguide array.
#pragma once

#include <cstddef>
#include <vector>

#include "rhzeta/synthesis.hpp"

namespace rhz {

/// Single-excitation identification: J = off-diagonal, B = diagonal. The
/// constant -sum(B) that the spin Hamiltonian adds to every diagonal entry
/// is kept as metadata.
struct SpinChainParams {
    std::vector<double> couplings;
    std::vector<double> fields;
    double dropped_offset = 0.0;
};

SpinChainParams spin_chain_params(const SymmetricTridiagonal& tri);
SymmetricTridiagonal to_tridiagonal(const SpinChainParams& spin);

/// Fabrication constants, in any consistent length unit.
///   J_n = kappa * exp(-alpha * d_n)
///   dE_n = n_s * x_n / (radius * lambda_bar),  lambda_bar = lambda / (2 pi)
struct FabricationConstants {
    double kappa = 2.0;
    double alpha = 1.0;
    double radius = 1000.0;
    double lambda_bar = 1e-4;
    double n_s = 1.5;
    double e0 = 1.0;  // straight-guide propagation constant; only recorded

    void validate() const;
};

struct WaveguideDesign {
    FabricationConstants fab;
    std::vector<double> spacings;   // d_n, bond n joins guides n and n+1
    std::vector<double> angles;     // theta_n in [0, pi]
    std::vector<double> couplings;  // kappa exp(-alpha d_n)
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> detunings;  // dE_n, dE_0 = 0
    double energy_offset = 0.0;     // B_0; site energies are B_0 + dE_n
};

/// Throws CouplingTooStrong (some J_n >= kappa), BendRadiusTooSmall
/// (radius <= 100 max d) or TiltInfeasible (|cos theta_n| > 1). Each message
/// names the bound on kappa or radius that would repair the design.
WaveguideDesign waveguide_layout(const SymmetricTridiagonal& tri, const FabricationConstants& fab);

/// Couplings rebuilt from the spacings.
std::vector<double> reconstructed_couplings(const WaveguideDesign& design);
/// B_n - B_{n-1} rebuilt from the x coordinates.
std::vector<double> reconstructed_energy_steps(const WaveguideDesign& design);

struct FeasibilityReport {
    std::vector<double> coupling_margins;  // kappa - J_n
    std::vector<double> tilt_margins;      // 1 - |cos theta_n|, NaN where d_n is undefined
    double bend_margin = 0.0;              // radius - 100 max d
    double kappa_min = 0.0;                // kappa must exceed this
    double radius_min = 0.0;               // radius must exceed this
    double radius_max = 0.0;               // radius must not exceed this (+inf for uniform B)
    std::vector<std::size_t> flagged_bonds;  // bonds with a non-positive coupling or tilt margin
    bool feasible = false;
};

FeasibilityReport feasibility_report(const SymmetricTridiagonal& tri, const FabricationConstants& fab);

}  // namespace rhz
