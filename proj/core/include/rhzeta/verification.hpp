// verification.hpp - symmetric tridiagonal eigensolver and post-synthesis checks
#pragma once

#include <vector>

#include "rhzeta/matrix.hpp"
#include "rhzeta/spectral.hpp"
#include "rhzeta/synthesis.hpp"

namespace rhz {

/// Eigenvalues ascending; eigenvectors as columns, each with its first
/// component of magnitude > 1e-12 made positive.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// Implicit-shift QL. Throws ConvergenceFailure if an eigenvalue needs more
/// than 30 sweeps.
EigenDecomposition eigh_tridiagonal(const SymmetricTridiagonal& tri);

struct SynthesisReport {
    double max_eigenvalue_error = 0.0;  // max_n |lambda_n - ln(n+a)|
    double max_overlap_error = 0.0;     // max_n ||V[0][n]| - C_n|
    double tol_lambda = 0.0;
    double tol_overlap = 0.0;
    bool eigenvalues_passed = false;
    bool overlaps_passed = false;

    bool passed() const noexcept { return eigenvalues_passed && overlaps_passed; }
};

SynthesisReport verify_synthesis(const SymmetricTridiagonal& tri, const SimulationParams& params,
                                 double tol_lambda, double tol_overlap);

}  // namespace rhz
