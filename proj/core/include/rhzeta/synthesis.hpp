// synthesis.hpp - tridiagonal Hamiltonian with a prescribed spectrum and
// prescribed overlaps between site 0 and the eigenstates.
//
// Pipeline: diag(E) -> orthogonal completion T of the amplitude vector ->
// H' = T^T diag(E) T -> Householder tridiagonalization -> sign gauge.
// The three-term recurrence in lanczos_synthesis builds the same Jacobi
// matrix independently and is kept as a cross-check.
#pragma once

#include <cstddef>
#include <vector>

#include "rhzeta/matrix.hpp"
#include "rhzeta/spectral.hpp"

namespace rhz {

/// Symmetric dense matrix; construction enforces symmetry to 1e-13
/// (relative to the largest entry) and then mirrors the upper triangle.
class DenseSymmetric {
public:
    DenseSymmetric() = default;
    explicit DenseSymmetric(Matrix entries);

    std::size_t order() const noexcept { return entries_.rows(); }
    const Matrix& entries() const noexcept { return entries_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }

private:
    Matrix entries_;
};

/// Square matrix with orthonormal columns.
class OrthogonalMatrix {
public:
    OrthogonalMatrix() = default;
    /// Throws DegenerateInput when ||Q^T Q - I||_max >= 1e-12.
    explicit OrthogonalMatrix(Matrix columns);

    std::size_t order() const noexcept { return columns_.rows(); }
    const Matrix& matrix() const noexcept { return columns_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return columns_(i, j); }

private:
    Matrix columns_;
};

/// Diagonal B (length N) and off-diagonal J (length N-1), units of hbar*omega.
struct SymmetricTridiagonal {
    std::vector<double> diagonal;
    std::vector<double> offdiagonal;

    std::size_t order() const noexcept { return diagonal.size(); }
    Matrix to_dense() const;
};

/// Reflector M(v) = I - 2 v v^T. At step k (1-based) the first k components
/// are exactly zero. An all-zero v stands for the identity (nothing to annihilate).
struct HouseholderVector {
    std::vector<double> v;

    bool is_identity() const noexcept;
};

struct Tridiagonalization {
    SymmetricTridiagonal tridiagonal;
    OrthogonalMatrix accumulated;  // Q with tridiagonal = Q^T H' Q, Q e_0 = e_0
    std::vector<HouseholderVector> reflectors;
};

struct GaugeFixed {
    SymmetricTridiagonal tridiagonal;
    std::vector<int> signs;  // +1 / -1 per site, signs[0] = +1
};

/// Every intermediate of the pipeline, for inspection and golden tests.
struct SynthesisTrace {
    Spectrum spectrum;
    AmplitudeVector amplitudes;
    OrthogonalMatrix completion;
    DenseSymmetric rotated;
    Tridiagonalization householder;
    GaugeFixed gauge;
};

/// Gram-Schmidt over {C, e_0, e_1, ..., e_{N-1}}, dropping any candidate whose
/// residual norm falls below 1e-10. The first column is C itself.
OrthogonalMatrix orthogonal_completion(const AmplitudeVector& c);

/// T^T diag(D) T.
DenseSymmetric similarity_transform(const Spectrum& d, const OrthogonalMatrix& t);

Tridiagonalization householder_tridiagonalize(const DenseSymmetric& hp);

/// Conjugation by diag(signs) so every off-diagonal entry is >= 0.
GaugeFixed gauge_fix(const SymmetricTridiagonal& tri);

/// Full pipeline for arbitrary nodes and (unit-norm) amplitudes.
SynthesisTrace householder_synthesis(const Spectrum& e, const AmplitudeVector& c);

/// Full pipeline for the logarithmic spectrum and Riemann amplitudes.
/// Throws DisconnectedChain when a coupling ends up below 1e-12.
SymmetricTridiagonal synthesize(const SimulationParams& params);
SynthesisTrace synthesize_traced(const SimulationParams& params);

/// Three-term recurrence on diag(E) started from C, with full
/// reorthogonalization. Nodes must be distinct and amplitudes positive.
/// Throws Breakdown when a recurrence norm drops below 1e-12.
SymmetricTridiagonal lanczos_synthesis(const Spectrum& e, const AmplitudeVector& c);

}  // namespace rhz
