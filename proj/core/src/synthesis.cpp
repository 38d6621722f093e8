#include "rhzeta/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rhzeta/errors.hpp"
#include "rhzeta/io.hpp"

namespace rhz {

namespace {

constexpr double kSymmetryTol = 1e-13;
constexpr double kOrthogonalityTol = 1e-12;
constexpr double kUnitNormTol = 1e-10;
constexpr double kDependentResidual = 1e-10;
constexpr double kCouplingFloor = 1e-12;

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void require_unit_norm(const AmplitudeVector& c) {
    if (c.size() == 0) throw DegenerateInput("amplitude vector is empty");
    const double n = norm2(c.amplitudes);
    if (std::abs(n - 1.0) > kUnitNormTol) {
        throw DegenerateInput("amplitude vector is not unit-norm (|C| = " + io::format_real(n) + ")");
    }
}

}  // namespace

DenseSymmetric::DenseSymmetric(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw DimensionMismatch("DenseSymmetric: matrix is not square");
    const double scale = std::max(1.0, max_abs(entries_));
    const std::size_t n = entries_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(entries_(i, j) - entries_(j, i)) > kSymmetryTol * scale) {
                throw DegenerateInput("DenseSymmetric: matrix is not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
            entries_(j, i) = entries_(i, j);
        }
    }
}

OrthogonalMatrix::OrthogonalMatrix(Matrix columns) : columns_(std::move(columns)) {
    if (columns_.rows() != columns_.cols()) throw DimensionMismatch("OrthogonalMatrix: matrix is not square");
    const double defect = orthogonality_defect(columns_);
    if (!(defect < kOrthogonalityTol)) {
        throw DegenerateInput("OrthogonalMatrix: columns are not orthonormal (defect " + io::format_real(defect) + ")");
    }
}

Matrix SymmetricTridiagonal::to_dense() const {
    const std::size_t n = order();
    if (n > 0 && offdiagonal.size() != n - 1) {
        throw DimensionMismatch("SymmetricTridiagonal: off-diagonal must have N-1 entries");
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diagonal[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = offdiagonal[i];
        m(i + 1, i) = offdiagonal[i];
    }
    return m;
}

bool HouseholderVector::is_identity() const noexcept {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

OrthogonalMatrix orthogonal_completion(const AmplitudeVector& c) {
    require_unit_norm(c);
    const std::size_t n = c.size();

    std::vector<std::vector<double>> basis;
    basis.reserve(n);
    basis.push_back(c.amplitudes);

    // Candidates e_0, e_1, ...; two Gram-Schmidt passes per candidate.
    for (std::size_t j = 0; j < n && basis.size() < n; ++j) {
        std::vector<double> r(n, 0.0);
        r[j] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                const double proj = dot(q, r);
                for (std::size_t i = 0; i < n; ++i) r[i] -= proj * q[i];
            }
        }
        const double rn = norm2(r);
        if (rn < kDependentResidual) continue;
        for (double& x : r) x /= rn;
        basis.push_back(std::move(r));
    }
    if (basis.size() != n) throw DegenerateInput("orthogonal_completion: could not complete the basis");

    Matrix t(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) t(i, j) = basis[j][i];
    return OrthogonalMatrix(std::move(t));
}

DenseSymmetric similarity_transform(const Spectrum& d, const OrthogonalMatrix& t) {
    const std::size_t n = d.size();
    if (t.order() != n) {
        throw DimensionMismatch("similarity_transform: spectrum has " + std::to_string(n) +
                                " entries but T has order " + std::to_string(t.order()));
    }
    // (T^T D T)_ij = sum_k T_ki E_k T_kj; fill the upper triangle, mirror below.
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += t(k, i) * d.energies[k] * t(k, j);
            h(i, j) = s;
            h(j, i) = s;
        }
    }
    return DenseSymmetric(std::move(h));
}

Tridiagonalization householder_tridiagonalize(const DenseSymmetric& hp) {
    const std::size_t n = hp.order();
    Matrix a = hp.entries();
    Matrix q = Matrix::identity(n);
    std::vector<HouseholderVector> reflectors;

    for (std::size_t k = 0; k + 2 < n; ++k) {
        HouseholderVector h{std::vector<double>(n, 0.0)};

        double tail = 0.0;
        for (std::size_t i = k + 2; i < n; ++i) tail += a(i, k) * a(i, k);
        if (tail == 0.0) {
            reflectors.push_back(std::move(h));
            continue;
        }

        const double x0 = a(k + 1, k);
        const double xnorm = std::sqrt(x0 * x0 + tail);
        // Pivot opposite in sign to x0 avoids cancellation in x0 - alpha.
        const double alpha = x0 >= 0.0 ? -xnorm : xnorm;

        auto& v = h.v;
        v[k + 1] = x0 - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
        const double vn = norm2(v);
        for (double& x : v) x /= vn;

        // A <- (I - 2vv^T) A (I - 2vv^T) = A - 2 v w^T - 2 w v^T, w = p - (v.p) v, p = A v.
        std::vector<double> p(n, 0.0);
        for (std::size_t i = k; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            p[i] = s;
        }
        const double vp = dot(v, p);
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = p[i] - vp * v[i];
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) a(i, j) -= 2.0 * (v[i] * w[j] + w[i] * v[j]);

        // Entries annihilated by construction.
        a(k + 1, k) = alpha;
        a(k, k + 1) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
            a(k, i) = 0.0;
        }

        // Q <- Q (I - 2 v v^T)
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += q(i, j) * v[j];
            for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= 2.0 * s * v[j];
        }

        reflectors.push_back(std::move(h));
    }

    SymmetricTridiagonal tri;
    tri.diagonal.resize(n);
    tri.offdiagonal.resize(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) tri.diagonal[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) tri.offdiagonal[i] = 0.5 * (a(i + 1, i) + a(i, i + 1));

    return {std::move(tri), OrthogonalMatrix(std::move(q)), std::move(reflectors)};
}

GaugeFixed gauge_fix(const SymmetricTridiagonal& tri) {
    GaugeFixed out{tri, std::vector<int>(tri.order(), 1)};
    for (std::size_t k = 0; k < tri.offdiagonal.size(); ++k) {
        const int s = tri.offdiagonal[k] < 0.0 ? -1 : 1;
        out.signs[k + 1] = out.signs[k] * s;
        out.tridiagonal.offdiagonal[k] = std::abs(tri.offdiagonal[k]);
    }
    return out;
}

SynthesisTrace householder_synthesis(const Spectrum& e, const AmplitudeVector& c) {
    if (e.size() != c.size()) {
        throw DimensionMismatch("householder_synthesis: spectrum and amplitudes differ in length");
    }
    OrthogonalMatrix t = orthogonal_completion(c);
    DenseSymmetric hp = similarity_transform(e, t);
    Tridiagonalization hh = householder_tridiagonalize(hp);
    GaugeFixed g = gauge_fix(hh.tridiagonal);
    return {e, c, std::move(t), std::move(hp), std::move(hh), std::move(g)};
}

SynthesisTrace synthesize_traced(const SimulationParams& params) {
    params.validate();
    SynthesisTrace trace = householder_synthesis(log_spectrum(params), riemann_amplitudes(params));
    const auto& j = trace.gauge.tridiagonal.offdiagonal;
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (j[k] < kCouplingFloor) {
            throw DisconnectedChain("synthesize: coupling J[" + std::to_string(k) + "] = " + io::format_real(j[k]) +
                                    " fell below 1e-12");
        }
    }
    return trace;
}

SymmetricTridiagonal synthesize(const SimulationParams& params) {
    return synthesize_traced(params).gauge.tridiagonal;
}

SymmetricTridiagonal lanczos_synthesis(const Spectrum& e, const AmplitudeVector& c) {
    const std::size_t n = e.size();
    if (c.size() != n) throw DimensionMismatch("lanczos_synthesis: spectrum and amplitudes differ in length");
    if (n == 0) throw DegenerateInput("lanczos_synthesis: empty input");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(c.amplitudes[i] > 0.0)) throw DegenerateInput("lanczos_synthesis: weights must be positive");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (e.energies[i] == e.energies[j]) throw DegenerateInput("lanczos_synthesis: nodes must be distinct");
        }
    }

    const auto& nodes = e.energies;
    std::vector<std::vector<double>> basis;
    basis.reserve(n);
    std::vector<double> q = c.amplitudes;
    const double qn = norm2(q);
    for (double& x : q) x /= qn;

    SymmetricTridiagonal tri;
    tri.diagonal.reserve(n);
    tri.offdiagonal.reserve(n - 1);

    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = nodes[i] * q[i];
        const double alpha = dot(q, r);
        tri.diagonal.push_back(alpha);
        basis.push_back(q);
        if (k + 1 == n) break;

        for (std::size_t i = 0; i < n; ++i) r[i] -= alpha * q[i];
        if (k > 0) {
            const double beta_prev = tri.offdiagonal.back();
            const auto& prev = basis[k - 1];
            for (std::size_t i = 0; i < n; ++i) r[i] -= beta_prev * prev[i];
        }
        // Full reorthogonalization, twice.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                const double proj = dot(b, r);
                for (std::size_t i = 0; i < n; ++i) r[i] -= proj * b[i];
            }
        }
        const double beta = norm2(r);
        if (beta < kCouplingFloor) {
            throw Breakdown("lanczos_synthesis: recurrence norm " + io::format_real(beta) + " at step " +
                            std::to_string(k));
        }
        tri.offdiagonal.push_back(beta);
        for (std::size_t i = 0; i < n; ++i) q[i] = r[i] / beta;
    }
    return tri;
}

}  // namespace rhz
