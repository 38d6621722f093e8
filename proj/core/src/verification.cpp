#include "rhzeta/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rhzeta/errors.hpp"

namespace rhz {

namespace {

constexpr int kMaxSweeps = 30;
constexpr double kSignThreshold = 1e-12;

// v^T H v / v^T v in extended precision. The eigenvector error enters
// quadratically, so this sharpens the QL eigenvalue to below double round-off
// for the given (double) matrix.
double rayleigh_quotient(const SymmetricTridiagonal& tri, const Matrix& vecs, std::size_t col) {
    const std::size_t n = tri.order();
    long double num = 0.0L;
    long double den = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double vi = vecs(i, col);
        long double hv = static_cast<long double>(tri.diagonal[i]) * vi;
        if (i > 0) hv += static_cast<long double>(tri.offdiagonal[i - 1]) * vecs(i - 1, col);
        if (i + 1 < n) hv += static_cast<long double>(tri.offdiagonal[i]) * vecs(i + 1, col);
        num += vi * hv;
        den += vi * vi;
    }
    return static_cast<double>(num / den);
}

}  // namespace

EigenDecomposition eigh_tridiagonal(const SymmetricTridiagonal& tri) {
    const std::size_t n = tri.order();
    if (n > 0 && tri.offdiagonal.size() != n - 1) {
        throw DimensionMismatch("eigh_tridiagonal: off-diagonal must have N-1 entries");
    }

    std::vector<double> d = tri.diagonal;
    std::vector<double> e(n, 0.0);
    std::copy(tri.offdiagonal.begin(), tri.offdiagonal.end(), e.begin());
    Matrix z = Matrix::identity(n);

    // tql2: e[i] couples sites i and i+1, e[n-1] = 0.
    const double eps = std::numeric_limits<double>::epsilon();
    double f = 0.0;
    double tst1 = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m == n) m = n - 1;

        if (m > l) {
            int sweeps = 0;
            do {
                if (++sweeps > kMaxSweeps) {
                    throw ConvergenceFailure("eigh_tridiagonal: eigenvalue " + std::to_string(l) +
                                             " did not converge in 30 sweeps");
                }
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (std::size_t k = 0; k < n; ++k) {
                        h = z(k, ii + 1);
                        z(k, ii + 1) = s * z(k, ii) + c * h;
                        z(k, ii) = c * z(k, ii) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.eigenvalues[col] = d[src];
        double sign = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::abs(z(k, src)) > kSignThreshold) {
                sign = z(k, src) < 0.0 ? -1.0 : 1.0;
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, col) = sign * z(k, src);
        out.eigenvalues[col] = rayleigh_quotient(tri, out.eigenvectors, col);
    }
    return out;
}

SynthesisReport verify_synthesis(const SymmetricTridiagonal& tri, const SimulationParams& params,
                                 double tol_lambda, double tol_overlap) {
    if (tri.order() != params.n_levels) {
        throw DimensionMismatch("verify_synthesis: Hamiltonian has order " + std::to_string(tri.order()) +
                                " but params ask for N = " + std::to_string(params.n_levels));
    }
    const Spectrum target = log_spectrum(params);
    const AmplitudeVector c = riemann_amplitudes(params);
    const EigenDecomposition eig = eigh_tridiagonal(tri);

    SynthesisReport rep;
    rep.tol_lambda = tol_lambda;
    rep.tol_overlap = tol_overlap;
    for (std::size_t n = 0; n < tri.order(); ++n) {
        rep.max_eigenvalue_error = std::max(rep.max_eigenvalue_error, std::abs(eig.eigenvalues[n] - target.energies[n]));
        rep.max_overlap_error =
            std::max(rep.max_overlap_error, std::abs(std::abs(eig.eigenvectors(0, n)) - c.amplitudes[n]));
    }
    rep.eigenvalues_passed = rep.max_eigenvalue_error <= tol_lambda;
    rep.overlaps_passed = rep.max_overlap_error <= tol_overlap;
    return rep;
}

}  // namespace rhz
