#include "cogdist/wcs.hpp"

#include <algorithm>
#include <cmath>

#include "cogdist/numeric.hpp"

namespace cogdist {

namespace {

std::vector<double> matrix_vector(const SimilarityMatrix& s, std::span<const double> v) {
    std::size_t n = s.size();
    std::vector<double> result(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        result[k] = compensated_dot(s.row(k), v);
    }
    return result;
}

}  // namespace

double weighted_cosine(const SimilarityMatrix& s, const DenseProfileVector& x,
                       const DenseProfileVector& y) {
    if (!same_catalog(s.catalog(), x.catalog()) || !same_catalog(s.catalog(), y.catalog())) {
        throw Error(errc::catalog_mismatch, "profiles '" + x.entity_id() + "' and '" +
                                                y.entity_id() +
                                                "' must share the similarity matrix catalog");
    }
    std::vector<double> sy = matrix_vector(s, y.values());
    std::vector<double> sx = matrix_vector(s, x.values());
    double numerator = compensated_dot(x.values(), sy);
    double x_form = compensated_dot(x.values(), sx);
    double y_form = compensated_dot(y.values(), sy);
    if (!(x_form > 0.0) || !(y_form > 0.0)) {
        throw Error(errc::degenerate_norm,
                    "quadratic form is not positive for '" +
                        (x_form > 0.0 ? y.entity_id() : x.entity_id()) +
                        "'; the matrix is not positive definite or the vector is zero");
    }
    return numerator / std::sqrt(x_form * y_form);
}

double weighted_cosine_dissimilarity(const SimilarityMatrix& s, const DenseProfileVector& x,
                                     const DenseProfileVector& y) {
    return 1.0 - weighted_cosine(s, x, y);
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (n == 0) return {};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = a[j * n + i] = v;
        }
    }
    if (n == 1) return {a[0]};

    // Cyclic Jacobi sweeps until the off-diagonal mass is negligible
    // relative to the matrix norm.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                norm += a[i * n + j] * a[i * n + j];
                if (i != j) off += a[i * n + j] * a[i * n + j];
            }
        }
        if (off <= 1e-30 * std::max(1.0, norm)) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                double app = a[p * n + p];
                double aqq = a[q * n + q];
                if (std::abs(apq) <= 1e-300) continue;

                double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e154) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = ((theta >= 0.0) ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k * n + p];
                    double akq = a[k * n + q];
                    a[k * n + p] = a[p * n + k] = c * akp - s * akq;
                    a[k * n + q] = a[q * n + k] = s * akp + c * akq;
                }
            }
        }
    }

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

PsdReport psd_check_raw(std::span<const double> values, std::size_t n, double tol) {
    if (values.size() != n * n) {
        throw Error(errc::invalid_matrix, "expected " + std::to_string(n * n) + " values, got " +
                                              std::to_string(values.size()));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw Error(errc::non_finite, "matrix contains a non-finite entry");
        }
    }

    PsdReport report;
    report.tolerance = tol;
    double max_asymmetry = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            max_asymmetry =
                std::max(max_asymmetry, std::abs(values[i * n + j] - values[j * n + i]));
        }
    }
    report.is_symmetric = max_asymmetry <= SimilarityMatrix::kSymmetryTolerance;

    std::vector<double> eigenvalues =
        symmetric_eigenvalues(std::vector<double>(values.begin(), values.end()), n);
    report.min_eigenvalue = eigenvalues.front();
    report.max_eigenvalue = eigenvalues.back();
    double threshold = tol * std::max(1.0, std::abs(report.max_eigenvalue));
    report.is_positive_semidefinite = report.min_eigenvalue >= -threshold;
    report.is_positive_definite = report.min_eigenvalue > threshold;
    return report;
}

PsdReport psd_check(const SimilarityMatrix& s, double tol) {
    return psd_check_raw(s.values(), s.size(), tol);
}

}  // namespace cogdist
