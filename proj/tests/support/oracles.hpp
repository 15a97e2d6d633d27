#pragma once

// Independent oracles for cross-checking the library. Everything here is
// written directly from the defining formulas, in long double and with
// different loop structures than the implementation, and must stay free of
// cogdist headers other than what a test naturally includes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

// Weighted mean, straight accumulation in reverse order.
inline std::vector<double> weighted_mean(const std::vector<double>& weights,
                                         const std::vector<std::vector<double>>& points) {
    std::size_t dim = points.at(0).size();
    long double total = 0.0L;
    for (std::size_t n = weights.size(); n-- > 0;) total += weights[n];
    std::vector<double> out(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
        long double acc = 0.0L;
        for (std::size_t n = weights.size(); n-- > 0;) {
            acc += static_cast<long double>(weights[n]) * points[n][k];
        }
        out[k] = static_cast<double>(acc / total);
    }
    return out;
}

inline double plain_cosine(const std::vector<double>& x, const std::vector<double>& y) {
    long double dot = 0.0L, nx = 0.0L, ny = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        dot += static_cast<long double>(x[i]) * y[i];
        nx += static_cast<long double>(x[i]) * x[i];
        ny += static_cast<long double>(y[i]) * y[i];
    }
    return static_cast<double>(dot / std::sqrt(nx * ny));
}

// Row-major matrix-vector product, reverse iteration.
inline std::vector<double> matvec(const std::vector<double>& s, std::size_t n,
                                  const std::vector<double>& m) {
    std::vector<double> out(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        long double acc = 0.0L;
        for (std::size_t j = n; j-- > 0;) {
            acc += static_cast<long double>(s[k * n + j]) * m[j];
        }
        out[k] = static_cast<double>(acc);
    }
    return out;
}

// The generalized cosine written as the double sum
// sum_i x_i (sum_j y_j s_ji) / sqrt(...), evaluated term by term.
inline double weighted_cosine(const std::vector<double>& s, std::size_t n,
                              const std::vector<double>& x, const std::vector<double>& y) {
    auto form = [&](const std::vector<double>& a, const std::vector<double>& b) {
        long double outer = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            long double inner = 0.0L;
            for (std::size_t j = 0; j < n; ++j) {
                inner += static_cast<long double>(b[j]) * s[j * n + i];
            }
            outer += static_cast<long double>(a[i]) * inner;
        }
        return outer;
    };
    long double num = form(x, y);
    long double den = std::sqrt(form(x, x) * form(y, y));
    return static_cast<double>(num / den);
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    long double n = static_cast<long double>(x.size());
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

// Midrank by counting: rank_i = #less + (#equal + 1) / 2.
inline std::vector<double> midranks(const std::vector<double>& values) {
    std::vector<double> ranks(values.size(), 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::size_t less = 0, equal = 0;
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[j] < values[i]) ++less;
            if (values[j] == values[i]) ++equal;
        }
        ranks[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
    }
    return ranks;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(midranks(x), midranks(y));
}

// Cofactor-expansion determinant for matrices up to 4x4; used to verify
// that computed eigenvalues are roots of the characteristic polynomial.
inline long double determinant(const std::vector<long double>& a, std::size_t n) {
    if (n == 1) return a[0];
    if (n == 2) return a[0] * a[3] - a[1] * a[2];
    long double det = 0.0L;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<long double> minor;
        minor.reserve((n - 1) * (n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) minor.push_back(a[i * n + j]);
            }
        }
        long double term = a[col] * determinant(minor, n - 1);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

inline double char_poly_at(const std::vector<double>& a, std::size_t n, double lambda) {
    std::vector<long double> shifted(a.begin(), a.end());
    for (std::size_t i = 0; i < n; ++i) shifted[i * n + i] -= lambda;
    return static_cast<double>(determinant(shifted, n));
}

namespace detail {

// Number of eigenvalues of the symmetric matrix `a` strictly below sigma,
// via the inertia of the LDL^T factorization of (a - sigma I). Returns -1
// when factorization breaks down (sigma too close to a leading-minor root).
inline int count_below(std::vector<long double> a, std::size_t n, long double sigma) {
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] -= sigma;
    int negatives = 0;
    for (std::size_t k = 0; k < n; ++k) {
        long double pivot = a[k * n + k];
        if (std::abs(static_cast<double>(pivot)) < 1e-300) return -1;
        if (pivot < 0.0L) ++negatives;
        for (std::size_t i = k + 1; i < n; ++i) {
            long double factor = a[i * n + k] / pivot;
            for (std::size_t j = k; j < n; ++j) {
                a[i * n + j] -= factor * a[k * n + j];
            }
        }
    }
    return negatives;
}

inline int count_below_robust(const std::vector<long double>& a, std::size_t n,
                              long double sigma, long double scale) {
    for (int attempt = 0; attempt < 60; ++attempt) {
        int c = count_below(a, n, sigma);
        if (c >= 0) return c;
        sigma += scale * 1e-14L * static_cast<long double>(attempt + 1);
    }
    throw std::runtime_error("inertia count failed to stabilize");
}

}  // namespace detail

// All eigenvalues of a symmetric matrix, ascending, by bisection on the
// inertia count. Handles multiple eigenvalues exactly.
inline std::vector<double> symmetric_eigenvalues(const std::vector<double>& values,
                                                 std::size_t n) {
    std::vector<long double> a(values.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = 0.5L * (static_cast<long double>(values[i * n + j]) +
                                   static_cast<long double>(values[j * n + i]));
        }
    }
    // Gershgorin bound.
    long double radius = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        long double row = 0.0L;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(static_cast<double>(a[i * n + j]));
        radius = std::max(radius, row);
    }
    radius += 1.0L;

    std::vector<double> eigenvalues(n, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        long double lo = -radius, hi = radius;
        for (int iter = 0; iter < 200; ++iter) {
            long double mid = 0.5L * (lo + hi);
            if (detail::count_below_robust(a, n, mid, radius) >=
                static_cast<int>(k)) {
                hi = mid;
            } else {
                lo = mid;
            }
            if (hi - lo < 1e-14L * radius) break;
        }
        eigenvalues[k - 1] = static_cast<double>(0.5L * (lo + hi));
    }
    return eigenvalues;
}

}  // namespace oracle
