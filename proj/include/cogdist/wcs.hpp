#pragma once

#include <span>
#include <vector>

#include "cogdist/model.hpp"

namespace cogdist {

// Outcome of the positive-definiteness sanity check on a similarity matrix.
// x'Sy is only a valid inner product when S is positive definite; weighted
// cosine values computed against a matrix that fails this check are not
// mathematically sound similarities.
struct PsdReport {
    bool is_symmetric = false;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    bool is_positive_definite = false;
    bool is_positive_semidefinite = false;
    double tolerance = 0.0;
};

inline constexpr double kDefaultPsdTolerance = 1e-10;

// Generalized cosine x'Sy / sqrt(x'Sx * y'Sy). Quadratic forms use
// compensated summation; S*x and S*y are each computed once. A nonpositive
// quadratic form raises DegenerateNorm.
double weighted_cosine(const SimilarityMatrix& s, const DenseProfileVector& x,
                       const DenseProfileVector& y);

// 1 - weighted_cosine.
double weighted_cosine_dissimilarity(const SimilarityMatrix& s, const DenseProfileVector& x,
                                     const DenseProfileVector& y);

// Eigenvalue check of (S + S')/2. Verdicts use a tolerance relative to
// max(1, |lambda_max|): PSD requires min_eigenvalue >= -threshold, PD
// requires min_eigenvalue > +threshold.
PsdReport psd_check(const SimilarityMatrix& s, double tol = kDefaultPsdTolerance);

// Same check on a raw row-major n x n matrix, bypassing SimilarityMatrix
// validation (diagnostics).
PsdReport psd_check_raw(std::span<const double> values, std::size_t n,
                        double tol = kDefaultPsdTolerance);

// All eigenvalues of a symmetric matrix, ascending. The input is
// symmetrized as (A + A')/2 first. Cyclic Jacobi iteration; deterministic
// for a fixed input.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

}  // namespace cogdist
