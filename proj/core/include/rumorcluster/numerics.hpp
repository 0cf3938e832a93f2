#pragma once

#include "rumorcluster/matrix.hpp"

#include <cstdint>
#include <vector>

namespace rumorcluster {

/// Dense symmetric matrix: writes mirror across the diagonal, so
/// a(i,j) == a(j,i) holds by construction.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order) : order_(order), m_(order, order, 0.0) {}

    std::size_t order() const { return order_; }

    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    void set(std::size_t i, std::size_t j, double value) {
        m_(i, j) = value;
        m_(j, i) = value;
    }

    const Matrix& dense() const { return m_; }

    /// Frobenius norm.
    double frobenius_norm() const;

    double trace() const;

    bool all_finite() const;

private:
    std::size_t order_ = 0;
    Matrix m_;
};

/// Eigenvalues sorted descending with matching orthonormal eigenvector
/// columns. Sign convention: the largest-magnitude entry of each vector is
/// positive (first such entry on ties).
struct EigenPairs {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;   // n x k, column i pairs with eigenvalues[i]

    std::vector<double> eigenvector(std::size_t i) const {
        std::vector<double> v(eigenvectors.rows());
        for (std::size_t r = 0; r < eigenvectors.rows(); ++r) v[r] = eigenvectors(r, i);
        return v;
    }
};

inline constexpr double kDefaultFullTol = 1e-9;
inline constexpr double kDefaultTopKTol = 1e-7;
inline constexpr std::size_t kSmallMatrixBound = 64;

/// Full eigendecomposition by cyclic Jacobi rotations, for small matrices
/// (covariance-sized). Every returned pair satisfies
/// ||m v - lambda v|| <= tol * ||m||_F. Throws NumericalError on
/// non-convergence, std::invalid_argument on non-finite entries or
/// order > max_order.
EigenPairs eigen_symmetric_full(const SymmetricMatrix& m, double tol = kDefaultFullTol,
                                std::size_t max_order = kSmallMatrixBound);

/// The k algebraically largest eigenpairs via Lanczos with full
/// reorthogonalization, deflating one converged pair at a time so repeated
/// eigenvalues are recovered with their multiplicity. Deterministic given
/// seed; same residual contract as eigen_symmetric_full.
EigenPairs top_k_eigenpairs(const SymmetricMatrix& m, std::size_t k,
                            double tol = kDefaultTopKTol, std::uint64_t seed = 0);

/// Squared Euclidean distances between all row pairs; zero diagonal, entries
/// clamped at 0 against rounding.
SymmetricMatrix pairwise_sq_distances(const Matrix& points);

} // namespace rumorcluster
