#pragma once

#include "rumorcluster/features.hpp"
#include "rumorcluster/matrix.hpp"
#include "rumorcluster/numerics.hpp"
#include "rumorcluster/post.hpp"

#include <filesystem>
#include <utility>
#include <vector>

namespace rumorcluster {

/// Per-column scaling parameters of the min-max transform onto [0, 1].
struct NormalizationParams {
    std::vector<double> min;
    std::vector<double> max;
    double new_min = 0.0;
    double new_max = 1.0;
};

/// Map each column linearly onto [0, 1]; constant columns map to all zeros.
/// Throws std::invalid_argument on empty or non-finite input, naming the
/// offending row and column.
std::pair<FeatureMatrix, NormalizationParams> min_max_normalize(const FeatureMatrix& m);

/// Covariance with the 1/N convention: Cov = (1/N) sum (x_i - mean)(x_i - mean)^T.
SymmetricMatrix covariance(const Matrix& m);

/// Fitted PCA basis: descending eigenvalues with orthonormal components.
struct PcaModel {
    std::vector<double> mean;
    Matrix components;              // D x d, column j is the j-th component
    std::vector<double> eigenvalues;

    std::vector<double> component(std::size_t j) const {
        std::vector<double> v(components.rows());
        for (std::size_t r = 0; r < components.rows(); ++r) v[r] = components(r, j);
        return v;
    }
};

/// Project onto the d leading principal components of the 1/N covariance:
/// y_i = (e_1^T (x_i - mean), ..., e_d^T (x_i - mean)).
std::pair<Matrix, PcaModel> pca_fit_transform(const Matrix& m, std::size_t d = 2);

/// CSV dump of 2-D projections for external plotting: id, pc1, pc2, label.
void write_projection_csv(const Matrix& projected, const std::vector<std::string>& ids,
                          const std::vector<Label>& labels,
                          const std::filesystem::path& path);

} // namespace rumorcluster
