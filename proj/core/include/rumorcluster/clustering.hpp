#pragma once

#include "rumorcluster/matrix.hpp"
#include "rumorcluster/numerics.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rumorcluster {

enum class AffinityKind { Rbf, Knn };

/// Pairwise similarity graph with zero diagonal. RBF entries lie in (0, 1],
/// kNN entries in {0, 1}.
struct AffinityMatrix {
    SymmetricMatrix matrix;
    AffinityKind kind = AffinityKind::Rbf;
    double sigma = 0.0;     // RBF bandwidth
    std::size_t k = 0;      // kNN neighbor count
};

/// Two-cluster (generally k-cluster) outcome. membership and centroids are
/// filled only by the algorithms that produce them; degenerate is true iff
/// the smallest cluster holds less than 1% of the points.
struct ClusterResult {
    std::vector<int> assignment;
    std::optional<Matrix> membership;   // fuzzy only, rows sum to 1
    std::optional<double> inertia;      // k-means only
    std::optional<Matrix> centroids;    // k-means / fuzzy diagnostics
    std::size_t iterations = 0;
    bool degenerate = false;
};

/// Per-iteration hooks used by property tests.
using KmeansObserver =
    std::function<void(std::size_t restart, std::size_t iteration, double inertia)>;
using FuzzyObserver = std::function<void(std::size_t iteration, const Matrix& membership)>;

/// Median of all pairwise Euclidean distances (mean of the middle two when
/// the count is even). Throws "zero bandwidth" when the median is not
/// positive, e.g. all points identical.
double median_heuristic_sigma(const Matrix& points);

/// Gaussian kernel affinity a_ij = exp(-||s_i - s_j||^2 / (2 sigma^2)),
/// zero diagonal.
AffinityMatrix rbf_affinity(const Matrix& points, double sigma);

/// Binary k-nearest-neighbor graph, symmetrized by OR; distance ties break
/// toward the lower index.
AffinityMatrix knn_affinity(const Matrix& points, std::size_t k);

/// Normalized-Laplacian spectral clustering: L = D^{-1/2} A D^{-1/2}, stack
/// the k largest eigenvectors, renormalize rows, k-means on the embedding.
ClusterResult spectral_cluster(const AffinityMatrix& a, std::size_t k = 2,
                               std::uint64_t seed = 0, std::size_t n_init = 10,
                               std::size_t max_iter = 300);

/// Lloyd iterations with n_init seeded restarts (restart r uses seed + r),
/// data-point initialization, lower-index tie-breaking, and empty-cluster
/// repair by stealing the point farthest from its centroid. Returns the
/// restart with the lowest inertia.
ClusterResult kmeans(const Matrix& points, std::size_t k = 2, std::uint64_t seed = 0,
                     std::size_t n_init = 10, std::size_t max_iter = 300,
                     const KmeansObserver& observer = {});

/// One membership row from the distances of a point to every centroid:
/// mu_j = (1/d_j)^(1/(m-1)) / sum_k (1/d_k)^(1/(m-1)); a zero distance is a
/// hard 1 at the first such centroid.
std::vector<double> fuzzy_membership(const std::vector<double>& centroid_distances,
                                     double m);

/// Fuzzy C-means: seeded random row-stochastic membership init, alternate
/// weighted-centroid and membership updates until the largest centroid move
/// drops below tol. Hard assignment is the per-row argmax (ties -> lower
/// index).
ClusterResult fuzzy_cmeans(const Matrix& points, std::size_t c = 2, double m = 2.0,
                           double tol = 1e-5, std::size_t max_iter = 300,
                           std::uint64_t seed = 0, const FuzzyObserver& observer = {});

/// True iff the smallest cluster holds less than 1% of the points.
bool is_degenerate_assignment(const std::vector<int>& assignment, std::size_t k);

} // namespace rumorcluster
