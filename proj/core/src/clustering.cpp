#include "rumorcluster/clustering.hpp"

#include "rumorcluster/error.hpp"
#include "rumorcluster/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rumorcluster {

namespace {

double sq_distance(const double* a, const double* b, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

std::vector<std::size_t> cluster_counts(const std::vector<int>& assignment, std::size_t k) {
    std::vector<std::size_t> counts(k, 0);
    for (int a : assignment) counts[static_cast<std::size_t>(a)]++;
    return counts;
}

} // namespace

bool is_degenerate_assignment(const std::vector<int>& assignment, std::size_t k) {
    if (assignment.empty()) return false;
    const auto counts = cluster_counts(assignment, k);
    const std::size_t smallest = *std::min_element(counts.begin(), counts.end());
    return static_cast<double>(smallest) <
           0.01 * static_cast<double>(assignment.size());
}

double median_heuristic_sigma(const Matrix& points) {
    const std::size_t n = points.rows();
    if (n < 2) throw std::invalid_argument("median_heuristic_sigma: need at least 2 points");

    const SymmetricMatrix sq = pairwise_sq_distances(points);
    std::vector<double> dists;
    dists.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) dists.push_back(std::sqrt(sq(i, j)));
    }
    std::sort(dists.begin(), dists.end());
    const std::size_t count = dists.size();
    const double median = count % 2 == 1
                              ? dists[count / 2]
                              : 0.5 * (dists[count / 2 - 1] + dists[count / 2]);
    if (!(median > 0.0)) {
        throw std::invalid_argument("median_heuristic_sigma: zero bandwidth");
    }
    return median;
}

AffinityMatrix rbf_affinity(const Matrix& points, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("rbf_affinity: sigma must be > 0");
    const SymmetricMatrix sq = pairwise_sq_distances(points);
    const std::size_t n = points.rows();
    const double denom = 2.0 * sigma * sigma;

    AffinityMatrix out;
    out.kind = AffinityKind::Rbf;
    out.sigma = sigma;
    out.matrix = SymmetricMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = std::exp(-sq(i, j) / denom);
            // Keep entries strictly positive even when exp underflows.
            out.matrix.set(i, j, std::max(a, std::numeric_limits<double>::min()));
        }
    }
    return out;
}

AffinityMatrix knn_affinity(const Matrix& points, std::size_t k) {
    const std::size_t n = points.rows();
    if (k < 1 || k >= n) {
        throw std::invalid_argument("knn_affinity: need 1 <= k < n, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
    }
    const SymmetricMatrix sq = pairwise_sq_distances(points);

    AffinityMatrix out;
    out.kind = AffinityKind::Knn;
    out.k = k;
    out.matrix = SymmetricMatrix(n);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order.resize(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) order.push_back(j);
        }
        // Ties by lower index: sort key is (distance, index).
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (sq(i, a) != sq(i, b)) return sq(i, a) < sq(i, b);
            return a < b;
        });
        for (std::size_t r = 0; r < k; ++r) out.matrix.set(i, order[r], 1.0);
    }
    return out;
}

ClusterResult kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                     std::size_t n_init, std::size_t max_iter,
                     const KmeansObserver& observer) {
    const std::size_t n = points.rows();
    const std::size_t dims = points.cols();
    if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (n < k) {
        throw std::invalid_argument("kmeans: fewer points (" + std::to_string(n) +
                                    ") than clusters (" + std::to_string(k) + ")");
    }
    if (n_init < 1) throw std::invalid_argument("kmeans: n_init must be >= 1");

    const auto assign_step = [&](const Matrix& centroids, std::vector<int>& assignment) {
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_distance(points.row_ptr(i), centroids.row_ptr(0), dims);
            for (std::size_t c = 1; c < k; ++c) {
                const double d = sq_distance(points.row_ptr(i), centroids.row_ptr(c), dims);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(c);
                }
            }
            assignment[i] = best;
        }
    };

    const auto mean_of = [&](const std::vector<int>& assignment, std::size_t c,
                             Matrix& centroids) {
        std::size_t count = 0;
        std::vector<double> sum(dims, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (assignment[i] == static_cast<int>(c)) {
                ++count;
                for (std::size_t j = 0; j < dims; ++j) sum[j] += points(i, j);
            }
        }
        for (std::size_t j = 0; j < dims; ++j) {
            centroids(c, j) = sum[j] / static_cast<double>(count);
        }
    };

    const auto inertia_of = [&](const std::vector<int>& assignment,
                                const Matrix& centroids) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += sq_distance(points.row_ptr(i),
                             centroids.row_ptr(static_cast<std::size_t>(assignment[i])),
                             dims);
        }
        return s;
    };

    ClusterResult best;
    double best_inertia = std::numeric_limits<double>::infinity();

    for (std::size_t restart = 0; restart < n_init; ++restart) {
        Rng rng(seed + restart);

        // Initial centroids: k distinct data points by partial Fisher-Yates.
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        Matrix centroids(k, dims);
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t pick = c + uniform_index(rng, n - c);
            std::swap(idx[c], idx[pick]);
            for (std::size_t j = 0; j < dims; ++j) centroids(c, j) = points(idx[c], j);
        }

        std::vector<int> assignment(n, 0), previous;
        assign_step(centroids, assignment);

        double prev_inertia = std::numeric_limits<double>::infinity();
        std::size_t iterations = 1;
        while (true) {
            // Mean update with empty-cluster repair.
            auto counts = cluster_counts(assignment, k);
            for (std::size_t c = 0; c < k; ++c) {
                if (counts[c] > 0) mean_of(assignment, c, centroids);
            }
            for (std::size_t c = 0; c < k; ++c) {
                if (counts[c] > 0) continue;
                // Steal the point farthest from its current centroid, from a
                // cluster that can spare one.
                std::size_t steal = n;
                double worst = -1.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const auto owner = static_cast<std::size_t>(assignment[i]);
                    if (counts[owner] < 2) continue;
                    const double d =
                        sq_distance(points.row_ptr(i), centroids.row_ptr(owner), dims);
                    if (d > worst) {
                        worst = d;
                        steal = i;
                    }
                }
                if (steal == n) break;
                const auto donor = static_cast<std::size_t>(assignment[steal]);
                assignment[steal] = static_cast<int>(c);
                counts[donor]--;
                counts[c]++;
                for (std::size_t j = 0; j < dims; ++j) centroids(c, j) = points(steal, j);
                mean_of(assignment, donor, centroids);
            }

            const double inertia = inertia_of(assignment, centroids);
            if (observer) observer(restart, iterations, inertia);
            if (inertia > prev_inertia * (1.0 + 1e-12) + 1e-12) {
                throw NumericalError("kmeans: inertia increased from " +
                                     std::to_string(prev_inertia) + " to " +
                                     std::to_string(inertia));
            }
            prev_inertia = inertia;

            previous = assignment;
            assign_step(centroids, assignment);
            if (assignment == previous || iterations >= max_iter) break;
            ++iterations;
        }

        if (prev_inertia < best_inertia) {
            best_inertia = prev_inertia;
            best.assignment = assignment;
            best.inertia = prev_inertia;
            best.centroids = centroids;
            best.iterations = iterations;
        }
    }

    best.degenerate = is_degenerate_assignment(best.assignment, k);
    return best;
}

std::vector<double> fuzzy_membership(const std::vector<double>& centroid_distances,
                                     double m) {
    if (!(m > 1.0)) throw std::invalid_argument("fuzzy_membership: m must be > 1");
    const std::size_t c = centroid_distances.size();
    std::vector<double> row(c, 0.0);

    for (std::size_t j = 0; j < c; ++j) {
        if (centroid_distances[j] == 0.0) {
            row[j] = 1.0;   // coincident with a centroid: hard membership
            return row;
        }
    }

    // (1/d_j)^p normalized; scale by the smallest distance so the powers
    // cannot overflow.
    const double p = 1.0 / (m - 1.0);
    const double d_min = *std::min_element(centroid_distances.begin(),
                                           centroid_distances.end());
    double total = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
        row[j] = std::pow(d_min / centroid_distances[j], p);
        total += row[j];
    }
    for (double& x : row) x /= total;
    return row;
}

ClusterResult fuzzy_cmeans(const Matrix& points, std::size_t c, double m, double tol,
                           std::size_t max_iter, std::uint64_t seed,
                           const FuzzyObserver& observer) {
    const std::size_t n = points.rows();
    const std::size_t dims = points.cols();
    if (!(m > 1.0)) throw std::invalid_argument("fuzzy_cmeans: m must be > 1");
    if (c < 1) throw std::invalid_argument("fuzzy_cmeans: c must be >= 1");
    if (n < c) {
        throw std::invalid_argument("fuzzy_cmeans: fewer points (" + std::to_string(n) +
                                    ") than clusters (" + std::to_string(c) + ")");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("fuzzy_cmeans: tol must be > 0");

    Rng rng(seed);
    Matrix membership(n, c);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            membership(i, j) = uniform_unit(rng);
            sum += membership(i, j);
        }
        for (std::size_t j = 0; j < c; ++j) membership(i, j) /= sum;
    }

    const auto check_rows = [&](std::size_t iteration) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < c; ++j) sum += membership(i, j);
            if (std::fabs(sum - 1.0) > 1e-9) {
                throw NumericalError("fuzzy_cmeans: membership row " + std::to_string(i) +
                                     " sums to " + std::to_string(sum) + " at iteration " +
                                     std::to_string(iteration));
            }
        }
    };

    Matrix centroids(c, dims), prev_centroids(c, dims);
    std::size_t iterations = 0;
    std::vector<double> dists(c);

    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        // Weighted centroid update with weights mu^m.
        for (std::size_t j = 0; j < c; ++j) {
            double denom = 0.0;
            std::vector<double> num(dims, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const double w = std::pow(membership(i, j), m);
                denom += w;
                for (std::size_t col = 0; col < dims; ++col) {
                    num[col] += w * points(i, col);
                }
            }
            if (denom > 0.0) {
                for (std::size_t col = 0; col < dims; ++col) {
                    centroids(j, col) = num[col] / denom;
                }
            }
            // denom == 0 keeps the previous centroid
        }

        double move = std::numeric_limits<double>::infinity();
        if (iter > 1) {
            move = 0.0;
            for (std::size_t j = 0; j < c; ++j) {
                move = std::max(move, std::sqrt(sq_distance(centroids.row_ptr(j),
                                                            prev_centroids.row_ptr(j),
                                                            dims)));
            }
        }
        prev_centroids = centroids;

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                dists[j] = std::sqrt(
                    sq_distance(points.row_ptr(i), centroids.row_ptr(j), dims));
            }
            const auto row = fuzzy_membership(dists, m);
            for (std::size_t j = 0; j < c; ++j) membership(i, j) = row[j];
        }

        check_rows(iter);
        if (observer) observer(iter, membership);
        iterations = iter;
        if (move < tol) break;
    }

    ClusterResult result;
    result.assignment.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        for (std::size_t j = 1; j < c; ++j) {
            if (membership(i, j) > membership(i, static_cast<std::size_t>(best))) {
                best = static_cast<int>(j);
            }
        }
        result.assignment[i] = best;
    }
    result.membership = std::move(membership);
    result.centroids = std::move(centroids);
    result.iterations = iterations;
    result.degenerate = is_degenerate_assignment(result.assignment, c);
    return result;
}

ClusterResult spectral_cluster(const AffinityMatrix& a, std::size_t k, std::uint64_t seed,
                               std::size_t n_init, std::size_t max_iter) {
    const std::size_t n = a.matrix.order();
    if (k < 1) throw std::invalid_argument("spectral_cluster: k must be >= 1");
    if (n < k) {
        throw std::invalid_argument("spectral_cluster: fewer points (" + std::to_string(n) +
                                    ") than clusters (" + std::to_string(k) + ")");
    }

    // D_ii = sum_j a_ij, with an epsilon guard for isolated vertices.
    std::vector<double> inv_sqrt_degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) deg += a.matrix(i, j);
        inv_sqrt_degree[i] = 1.0 / std::sqrt(deg + 1e-12);
    }

    SymmetricMatrix laplacian(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            laplacian.set(i, j, a.matrix(i, j) * inv_sqrt_degree[i] * inv_sqrt_degree[j]);
        }
    }

    const EigenPairs eig = top_k_eigenpairs(laplacian, k, kDefaultTopKTol, seed);

    // Stack eigenvectors and renormalize each row; zero rows stay zero.
    Matrix embedding(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        double norm_sq = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            embedding(i, c) = eig.eigenvectors(i, c);
            norm_sq += embedding(i, c) * embedding(i, c);
        }
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (std::size_t c = 0; c < k; ++c) embedding(i, c) *= inv;
        }
    }

    const ClusterResult km = kmeans(embedding, k, seed, n_init, max_iter);

    ClusterResult result;
    result.assignment = km.assignment;
    result.iterations = km.iterations;
    result.degenerate = km.degenerate;
    return result;
}

} // namespace rumorcluster
