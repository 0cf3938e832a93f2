#include "rumorcluster/preprocess.hpp"

#include "rumorcluster/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace rumorcluster {

std::pair<FeatureMatrix, NormalizationParams> min_max_normalize(const FeatureMatrix& m) {
    const std::size_t n = m.values.rows();
    const std::size_t d = m.values.cols();
    if (n == 0) throw std::invalid_argument("min_max_normalize: empty matrix");

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (!std::isfinite(m.values(i, j))) {
                throw std::invalid_argument("min_max_normalize: non-finite value at row " +
                                            std::to_string(i) + ", column " +
                                            std::to_string(j));
            }
        }
    }

    NormalizationParams params;
    params.min.resize(d);
    params.max.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        double lo = m.values(0, j), hi = m.values(0, j);
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, m.values(i, j));
            hi = std::max(hi, m.values(i, j));
        }
        params.min[j] = lo;
        params.max[j] = hi;
    }

    FeatureMatrix out = m;
    for (std::size_t j = 0; j < d; ++j) {
        const double range = params.max[j] - params.min[j];
        for (std::size_t i = 0; i < n; ++i) {
            // max == min is 0/0 in the transform; the column carries no
            // information, so it maps to zero.
            out.values(i, j) =
                range > 0.0 ? (m.values(i, j) - params.min[j]) / range : 0.0;
        }
    }
    return {std::move(out), std::move(params)};
}

SymmetricMatrix covariance(const Matrix& m) {
    const std::size_t n = m.rows();
    const std::size_t d = m.cols();
    if (n == 0) throw std::invalid_argument("covariance: empty matrix");

    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) mean[j] += m(i, j);
    }
    for (double& x : mean) x /= static_cast<double>(n);

    SymmetricMatrix cov(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                s += (m(i, a) - mean[a]) * (m(i, b) - mean[b]);
            }
            cov.set(a, b, s / static_cast<double>(n));
        }
    }
    return cov;
}

std::pair<Matrix, PcaModel> pca_fit_transform(const Matrix& m, std::size_t d) {
    const std::size_t n = m.rows();
    const std::size_t dim = m.cols();
    if (n < 2) throw std::invalid_argument("pca_fit_transform: need at least 2 rows");
    if (d < 1 || d > dim) {
        throw std::invalid_argument("pca_fit_transform: need 1 <= d <= " +
                                    std::to_string(dim));
    }

    const SymmetricMatrix cov = covariance(m);
    const EigenPairs eig = eigen_symmetric_full(cov);

    PcaModel model;
    model.mean.assign(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j) model.mean[j] += m(i, j);
    }
    for (double& x : model.mean) x /= static_cast<double>(n);

    model.components = Matrix(dim, d);
    model.eigenvalues.assign(eig.eigenvalues.begin(), eig.eigenvalues.begin() +
                                                          static_cast<std::ptrdiff_t>(d));
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
            model.components(r, c) = eig.eigenvectors(r, c);
        }
    }

    Matrix projected(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            double s = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                s += model.components(j, c) * (m(i, j) - model.mean[j]);
            }
            projected(i, c) = s;
        }
    }
    return {std::move(projected), std::move(model)};
}

void write_projection_csv(const Matrix& projected, const std::vector<std::string>& ids,
                          const std::vector<Label>& labels,
                          const std::filesystem::path& path) {
    if (projected.rows() != ids.size() || projected.rows() != labels.size()) {
        throw std::invalid_argument("write_projection_csv: row/id/label mismatch");
    }
    if (projected.cols() != 2) {
        throw std::invalid_argument("write_projection_csv: expected 2 columns");
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << "id,pc1,pc2,label\n";
    char buf[96];
    for (std::size_t i = 0; i < projected.rows(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g", projected(i, 0), projected(i, 1));
        out << ids[i] << ',' << buf << ',' << label_name(labels[i]) << '\n';
    }
    if (!out) throw InputError("write failed for " + path.string());
}

} // namespace rumorcluster
