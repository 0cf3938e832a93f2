#include "rumorcluster/numerics.hpp"

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

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

std::vector<double> matvec(const SymmetricMatrix& m, const std::vector<double>& v) {
    const std::size_t n = m.order();
    std::vector<double> out(n, 0.0);
    const Matrix& d = m.dense();
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = d.row_ptr(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

double residual_norm(const SymmetricMatrix& m, double lambda, const std::vector<double>& v) {
    std::vector<double> r = matvec(m, v);
    axpy(-lambda, v, r);
    return norm2(r);
}

// Largest-magnitude entry positive; first such entry on ties.
void apply_sign_convention(std::vector<double>& v) {
    std::size_t idx = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::fabs(v[i]);
        if (a > best) {
            best = a;
            idx = i;
        }
    }
    if (v[idx] < 0.0) {
        for (double& x : v) x = -x;
    }
}

EigenPairs assemble_sorted(std::size_t n, std::vector<double> values,
                           std::vector<std::vector<double>> vectors) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

    EigenPairs out;
    out.eigenvalues.reserve(values.size());
    out.eigenvectors = Matrix(n, values.size());
    for (std::size_t c = 0; c < order.size(); ++c) {
        const std::size_t src = order[c];
        apply_sign_convention(vectors[src]);
        out.eigenvalues.push_back(values[src]);
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = vectors[src][r];
    }
    return out;
}

// --- cyclic Jacobi on a dense symmetric work copy --------------------------

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    }
    return std::sqrt(2.0 * s);
}

void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    const std::size_t n = a.rows();
    const double app = a(p, p), aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r != p && r != q) {
            const double arp = a(r, p), arq = a(r, q);
            a(r, p) = arp - s * (arq + tau * arp);
            a(p, r) = a(r, p);
            a(r, q) = arq + s * (arp - tau * arq);
            a(q, r) = a(r, q);
        }
        const double vrp = v(r, p), vrq = v(r, q);
        v(r, p) = vrp - s * (vrq + tau * vrp);
        v(r, q) = vrq + s * (vrp - tau * vrq);
    }
}

// Full Jacobi decomposition without the public size bound; also serves the
// Lanczos projected problem.
void jacobi_core(Matrix a, double off_target, std::size_t max_sweeps,
                 std::vector<double>& values, std::vector<std::vector<double>>& vectors,
                 double& achieved_off) {
    const std::size_t n = a.rows();
    Matrix v(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    achieved_off = off_diagonal_norm(a);
    for (std::size_t sweep = 0; sweep < max_sweeps && achieved_off > off_target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        }
        achieved_off = off_diagonal_norm(a);
    }

    values.resize(n);
    vectors.assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = a(i, i);
        for (std::size_t r = 0; r < n; ++r) vectors[i][r] = v(r, i);
    }
}

// --- tridiagonal top eigenpair (Sturm bisection + inverse iteration) -------

int sturm_count_less(const std::vector<double>& alpha, const std::vector<double>& beta,
                     double x) {
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const double b2 = i == 0 ? 0.0 : beta[i - 1] * beta[i - 1];
        d = alpha[i] - x - b2 / d;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

double tridiag_top_value(const std::vector<double>& alpha, const std::vector<double>& beta) {
    const std::size_t m = alpha.size();
    double lo = alpha[0], hi = alpha[0];
    for (std::size_t i = 0; i < m; ++i) {
        const double r = (i > 0 ? std::fabs(beta[i - 1]) : 0.0) +
                         (i + 1 < m ? std::fabs(beta[i]) : 0.0);
        lo = std::min(lo, alpha[i] - r);
        hi = std::max(hi, alpha[i] + r);
    }
    const int n_int = static_cast<int>(m);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count_less(alpha, beta, mid) >= n_int) hi = mid;
        else lo = mid;
    }
    return hi;
}

// Inverse iteration on (T - shift I); tridiagonal LU with partial pivoting.
std::vector<double> tridiag_inverse_iteration(const std::vector<double>& alpha,
                                              const std::vector<double>& beta,
                                              double shift) {
    const std::size_t m = alpha.size();
    std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::fabs(alpha[i]));
    for (std::size_t i = 0; i + 1 < m; ++i) scale = std::max(scale, std::fabs(beta[i]));
    const double pert = std::max(scale, 1.0) * 1e-14;

    for (int pass = 0; pass < 3; ++pass) {
        // Solve (T - shift I) y = x with banded LU (one superdiagonal fill-in).
        std::vector<double> d(m), e(m, 0.0), f(m, 0.0), rhs = x;
        for (std::size_t i = 0; i < m; ++i) {
            d[i] = alpha[i] - shift + pert;
            if (i + 1 < m) e[i] = beta[i];
        }
        std::vector<double> sub(m, 0.0);
        for (std::size_t i = 0; i + 1 < m; ++i) sub[i + 1] = beta[i];

        for (std::size_t i = 0; i + 1 < m; ++i) {
            if (std::fabs(sub[i + 1]) > std::fabs(d[i])) {
                std::swap(d[i], sub[i + 1]);
                std::swap(e[i], d[i + 1]);
                std::swap(f[i], e[i + 1]);
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (d[i] == 0.0) d[i] = pert;
            const double l = sub[i + 1] / d[i];
            d[i + 1] -= l * e[i];
            e[i + 1] -= l * f[i];
            rhs[i + 1] -= l * rhs[i];
        }
        if (d[m - 1] == 0.0) d[m - 1] = pert;
        std::vector<double> y(m);
        for (std::size_t ii = m; ii-- > 0;) {
            double s = rhs[ii];
            if (ii + 1 < m) s -= e[ii] * y[ii + 1];
            if (ii + 2 < m) s -= f[ii] * y[ii + 2];
            y[ii] = s / d[ii];
        }
        const double nrm = norm2(y);
        if (nrm == 0.0 || !std::isfinite(nrm)) break;
        for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / nrm;
    }
    return x;
}

void check_finite(const SymmetricMatrix& m, const char* who) {
    if (!m.all_finite()) {
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
    }
}

} // namespace

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : m_.data()) s += x * x;
    return std::sqrt(s);
}

double SymmetricMatrix::trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < order_; ++i) s += m_(i, i);
    return s;
}

bool SymmetricMatrix::all_finite() const {
    for (double x : m_.data()) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

EigenPairs eigen_symmetric_full(const SymmetricMatrix& m, double tol, std::size_t max_order) {
    if (!(tol > 0.0)) throw std::invalid_argument("eigen_symmetric_full: tol must be > 0");
    if (m.order() > max_order) {
        throw std::invalid_argument("eigen_symmetric_full: order " +
                                    std::to_string(m.order()) + " exceeds bound " +
                                    std::to_string(max_order));
    }
    check_finite(m, "eigen_symmetric_full");

    const std::size_t n = m.order();
    if (n == 0) return {};

    const double frob = m.frobenius_norm();
    const double off_target = 0.1 * tol * frob;

    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    double achieved_off = 0.0;
    jacobi_core(m.dense(), off_target, 60, values, vectors, achieved_off);

    if (achieved_off > off_target) {
        throw NumericalError("eigen_symmetric_full: no convergence, off-diagonal norm " +
                             std::to_string(achieved_off));
    }

    EigenPairs out = assemble_sorted(n, std::move(values), std::move(vectors));
    for (std::size_t i = 0; i < n; ++i) {
        const double r = residual_norm(m, out.eigenvalues[i], out.eigenvector(i));
        if (r > tol * frob) {
            throw NumericalError("eigen_symmetric_full: residual " + std::to_string(r) +
                                 " exceeds bound " + std::to_string(tol * frob));
        }
    }
    return out;
}

EigenPairs top_k_eigenpairs(const SymmetricMatrix& m, std::size_t k, double tol,
                            std::uint64_t seed) {
    const std::size_t n = m.order();
    if (k < 1 || k > n) throw std::invalid_argument("top_k_eigenpairs: need 1 <= k <= n");
    if (!(tol > 0.0)) throw std::invalid_argument("top_k_eigenpairs: tol must be > 0");
    check_finite(m, "top_k_eigenpairs");

    const double frob = m.frobenius_norm();
    const double accept = tol * frob;
    Rng rng(seed);

    std::vector<std::vector<double>> found;
    std::vector<double> found_values;
    found.reserve(k);

    const auto orthogonalize = [&](std::vector<double>& w,
                                   const std::vector<std::vector<double>>& basis) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : found) axpy(-dot(w, u), u, w);
            for (const auto& u : basis) axpy(-dot(w, u), u, w);
        }
    };

    const auto random_direction = [&](const std::vector<std::vector<double>>& basis,
                                      std::vector<double>& out) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            for (double& x : out) x = standard_normal(rng);
            orthogonalize(out, basis);
            const double nrm = norm2(out);
            if (nrm > 1e-8) {
                for (double& x : out) x /= nrm;
                return true;
            }
        }
        return false;
    };

    for (std::size_t pair_idx = 0; pair_idx < k; ++pair_idx) {
        const std::size_t complement = n - pair_idx;
        const std::size_t max_basis = std::min<std::size_t>(complement, 500);

        std::vector<std::vector<double>> basis;
        std::vector<double> alphas, betas;   // betas[j] couples basis[j], basis[j+1]
        basis.reserve(max_basis);

        std::vector<double> v(n);
        if (!random_direction(basis, v)) {
            throw NumericalError("top_k_eigenpairs: cannot span complement subspace");
        }
        basis.push_back(v);

        bool accepted = false;
        double best_residual = std::numeric_limits<double>::infinity();
        double theta = 0.0;
        std::vector<double> ritz;

        // Form the top Ritz vector of the projected tridiagonal problem and
        // test the true residual in the full space.
        const auto full_check = [&]() {
            const double top = tridiag_top_value(alphas, betas);
            std::vector<double> s = tridiag_inverse_iteration(alphas, betas, top);
            std::vector<double> y(n, 0.0);
            for (std::size_t j = 0; j < alphas.size(); ++j) axpy(s[j], basis[j], y);
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& u : found) axpy(-dot(y, u), u, y);
            }
            const double nrm = norm2(y);
            if (nrm < 1e-12) return false;
            for (double& x : y) x /= nrm;
            const double lambda = dot(y, matvec(m, y));
            const double r = residual_norm(m, lambda, y);
            best_residual = std::min(best_residual, r);
            if (r <= accept) {
                theta = lambda;
                ritz = std::move(y);
                return true;
            }
            return false;
        };

        while (true) {
            // One Lanczos step with full reorthogonalization.
            const std::vector<double>& vj = basis.back();
            std::vector<double> w = matvec(m, vj);
            const double alpha = dot(w, vj);
            axpy(-alpha, vj, w);
            orthogonalize(w, basis);
            alphas.push_back(alpha);

            const double beta = norm2(w);
            const double breakdown = std::max(frob, 1e-300) * 1e-13;
            const bool exhausted = basis.size() >= max_basis;

            // Cheap convergence probe: |beta_m * s_m| bounds the residual of
            // the top Ritz pair without leaving the projected space.
            bool probe = exhausted || beta <= breakdown || alphas.size() % 25 == 0;
            if (!probe) {
                const double top = tridiag_top_value(alphas, betas);
                const std::vector<double> s = tridiag_inverse_iteration(alphas, betas, top);
                probe = std::fabs(beta * s.back()) <= 0.5 * accept;
            }
            if (probe && full_check()) {
                accepted = true;
                break;
            }
            if (exhausted) break;

            if (beta <= breakdown) {
                // Invariant subspace: continue in a fresh random direction.
                std::vector<double> fresh(n);
                if (!random_direction(basis, fresh)) break;
                betas.push_back(0.0);
                basis.push_back(std::move(fresh));
            } else {
                for (double& x : w) x /= beta;
                betas.push_back(beta);
                basis.push_back(std::move(w));
            }
        }

        if (!accepted) {
            throw NumericalError("top_k_eigenpairs: pair " + std::to_string(pair_idx) +
                                 " did not converge, best residual " +
                                 std::to_string(best_residual) + " vs bound " +
                                 std::to_string(accept));
        }
        found.push_back(std::move(ritz));
        found_values.push_back(theta);
    }

    return assemble_sorted(n, std::move(found_values), std::move(found));
}

SymmetricMatrix pairwise_sq_distances(const Matrix& points) {
    const std::size_t n = points.rows();
    const std::size_t d = points.cols();
    for (double x : points.data()) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("pairwise_sq_distances: non-finite input");
        }
    }

    std::vector<double> sq_norms(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = points.row_ptr(i);
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += row[j] * row[j];
        sq_norms[i] = s;
    }

    SymmetricMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* ri = points.row_ptr(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double* rj = points.row_ptr(j);
            double g = 0.0;
            for (std::size_t c = 0; c < d; ++c) g += ri[c] * rj[c];
            out.set(i, j, std::max(0.0, sq_norms[i] + sq_norms[j] - 2.0 * g));
        }
    }
    return out;
}

} // namespace rumorcluster
