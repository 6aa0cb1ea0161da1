#include "hkens/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"

namespace hkens {

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : tri_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Basis identity_basis(std::size_t dim) {
    Basis b;
    b.dim_ambient = dim;
    b.dim_sub = dim;
    b.vectors.assign(dim, Point(dim, 0.0));
    b.eigenvalues.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        b.vectors[i][i] = 1.0;
    }
    return b;
}

SymMatrix covariance(const std::vector<Point>& points) {
    if (points.empty()) {
        throw InternalError("covariance of an empty point set");
    }
    const std::size_t dim = points.front().size();
    const Point mean = centroid(points);
    SymMatrix cov(dim);
    for (const Point& p : points) {
        for (std::size_t i = 0; i < dim; ++i) {
            const double di = p[i] - mean[i];
            for (std::size_t j = 0; j <= i; ++j) {
                cov.add(i, j, di * (p[j] - mean[j]));
            }
        }
    }
    const double inv = 1.0 / static_cast<double>(points.size());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            cov.set(i, j, cov(i, j) * inv);
        }
    }
    return cov;
}

SymMatrix covariance_of(const Dataset& data, std::span<const std::size_t> members) {
    if (members.empty()) {
        throw InternalError("covariance of an empty member set");
    }
    const Point mean = centroid_of(data, members);
    SymMatrix cov(data.dim);
    for (std::size_t id : members) {
        const Point& p = data.points[id];
        for (std::size_t i = 0; i < data.dim; ++i) {
            const double di = p[i] - mean[i];
            for (std::size_t j = 0; j <= i; ++j) {
                cov.add(i, j, di * (p[j] - mean[j]));
            }
        }
    }
    const double inv = 1.0 / static_cast<double>(members.size());
    for (std::size_t i = 0; i < data.dim; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            cov.set(i, j, cov(i, j) * inv);
        }
    }
    return cov;
}

Basis eig_sym(const SymMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) {
        throw InternalError("eig_sym of an empty matrix");
    }

    // working dense copy of A and the accumulated rotations V (row-major)
    std::vector<double> a(n * n);
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        v[i * n + i] = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = m(i, j);
        }
    }

    const double scale = std::max(1.0, m.max_abs());
    const double stop = 1e-14 * scale;
    constexpr std::size_t kMaxSweeps = 100;

    std::size_t sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::abs(a[p * n + q]));
            }
        }
        if (off <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= stop * 1e-2) {
                    continue;
                }
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const double apj = a[p * n + j];
                    const double aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * aqj;
                    a[q * n + j] = s * apj + c * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v[i * n + p];
                    const double viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps) {
        throw InternalError("Jacobi eigendecomposition did not converge in " +
                            std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x] < a[y * n + y];
    });

    Basis basis;
    basis.dim_ambient = n;
    basis.dim_sub = n;
    basis.vectors.assign(n, Point(n, 0.0));
    basis.eigenvalues.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t col = order[k];
        basis.eigenvalues[k] = a[col * n + col];
        for (std::size_t i = 0; i < n; ++i) {
            basis.vectors[k][i] = v[i * n + col];
        }
    }
    return basis;
}

Basis least_spread_basis(const SymMatrix& m, std::size_t d) {
    if (d < 1 || d > m.order()) {
        throw ConfigError("subspace dimension " + std::to_string(d) + " out of range 1.." +
                          std::to_string(m.order()));
    }
    Basis full = eig_sym(m);
    full.vectors.resize(d);
    full.eigenvalues.resize(d);
    full.dim_sub = d;
    return full;
}

double projected_sq_distance(const Point& x, const Point& c, const Basis& basis) {
    if (x.size() != basis.dim_ambient || c.size() != basis.dim_ambient) {
        throw InternalError("projected distance dimension mismatch");
    }
    double sum = 0.0;
    for (const Point& dir : basis.vectors) {
        double dot = 0.0;
        for (std::size_t i = 0; i < dir.size(); ++i) {
            dot += dir[i] * (x[i] - c[i]);
        }
        sum += dot * dot;
    }
    return sum;
}

double projected_distance(const Point& x, const Point& c, const Basis& basis) {
    return std::sqrt(projected_sq_distance(x, c, basis));
}

}  // namespace hkens
