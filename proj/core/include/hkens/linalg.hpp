#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hkens/types.hpp"

namespace hkens {

// Dense symmetric matrix backed by its lower triangle.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order) : order_(order), tri_(order * (order + 1) / 2, 0.0) {}

    std::size_t order() const { return order_; }

    double operator()(std::size_t i, std::size_t j) const { return tri_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, double value) { tri_[index(i, j)] = value; }
    void add(std::size_t i, std::size_t j, double value) { tri_[index(i, j)] += value; }

    double max_abs() const;
    double trace() const;

private:
    static std::size_t index_ordered(std::size_t row, std::size_t col) {
        return row * (row + 1) / 2 + col;
    }
    static std::size_t index(std::size_t i, std::size_t j) {
        return i >= j ? index_ordered(i, j) : index_ordered(j, i);
    }

    std::size_t order_ = 0;
    std::vector<double> tri_;
};

// d orthonormal directions of a D-dimensional space with their eigenvalues
// (ascending). For covariance input the eigenvalues are per-direction spread.
struct Basis {
    std::size_t dim_ambient = 0;
    std::size_t dim_sub = 0;
    std::vector<Point> vectors;       // dim_sub columns, each of length dim_ambient
    std::vector<double> eigenvalues;  // one per column, ascending
};

Basis identity_basis(std::size_t dim);

// Population covariance (1/n); a single point yields the zero matrix.
SymMatrix covariance(const std::vector<Point>& points);
SymMatrix covariance_of(const Dataset& data, std::span<const std::size_t> members);

// Full eigendecomposition by cyclic Jacobi rotations, eigenvalues ascending,
// ties kept in sweep order. Throws InternalError if 100 sweeps do not converge.
Basis eig_sym(const SymMatrix& m);

// The d eigenvectors with the smallest eigenvalues.
Basis least_spread_basis(const SymMatrix& m, std::size_t d);

// Euclidean norm of the basis-coordinate vector of (x - c).
double projected_distance(const Point& x, const Point& c, const Basis& basis);
double projected_sq_distance(const Point& x, const Point& c, const Basis& basis);

}  // namespace hkens
