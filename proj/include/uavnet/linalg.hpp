#pragma once

#include <cstddef>
#include <vector>

namespace uavnet {

/// Dense row-major matrix. All graphs here have at most a few dozen nodes,
/// so no sparse or blocked storage is needed.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    std::vector<double> apply(const std::vector<double>& v) const;

    /// max_ij |a_ij|
    double max_abs() const;
    /// max_ij |a_ij - a_ji|
    double asymmetry() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues; // ascending
    Matrix eigenvectors;             // column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi eigensolver for symmetric matrices. Converges to machine
/// precision in a handful of sweeps at these sizes; rotation order is fixed,
/// so identical inputs give bit-identical results.
EigenDecomposition jacobi_eigh(Matrix a, int max_sweeps = 64);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);

} // namespace uavnet
