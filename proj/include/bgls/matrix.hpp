#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace bgls {

// Small dense square matrix, row-major. Sized for dilation specs (d <= 8 or
// so), not for linear algebra at scale.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t n, std::vector<double> rowmajor);
    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<double>& d);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    double det() const;               // LU with partial pivoting
    Matrix inverse() const;           // throws StructureError when singular
    double spectral_norm() const;     // largest singular value, power iteration
    bool is_diagonal(double tol = 1e-12) const;
    std::vector<double> diagonal_entries() const;
    // When A = s U with U orthogonal (A^T A = s^2 I within tol), returns s.
    std::optional<double> scaled_orthogonal_factor(double tol = 1e-9) const;

    // y = A x and y = A^{-1} x (the latter precomputes nothing; callers
    // needing many solves should take inverse() once).
    std::vector<double> apply(const std::vector<double>& x) const;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

}  // namespace bgls
