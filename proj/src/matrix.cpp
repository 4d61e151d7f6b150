#include "bgls/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "bgls/errors.hpp"

namespace bgls {

Matrix::Matrix(std::size_t n, std::vector<double> rowmajor) : n_(n), a_(std::move(rowmajor)) {
    if (n_ == 0 || a_.size() != n_ * n_)
        throw std::invalid_argument("Matrix: need n*n entries, n >= 1");
    for (double v : a_)
        if (!std::isfinite(v)) throw std::invalid_argument("Matrix: nonfinite entry");
}

Matrix Matrix::identity(std::size_t n) {
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1.0;
    return Matrix(n, std::move(a));
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
    const std::size_t n = d.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = d[i];
    return Matrix(n, std::move(a));
}

namespace {

// LU factorization with partial pivoting; returns false when singular.
// lu holds both factors, perm_sign the permutation parity.
bool lu_decompose(std::size_t n, std::vector<double>& lu, std::vector<std::size_t>& piv,
                  double& perm_sign) {
    perm_sign = 1.0;
    piv.resize(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t imax = k;
        double amax = std::abs(lu[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu[i * n + k]) > amax) {
                amax = std::abs(lu[i * n + k]);
                imax = i;
            }
        if (amax == 0.0) return false;
        if (imax != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[imax * n + j]);
            std::swap(piv[k], piv[imax]);
            perm_sign = -perm_sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            lu[i * n + k] /= lu[k * n + k];
            for (std::size_t j = k + 1; j < n; ++j)
                lu[i * n + j] -= lu[i * n + k] * lu[k * n + j];
        }
    }
    return true;
}

}  // namespace

double Matrix::det() const {
    std::vector<double> lu = a_;
    std::vector<std::size_t> piv;
    double sign;
    if (!lu_decompose(n_, lu, piv, sign)) return 0.0;
    double d = sign;
    for (std::size_t i = 0; i < n_; ++i) d *= lu[i * n_ + i];
    return d;
}

Matrix Matrix::inverse() const {
    std::vector<double> lu = a_;
    std::vector<std::size_t> piv;
    double sign;
    if (!lu_decompose(n_, lu, piv, sign))
        throw StructureError("Matrix::inverse: singular matrix");
    Matrix inv = identity(n_);
    // Solve A x = e_c column by column through the permuted LU factors.
    for (std::size_t c = 0; c < n_; ++c) {
        std::vector<double> x(n_);
        for (std::size_t i = 0; i < n_; ++i) x[i] = (piv[i] == c) ? 1.0 : 0.0;
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu[i * n_ + j] * x[j];
        for (std::size_t ii = n_; ii-- > 0;) {
            for (std::size_t j = ii + 1; j < n_; ++j) x[ii] -= lu[ii * n_ + j] * x[j];
            x[ii] /= lu[ii * n_ + ii];
        }
        for (std::size_t i = 0; i < n_; ++i) inv(i, c) = x[i];
    }
    return inv;
}

double Matrix::spectral_norm() const {
    // Power iteration on A^T A from a fixed deterministic start.
    std::vector<double> v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = 1.0 / std::sqrt(static_cast<double>(n_) + i);
    double norm2 = 0.0;
    for (int it = 0; it < 300; ++it) {
        std::vector<double> av = apply(v);
        std::vector<double> w(n_, 0.0);  // w = A^T (A v)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < n_; ++i) w[j] += a_[i * n_ + j] * av[i];
        double len = 0.0;
        for (double x : w) len += x * x;
        len = std::sqrt(len);
        if (len == 0.0) return 0.0;
        double rayleigh = 0.0;
        for (std::size_t i = 0; i < n_; ++i) rayleigh += w[i] * v[i];
        for (std::size_t i = 0; i < n_; ++i) v[i] = w[i] / len;
        if (it > 20 && std::abs(rayleigh - norm2) <= 1e-15 * std::abs(rayleigh)) {
            norm2 = rayleigh;
            break;
        }
        norm2 = rayleigh;
    }
    return std::sqrt(std::max(0.0, norm2));
}

bool Matrix::is_diagonal(double tol) const {
    double scale = 0.0;
    for (double v : a_) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && std::abs(a_[i * n_ + j]) > tol * std::max(1.0, scale)) return false;
    return true;
}

std::vector<double> Matrix::diagonal_entries() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = a_[i * n_ + i];
    return d;
}

std::optional<double> Matrix::scaled_orthogonal_factor(double tol) const {
    // A^T A must equal s^2 I.
    std::vector<double> g(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) g[i * n_ + j] += a_[k * n_ + i] * a_[k * n_ + j];
    const double s2 = g[0];
    if (!(s2 > 0.0)) return std::nullopt;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const double want = (i == j) ? s2 : 0.0;
            if (std::abs(g[i * n_ + j] - want) > tol * s2) return std::nullopt;
        }
    return std::sqrt(s2);
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
    if (x.size() != n_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) y[i] += a_[i * n_ + j] * x[j];
    return y;
}

}  // namespace bgls
