#ifndef EXACTLIN_LINALG_HPP
#define EXACTLIN_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "exactlin/scalar.hpp"

namespace exactlin {

using Vec = std::vector<Scalar>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
/// y += c * x
void vec_axpy(Vec& y, const Scalar& c, const Vec& x);

/// Dense matrix over Scalar, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    /// Row-major flattening, used to treat matrices as vectors.
    Vec flatten() const { return a_; }

    Vec apply(const Vec& v) const;  // throws std::invalid_argument on shape mismatch
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const = default;

    bool is_zero() const;
    Scalar trace() const;
    Matrix transpose() const;

    /// Bareiss-style exact determinant (square only).
    Scalar det() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with pivot columns; exact Gauss-Jordan.
RrefResult rref(const Matrix& m);

/// Basis of the right kernel {v : m v = 0}; size = cols - rank.
std::vector<Vec> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of m x = rhs, or nullopt when inconsistent.
/// Shape mismatches throw std::invalid_argument.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs);

/// Subspace of K^ambient held as a canonical RREF basis, so membership,
/// equality and quotient data are decided exactly.
class Subspace {
public:
    explicit Subspace(std::size_t ambient);
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }

    bool member(const Vec& v) const;  // throws std::invalid_argument on length mismatch
    bool equal(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return equal(o); }
    bool contains(const Subspace& o) const;

    /// Residual of v after eliminating all pivot coordinates.
    Vec reduce(const Vec& v) const;

    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coset representatives for ambient/this: unit vectors on the
    /// non-pivot coordinates.
    std::vector<Vec> quotient_basis() const;
    std::vector<std::size_t> nonpivots() const;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;  // RREF rows
    std::vector<std::size_t> pivots_;
};

}  // namespace exactlin

#endif
