#include "exactlin/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactlin {

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

void vec_axpy(Vec& y, const Scalar& c, const Vec& x) {
    if (y.size() != x.size()) throw std::invalid_argument("vec_axpy: length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator-: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

bool Matrix::is_zero() const { return vec_is_zero(a_); }

Scalar Matrix::trace() const {
    Scalar t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::det: not square");
    Matrix m = *this;
    Scalar d(1);
    std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar p = m.at(col, col).inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * p;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < r.cols() && prow < r.rows(); ++col) {
        std::size_t piv = prow;
        while (piv < r.rows() && r.at(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != prow)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(prow, j));
        Scalar lead = r.at(prow, col).inv();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(prow, j) *= lead;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == prow || r.at(i, col).is_zero()) continue;
            Scalar f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                if (!r.at(prow, j).is_zero()) r.at(i, j) -= f * r.at(prow, j);
        }
        pivots.push_back(col);
        ++prow;
    }
    return {std::move(r), std::move(pivots)};
}

std::vector<Vec> nullspace(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.mat.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    RrefResult rr = rref(aug);
    Vec x(m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[rr.pivots[i]] = rr.mat.at(i, m.cols());
    }
    return x;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    for (const Vec& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: length mismatch");
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RrefResult rr = rref(Matrix::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) s.basis_.push_back(rr.mat.row(i));
    s.pivots_ = rr.pivots;
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: length mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (!c.is_zero()) vec_axpy(r, -c, basis_[i]);
    }
    return r;
}

bool Subspace::member(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::equal(const Subspace& o) const {
    if (ambient_ != o.ambient_ || dim() != o.dim()) return false;
    // identical canonical bases <=> equal spaces
    return basis_ == o.basis_ && pivots_ == o.pivots_;
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient_ != o.ambient_) return false;
    for (const Vec& b : o.basis_)
        if (!member(b)) return false;
    return true;
}

std::vector<std::size_t> Subspace::nonpivots() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> r;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_pivot[j]) r.push_back(j);
    return r;
}

std::vector<Vec> Subspace::quotient_basis() const {
    std::vector<Vec> reps;
    for (std::size_t j : nonpivots()) {
        Vec v(ambient_);
        v[j] = Scalar(1);
        reps.push_back(std::move(v));
    }
    return reps;
}

}  // namespace exactlin
