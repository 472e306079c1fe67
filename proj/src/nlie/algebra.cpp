#include "nlie/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlie {

int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {  // insertion sort, counting swaps
        int v = idx[i];
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > v) {
            idx[j] = idx[j - 1];
            sign = -sign;
            --j;
        }
        idx[j] = v;
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

NLieAlgebra::NLieAlgebra(int arity, int dim, Field field)
    : n_(arity), dim_(dim), field_(field) {
    if (arity < 2) throw std::invalid_argument("NLieAlgebra: arity must be >= 2");
    if (dim < 0) throw std::invalid_argument("NLieAlgebra: negative dimension");
}

void NLieAlgebra::set_bracket(std::vector<int> idx, Vec value) {
    if (static_cast<int>(idx.size()) != n_)
        throw std::invalid_argument("NLieAlgebra::set_bracket: arity mismatch");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= dim_)
            throw std::invalid_argument("NLieAlgebra::set_bracket: index out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw std::invalid_argument("NLieAlgebra::set_bracket: indices must be strictly increasing");
    }
    if (value.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("NLieAlgebra::set_bracket: value length mismatch");
    if (table_.count(idx)) throw std::invalid_argument("NLieAlgebra::set_bracket: repeated bracket key");
    if (!exactlin::vec_is_zero(value)) table_[std::move(idx)] = std::move(value);
}

Vec NLieAlgebra::bracket_basis(std::span<const int> idx) const {
    Vec zero(dim_);
    if (static_cast<int>(idx.size()) != n_)
        throw std::invalid_argument("NLieAlgebra::bracket_basis: arity mismatch");
    std::vector<int> key(idx.begin(), idx.end());
    int sign = sort_sign(key);
    if (sign == 0) return zero;
    auto it = table_.find(key);
    if (it == table_.end()) return zero;
    if (sign == 1) return it->second;
    Vec r = it->second;
    for (Scalar& c : r) c = -c;
    return r;
}

Vec NLieAlgebra::bracket_subst(std::span<const int> idx, std::size_t pos, const Vec& v) const {
    if (v.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("NLieAlgebra::bracket_subst: element length mismatch");
    Vec acc(dim_);
    std::vector<int> work(idx.begin(), idx.end());
    for (int k = 0; k < dim_; ++k) {
        if (v[k].is_zero()) continue;
        work[pos] = k;
        exactlin::vec_axpy(acc, v[k], bracket_basis(work));
    }
    return acc;
}

Element NLieAlgebra::bracket(const std::vector<Element>& args) const {
    if (static_cast<int>(args.size()) != n_)
        throw std::invalid_argument("NLieAlgebra::bracket: wrong argument count");
    for (const Element& a : args)
        if (a.size() != static_cast<std::size_t>(dim_))
            throw std::invalid_argument("NLieAlgebra::bracket: element length mismatch");
    Vec acc(dim_);
    std::vector<int> idx(n_, 0);
    std::vector<int> support;  // expand over the nonzero coordinates only
    std::vector<std::vector<int>> supports(n_);
    for (int s = 0; s < n_; ++s)
        for (int k = 0; k < dim_; ++k)
            if (!args[s][k].is_zero()) supports[s].push_back(k);
    std::vector<std::size_t> cursor(n_, 0);
    for (int s = 0; s < n_; ++s)
        if (supports[s].empty()) return acc;
    while (true) {
        Scalar coeff(1);
        for (int s = 0; s < n_; ++s) {
            idx[s] = supports[s][cursor[s]];
            coeff *= args[s][idx[s]];
        }
        exactlin::vec_axpy(acc, coeff, bracket_basis(idx));
        int s = n_ - 1;
        while (s >= 0 && ++cursor[s] == supports[s].size()) cursor[s--] = 0;
        if (s < 0) break;
    }
    return acc;
}

bool NLieAlgebra::operator==(const NLieAlgebra& o) const {
    return n_ == o.n_ && dim_ == o.dim_ && field_ == o.field_ && table_ == o.table_;
}

std::vector<std::vector<int>> increasing_tuples(int dim, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > dim) return out;
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == dim - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

namespace {

std::vector<int> to_1based(std::span<const int> idx) {
    std::vector<int> r(idx.begin(), idx.end());
    for (int& v : r) ++v;
    return r;
}

bool next_tuple(std::vector<int>& t, int dim) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < dim) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace

Report check_fundamental_identity(const NLieAlgebra& L) {
    const int n = L.arity(), dim = L.dim();
    if (dim == 0) return Report::ok();
    auto xs = increasing_tuples(dim, n);
    std::vector<int> y(n - 1, 0);
    do {
        std::vector<int> inner(n, 0);  // [x_i, y_1, ..., y_{n-1}]
        std::vector<int> outer(n, 0);  // [<lhs>, y_1, ..., y_{n-1}]
        std::copy(y.begin(), y.end(), inner.begin() + 1);
        std::copy(y.begin(), y.end(), outer.begin() + 1);
        for (const auto& x : xs) {
            Vec lhs_arg = L.bracket_basis(x);
            Vec residual = L.bracket_subst(outer, 0, lhs_arg);
            for (int i = 0; i < n; ++i) {
                inner[0] = x[i];
                Vec w = L.bracket_basis(inner);
                if (exactlin::vec_is_zero(w)) continue;
                Vec term = L.bracket_subst(x, i, w);
                residual = exactlin::vec_sub(residual, term);
            }
            if (!exactlin::vec_is_zero(residual)) {
                std::vector<int> where = to_1based(x);
                for (int v : to_1based(y)) where.push_back(v);
                return Report::fail({"fundamental-identity", where, residual,
                                     "residual of (x-tuple, y-tuple) instance"});
            }
        }
    } while (next_tuple(y, dim));
    return Report::ok();
}

Report is_derivation(const NLieAlgebra& L, const Matrix& d) {
    const int n = L.arity(), dim = L.dim();
    if (d.rows() != static_cast<std::size_t>(dim) || d.cols() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("is_derivation: matrix shape mismatch");
    for (const auto& t : increasing_tuples(dim, n)) {
        Vec lhs = d.apply(L.bracket_basis(t));
        Vec rhs(dim);
        for (int i = 0; i < n; ++i) {
            Vec di = d.col(t[i]);
            rhs = exactlin::vec_add(rhs, L.bracket_subst(t, i, di));
        }
        Vec residual = exactlin::vec_sub(lhs, rhs);
        if (!exactlin::vec_is_zero(residual))
            return Report::fail({"derivation", to_1based(t), residual, "d fails the Leibniz rule here"});
    }
    return Report::ok();
}

std::vector<Matrix> derivation_algebra(const NLieAlgebra& L) {
    const int n = L.arity(), dim = L.dim();
    auto tuples = increasing_tuples(dim, n);
    // unknown d_{rs} at column r*dim + s
    std::vector<Vec> rows;
    for (const auto& t : tuples) {
        Vec w = L.bracket_basis(t);
        // u[i][k] = [e_t1, ..., e_k at slot i, ..., e_tn]
        std::vector<std::vector<Vec>> u(n, std::vector<Vec>(dim));
        std::vector<int> work = t;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < dim; ++k) {
                work = t;
                work[i] = k;
                u[i][k] = L.bracket_basis(work);
            }
        }
        for (int c = 0; c < dim; ++c) {
            Vec row(static_cast<std::size_t>(dim) * dim);
            for (int k = 0; k < dim; ++k)
                if (!w[k].is_zero()) row[c * dim + k] += w[k];  // (d w)_c
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < dim; ++k)
                    if (!u[i][k][c].is_zero()) row[k * dim + t[i]] -= u[i][k][c];
            if (!exactlin::vec_is_zero(row)) rows.push_back(std::move(row));
        }
    }
    std::vector<Matrix> basis;
    std::vector<Vec> kernel;
    if (rows.empty()) {
        kernel = Subspace(static_cast<std::size_t>(dim) * dim).quotient_basis();
    } else {
        kernel = exactlin::nullspace(Matrix::from_rows(rows, static_cast<std::size_t>(dim) * dim));
    }
    for (const Vec& v : kernel) {
        Matrix m(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int s = 0; s < dim; ++s) m.at(r, s) = v[r * dim + s];
        basis.push_back(std::move(m));
    }
    return basis;
}

Matrix ad(const NLieAlgebra& L, std::span<const int> tuple) {
    const int n = L.arity(), dim = L.dim();
    if (static_cast<int>(tuple.size()) != n - 1)
        throw std::invalid_argument("ad: tuple must have n-1 indices");
    Matrix m(dim, dim);
    std::vector<int> full(tuple.begin(), tuple.end());
    full.push_back(0);
    for (int b = 0; b < dim; ++b) {
        full[n - 1] = b;
        Vec col = L.bracket_basis(full);
        for (int r = 0; r < dim; ++r) m.at(r, b) = col[r];
    }
    return m;
}

Matrix ad(const NLieAlgebra& L, const std::vector<Element>& xs) {
    const int n = L.arity(), dim = L.dim();
    if (static_cast<int>(xs.size()) != n - 1)
        throw std::invalid_argument("ad: needs n-1 elements");
    Matrix m(dim, dim);
    for (int b = 0; b < dim; ++b) {
        std::vector<Element> args = xs;
        Vec eb(dim);
        eb[b] = Scalar(1);
        args.push_back(eb);
        Vec col = L.bracket(args);
        for (int r = 0; r < dim; ++r) m.at(r, b) = col[r];
    }
    return m;
}

Matrix right_mult(const NLieAlgebra& L, std::span<const int> tuple) {
    Matrix m = ad(L, tuple);
    if (L.arity() % 2 == 0) {  // (-1)^{n-1} = -1 for even n
        Matrix z(m.rows(), m.cols());
        m = z - m;
    }
    return m;
}

Subspace inner_derivations(const NLieAlgebra& L) {
    const int dim = L.dim();
    std::vector<Vec> gens;
    for (const auto& t : increasing_tuples(dim, L.arity() - 1))
        gens.push_back(ad(L, t).flatten());
    return Subspace::span(gens, static_cast<std::size_t>(dim) * dim);
}

Subspace centre(const NLieAlgebra& L) {
    const int dim = L.dim();
    auto tuples = increasing_tuples(dim, L.arity() - 1);
    if (tuples.empty() || dim == 0) {
        // no constraints: the whole space
        std::vector<Vec> all;
        for (int i = 0; i < dim; ++i) {
            Vec v(dim);
            v[i] = Scalar(1);
            all.push_back(std::move(v));
        }
        return Subspace::span(all, dim);
    }
    Matrix stacked(tuples.size() * dim, dim);
    std::size_t r0 = 0;
    for (const auto& t : tuples) {
        Matrix a = ad(L, t);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) stacked.at(r0 + i, j) = a.at(i, j);
        r0 += dim;
    }
    return Subspace::span(exactlin::nullspace(stacked), dim);
}

Report is_ideal(const NLieAlgebra& L, const Subspace& S) {
    const int n = L.arity(), dim = L.dim();
    if (S.ambient() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("is_ideal: subspace ambient mismatch");
    auto tuples = increasing_tuples(dim, n - 1);
    std::vector<int> outer(n, 0);
    int bi = 0;
    for (const Vec& b : S.basis()) {
        for (const auto& t : tuples) {
            std::copy(t.begin(), t.end(), outer.begin() + 1);
            Vec v = L.bracket_subst(outer, 0, b);
            if (!S.member(v)) {
                std::vector<int> where = {bi + 1};
                for (int x : to_1based(t)) where.push_back(x);
                return Report::fail({"ideal", where, S.reduce(v),
                                     "bracket of subspace basis vector with basis tuple leaves the subspace"});
            }
        }
        ++bi;
    }
    return Report::ok();
}

Subspace derived_ideal(const NLieAlgebra& L, const Subspace& I) {
    const int n = L.arity(), dim = L.dim();
    std::vector<Vec> gens;
    std::vector<int> outer(n, 0);
    for (const Vec& b : I.basis()) {
        for (const auto& t : increasing_tuples(dim, n - 1)) {
            std::copy(t.begin(), t.end(), outer.begin() + 1);
            Vec v = L.bracket_subst(outer, 0, b);
            if (!exactlin::vec_is_zero(v)) gens.push_back(std::move(v));
        }
    }
    return Subspace::span(gens, dim);
}

Subspace ideal_closure(const NLieAlgebra& L, const Vec& v) {
    const int n = L.arity(), dim = L.dim();
    Subspace S = Subspace::span({v}, dim);
    auto tuples = increasing_tuples(dim, n - 1);
    std::vector<int> outer(n, 0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> next = S.basis();
        for (const Vec& b : S.basis()) {
            for (const auto& t : tuples) {
                std::copy(t.begin(), t.end(), outer.begin() + 1);
                Vec w = L.bracket_subst(outer, 0, b);
                if (!S.member(w)) {
                    next.push_back(std::move(w));
                    grew = true;
                }
            }
        }
        if (grew) S = Subspace::span(next, dim);
    }
    return S;
}

Report is_simple(const NLieAlgebra& L) {
    const int dim = L.dim();
    std::vector<Vec> whole;
    for (int i = 0; i < dim; ++i) {
        Vec v(dim);
        v[i] = Scalar(1);
        whole.push_back(std::move(v));
    }
    Subspace full = Subspace::span(whole, dim);
    Subspace derived = derived_ideal(L, full);
    if (derived.dim() == 0)
        return Report::fail({"simple", {}, {}, "derived ideal L^1 is zero (abelian)"});
    std::vector<Vec> probes = whole;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Vec v(dim);
            v[i] = Scalar(1);
            v[j] = Scalar(1);
            probes.push_back(std::move(v));
        }
    for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        Subspace closure = ideal_closure(L, probes[pi]);
        if (closure.dim() != static_cast<std::size_t>(dim)) {
            return Report::fail({"simple", {static_cast<int>(pi + 1)}, probes[pi],
                                 "probe vector generates a proper nonzero ideal of dim " +
                                     std::to_string(closure.dim())});
        }
    }
    return Report::ok();
}

NLieAlgebra make_Vn(int n, Field field) {
    if (n < 2) throw std::invalid_argument("make_Vn: arity must be >= 2");
    NLieAlgebra L(n, n + 1, field);
    for (int i = 1; i <= n + 1; ++i) {
        std::vector<int> idx;
        for (int j = 1; j <= n + 1; ++j)
            if (j != i) idx.push_back(j - 1);
        Vec v(n + 1);
        v[i - 1] = (n + 1 + i) % 2 == 0 ? field(1) : field(-1);
        L.set_bracket(std::move(idx), std::move(v));
    }
    return L;
}

NLieAlgebra make_filiform5(Field field) {
    NLieAlgebra L(3, 5, field);
    auto unit = [&](int i) {
        Vec v(5);
        v[i] = field(1);
        return v;
    };
    L.set_bracket({0, 1, 2}, unit(3));
    L.set_bracket({0, 1, 3}, unit(4));
    L.set_bracket({0, 2, 3}, unit(4));
    L.set_bracket({1, 2, 3}, unit(4));
    return L;
}

NLieAlgebra central_ext_trivial(const NLieAlgebra& L) {
    NLieAlgebra ext(L.arity(), L.dim() + 1, L.field());
    for (const auto& [idx, val] : L.table()) {
        Vec v = val;
        v.push_back(Scalar(0));
        ext.set_bracket(idx, std::move(v));
    }
    return ext;
}

NLieAlgebra make_abelian(int dim, int arity, Field field) {
    return NLieAlgebra(arity, dim, field);
}

NLieAlgebra free_nilpotent_weight2(int m, int arity, Field field) {
    if (m < arity) throw std::invalid_argument("free_nilpotent_weight2: needs m >= n");
    auto subsets = increasing_tuples(m, arity);
    int dim = m + static_cast<int>(subsets.size());
    NLieAlgebra L(arity, dim, field);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        Vec v(dim);
        v[m + s] = field(1);
        L.set_bracket(subsets[s], std::move(v));
    }
    return L;
}

NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("direct_sum: arity mismatch");
    if (a.field() != b.field()) throw std::invalid_argument("direct_sum: field mismatch");
    NLieAlgebra L(a.arity(), a.dim() + b.dim(), a.field());
    for (const auto& [idx, val] : a.table()) {
        Vec v = val;
        v.resize(a.dim() + b.dim());
        L.set_bracket(idx, std::move(v));
    }
    for (const auto& [idx, val] : b.table()) {
        std::vector<int> shifted = idx;
        for (int& i : shifted) i += a.dim();
        Vec v(a.dim() + b.dim());
        for (int i = 0; i < b.dim(); ++i) v[a.dim() + i] = val[i];
        L.set_bracket(std::move(shifted), std::move(v));
    }
    return L;
}

}  // namespace nlie
