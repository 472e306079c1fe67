#include "multilinear/calculus.hpp"

#include <stdexcept>

namespace multilinear {

Matrix ad_of_tensor(const NLieAlgebra& L, const TensorElt& x) {
    TensorSpace ts = TensorSpace::of(L);
    if (x.c.size() != ts.size()) throw std::invalid_argument("ad_of_tensor: length mismatch");
    Matrix m(L.dim(), L.dim());
    for (std::size_t r = 0; r < ts.size(); ++r) {
        if (x.c[r].is_zero()) continue;
        Matrix a = nlie::ad(L, ts.unrank(r));
        for (int i = 0; i < L.dim(); ++i)
            for (int j = 0; j < L.dim(); ++j)
                if (!a.at(i, j).is_zero()) m.at(i, j) += x.c[r] * a.at(i, j);
    }
    return m;
}

Matrix ad_of_wedge(const NLieAlgebra& L, const WedgeElt& x) {
    WedgeSpace ws = WedgeSpace::of(L);
    if (x.c.size() != ws.size()) throw std::invalid_argument("ad_of_wedge: length mismatch");
    Matrix m(L.dim(), L.dim());
    for (std::size_t r = 0; r < ws.size(); ++r) {
        if (x.c[r].is_zero()) continue;
        Matrix a = nlie::ad(L, ws.tuples[r]);
        for (int i = 0; i < L.dim(); ++i)
            for (int j = 0; j < L.dim(); ++j)
                if (!a.at(i, j).is_zero()) m.at(i, j) += x.c[r] * a.at(i, j);
    }
    return m;
}

TensorElt derivation_extend(const NLieAlgebra& L, const Matrix& d, const TensorElt& t) {
    TensorSpace ts = TensorSpace::of(L);
    if (t.c.size() != ts.size()) throw std::invalid_argument("derivation_extend: length mismatch");
    if (d.rows() != static_cast<std::size_t>(L.dim()) || d.cols() != d.rows())
       throw std::invalid_argument("derivation_extend: matrix shape mismatch");
    TensorElt out = TensorElt::zero(ts);
    for (std::size_t r = 0; r < ts.size(); ++r) {
        if (t.c[r].is_zero()) continue;
        std::vector<int> idx = ts.unrank(r);
        for (int s = 0; s < ts.slots; ++s) {
            int orig = idx[s];
            for (int k = 0; k < L.dim(); ++k) {
                if (d.at(k, orig).is_zero()) continue;
                idx[s] = k;
                out.c[ts.rank(idx)] += t.c[r] * d.at(k, orig);
            }
            idx[s] = orig;
        }
    }
    return out;
}

WedgeElt derivation_extend(const NLieAlgebra& L, const Matrix& d, const WedgeElt& t) {
    WedgeSpace ws = WedgeSpace::of(L);
    if (t.c.size() != ws.size()) throw std::invalid_argument("derivation_extend: length mismatch");
    if (d.rows() != static_cast<std::size_t>(L.dim()) || d.cols() != d.rows())
        throw std::invalid_argument("derivation_extend: matrix shape mismatch");
    WedgeElt out = WedgeElt::zero(ws);
    for (std::size_t r = 0; r < ws.size(); ++r) {
        if (t.c[r].is_zero()) continue;
        std::vector<int> idx = ws.tuples[r];
        for (int s = 0; s < ws.slots; ++s) {
            int orig = idx[s];
            for (int k = 0; k < L.dim(); ++k) {
                if (d.at(k, orig).is_zero()) continue;
                idx[s] = k;
                auto red = ws.reduce(idx);
                if (red) {
                    Scalar c = t.c[r] * d.at(k, orig);
                    out.c[red->second] += red->first == 1 ? c : -c;
                }
            }
            idx[s] = orig;
        }
    }
    return out;
}

TensorElt ad_extend(const NLieAlgebra& L, const TensorElt& x, const TensorElt& t) {
    return derivation_extend(L, ad_of_tensor(L, x), t);
}

WedgeElt ad_extend(const NLieAlgebra& L, const WedgeElt& x, const WedgeElt& t) {
    return derivation_extend(L, ad_of_wedge(L, x), t);
}

TensorElt leibniz_bracket(const NLieAlgebra& L, const TensorElt& x, const TensorElt& y) {
    return ad_extend(L, x, y);
}

WedgeElt leibniz_bracket(const NLieAlgebra& L, const WedgeElt& x, const WedgeElt& y) {
    return ad_extend(L, x, y);
}

namespace {

void reject_char2(const NLieAlgebra& L, const char* where) {
    if (L.field().characteristic() == 2)
        throw std::invalid_argument(std::string(where) + ": characteristic-2 field rejected");
}

}  // namespace

TensorElt circle(const NLieAlgebra& L, const TensorElt& x, const TensorElt& y) {
    reject_char2(L, "circle");
    Scalar half(1, 2);
    return half * (ad_extend(L, x, y) - ad_extend(L, y, x));
}

WedgeElt circle(const NLieAlgebra& L, const WedgeElt& x, const WedgeElt& y) {
    reject_char2(L, "circle");
    Scalar half(1, 2);
    return half * (ad_extend(L, x, y) - ad_extend(L, y, x));
}

WedgeElt jacobiator(const NLieAlgebra& L, const WedgeElt& a, const WedgeElt& b, const WedgeElt& c) {
    return circle(L, a, circle(L, b, c)) + circle(L, c, circle(L, a, b)) +
           circle(L, b, circle(L, c, a));
}

Report check_dagger(const NLieAlgebra& L, const WedgeElt& a, const WedgeElt& b, const WedgeElt& c) {
    reject_char2(L, "check_dagger");
    WedgeElt lhs = jacobiator(L, a, b, c);
    auto comm = [&](const WedgeElt& u, const WedgeElt& v, const WedgeElt& target) {
        return ad_extend(L, u, ad_extend(L, v, target)) - ad_extend(L, v, ad_extend(L, u, target));
    };
    WedgeElt sum = comm(b, c, a) + comm(a, b, c) + comm(c, a, b);
    WedgeElt rhs = Scalar(-1, 4) * sum;
    WedgeElt residual = lhs - rhs;
    if (residual.is_zero()) return Report::ok();
    return Report::fail({"dagger", {}, residual.c,
                         "J(a,b,c) + 1/4([ad_b,ad_c](a)+[ad_a,ad_b](c)+[ad_c,ad_a](b)) != 0"});
}

AdContext::AdContext(const NLieAlgebra& L)
    : L_(&L), ts_(TensorSpace::of(L)), ws_(WedgeSpace::of(L)) {
    ad_wedge_.reserve(ws_.size());
    ad_zero_.reserve(ws_.size());
    for (std::size_t w = 0; w < ws_.size(); ++w) {
        ad_wedge_.push_back(nlie::ad(L, ws_.tuples[w]));
        ad_zero_.push_back(ad_wedge_.back().is_zero() ? 1 : 0);
    }
    red_.resize(ts_.size());
    for (std::size_t r = 0; r < ts_.size(); ++r) red_[r] = ws_.reduce(ts_.unrank(r));
}

Matrix AdContext::ad_of(const WedgeElt& x) const {
    if (x.c.size() != ws_.size()) throw std::invalid_argument("AdContext::ad_of: length mismatch");
    Matrix m(L_->dim(), L_->dim());
    for (std::size_t w = 0; w < ws_.size(); ++w) {
        if (x.c[w].is_zero() || ad_zero_[w]) continue;
        const Matrix& a = ad_wedge_[w];
        for (int i = 0; i < L_->dim(); ++i)
            for (int j = 0; j < L_->dim(); ++j)
                if (!a.at(i, j).is_zero()) m.at(i, j) += x.c[w] * a.at(i, j);
    }
    return m;
}

Matrix AdContext::ad_of(const TensorElt& x) const {
    if (x.c.size() != ts_.size()) throw std::invalid_argument("AdContext::ad_of: length mismatch");
    Matrix m(L_->dim(), L_->dim());
    for (std::size_t r = 0; r < ts_.size(); ++r) {
        if (x.c[r].is_zero() || !red_[r]) continue;
        auto [sign, w] = *red_[r];
        if (ad_zero_[w]) continue;
        const Matrix& a = ad_wedge_[w];
        Scalar c = sign == 1 ? x.c[r] : -x.c[r];
        for (int i = 0; i < L_->dim(); ++i)
            for (int j = 0; j < L_->dim(); ++j)
                if (!a.at(i, j).is_zero()) m.at(i, j) += c * a.at(i, j);
    }
    return m;
}

WedgeElt AdContext::extend(const Matrix& d, const WedgeElt& t) const {
    WedgeElt out = WedgeElt::zero(ws_);
    for (std::size_t r = 0; r < ws_.size(); ++r) {
        if (t.c[r].is_zero()) continue;
        std::vector<int> idx = ws_.tuples[r];
        for (int s = 0; s < ws_.slots; ++s) {
            int orig = idx[s];
            for (int k = 0; k < ws_.dim; ++k) {
                if (d.at(k, orig).is_zero()) continue;
                idx[s] = k;
                auto red = ws_.reduce(idx);
                idx[s] = orig;
                if (!red) continue;
                Scalar c = t.c[r] * d.at(k, orig);
                out.c[red->second] += red->first == 1 ? c : -c;
            }
        }
    }
    return out;
}

TensorElt AdContext::extend(const Matrix& d, const TensorElt& t) const {
    TensorElt out = TensorElt::zero(ts_);
    for (std::size_t r = 0; r < ts_.size(); ++r) {
        if (t.c[r].is_zero()) continue;
        std::vector<int> idx = ts_.unrank(r);
        for (int s = 0; s < ts_.slots; ++s) {
            int orig = idx[s];
            for (int k = 0; k < ts_.dim; ++k) {
                if (d.at(k, orig).is_zero()) continue;
                idx[s] = k;
                out.c[ts_.rank(idx)] += t.c[r] * d.at(k, orig);
            }
            idx[s] = orig;
        }
    }
    return out;
}

WedgeElt AdContext::ad_extend(const WedgeElt& x, const WedgeElt& t) const {
    return extend(ad_of(x), t);
}

WedgeElt AdContext::circle(const WedgeElt& x, const WedgeElt& y) const {
    if (L_->field().characteristic() == 2)
        throw std::invalid_argument("circle: characteristic-2 field rejected");
    Scalar half(1, 2);
    return half * (ad_extend(x, y) - ad_extend(y, x));
}

WedgeElt AdContext::jacobiator(const WedgeElt& a, const WedgeElt& b, const WedgeElt& c) const {
    return circle(a, circle(b, c)) + circle(c, circle(a, b)) + circle(b, circle(c, a));
}

Report AdContext::check_dagger(const WedgeElt& a, const WedgeElt& b, const WedgeElt& c) const {
    WedgeElt lhs = jacobiator(a, b, c);
    Matrix ad_a = ad_of(a), ad_b = ad_of(b), ad_c = ad_of(c);
    auto comm = [&](const Matrix& u, const Matrix& v, const WedgeElt& target) {
        return extend(u, extend(v, target)) - extend(v, extend(u, target));
    };
    WedgeElt sum = comm(ad_b, ad_c, a) + comm(ad_a, ad_b, c) + comm(ad_c, ad_a, b);
    WedgeElt residual = lhs - Scalar(-1, 4) * sum;
    if (residual.is_zero()) return Report::ok();
    return Report::fail({"dagger", {}, residual.c,
                         "J(a,b,c) + 1/4([ad_b,ad_c](a)+[ad_a,ad_b](c)+[ad_c,ad_a](b)) != 0"});
}

Subspace kernel_K(const NLieAlgebra& L) {
    TensorSpace ts = TensorSpace::of(L);
    const std::size_t d2 = static_cast<std::size_t>(L.dim()) * L.dim();
    Matrix m(d2, ts.size());
    for (std::size_t r = 0; r < ts.size(); ++r) {
        Vec flat = nlie::ad(L, ts.unrank(r)).flatten();
        for (std::size_t i = 0; i < d2; ++i) m.at(i, r) = flat[i];
    }
    return Subspace::span(exactlin::nullspace(m), ts.size());
}

Subspace subspace_W(const NLieAlgebra& L) {
    TensorSpace ts = TensorSpace::of(L);
    return Subspace::span(exactlin::nullspace(wedge_projection_matrix(L)), ts.size());
}

}  // namespace multilinear
