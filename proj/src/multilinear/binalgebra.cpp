#include "multilinear/binalgebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nlie/format.hpp"

namespace multilinear {

BinAlgebra::BinAlgebra(int d, Field f) : dim(d), field(f), prod(static_cast<std::size_t>(d) * d) {}

void BinAlgebra::set(int i, int j, const Vec& value) {
    auto& cell = prod[i * dim + j];
    cell.clear();
    for (int k = 0; k < dim; ++k)
        if (!value[k].is_zero()) cell.emplace_back(k, value[k]);
}

Vec BinAlgebra::product_vec(int i, int j) const {
    Vec v(dim);
    for (const auto& [k, c] : at(i, j)) v[k] = c;
    return v;
}

Vec BinAlgebra::product(const Vec& x, const Vec& y) const {
    if (x.size() != static_cast<std::size_t>(dim) || y.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("BinAlgebra::product: length mismatch");
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            for (const auto& [k, c] : at(i, j)) out[k] += x[i] * y[j] * c;
        }
    }
    return out;
}

Matrix BinAlgebra::left_mult(int i) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& [k, c] : at(i, j)) m.at(k, j) = c;
    return m;
}

Matrix BinAlgebra::right_mult_mat(int i) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& [k, c] : at(j, i)) m.at(k, j) = c;
    return m;
}

namespace {

/// ad matrix of a tensor basis element (may be zero).
Matrix ad_tensor_basis(const AdContext& ctx, std::size_t r) {
    const int dim = ctx.algebra().dim();
    const auto& red = ctx.tensor_reduction(r);
    if (!red) return Matrix(dim, dim);
    auto [sign, w] = *red;
    if (sign == 1) return ctx.ad_wedge(w);
    return Matrix(dim, dim) - ctx.ad_wedge(w);
}

/// Sparse derivation extension of the matrix a onto tensor basis index r.
std::vector<std::pair<int, Scalar>> extend_on_tensor_basis(const AdContext& ctx, const Matrix& a,
                                                           std::size_t r) {
    const TensorSpace& ts = ctx.tensor_space();
    std::map<std::size_t, Scalar> acc;
    std::vector<int> idx = ts.unrank(r);
    for (int s = 0; s < ts.slots; ++s) {
        int orig = idx[s];
        for (int k = 0; k < ts.dim; ++k) {
            if (a.at(k, orig).is_zero()) continue;
            idx[s] = k;
            acc[ts.rank(idx)] += a.at(k, orig);
        }
        idx[s] = orig;
    }
    std::vector<std::pair<int, Scalar>> out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.emplace_back(static_cast<int>(k), c);
    return out;
}

/// Sparse derivation extension of a onto wedge basis index w.
std::vector<std::pair<int, Scalar>> extend_on_wedge_basis(const AdContext& ctx, const Matrix& a,
                                                          std::size_t w) {
    const WedgeSpace& ws = ctx.wedge_space();
    std::map<std::size_t, Scalar> acc;
    std::vector<int> idx = ws.tuples[w];
    for (int s = 0; s < ws.slots; ++s) {
        int orig = idx[s];
        for (int k = 0; k < ws.dim; ++k) {
            if (a.at(k, orig).is_zero()) continue;
            idx[s] = k;
            auto red = ws.reduce(idx);
            if (red) acc[red->second] += red->first == 1 ? a.at(k, orig) : -a.at(k, orig);
            idx[s] = orig;
        }
        idx[s] = orig;
    }
    std::vector<std::pair<int, Scalar>> out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.emplace_back(static_cast<int>(k), c);
    return out;
}

/// Asserts that S is a two-sided bracket ideal of the tensor-power Leibniz
/// algebra, which is what quotienting the bracket by S requires.
void assert_bracket_ideal(const AdContext& ctx, const Subspace& S,
                          const std::string& what) {
    int bi = 0;
    for (const Vec& s : S.basis()) {
        Matrix ad_s = ctx.ad_of(TensorElt{s});
        const TensorSpace& ts = ctx.tensor_space();
        for (std::size_t r = 0; r < ts.size(); ++r) {
            // [s, e_r]
            if (!ad_s.is_zero()) {
                Vec v(ts.size());
                for (const auto& [k, c] : extend_on_tensor_basis(ctx, ad_s, r)) v[k] = c;
                if (!S.member(v))
                    throw QuotientError(
                        what + ": quotient bracket not well defined",
                        {what, {bi + 1, static_cast<int>(r + 1)}, S.reduce(v),
                         "[subspace basis " + std::to_string(bi + 1) + ", " + ts.label(r) +
                             "] leaves the subspace"});
            }
            // [e_r, s]
            Matrix ad_r = ad_tensor_basis(ctx, r);
            if (ad_r.is_zero()) continue;
            TensorElt img = ctx.extend(ad_r, TensorElt{s});
            if (!S.member(img.c))
                throw QuotientError(what + ": quotient bracket not well defined",
                                    {what, {static_cast<int>(r + 1), bi + 1}, S.reduce(img.c),
                                     "[" + ts.label(r) + ", subspace basis " +
                                         std::to_string(bi + 1) + "] leaves the subspace"});
        }
        ++bi;
    }
}

}  // namespace

BinAlgebra basic_leibniz_tensor(const NLieAlgebra& L) {
    AdContext ctx(L);
    const TensorSpace& ts = ctx.tensor_space();
    BinAlgebra A(static_cast<int>(ts.size()), L.field());
    for (std::size_t r = 0; r < ts.size(); ++r) A.labels.push_back(ts.label(r));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!ctx.tensor_reduction(i)) continue;  // ad of a repeated-factor tensor is zero
        Matrix a = ad_tensor_basis(ctx, i);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < ts.size(); ++j)
            A.prod[i * A.dim + j] = extend_on_tensor_basis(ctx, a, j);
    }
    return A;
}

BinAlgebra basic_leibniz_wedge(const NLieAlgebra& L) {
    AdContext ctx(L);
    const WedgeSpace& ws = ctx.wedge_space();
    assert_bracket_ideal(ctx, subspace_W(L), "basic_leibniz_wedge");
    BinAlgebra A(static_cast<int>(ws.size()), L.field());
    for (std::size_t w = 0; w < ws.size(); ++w) A.labels.push_back(ws.label(w));
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ctx.ad_wedge_is_zero(i)) continue;
        for (std::size_t j = 0; j < ws.size(); ++j)
            A.prod[i * A.dim + j] = extend_on_wedge_basis(ctx, ctx.ad_wedge(i), j);
    }
    return A;
}

BinAlgebra basic_lie(const NLieAlgebra& L) {
    AdContext ctx(L);
    const TensorSpace& ts = ctx.tensor_space();
    Subspace K = kernel_K(L);
    assert_bracket_ideal(ctx, K, "basic_lie");
    std::vector<std::size_t> reps = K.nonpivots();
    BinAlgebra A(static_cast<int>(reps.size()), L.field());
    for (std::size_t r : reps) A.labels.push_back(ts.label(r));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        Matrix a = ad_tensor_basis(ctx, reps[i]);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < reps.size(); ++j) {
            Vec v(ts.size());
            for (const auto& [k, c] : extend_on_tensor_basis(ctx, a, reps[j])) v[k] = c;
            Vec residual = K.reduce(v);
            Vec coords(reps.size());
            for (std::size_t q = 0; q < reps.size(); ++q) coords[q] = residual[reps[q]];
            A.set(static_cast<int>(i), static_cast<int>(j), coords);
        }
    }
    return A;
}

BinAlgebra circle_algebra(const NLieAlgebra& L) {
    if (L.field().characteristic() == 2)
        throw std::invalid_argument("circle_algebra: characteristic-2 field rejected");
    AdContext ctx(L);
    const WedgeSpace& ws = ctx.wedge_space();
    BinAlgebra A(static_cast<int>(ws.size()), L.field());
    for (std::size_t w = 0; w < ws.size(); ++w) A.labels.push_back(ws.label(w));
    Scalar half(1, 2);
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) {
            std::map<int, Scalar> acc;
            if (!ctx.ad_wedge_is_zero(i))
                for (const auto& [k, c] : extend_on_wedge_basis(ctx, ctx.ad_wedge(i), j)) acc[k] += half * c;
            if (!ctx.ad_wedge_is_zero(j))
                for (const auto& [k, c] : extend_on_wedge_basis(ctx, ctx.ad_wedge(j), i)) acc[k] -= half * c;
            auto& cell = A.prod[i * A.dim + j];
            for (auto& [k, c] : acc)
                if (!c.is_zero()) cell.emplace_back(k, c);
        }
    return A;
}

namespace {

std::string triple_label(const BinAlgebra& A, int i, int j, int k) {
    return "(" + A.labels[i] + ", " + A.labels[j] + ", " + A.labels[k] + ")";
}

}  // namespace

Report is_skew(const BinAlgebra& A) {
    for (int i = 0; i < A.dim; ++i)
        for (int j = i; j < A.dim; ++j) {
            Vec r = exactlin::vec_add(A.product_vec(i, j), A.product_vec(j, i));
            if (i == j) r = A.product_vec(i, i);
            if (!exactlin::vec_is_zero(r)) {
                std::string lbl = A.labels.empty() ? "" : " at (" + A.labels[i] + ", " + A.labels[j] + ")";
                return Report::fail({"skew", {i + 1, j + 1}, r, "product is not skew-symmetric" + lbl});
            }
        }
    return Report::ok();
}

Report check_jacobi(const BinAlgebra& A) {
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const auto& pij = A.at(i, j);
            for (int k = 0; k < A.dim; ++k) {
                const auto& pjk = A.at(j, k);
                const auto& pki = A.at(k, i);
                if (pij.empty() && pjk.empty() && pki.empty()) continue;
                std::map<int, Scalar> acc;
                for (const auto& [t, c] : pij)
                    for (const auto& [u, d] : A.at(t, k)) acc[u] += c * d;
                for (const auto& [t, c] : pjk)
                    for (const auto& [u, d] : A.at(t, i)) acc[u] += c * d;
                for (const auto& [t, c] : pki)
                    for (const auto& [u, d] : A.at(t, j)) acc[u] += c * d;
                bool zero = true;
                for (auto& [u, c] : acc)
                    if (!c.is_zero()) {
                        zero = false;
                        break;
                    }
                if (!zero) {
                    Vec residual(A.dim);
                    for (auto& [u, c] : acc) residual[u] = c;
                    return Report::fail({"jacobi", {i + 1, j + 1, k + 1}, residual,
                                         "Jacobi fails at " + triple_label(A, i, j, k)});
                }
            }
        }
    return Report::ok();
}

Report check_leibniz(const BinAlgebra& A) {
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const auto& pij = A.at(i, j);
            for (int k = 0; k < A.dim; ++k) {
                const auto& pjk = A.at(j, k);
                const auto& pik = A.at(i, k);
                if (pij.empty() && pjk.empty() && pik.empty()) continue;
                std::map<int, Scalar> acc;
                for (const auto& [t, c] : pjk)  // [i, [j,k]]
                    for (const auto& [u, d] : A.at(i, t)) acc[u] += c * d;
                for (const auto& [t, c] : pij)  // -[[i,j], k]
                    for (const auto& [u, d] : A.at(t, k)) acc[u] -= c * d;
                for (const auto& [t, c] : pik)  // -[j, [i,k]]
                    for (const auto& [u, d] : A.at(j, t)) acc[u] -= c * d;
                bool zero = true;
                for (auto& [u, c] : acc)
                    if (!c.is_zero()) {
                        zero = false;
                        break;
                    }
                if (!zero) {
                    Vec residual(A.dim);
                    for (auto& [u, c] : acc) residual[u] = c;
                    return Report::fail({"leibniz", {i + 1, j + 1, k + 1}, residual,
                                         "Leibniz identity fails at " + triple_label(A, i, j, k)});
                }
            }
        }
    return Report::ok();
}

Matrix killing_form(const BinAlgebra& A) {
    if (!is_skew(A).passed || !check_jacobi(A).passed)
        throw std::invalid_argument("killing_form: the product is not a Lie bracket");
    std::vector<Matrix> lm;
    for (int i = 0; i < A.dim; ++i) lm.push_back(A.left_mult(i));
    Matrix k(A.dim, A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = i; j < A.dim; ++j) {
            Scalar t = (lm[i] * lm[j]).trace();
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return k;
}

Subspace binalg_centre(const BinAlgebra& A) {
    if (A.dim == 0) return Subspace(0);
    Matrix stacked(static_cast<std::size_t>(A.dim) * A.dim * 2, A.dim);
    std::size_t r0 = 0;
    for (int i = 0; i < A.dim; ++i) {
        Matrix l = A.left_mult(i), r = A.right_mult_mat(i);
        for (int a = 0; a < A.dim; ++a)
            for (int b = 0; b < A.dim; ++b) {
                stacked.at(r0 + a, b) = r.at(a, b);              // x * e_i
                stacked.at(r0 + A.dim + a, b) = l.at(a, b);      // e_i * x
            }
        r0 += 2 * static_cast<std::size_t>(A.dim);
    }
    return Subspace::span(exactlin::nullspace(stacked), A.dim);
}

InnderIso innder_iso_check(const NLieAlgebra& L) {
    InnderIso out;
    Subspace K = kernel_K(L);
    Subspace W = subspace_W(L);
    out.k_dim = K.dim();
    out.w_dim = W.dim();
    out.k_eq_w = K.equal(W);

    WedgeSpace ws = WedgeSpace::of(L);
    out.wedge_dim = ws.size();
    const std::size_t d2 = static_cast<std::size_t>(L.dim()) * L.dim();
    Matrix m(d2, ws.size());
    for (std::size_t w = 0; w < ws.size(); ++w) {
        Vec flat = nlie::ad(L, ws.tuples[w]).flatten();
        for (std::size_t i = 0; i < d2; ++i) m.at(i, w) = flat[i];
    }
    std::size_t r = exactlin::rank(m);
    out.innder_dim = r;
    out.bijective = r == ws.size();

    if (out.consistent()) {
        out.report = Report::ok();
        out.report.witness.reset();
    } else {
        out.report = Report::fail({"innder-iso",
                                   {},
                                   {},
                                   "K = W is " + std::string(out.k_eq_w ? "true" : "false") +
                                       " but bijectivity of the ad map is " +
                                       std::string(out.bijective ? "true" : "false")});
    }
    return out;
}

std::string serialize_binalgebra(const BinAlgebra& A) {
    std::ostringstream out;
    out << "n = 2\n";
    out << "dim = " << A.dim << "\n";
    out << "field = " << A.field.str() << "\n";
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const auto& cell = A.at(i, j);
            if (cell.empty()) continue;
            out << "[" << i + 1 << "," << j + 1 << "] = ";
            bool first = true;
            for (const auto& [k, c] : cell) {
                if (!first) out << " + ";
                out << c.str() << "*x" << k + 1;
                first = false;
            }
            out << "\n";
        }
    return out.str();
}

BinAlgebra parse_binalgebra(std::string_view text) {
    // reuse the n-Lie parser line discipline via a small local pass
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    int dim = -1;
    Field field = Field::Q();
    BinAlgebra A;
    bool have_n = false;
    std::size_t lineno = 0;
    for (const std::string& raw : lines) {
        ++lineno;
        std::string s = raw;
        while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.pop_back();
        std::size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        s = s.substr(b);
        if (s[0] == '#') continue;
        if (!have_n) {
            if (s.rfind("n", 0) != 0) throw nlie::FormatError(lineno, "expected 'n = 2'");
            if (s.find('2') == std::string::npos)
                throw nlie::FormatError(lineno, "binary algebra files must declare n = 2");
            have_n = true;
            continue;
        }
        if (dim < 0) {
            auto eq = s.find('=');
            if (s.rfind("dim", 0) != 0 || eq == std::string::npos)
                throw nlie::FormatError(lineno, "expected 'dim = <int>'");
            dim = std::stoi(s.substr(eq + 1));
            A = BinAlgebra(dim, field);
            continue;
        }
        if (s.rfind("field", 0) == 0) {
            auto eq = s.find('=');
            std::string v = s.substr(eq + 1);
            std::size_t vb = v.find_first_not_of(" \t");
            v = v.substr(vb == std::string::npos ? v.size() : vb);
            if (v == "Q")
                field = Field::Q();
            else if (v.rfind("Fp:", 0) == 0)
                field = Field::Fp(std::stoull(v.substr(3)));
            else
                throw nlie::FormatError(lineno, "field must be Q or Fp:<prime>");
            A.field = field;
            continue;
        }
        if (s[0] != '[') throw nlie::FormatError(lineno, "expected product line '[i,j] = ...'");
        auto close = s.find(']');
        auto comma = s.find(',');
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw nlie::FormatError(lineno, "malformed pair");
        int i = std::stoi(s.substr(1, comma - 1)) - 1;
        int j = std::stoi(s.substr(comma + 1, close - comma - 1)) - 1;
        if (i < 0 || j < 0 || i >= dim || j >= dim)
            throw nlie::FormatError(lineno, "index out of range in product key");
        if (!A.at(i, j).empty()) throw nlie::FormatError(lineno, "repeated product key");
        auto eq = s.find('=', close);
        if (eq == std::string::npos) throw nlie::FormatError(lineno, "missing '='");
        Vec value(dim);
        std::string rhs = s.substr(eq + 1);
        std::size_t start = 0;
        for (std::size_t p = 0; p <= rhs.size(); ++p) {
            if (p != rhs.size() && rhs[p] != '+') continue;
            std::string term = rhs.substr(start, p - start);
            start = p + 1;
            std::size_t tb = term.find_first_not_of(" \t");
            if (tb == std::string::npos) throw nlie::FormatError(lineno, "empty term");
            std::size_t te = term.find_last_not_of(" \t");
            term = term.substr(tb, te - tb + 1);
            auto star = term.find('*');
            if (star == std::string::npos || star + 2 > term.size() || term[star + 1] != 'x')
                throw nlie::FormatError(lineno, "term must look like <coeff>*x<k>");
            int k = std::stoi(term.substr(star + 2)) - 1;
            if (k < 0 || k >= dim) throw nlie::FormatError(lineno, "index out of range");
            try {
                value[k] += field.parse(term.substr(0, star));
            } catch (const std::exception& e) {
                throw nlie::FormatError(lineno, std::string("non-field scalar literal: ") + e.what());
            }
        }
        A.set(i, j, value);
    }
    if (!have_n || dim < 0) throw nlie::FormatError(lineno, "missing n/dim header");
    return A;
}

}  // namespace multilinear
