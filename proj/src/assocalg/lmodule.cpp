#include "assocalg/lmodule.hpp"

#include <sstream>
#include <stdexcept>

#include "nlie/format.hpp"

namespace assocalg {

using multilinear::WedgeSpace;

LModule LModule::trivial(const NLieAlgebra& L) {
    WedgeSpace ws = WedgeSpace::of(L);
    LModule M;
    M.mdim = 1;
    M.action.assign(ws.size(), std::vector<Vec>(1, Vec(1)));
    return M;
}

LModule LModule::self_action(const NLieAlgebra& L) {
    WedgeSpace ws = WedgeSpace::of(L);
    LModule M;
    M.mdim = L.dim();
    M.action.assign(ws.size(), std::vector<Vec>(L.dim()));
    for (std::size_t w = 0; w < ws.size(); ++w) {
        Matrix a = nlie::ad(L, ws.tuples[w]);
        for (int j = 0; j < L.dim(); ++j) M.action[w][j] = a.col(j);
    }
    return M;
}

Matrix LModule::action_matrix(std::size_t wedge_rank) const {
    Matrix m(mdim, mdim);
    for (int j = 0; j < mdim; ++j)
        for (int i = 0; i < mdim; ++i) m.at(i, j) = action[wedge_rank][j][i];
    return m;
}

Vec LModule::act_tuple(const WedgeSpace& ws, std::vector<int> tuple, const Vec& m) const {
    Vec out(mdim);
    auto red = ws.reduce(std::move(tuple));
    if (!red) return out;
    auto [sign, w] = *red;
    for (int j = 0; j < mdim; ++j) {
        if (m[j].is_zero()) continue;
        Scalar c = sign == 1 ? m[j] : -m[j];
        exactlin::vec_axpy(out, c, action[w][j]);
    }
    return out;
}

namespace {

Vec act_rank(const LModule& M, std::size_t w, const Vec& m) {
    Vec out(M.mdim);
    for (int j = 0; j < M.mdim; ++j)
        if (!m[j].is_zero()) exactlin::vec_axpy(out, m[j], M.action[w][j]);
    return out;
}

bool action_is_zero(const LModule& M, std::size_t w) {
    for (const Vec& col : M.action[w])
        if (!exactlin::vec_is_zero(col)) return false;
    return true;
}

std::vector<int> to_1based(const std::vector<int>& t) {
    std::vector<int> r = t;
    for (int& v : r) ++v;
    return r;
}

}  // namespace

Report check_module_axioms(const NLieAlgebra& L, const LModule& M) {
    WedgeSpace ws = WedgeSpace::of(L);
    if (M.action.size() != ws.size())
        throw std::invalid_argument("check_module_axioms: action table shape mismatch");
    const int n = L.arity();

    // identity 1: [x, [y, m]] - [y, [x, m]] = sum_i [y1, ..., [x, y_i], ..., y_{n-1}, m]
    for (std::size_t xw = 0; xw < ws.size(); ++xw) {
        Matrix adx = nlie::ad(L, ws.tuples[xw]);
        bool x_inactive = action_is_zero(M, xw) && adx.is_zero();
        if (x_inactive) continue;  // every term of the identity carries x
        for (std::size_t yw = 0; yw < ws.size(); ++yw) {
            const auto& y = ws.tuples[yw];
            for (int j = 0; j < M.mdim; ++j) {
                Vec m(M.mdim);
                m[j] = Scalar(1);
                Vec lhs = exactlin::vec_sub(act_rank(M, xw, act_rank(M, yw, m)),
                                            act_rank(M, yw, act_rank(M, xw, m)));
                Vec rhs(M.mdim);
                for (int i = 0; i < n - 1; ++i) {
                    Vec bracket = adx.col(y[i]);  // [x1, ..., x_{n-1}, y_i]
                    for (int k = 0; k < L.dim(); ++k) {
                        if (bracket[k].is_zero()) continue;
                        std::vector<int> t = y;
                        t[i] = k;
                        Vec term = M.act_tuple(ws, std::move(t), m);
                        exactlin::vec_axpy(rhs, bracket[k], term);
                    }
                }
                Vec residual = exactlin::vec_sub(lhs, rhs);
                if (!exactlin::vec_is_zero(residual)) {
                    std::vector<int> where = to_1based(ws.tuples[xw]);
                    for (int v : to_1based(y)) where.push_back(v);
                    where.push_back(j + 1);
                    return Report::fail({"module-axiom-1", where, residual,
                                         "first module identity fails at (x-wedge, y-wedge, m)"});
                }
            }
        }
    }

    // identity 2: [[x1..xn], y2, ..., y_{n-1}, m]
    //           = sum_i (-1)^{n-i} [x1, ..., ^x_i, ..., xn, [x_i, y2, ..., y_{n-1}, m]]
    auto xsets = nlie::increasing_tuples(L.dim(), n);
    auto ysets = nlie::increasing_tuples(L.dim(), n - 2);
    for (const auto& x : xsets) {
        Vec bx = L.bracket_basis(x);
        for (const auto& y : ysets) {
            for (int j = 0; j < M.mdim; ++j) {
                Vec m(M.mdim);
                m[j] = Scalar(1);
                Vec lhs(M.mdim);
                for (int k = 0; k < L.dim(); ++k) {
                    if (bx[k].is_zero()) continue;
                    std::vector<int> t = {k};
                    t.insert(t.end(), y.begin(), y.end());
                    exactlin::vec_axpy(lhs, bx[k], M.act_tuple(ws, std::move(t), m));
                }
                Vec rhs(M.mdim);
                for (int i = 0; i < n; ++i) {
                    std::vector<int> inner = {x[i]};
                    inner.insert(inner.end(), y.begin(), y.end());
                    Vec mid = M.act_tuple(ws, std::move(inner), m);
                    if (exactlin::vec_is_zero(mid)) continue;
                    std::vector<int> outer;
                    for (int q = 0; q < n; ++q)
                        if (q != i) outer.push_back(x[q]);
                    Vec term = M.act_tuple(ws, std::move(outer), mid);
                    Scalar sgn((n - i - 1) % 2 == 0 ? 1 : -1);  // (-1)^{n-i}, i 1-based
                    exactlin::vec_axpy(rhs, sgn, term);
                }
                Vec residual = exactlin::vec_sub(lhs, rhs);
                if (!exactlin::vec_is_zero(residual)) {
                    std::vector<int> where = to_1based(x);
                    for (int v : to_1based(y)) where.push_back(v);
                    where.push_back(j + 1);
                    return Report::fail({"module-axiom-2", where, residual,
                                         "second module identity fails at (x-tuple, y-tuple, m)"});
                }
            }
        }
    }
    return Report::ok();
}

Report module_action_respects_relations(const NLieAlgebra& L, const Presentation& P,
                                        const LModule& M) {
    WedgeSpace ws = WedgeSpace::of(L);
    if (M.action.size() != ws.size())
        throw std::invalid_argument("module_action_respects_relations: action shape mismatch");
    std::vector<bool> zero_op(ws.size());
    for (std::size_t w = 0; w < ws.size(); ++w) zero_op[w] = action_is_zero(M, w);

    for (std::size_t ri = 0; ri < P.relations.size(); ++ri) {
        const NcPoly& r = P.relations[ri];
        // evaluate the operator columnwise
        Matrix op(M.mdim, M.mdim);
        bool nonzero = false;
        for (int j = 0; j < M.mdim; ++j) {
            Vec col(M.mdim);
            for (const auto& [w, c] : r.terms()) {
                bool dead = false;
                for (int g : w)
                    if (zero_op[g]) {
                        dead = true;
                        break;
                    }
                if (dead) continue;
                Vec v(M.mdim);
                v[j] = Scalar(1);
                for (auto it = w.rbegin(); it != w.rend(); ++it) v = act_rank(M, *it, v);
                exactlin::vec_axpy(col, c, v);
            }
            for (int i = 0; i < M.mdim; ++i) {
                op.at(i, j) = col[i];
                if (!col[i].is_zero()) nonzero = true;
            }
        }
        if (nonzero)
            return Report::fail({"relation-operator", {static_cast<int>(ri + 1)}, op.flatten(),
                                 "relation " + r.str(P.alphabet) + " acts as a nonzero operator"});
    }
    return Report::ok();
}

Report module_action_respects_relations(const NLieAlgebra& L, const LModule& M) {
    return module_action_respects_relations(L, associated_algebra_presentation(L), M);
}

Subspace invariants(const NLieAlgebra& L, const LModule& M) {
    WedgeSpace ws = WedgeSpace::of(L);
    if (ws.size() == 0 || M.mdim == 0) {
        std::vector<Vec> all;
        for (int i = 0; i < M.mdim; ++i) {
            Vec v(M.mdim);
            v[i] = Scalar(1);
            all.push_back(std::move(v));
        }
        return Subspace::span(all, M.mdim);
    }
    Matrix stacked(ws.size() * M.mdim, M.mdim);
    for (std::size_t w = 0; w < ws.size(); ++w)
        for (int j = 0; j < M.mdim; ++j)
            for (int i = 0; i < M.mdim; ++i) stacked.at(w * M.mdim + i, j) = M.action[w][j][i];
    return Subspace::span(exactlin::nullspace(stacked), M.mdim);
}

std::size_t coinvariants_dim(const NLieAlgebra& L, const LModule& M) {
    WedgeSpace ws = WedgeSpace::of(L);
    std::vector<Vec> images;
    for (std::size_t w = 0; w < ws.size(); ++w)
        for (int j = 0; j < M.mdim; ++j)
            if (!exactlin::vec_is_zero(M.action[w][j])) images.push_back(M.action[w][j]);
    return M.mdim - Subspace::span(images, M.mdim).dim();
}

LModule parse_lmodule(std::string_view text, const NLieAlgebra& L) {
    WedgeSpace ws = WedgeSpace::of(L);
    LModule M;
    M.mdim = -1;
    std::size_t lineno = 0, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '\n') continue;
        ++lineno;
        std::string s(text.substr(start, i - start));
        start = i + 1;
        std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = s.find_last_not_of(" \t\r");
        s = s.substr(b, e - b + 1);
        if (s[0] == '#') continue;
        if (M.mdim < 0) {
            auto eq = s.find('=');
            if (s.rfind("mdim", 0) != 0 || eq == std::string::npos)
                throw nlie::FormatError(lineno, "expected 'mdim = <int>'");
            M.mdim = std::stoi(s.substr(eq + 1));
            if (M.mdim < 0) throw nlie::FormatError(lineno, "mdim must be nonnegative");
            M.action.assign(ws.size(), std::vector<Vec>(M.mdim, Vec(M.mdim)));
            continue;
        }
        if (s[0] != '[') throw nlie::FormatError(lineno, "expected '[i1,...;j] = ...'");
        auto semi = s.find(';');
        auto close = s.find(']');
        if (semi == std::string::npos || close == std::string::npos || semi > close)
            throw nlie::FormatError(lineno, "expected '[i1,...;j]'");
        std::vector<int> tuple;
        std::size_t p = 1, seg = 1;
        for (; p <= semi; ++p) {
            if (p == semi || s[p] == ',') {
                tuple.push_back(std::stoi(s.substr(seg, p - seg)) - 1);
                seg = p + 1;
            }
        }
        if (static_cast<int>(tuple.size()) != L.arity() - 1)
            throw nlie::FormatError(lineno, "arity mismatch: wedge tuple needs n-1 indices");
        int j = std::stoi(s.substr(semi + 1, close - semi - 1)) - 1;
        if (j < 0 || j >= M.mdim) throw nlie::FormatError(lineno, "module index out of range");
        std::size_t w;
        try {
            w = ws.rank(tuple);
        } catch (const std::exception&) {
            throw nlie::FormatError(lineno, "wedge indices must be strictly increasing and in range");
        }
        auto eq = s.find('=', close);
        if (eq == std::string::npos) throw nlie::FormatError(lineno, "missing '='");
        Vec value(M.mdim);
        std::string rhs = s.substr(eq + 1);
        std::size_t ts = 0;
        for (std::size_t q = 0; q <= rhs.size(); ++q) {
            if (q != rhs.size() && rhs[q] != '+') continue;
            std::string term = rhs.substr(ts, q - ts);
            ts = q + 1;
            std::size_t tb = term.find_first_not_of(" \t");
            if (tb == std::string::npos) throw nlie::FormatError(lineno, "empty term");
            std::size_t te = term.find_last_not_of(" \t");
            term = term.substr(tb, te - tb + 1);
            auto star = term.find('*');
            if (star == std::string::npos || star + 2 > term.size() || term[star + 1] != 'm')
                throw nlie::FormatError(lineno, "term must look like <coeff>*m<k>");
            int k = std::stoi(term.substr(star + 2)) - 1;
            if (k < 0 || k >= M.mdim) throw nlie::FormatError(lineno, "module index out of range");
            try {
                value[k] += L.field().parse(term.substr(0, star));
            } catch (const std::exception& ex) {
                throw nlie::FormatError(lineno, std::string("non-field scalar literal: ") + ex.what());
            }
        }
        M.action[w][j] = std::move(value);
    }
    if (M.mdim < 0) throw nlie::FormatError(lineno, "missing mdim header");
    return M;
}

std::string serialize_lmodule(const LModule& M, const NLieAlgebra& L) {
    WedgeSpace ws = WedgeSpace::of(L);
    std::ostringstream out;
    out << "mdim = " << M.mdim << "\n";
    for (std::size_t w = 0; w < ws.size(); ++w)
        for (int j = 0; j < M.mdim; ++j) {
            if (exactlin::vec_is_zero(M.action[w][j])) continue;
            out << "[";
            for (std::size_t i = 0; i < ws.tuples[w].size(); ++i)
                out << (i ? "," : "") << ws.tuples[w][i] + 1;
            out << ";" << j + 1 << "] = ";
            bool first = true;
            for (int k = 0; k < M.mdim; ++k) {
                if (M.action[w][j][k].is_zero()) continue;
                if (!first) out << " + ";
                out << M.action[w][j][k].str() << "*m" << k + 1;
                first = false;
            }
            out << "\n";
        }
    return out.str();
}

}  // namespace assocalg
