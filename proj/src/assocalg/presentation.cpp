#include "assocalg/presentation.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "multilinear/calculus.hpp"

namespace assocalg {

using multilinear::WedgeElt;

namespace {

std::string wedge_gen_label(const std::vector<int>& tuple) {
    std::ostringstream out;
    out << "g{";
    for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << tuple[i] + 1;
    out << "}";
    return out.str();
}

/// Collects r (monic) unless zero or already present.
struct RelationSet {
    std::vector<NcPoly> list;
    std::set<std::string> seen;
    std::vector<std::string> numeric_labels;

    explicit RelationSet(std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) numeric_labels.push_back(std::to_string(i));
    }

    void insert(const NcPoly& r) {
        if (r.is_zero()) return;
        NcPoly m = r.monic();
        std::string key = m.str(numeric_labels);
        if (seen.insert(key).second) list.push_back(std::move(m));
    }
};

}  // namespace

Presentation associated_algebra_presentation(const NLieAlgebra& L) {
    nlie::Report fi = nlie::check_fundamental_identity(L);
    if (!fi.passed)
        throw std::invalid_argument(
            "associated_algebra_presentation: the fundamental identity fails on this table");

    WedgeSpace ws = WedgeSpace::of(L);
    const int n = L.arity();
    Presentation P;
    for (const auto& t : ws.tuples) {
        P.alphabet.push_back(wedge_gen_label(t));
        P.gen_tuples.push_back(t);
    }

    RelationSet rels(ws.size());

    // commutator-minus-derivation family, on all ordered pairs of wedge
    // generators
    for (std::size_t a = 0; a < ws.size(); ++a) {
        WedgeElt wa = WedgeElt::basis(ws, a);
        for (std::size_t b = 0; b < ws.size(); ++b) {
            if (a == b) continue;  // the bracket of a wedge with itself vanishes
            WedgeElt ab = multilinear::leibniz_bracket(L, wa, WedgeElt::basis(ws, b));
            NcPoly r = NcPoly::term(Scalar(1), {static_cast<int>(a), static_cast<int>(b)}) -
                       NcPoly::term(Scalar(1), {static_cast<int>(b), static_cast<int>(a)});
            for (std::size_t k = 0; k < ws.size(); ++k)
                r.add_term(-ab.c[k], {static_cast<int>(k)});
            rels.insert(r);
        }
    }

    // bracket-wedge linearisation family, on all (n-subset, (n-2)-subset)
    // basis choices
    auto xsets = nlie::increasing_tuples(L.dim(), n);
    auto ysets = nlie::increasing_tuples(L.dim(), n - 2);
    for (const auto& x : xsets) {
        Vec bx = L.bracket_basis(x);
        for (const auto& y : ysets) {
            NcPoly rel;
            // degree-2 side
            for (int i = 0; i < n; ++i) {
                std::vector<int> rest;
                for (int q = 0; q < n; ++q)
                    if (q != i) rest.push_back(x[q]);
                std::size_t f1 = ws.rank(rest);
                std::vector<int> second = {x[i]};
                second.insert(second.end(), y.begin(), y.end());
                auto red = ws.reduce(second);
                if (!red) continue;
                Scalar c((n - i - 1) % 2 == 0 ? 1 : -1);  // (-1)^{n-i} with i 1-based
                c *= Scalar(red->first);
                rel.add_term(c, {static_cast<int>(f1), static_cast<int>(red->second)});
            }
            // degree-1 side: [x1..xn] ^ y2 ^ ... ^ y_{n-1}
            for (int k = 0; k < L.dim(); ++k) {
                if (bx[k].is_zero()) continue;
                std::vector<int> t = {k};
                t.insert(t.end(), y.begin(), y.end());
                auto red = ws.reduce(t);
                if (!red) continue;
                Scalar c = bx[k] * Scalar(red->first);
                rel.add_term(-c, {static_cast<int>(red->second)});
            }
            rels.insert(rel);
        }
    }

    P.relations = std::move(rels.list);
    return P;
}

Presentation free_presentation(std::size_t k) {
    Presentation P;
    for (std::size_t i = 0; i < k; ++i) {
        P.alphabet.push_back("g" + std::to_string(i + 1));
        P.gen_tuples.push_back({static_cast<int>(i)});
    }
    return P;
}

std::size_t h1_dim(const Presentation& P) {
    std::vector<Vec> parts;
    for (const NcPoly& r : P.relations) {
        Vec v = r.linear_part(P.generators());
        if (!exactlin::vec_is_zero(v)) parts.push_back(std::move(v));
    }
    return P.generators() - exactlin::Subspace::span(parts, P.generators()).dim();
}

std::vector<Vec> h1_basis(const Presentation& P) {
    std::vector<Vec> parts;
    for (const NcPoly& r : P.relations) {
        Vec v = r.linear_part(P.generators());
        if (!exactlin::vec_is_zero(v)) parts.push_back(std::move(v));
    }
    return exactlin::Subspace::span(parts, P.generators()).quotient_basis();
}

std::size_t h1_cohomology_dim(const Presentation& P) { return h1_dim(P); }

std::string dump_presentation(const Presentation& P) {
    std::ostringstream out;
    for (const NcPoly& r : P.relations) out << r.str(P.alphabet) << "\n";
    return out.str();
}

}  // namespace assocalg
