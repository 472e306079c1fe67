#include "assocalg/freecase.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "multilinear/calculus.hpp"

namespace assocalg {

using multilinear::WedgeElt;
using multilinear::WedgeSpace;

FreeCase free_case_relation(int m, int n) {
    if (n < 3 || m < n) throw std::invalid_argument("free_case_relation: requires m >= n >= 3");
    NLieAlgebra L = nlie::free_nilpotent_weight2(m, n);
    WedgeSpace ws = WedgeSpace::of(L);

    // generator-only wedges become the surviving alphabet
    std::vector<int> local_of(ws.size(), -1);
    FreeCase out;
    for (std::size_t w = 0; w < ws.size(); ++w) {
        if (ws.tuples[w].back() >= m) continue;  // touches a bracket symbol
        local_of[w] = static_cast<int>(out.gen_tuples.size());
        out.gen_tuples.push_back(ws.tuples[w]);
        std::ostringstream lbl;
        lbl << "g{";
        for (std::size_t i = 0; i < ws.tuples[w].size(); ++i)
            lbl << (i ? "," : "") << ws.tuples[w][i] + 1;
        lbl << "}";
        out.alphabet.push_back(lbl.str());
    }

    // rewrite of a wedge generator holding exactly one bracket symbol: run
    // the bracket-wedge relation backwards, expressing it as a quadratic
    // form in generator-only wedges (global indices)
    auto symbol_subsets = nlie::increasing_tuples(m, n);
    auto rewrite = [&](std::size_t w) {
        const auto& tuple = ws.tuples[w];
        int sym_pos = -1;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (tuple[i] >= m) {
                if (sym_pos >= 0)
                    throw std::logic_error("free_case_relation: two symbols in one rewrite target");
                sym_pos = static_cast<int>(i);
            }
        const std::vector<int>& T = symbol_subsets[tuple[sym_pos] - m];
        std::vector<int> rest;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (static_cast<int>(i) != sym_pos) rest.push_back(tuple[i]);
        // [e_T] ^ rest = sign * X_w, with [e_T] the symbol itself
        std::vector<int> lhs_tuple = {tuple[sym_pos]};
        lhs_tuple.insert(lhs_tuple.end(), rest.begin(), rest.end());
        auto lhs = ws.reduce(lhs_tuple);
        Scalar lhs_sign(lhs->first);
        NcPoly rhs;
        for (int i = 0; i < n; ++i) {
            std::vector<int> first;
            for (int q = 0; q < n; ++q)
                if (q != i) first.push_back(T[q]);
            std::size_t f1 = ws.rank(first);
            std::vector<int> second = {T[i]};
            second.insert(second.end(), rest.begin(), rest.end());
            auto red = ws.reduce(second);
            if (!red) continue;
            Scalar c((n - i - 1) % 2 == 0 ? 1 : -1);  // (-1)^{n-i}, i 1-based
            c *= Scalar(red->first);
            rhs.add_term(c, {static_cast<int>(f1), static_cast<int>(red->second)});
        }
        return rhs.scaled(lhs_sign.inv());
    };

    std::set<std::string> seen;
    std::vector<std::string> numeric;
    for (std::size_t i = 0; i < ws.size(); ++i) numeric.push_back(std::to_string(i));

    for (std::size_t a = 0; a < ws.size(); ++a) {
        if (local_of[a] < 0) continue;
        WedgeElt wa = WedgeElt::basis(ws, a);
        for (std::size_t b = 0; b < ws.size(); ++b) {
            if (local_of[b] < 0 || a == b) continue;
            NcPoly rel = NcPoly::term(Scalar(1), {static_cast<int>(a), static_cast<int>(b)}) -
                         NcPoly::term(Scalar(1), {static_cast<int>(b), static_cast<int>(a)});
            WedgeElt ab = multilinear::leibniz_bracket(L, wa, WedgeElt::basis(ws, b));
            for (std::size_t k = 0; k < ws.size(); ++k) {
                if (ab.c[k].is_zero()) continue;
                if (local_of[k] >= 0)
                    rel.add_term(-ab.c[k], {static_cast<int>(k)});
                else
                    rel = rel - rewrite(k).scaled(ab.c[k]);
            }
            if (rel.is_zero()) continue;
            NcPoly monic = rel.monic();
            if (seen.insert(monic.str(numeric)).second) {
                // remap words to the local alphabet
                NcPoly local;
                for (const auto& [word, c] : monic.terms()) {
                    Word lw;
                    for (int g : word) {
                        if (local_of[g] < 0)
                            throw std::logic_error("free_case_relation: symbol wedge survived elimination");
                        lw.push_back(local_of[g]);
                    }
                    local.add_term(c, lw);
                }
                out.relations.push_back(std::move(local));
            }
        }
    }
    return out;
}

}  // namespace assocalg
