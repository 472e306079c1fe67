#ifndef ASSOCALG_LMODULE_HPP
#define ASSOCALG_LMODULE_HPP

#include <string_view>

#include "assocalg/presentation.hpp"
#include "nlie/report.hpp"

namespace assocalg {

using exactlin::Matrix;
using exactlin::Subspace;
using nlie::Report;

/// Module over an n-Lie algebra, given as a linear action of the wedge basis
/// of Lambda^{n-1} L on a module basis: action[w][j] is the image of the
/// j-th module basis vector under the w-th wedge generator.
struct LModule {
    int mdim = 0;
    std::vector<std::vector<Vec>> action;

    static LModule trivial(const NLieAlgebra& L);
    static LModule self_action(const NLieAlgebra& L);

    Matrix action_matrix(std::size_t wedge_rank) const;
    /// Action of an arbitrary (n-1)-tuple of basis indices, with sign.
    Vec act_tuple(const multilinear::WedgeSpace& ws, std::vector<int> tuple, const Vec& m) const;
};

/// Verifies the two module identities on all wedge-basis instantiations of
/// the x and y blocks and all module basis vectors, exactly.
Report check_module_axioms(const NLieAlgebra& L, const LModule& M);

/// Evaluates every generating relation of the associated-algebra
/// presentation as an operator on M and checks that it acts as zero.
Report module_action_respects_relations(const NLieAlgebra& L, const LModule& M);
Report module_action_respects_relations(const NLieAlgebra& L, const Presentation& P,
                                        const LModule& M);

/// Joint kernel of all wedge action operators.
Subspace invariants(const NLieAlgebra& L, const LModule& M);
/// Codimension of the span of all action images.
std::size_t coinvariants_dim(const NLieAlgebra& L, const LModule& M);

/// Line-oriented module format:
///   mdim = <int>
///   [i1,...,i_{n-1}; j] = <coeff>*m<k> (+ ...)*
/// with 1-based strictly increasing wedge indices and module indices;
/// unlisted entries are zero.
LModule parse_lmodule(std::string_view text, const NLieAlgebra& L);
std::string serialize_lmodule(const LModule& M, const NLieAlgebra& L);

}  // namespace assocalg

#endif
