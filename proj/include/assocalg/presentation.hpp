#ifndef ASSOCALG_PRESENTATION_HPP
#define ASSOCALG_PRESENTATION_HPP

#include <string>
#include <vector>

#include "assocalg/ncpoly.hpp"
#include "multilinear/tensorspace.hpp"

namespace assocalg {

using multilinear::WedgeSpace;
using nlie::NLieAlgebra;

/// Finitely presented unital algebra: the tensor algebra on the wedge basis
/// of Lambda^{n-1} L modulo the listed relations. Every relation carries zero
/// constant term, so the augmentation sending each generator to zero descends
/// to the quotient.
struct Presentation {
    std::vector<std::string> alphabet;         // labels g{i1,...,i_{n-1}}, 1-based indices
    std::vector<std::vector<int>> gen_tuples;  // 0-based wedge tuples per generator
    std::vector<NcPoly> relations;

    std::size_t generators() const { return alphabet.size(); }
};

/// Builds the presentation of the associated algebra of L: the commutator-
/// minus-derivation relations on all pairs of wedge generators, plus the
/// bracket-wedge linearisation relations on all (n-subset, (n-2)-subset)
/// basis choices; zero and duplicate relations pruned, each relation oriented
/// monic by its deglex leading term. Requires L to satisfy the fundamental
/// identity.
Presentation associated_algebra_presentation(const NLieAlgebra& L);

/// Builds a relation-free presentation on k generators (labels g1..gk).
Presentation free_presentation(std::size_t k);

/// dim of span(alphabet) modulo the span of the degree-1 components of the
/// generating relations. Any ideal element a*r*b with a or b non-scalar has
/// no degree-1 component because relations carry no constant term, so the
/// generating relations already span the degree-1 part of the ideal.
std::size_t h1_dim(const Presentation& P);

/// Coset representatives of the surviving generators.
std::vector<Vec> h1_basis(const Presentation& P);

/// Equal to h1_dim over a field at finite dimension (dual space dimension).
std::size_t h1_cohomology_dim(const Presentation& P);

/// One relation per line in canonical syntax.
std::string dump_presentation(const Presentation& P);

}  // namespace assocalg

#endif
