#ifndef NLIE_ALGEBRA_HPP
#define NLIE_ALGEBRA_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "exactlin/linalg.hpp"
#include "nlie/report.hpp"

namespace nlie {

using exactlin::Field;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Subspace;
using exactlin::Vec;

using Element = Vec;

/// Sorts idx in place and returns the sign of the sorting permutation,
/// or 0 when an index repeats.
int sort_sign(std::vector<int>& idx);

/// Finite-dimensional n-Lie algebra given by structure constants. The table
/// is stored on strictly increasing index tuples only; every other bracket of
/// basis vectors is derived from the permutation sign, so the extension is
/// alternating by construction. Whether the fundamental identity holds is a
/// separate question, decided by check_fundamental_identity.
class NLieAlgebra {
public:
    NLieAlgebra(int arity, int dim, Field field = Field::Q());

    int arity() const { return n_; }
    int dim() const { return dim_; }
    const Field& field() const { return field_; }

    /// Sets [e_{idx0}, ..., e_{idx(n-1)}] for a strictly increasing 0-based
    /// tuple. Throws std::invalid_argument on arity/range/order violations or
    /// a repeated key.
    void set_bracket(std::vector<int> idx, Vec value);

    const std::map<std::vector<int>, Vec>& table() const { return table_; }

    /// Bracket of basis vectors with arbitrary index order; repeated indices
    /// give zero.
    Vec bracket_basis(std::span<const int> idx) const;

    /// Bracket of basis vectors with the element v substituted in slot pos.
    Vec bracket_subst(std::span<const int> idx, std::size_t pos, const Vec& v) const;

    /// Full multilinear alternating extension; args.size() must equal the
    /// arity and each element must have length dim.
    Element bracket(const std::vector<Element>& args) const;

    bool operator==(const NLieAlgebra& o) const;

private:
    int n_;
    int dim_;
    Field field_;
    std::map<std::vector<int>, Vec> table_;
};

/// All strictly increasing k-tuples of {0, ..., dim-1}, in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int dim, int k);

/// Evaluates the fundamental identity on basis tuples: x over strictly
/// increasing n-tuples (tuples with a repeated entry hold identically for an
/// alternating bracket, and permutations only flip the residual's sign),
/// y over all (n-1)-tuples. Multilinearity then settles the identity for all
/// elements.
Report check_fundamental_identity(const NLieAlgebra& L);

/// Checks d([x1..xn]) = sum_i [x1, ..., d(xi), ..., xn] on basis tuples.
Report is_derivation(const NLieAlgebra& L, const Matrix& d);

/// Basis of Der(L), solved from the linear system the derivation condition
/// imposes on matrix entries.
std::vector<Matrix> derivation_algebra(const NLieAlgebra& L);

/// Matrix of b -> [x1, ..., x_{n-1}, b] for a basis index tuple.
Matrix ad(const NLieAlgebra& L, std::span<const int> tuple);
/// Same for general elements x1, ..., x_{n-1}.
Matrix ad(const NLieAlgebra& L, const std::vector<Element>& xs);
/// Right multiplication a -> [a, x1, ..., x_{n-1}] = (-1)^{n-1} ad.
Matrix right_mult(const NLieAlgebra& L, std::span<const int> tuple);

/// Span of all ad matrices (flattened) inside K^{dim^2}.
Subspace inner_derivations(const NLieAlgebra& L);

/// {z : [x1, ..., x_{n-1}, z] = 0 for all basis tuples}.
Subspace centre(const NLieAlgebra& L);

/// Checks [S, L, ..., L] <= S.
Report is_ideal(const NLieAlgebra& L, const Subspace& S);

/// Span of [i, x1, ..., x_{n-1}] over I-basis and basis tuples.
Subspace derived_ideal(const NLieAlgebra& L, const Subspace& I);

/// L is simple when L^1 != 0 and the ideal closure of every nonzero probe
/// vector is all of L. The probe set is every basis vector plus all pairwise
/// sums e_i + e_j; at the dimensions handled here a proper nonzero ideal
/// always meets that set in a nonzero vector.
Report is_simple(const NLieAlgebra& L);

/// Ideal closure of a single vector: the smallest subspace containing v and
/// stable under every right multiplication by basis tuples.
Subspace ideal_closure(const NLieAlgebra& L, const Vec& v);

// --- builders ---

/// The (n+1)-dimensional simple algebra with
/// [e_1, ..., e_{i-1}, e_{i+1}, ..., e_{n+1}] = (-1)^{n+1+i} e_i.
NLieAlgebra make_Vn(int n, Field field = Field::Q());

/// The 5-dimensional filiform 3-Lie algebra: [x1,x2,x3] = x4 and
/// [x1,x2,x4] = [x1,x3,x4] = [x2,x3,x4] = x5.
NLieAlgebra make_filiform5(Field field = Field::Q());

/// Appends one central basis vector z with all brackets touching it zero.
NLieAlgebra central_ext_trivial(const NLieAlgebra& L);

NLieAlgebra make_abelian(int dim, int arity, Field field = Field::Q());

/// Free nilpotent model truncated at weight 2: m generators plus one symbol
/// per n-subset of generators; the bracket of n distinct generators is its
/// symbol, anything touching a symbol is zero. Requires m >= n.
NLieAlgebra free_nilpotent_weight2(int m, int arity, Field field = Field::Q());

NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b);

}  // namespace nlie

#endif
