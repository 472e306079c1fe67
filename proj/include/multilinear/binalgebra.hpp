#ifndef MULTILINEAR_BINALGEBRA_HPP
#define MULTILINEAR_BINALGEBRA_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "multilinear/calculus.hpp"

namespace multilinear {

using exactlin::Field;

/// Binary-product algebra by structure constants. Nothing is assumed about
/// the product; skewness, Jacobi and Leibniz are decided by the checkers.
struct BinAlgebra {
    int dim = 0;
    Field field;
    std::vector<std::string> labels;
    /// prod[i*dim + j]: sparse expansion of e_i * e_j, sorted by basis index.
    std::vector<std::vector<std::pair<int, Scalar>>> prod;

    BinAlgebra() = default;
    BinAlgebra(int d, Field f);

    const std::vector<std::pair<int, Scalar>>& at(int i, int j) const { return prod[i * dim + j]; }
    void set(int i, int j, const Vec& value);

    Vec product_vec(int i, int j) const;
    Vec product(const Vec& x, const Vec& y) const;
    Matrix left_mult(int i) const;
    Matrix right_mult_mat(int i) const;
};

/// Thrown when a quotient bracket fails to be well defined; carries the
/// offending pair as a witness.
class QuotientError : public std::runtime_error {
public:
    QuotientError(const std::string& msg, Witness w)
        : std::runtime_error(msg), witness(std::move(w)) {}
    Witness witness;
};

/// L^{otimes(n-1)} with [x, y] = ad_x(y).
BinAlgebra basic_leibniz_tensor(const NLieAlgebra& L);

/// The same bracket on the wedge basis of Lambda^{n-1} L; the construction
/// asserts that the subspace W is a two-sided bracket ideal of the tensor
/// algebra, which is exactly what makes the quotient bracket well defined.
BinAlgebra basic_leibniz_wedge(const NLieAlgebra& L);

/// Quotient of the tensor algebra by the kernel K of ad; asserted to be
/// well defined in the same way. Coset representatives are the non-pivot
/// tensor coordinates of K.
BinAlgebra basic_lie(const NLieAlgebra& L);

/// (Lambda^{n-1} L, o).
BinAlgebra circle_algebra(const NLieAlgebra& L);

Report is_skew(const BinAlgebra& A);

/// Cyclic Jacobi residual [[i,j],k] + [[j,k],i] + [[k,i],j] over all basis
/// triples.
Report check_jacobi(const BinAlgebra& A);

/// Leibniz identity in the derivation form that the adjoint bracket
/// satisfies: [x,[y,z]] = [[x,y],z] + [y,[x,z]] over all basis triples.
Report check_leibniz(const BinAlgebra& A);

/// kappa(x, y) = trace(L_x L_y); requires is_skew and check_jacobi to pass.
Matrix killing_form(const BinAlgebra& A);

/// Two-sided annihilator {x : x*y = y*x = 0 for all y}.
Subspace binalg_centre(const BinAlgebra& A);

struct InnderIso {
    bool k_eq_w = false;
    bool bijective = false;
    std::size_t k_dim = 0, w_dim = 0, wedge_dim = 0, innder_dim = 0;
    bool iso() const { return k_eq_w && bijective; }
    bool consistent() const { return k_eq_w == bijective; }
    Report report;  // passed when (a) K = W and (b) bijectivity agree
};

/// Both directions of the criterion "B_Lambda = Innder(L) iff K = W".
InnderIso innder_iso_check(const NLieAlgebra& L);

/// Same text format as the n-Lie one with n = 2, but products are listed on
/// all ordered pairs (skewness is not assumed).
std::string serialize_binalgebra(const BinAlgebra& A);
BinAlgebra parse_binalgebra(std::string_view text);

}  // namespace multilinear

#endif
