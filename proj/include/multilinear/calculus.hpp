#ifndef MULTILINEAR_CALCULUS_HPP
#define MULTILINEAR_CALCULUS_HPP

#include "multilinear/tensorspace.hpp"
#include "nlie/report.hpp"

namespace multilinear {

using nlie::Report;
using nlie::Witness;

/// Matrix on L of the adjoint action of a (possibly non-decomposable)
/// element of the tensor power.
Matrix ad_of_tensor(const NLieAlgebra& L, const TensorElt& x);
Matrix ad_of_wedge(const NLieAlgebra& L, const WedgeElt& x);

/// ad_x carried to the tensor power by the derivation rule
/// ad_x(a1 (x) a2) = ad_x(a1) (x) a2 + a1 (x) ad_x(a2); the wedge version is
/// the tensor version pushed through the alternation quotient.
TensorElt ad_extend(const NLieAlgebra& L, const TensorElt& x, const TensorElt& t);
WedgeElt ad_extend(const NLieAlgebra& L, const WedgeElt& x, const WedgeElt& t);

/// Action of an explicit derivation matrix on L, extended factor-wise.
TensorElt derivation_extend(const NLieAlgebra& L, const Matrix& d, const TensorElt& t);
WedgeElt derivation_extend(const NLieAlgebra& L, const Matrix& d, const WedgeElt& t);

/// [x, y] = ad_x(y).
TensorElt leibniz_bracket(const NLieAlgebra& L, const TensorElt& x, const TensorElt& y);
WedgeElt leibniz_bracket(const NLieAlgebra& L, const WedgeElt& x, const WedgeElt& y);

/// x o y = (ad_x(y) - ad_y(x)) / 2; rejects characteristic 2.
TensorElt circle(const NLieAlgebra& L, const TensorElt& x, const TensorElt& y);
WedgeElt circle(const NLieAlgebra& L, const WedgeElt& x, const WedgeElt& y);

/// J(a,b,c) = a o (b o c) + c o (a o b) + b o (c o a).
WedgeElt jacobiator(const NLieAlgebra& L, const WedgeElt& a, const WedgeElt& b, const WedgeElt& c);

/// Verifies J(a,b,c) = -1/4 ([ad_b,ad_c](a) + [ad_a,ad_b](c) + [ad_c,ad_a](b))
/// exactly, commutators acting through the derivation extension.
Report check_dagger(const NLieAlgebra& L, const WedgeElt& a, const WedgeElt& b, const WedgeElt& c);

/// Precomputed adjoint tables for one algebra: the ad matrix of every wedge
/// basis element and the (sign, wedge) reduction of every tensor index.
/// Use this for batch work; the free functions above rebuild the tables on
/// every call.
class AdContext {
public:
    explicit AdContext(const NLieAlgebra& L);

    const NLieAlgebra& algebra() const { return *L_; }
    const TensorSpace& tensor_space() const { return ts_; }
    const WedgeSpace& wedge_space() const { return ws_; }

    const Matrix& ad_wedge(std::size_t w) const { return ad_wedge_[w]; }
    bool ad_wedge_is_zero(std::size_t w) const { return ad_zero_[w] != 0; }
    const std::optional<std::pair<int, std::size_t>>& tensor_reduction(std::size_t r) const {
        return red_[r];
    }

    Matrix ad_of(const WedgeElt& x) const;
    Matrix ad_of(const TensorElt& x) const;
    WedgeElt extend(const Matrix& d, const WedgeElt& t) const;
    TensorElt extend(const Matrix& d, const TensorElt& t) const;
    WedgeElt ad_extend(const WedgeElt& x, const WedgeElt& t) const;
    WedgeElt circle(const WedgeElt& x, const WedgeElt& y) const;
    WedgeElt jacobiator(const WedgeElt& a, const WedgeElt& b, const WedgeElt& c) const;
    Report check_dagger(const WedgeElt& a, const WedgeElt& b, const WedgeElt& c) const;

private:
    const NLieAlgebra* L_;
    TensorSpace ts_;
    WedgeSpace ws_;
    std::vector<Matrix> ad_wedge_;
    std::vector<char> ad_zero_;
    std::vector<std::optional<std::pair<int, std::size_t>>> red_;
};

/// Kernel of x -> ad_x inside the tensor power.
Subspace kernel_K(const NLieAlgebra& L);

/// Kernel of the tensor -> wedge projection: the span of tensors fixed by a
/// slot transposition, which over a field realises the span of tensors with
/// a repeated factor. Always contained in kernel_K.
Subspace subspace_W(const NLieAlgebra& L);

}  // namespace multilinear

#endif
