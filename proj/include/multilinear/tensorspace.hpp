#ifndef MULTILINEAR_TENSORSPACE_HPP
#define MULTILINEAR_TENSORSPACE_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlie/algebra.hpp"

namespace multilinear {

using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Subspace;
using exactlin::Vec;
using nlie::NLieAlgebra;

/// Index bookkeeping for L^{(n-1) tensor factors}: multi-indices in
/// row-major order.
struct TensorSpace {
    int dim;
    int slots;

    static TensorSpace of(const NLieAlgebra& L) { return {L.dim(), L.arity() - 1}; }

    std::size_t size() const;
    std::size_t rank(std::span<const int> idx) const;
    std::vector<int> unrank(std::size_t r) const;
    std::string label(std::size_t r) const;  // e.g. "x1(x)x3"
};

/// Index bookkeeping for the exterior power: strictly increasing tuples in
/// lexicographic order.
struct WedgeSpace {
    int dim;
    int slots;
    std::vector<std::vector<int>> tuples;

    static WedgeSpace of(const NLieAlgebra& L);
    static WedgeSpace make(int dim, int slots);

    std::size_t size() const { return tuples.size(); }
    std::size_t rank(std::span<const int> increasing) const;
    /// Sorts an arbitrary tuple; nullopt when an index repeats.
    std::optional<std::pair<int, std::size_t>> reduce(std::vector<int> t) const;
    std::string label(std::size_t r) const;  // e.g. "x1^x3"
};

/// Coordinate vector over the full tensor basis of L^{otimes(n-1)}.
struct TensorElt {
    Vec c;

    static TensorElt zero(const TensorSpace& s) { return {Vec(s.size())}; }
    static TensorElt basis(const TensorSpace& s, std::size_t r);
    bool is_zero() const { return exactlin::vec_is_zero(c); }
};

/// Coordinate vector over the strictly increasing wedge basis of
/// Lambda^{n-1} L.
struct WedgeElt {
    Vec c;

    static WedgeElt zero(const WedgeSpace& s) { return {Vec(s.size())}; }
    static WedgeElt basis(const WedgeSpace& s, std::size_t r);
    bool is_zero() const { return exactlin::vec_is_zero(c); }
};

WedgeElt operator+(const WedgeElt& a, const WedgeElt& b);
WedgeElt operator-(const WedgeElt& a, const WedgeElt& b);
WedgeElt operator*(const Scalar& s, const WedgeElt& a);
TensorElt operator+(const TensorElt& a, const TensorElt& b);
TensorElt operator-(const TensorElt& a, const TensorElt& b);
TensorElt operator*(const Scalar& s, const TensorElt& a);

/// Section of the quotient map: a wedge goes to its increasing
/// representative tensor.
TensorElt tensor_of_wedge(const NLieAlgebra& L, const WedgeElt& w);
/// The alternation quotient projection.
WedgeElt wedge_of_tensor(const NLieAlgebra& L, const TensorElt& t);
/// Matrix of the projection, wedge-dim x tensor-dim.
Matrix wedge_projection_matrix(const NLieAlgebra& L);

std::string format_wedge(const NLieAlgebra& L, const WedgeElt& w);    // "-1/4 * x4^x5 + ..."
std::string format_tensor(const NLieAlgebra& L, const TensorElt& t);

}  // namespace multilinear

#endif
