#include "multilinear/tensorspace.hpp"

#include <sstream>
#include <stdexcept>

namespace multilinear {

std::size_t TensorSpace::size() const {
    std::size_t s = 1;
    for (int i = 0; i < slots; ++i) s *= static_cast<std::size_t>(dim);
    return s;
}

std::size_t TensorSpace::rank(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != slots)
        throw std::invalid_argument("TensorSpace::rank: wrong tuple length");
    std::size_t r = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim) throw std::invalid_argument("TensorSpace::rank: index out of range");
        r = r * dim + static_cast<std::size_t>(i);
    }
    return r;
}

std::vector<int> TensorSpace::unrank(std::size_t r) const {
    std::vector<int> idx(slots);
    for (int i = slots - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(r % dim);
        r /= dim;
    }
    return idx;
}

std::string TensorSpace::label(std::size_t r) const {
    auto idx = unrank(r);
    std::ostringstream out;
    for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "(x)" : "") << "x" << idx[i] + 1;
    return out.str();
}

WedgeSpace WedgeSpace::make(int dim, int slots) {
    WedgeSpace w;
    w.dim = dim;
    w.slots = slots;
    w.tuples = nlie::increasing_tuples(dim, slots);
    return w;
}

WedgeSpace WedgeSpace::of(const NLieAlgebra& L) { return make(L.dim(), L.arity() - 1); }

std::size_t WedgeSpace::rank(std::span<const int> increasing) const {
    // lexicographic rank of an increasing tuple among all C(dim, slots)
    std::size_t lo = 0, hi = tuples.size();
    std::vector<int> key(increasing.begin(), increasing.end());
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (tuples[mid] < key)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo >= tuples.size() || tuples[lo] != key)
        throw std::invalid_argument("WedgeSpace::rank: not an increasing basis tuple");
    return lo;
}

std::optional<std::pair<int, std::size_t>> WedgeSpace::reduce(std::vector<int> t) const {
    int sign = nlie::sort_sign(t);
    if (sign == 0) return std::nullopt;
    return std::make_pair(sign, rank(t));
}

std::string WedgeSpace::label(std::size_t r) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < tuples[r].size(); ++i) out << (i ? "^" : "") << "x" << tuples[r][i] + 1;
    return out.str();
}

TensorElt TensorElt::basis(const TensorSpace& s, std::size_t r) {
    TensorElt t = zero(s);
    t.c[r] = Scalar(1);
    return t;
}

WedgeElt WedgeElt::basis(const WedgeSpace& s, std::size_t r) {
    WedgeElt w = zero(s);
    w.c[r] = Scalar(1);
    return w;
}

WedgeElt operator+(const WedgeElt& a, const WedgeElt& b) { return {exactlin::vec_add(a.c, b.c)}; }
WedgeElt operator-(const WedgeElt& a, const WedgeElt& b) { return {exactlin::vec_sub(a.c, b.c)}; }
WedgeElt operator*(const Scalar& s, const WedgeElt& a) { return {exactlin::vec_scale(s, a.c)}; }
TensorElt operator+(const TensorElt& a, const TensorElt& b) { return {exactlin::vec_add(a.c, b.c)}; }
TensorElt operator-(const TensorElt& a, const TensorElt& b) { return {exactlin::vec_sub(a.c, b.c)}; }
TensorElt operator*(const Scalar& s, const TensorElt& a) { return {exactlin::vec_scale(s, a.c)}; }

TensorElt tensor_of_wedge(const NLieAlgebra& L, const WedgeElt& w) {
    TensorSpace ts = TensorSpace::of(L);
    WedgeSpace ws = WedgeSpace::of(L);
    if (w.c.size() != ws.size()) throw std::invalid_argument("tensor_of_wedge: length mismatch");
    TensorElt t = TensorElt::zero(ts);
    for (std::size_t r = 0; r < ws.size(); ++r)
        if (!w.c[r].is_zero()) t.c[ts.rank(ws.tuples[r])] += w.c[r];
    return t;
}

WedgeElt wedge_of_tensor(const NLieAlgebra& L, const TensorElt& t) {
    TensorSpace ts = TensorSpace::of(L);
    WedgeSpace ws = WedgeSpace::of(L);
    if (t.c.size() != ts.size()) throw std::invalid_argument("wedge_of_tensor: length mismatch");
    WedgeElt w = WedgeElt::zero(ws);
    for (std::size_t r = 0; r < ts.size(); ++r) {
        if (t.c[r].is_zero()) continue;
        auto red = ws.reduce(ts.unrank(r));
        if (!red) continue;
        auto [sign, wr] = *red;
        w.c[wr] += sign == 1 ? t.c[r] : -t.c[r];
    }
    return w;
}

Matrix wedge_projection_matrix(const NLieAlgebra& L) {
    TensorSpace ts = TensorSpace::of(L);
    WedgeSpace ws = WedgeSpace::of(L);
    Matrix m(ws.size(), ts.size());
    for (std::size_t r = 0; r < ts.size(); ++r) {
        auto red = ws.reduce(ts.unrank(r));
        if (!red) continue;
        auto [sign, wr] = *red;
        m.at(wr, r) = Scalar(sign);
    }
    return m;
}

namespace {

std::string format_terms(const Vec& c, const std::vector<std::string>& labels) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) out << " + ";
        out << c[i].str() << " * " << labels[i];
        first = false;
    }
    return first ? "0" : out.str();
}

}  // namespace

std::string format_wedge(const NLieAlgebra& L, const WedgeElt& w) {
    WedgeSpace ws = WedgeSpace::of(L);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ws.size(); ++i) labels.push_back(ws.label(i));
    return format_terms(w.c, labels);
}

std::string format_tensor(const NLieAlgebra& L, const TensorElt& t) {
    TensorSpace ts = TensorSpace::of(L);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ts.size(); ++i) labels.push_back(ts.label(i));
    return format_terms(t.c, labels);
}

}  // namespace multilinear
