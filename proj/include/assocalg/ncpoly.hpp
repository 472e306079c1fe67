#ifndef ASSOCALG_NCPOLY_HPP
#define ASSOCALG_NCPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "exactlin/linalg.hpp"

namespace assocalg {

using exactlin::Scalar;
using exactlin::Vec;

/// Word over a generator alphabet; the empty word is the unit.
using Word = std::vector<int>;

/// Degree-lexicographic order: longer words first, ties broken
/// lexicographically by generator index.
struct DeglexGreater {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;
    }
};

/// Noncommutative polynomial in canonical form: like terms merged, zero
/// coefficients dropped, terms held in deglex order (leading term first).
class NcPoly {
public:
    NcPoly() = default;
    static NcPoly term(Scalar c, Word w);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar, DeglexGreater>& terms() const { return terms_; }

    const Word& lead_word() const;
    const Scalar& lead_coeff() const;
    /// Length of the longest word.
    int degree() const;
    Scalar constant_term() const;

    void add_term(const Scalar& c, const Word& w);
    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;  // word concatenation, bilinear
    NcPoly scaled(const Scalar& c) const;
    /// prefix * p * suffix
    NcPoly conjugated(const Word& prefix, const Word& suffix) const;

    NcPoly monic() const;  // leading coefficient normalised to 1
    /// Terms whose word length is exactly d.
    NcPoly degree_part(int d) const;
    /// Coefficient vector of the length-1 part over an alphabet of size k.
    Vec linear_part(std::size_t k) const;

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    /// Canonical rendering "c1*w11.w12 + c2*w21 + ...", unit word printed
    /// as "1".
    std::string str(const std::vector<std::string>& labels) const;

private:
    std::map<Word, Scalar, DeglexGreater> terms_;
};

}  // namespace assocalg

#endif
