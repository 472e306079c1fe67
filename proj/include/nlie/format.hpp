#ifndef NLIE_FORMAT_HPP
#define NLIE_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "nlie/algebra.hpp"

namespace nlie {

/// Parse failure in the line-oriented algebra format; carries the 1-based
/// source line.
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Line-oriented UTF-8 format:
///   n = <int>
///   dim = <int>
///   field = Q | Fp:<prime>          (optional, defaults to Q)
///   [i1,...,in] = <coeff>*x<j> (+ <coeff>*x<j>)*
/// with 1-based strictly increasing indices and rational coefficient
/// literals p/q. Unlisted brackets are zero. Blank lines and lines starting
/// with '#' are ignored.
NLieAlgebra parse_algebra(std::string_view text);

std::string serialize_algebra(const NLieAlgebra& L);

}  // namespace nlie

#endif
