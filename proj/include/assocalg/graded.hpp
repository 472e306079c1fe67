#ifndef ASSOCALG_GRADED_HPP
#define ASSOCALG_GRADED_HPP

#include <stdexcept>

#include "assocalg/presentation.hpp"

namespace assocalg {

/// Raised when the completion working set outgrows the configured cap;
/// distinct from any mathematical failure.
class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CompletionLimits {
    std::size_t max_basis = 20000;

    /// Honours the NLIE_COMPLETION_CAP environment variable when set.
    static CompletionLimits from_env();
};

/// dim F_d / F_{d-1} for d = 0..degree of the word-length filtration of the
/// quotient algebra. Overlap relations are completed through degree
/// degree + 1 under deglex and the dimensions are reported only through
/// degree; the engine is validated against closed-form anchors (free
/// algebras, one- and two-variable polynomial rings) by the test suite.
std::vector<unsigned long long> graded_dims(const Presentation& P, int degree,
                                            CompletionLimits limits = CompletionLimits::from_env());

}  // namespace assocalg

#endif
