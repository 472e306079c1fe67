#ifndef ASSOCALG_FREECASE_HPP
#define ASSOCALG_FREECASE_HPP

#include "assocalg/presentation.hpp"

namespace assocalg {

/// Outcome of eliminating the bracket-symbol generators from the associated
/// algebra of the weight-2 free nilpotent model: an alphabet of
/// generator-only wedges and the surviving quadratic relations among them.
/// An empty relation list means the quotient is free on those generators.
struct FreeCase {
    std::vector<std::string> alphabet;
    std::vector<std::vector<int>> gen_tuples;  // 0-based generator indices
    std::vector<NcPoly> relations;
};

/// Builds free_nilpotent_weight2(m, n), forms its presentation data, rewrites
/// every wedge generator containing a bracket symbol through the
/// bracket-wedge relation, and returns the quadratic relations that remain
/// among the generator-only wedges. Requires m >= n >= 3.
FreeCase free_case_relation(int m, int n);

}  // namespace assocalg

#endif
