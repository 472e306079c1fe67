#ifndef NLIE_REPORT_HPP
#define NLIE_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactlin/linalg.hpp"

namespace nlie {

/// Structured counterexample: which check failed, at which (1-based) basis
/// indices, with the exact residual vector.
struct Witness {
    std::string kind;
    std::vector<int> indices;
    exactlin::Vec discrepancy;
    std::string detail;
};

struct Report {
    bool passed = true;
    std::optional<Witness> witness;

    static Report ok() { return Report{}; }
    static Report fail(Witness w) { return Report{false, std::move(w)}; }
};

}  // namespace nlie

#endif
