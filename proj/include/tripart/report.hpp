#ifndef TRIPART_REPORT_HPP
#define TRIPART_REPORT_HPP

#include "tripart/complex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tripart {

/// Outcome of a verification. A failing report keeps the first violation
/// together with the offending cell sets.
struct Report {
    Report() = default;
    explicit Report(std::string n) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    bool skipped = false;
    long long rank = -1; // size of the verified family, when meaningful
    std::string detail;
    std::vector<Chain> witness;

    void fail(const std::string& why, std::vector<Chain> cells = {}) {
        if (!pass)
            return;
        pass = false;
        detail = why;
        witness = std::move(cells);
    }
};

} // namespace tripart

#endif
