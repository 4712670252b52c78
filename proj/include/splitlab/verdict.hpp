#pragma once

#include <string>
#include <vector>

namespace splitlab {

/// Outcome of a structural check; valid iff no violations were recorded.
struct Verdict {
    std::vector<std::string> violations;

    bool valid() const { return violations.empty(); }
    explicit operator bool() const { return valid(); }
};

} // namespace splitlab
