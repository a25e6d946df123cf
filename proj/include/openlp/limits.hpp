#pragma once

#include <cstddef>

namespace openlp {

/// Enumeration caps. Exceeding one raises CapacityError.
struct Limits {
    /// Cap on undetermined atoms a stable-model search may enumerate over
    /// (candidate subsets are 2^undetermined).
    std::size_t max_atoms = 20;
    /// Cap on ground rule instances produced by one grounding.
    std::size_t max_ground_rules = 500000;
    /// Cap on completion normal forms enumerated for one open program.
    std::size_t max_completions = 65536;
};

} // namespace openlp
