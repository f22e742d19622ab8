#pragma once

#include "z2gg/lattice.hpp"

#include <string>
#include <vector>

namespace z2gg {

struct CriterionResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;  // expected vs got on failure, summary on success
};

struct AcceptanceOptions {
    LatticeBudget budget;
    unsigned rng_seed = 0x5eed2024;
};

// The cross-validation suite: lattice models vs gauge-gravity TQFTs plus the
// operator-algebra and characteristic-class property batteries. Deterministic
// for a fixed seed.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

}  // namespace z2gg
