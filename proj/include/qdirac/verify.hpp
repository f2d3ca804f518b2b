#pragma once

#include <string>
#include <vector>

#include "qdirac/complex_linalg.hpp"

namespace qdirac {

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs one executable check per formalized result (no-cloning,
/// teleportation, Deutsch, Deutsch-Jozsa, the quantum Prisoner's Dilemma
/// claims) plus gate and Bell-state sanity checks. Deterministic.
std::vector<Check> run_verification(Tolerance tol = {});

}  // namespace qdirac
