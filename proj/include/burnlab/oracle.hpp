// Deliberately unoptimized exhaustive checkers used to validate the solver
// and the enumerator.  Plain recursion, no memoization; speed is irrelevant.
#pragma once

#include "burnlab/forest_list.hpp"
#include "burnlab/solver.hpp"

namespace burnlab {

struct oracle_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Guard threshold on the assignment space (branching^values).
inline constexpr double kOracleMaxAssignments = 1e9;

// Tries every assignment of each of the m odd values to one of the n paths.
std::optional<BurnCertificate> oracle_decide_exact(const PathForest& t);

// Least m admitting a covering assignment (each value goes to a path or is
// discarded), by exhaustive search per trial m.
int oracle_burning_number(const PathForest& t);

// All nondecreasing n-tuples summing to m^2 that pass oracle_decide_exact.
ForestList oracle_enumerate_well(int n, int m);

}  // namespace burnlab
