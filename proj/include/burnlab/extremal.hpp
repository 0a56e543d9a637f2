// Closed form for the largest shortest-path order M_n achievable by an
// impossibly burnable n-path forest, the extremal construction realizing it,
// an independent feasibility-search oracle, and the optimal-structure check.
#pragma once

#include <utility>

#include "burnlab/forest.hpp"

namespace burnlab {

// Largest odd M with M <= 12n - 2*sqrt(18n-12) - 6, decided by integer
// square comparison; M_2 = 2.
Order m_n_closed_form(int n);

struct ExtremalParams {
    int n = 0;
    Order x0 = 0;          // count of paths of order 4m-2
    Order m = 0;           // 3n + x0 - 2
    Order long_count = 0;  // == x0
    Order odd_count = 0;   // n - x0
    Order odd_total = 0;   // m^2 - x0(4m-2)
    double f_floor = 0;    // 3x - (6n-4)/(n-x) at the floor candidate
    double f_ceil = 0;     // ... and at the ceiling candidate
};

// x0 paths of order 4m-2 plus n-x0 odd paths that are equal or differ by
// two; impossibly burnable with shortest path m_n_closed_form(n).
std::pair<ExtremalParams, PathForest> extremal_forest(int n);

// Maximum shortest-path order over impossibly burnable n-path forests,
// found by feasibility search over B-value vectors (no closed form), with a
// concrete witness.  m_max = 0 means the proof bound 4n-2.
std::pair<Order, PathForest> m_n_bruteforce(int n, int m_max = 0);

struct OptimalStructureReport {
    std::vector<Order> t;
    bool b_all_three = false;  // t_i == 3 for every i with t_i <= 3
    bool a_all_four = false;   // t_i == 4 for every i with t_i >= 4
    bool a_side_binding = false;  // the A-side condition gates only for n >= 8
    bool pass = false;
};

// Witness must be impossibly burnable with l_1 == M_n.
OptimalStructureReport optimal_structure_check(int n, const PathForest& witness);

}  // namespace burnlab
