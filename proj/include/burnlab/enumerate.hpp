// Complete lists of well-burnable n-path forests of order m^2, built by the
// two recursive extension rules, and deficient lists by complementation.
#pragma once

#include <functional>
#include <map>
#include <optional>

#include "burnlab/forest_list.hpp"

namespace burnlab {

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All nondecreasing `parts`-tuples of positive integers summing to `total`
// with every part in [min_part, max_part].
void for_each_partition(Order total, int parts, Order min_part, Order max_part,
                        const std::function<void(const std::vector<Order>&)>& fn);

// The unique well-burnable n-path forest of order n^2: (1,3,...,2n-1).
ForestList seed_list(int n);

// Level (n, m) -> (n, m+1): append a new path of order 2m+1 to each member
// of the (n-1)-path list, and extend each member of the n-path list at every
// path index.  prev_n_minus_1 may be empty (n == 1, or m < n-1).
ForestList extend_level(const ForestList& prev_n_minus_1, const ForestList& prev_n,
                        Order item_cap = 0);

struct BuildOptions {
    Order item_cap = 200'000'000;     // per-level in-memory cap
    std::optional<Order> l1_filter;   // materialize filtered views as well
    std::string persist_dir;          // when set, completed levels are saved
};

struct ListFamily {
    // Unfiltered well lists, keyed by (k, m) for k <= n, k <= m <= m_max.
    std::map<std::pair<int, int>, ForestList> well;
    // Filtered views, present when BuildOptions::l1_filter is set.
    std::map<std::pair<int, int>, ForestList> filtered;
};

ListFamily build_lists(int n, int m_max, const BuildOptions& opts = {});

// All nondecreasing n-tuples of total m^2 with l_1 >= l1_min that are absent
// from the given well list.
ForestList deficient_complement(const ForestList& well, Order l1_min);

}  // namespace burnlab
