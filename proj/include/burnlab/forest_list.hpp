#pragma once

#include <string>
#include <vector>

#include "burnlab/forest.hpp"

namespace burnlab {

enum class ListKind { Well, Deficient, Candidates };

std::string kind_name(ListKind k);
ListKind kind_from_name(const std::string& name);

// Sorted, deduplicated collection of canonical forests for fixed (n, m, kind).
// l1_min records the filter floor applied (0 = none).
struct ForestList {
    int n = 0;
    int m = 0;
    ListKind kind = ListKind::Well;
    Order l1_min = 0;
    std::vector<PathForest> items;

    void sort_dedup();
    bool contains(const PathForest& t) const;
};

// Items with shortest path >= l1_min, as a new list.
ForestList filter_l1(const ForestList& list, Order l1_min);

}  // namespace burnlab
