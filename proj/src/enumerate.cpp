#include "burnlab/enumerate.hpp"

#include <algorithm>

#include "burnlab/list_store.hpp"

namespace burnlab {

std::string kind_name(ListKind k) {
    switch (k) {
        case ListKind::Well: return "well";
        case ListKind::Deficient: return "deficient";
        case ListKind::Candidates: return "candidates";
    }
    return "well";
}

ListKind kind_from_name(const std::string& name) {
    if (name == "well") return ListKind::Well;
    if (name == "deficient") return ListKind::Deficient;
    if (name == "candidates") return ListKind::Candidates;
    throw validation_error("unknown list kind: " + name);
}

void ForestList::sort_dedup() {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
}

bool ForestList::contains(const PathForest& t) const {
    return std::binary_search(items.begin(), items.end(), t);
}

ForestList filter_l1(const ForestList& list, Order l1_min) {
    ForestList out{list.n, list.m, list.kind, std::max(list.l1_min, l1_min), {}};
    for (const auto& t : list.items)
        if (t.shortest() >= l1_min) out.items.push_back(t);
    return out;
}

namespace {

void partition_rec(Order remaining, int parts, Order at_least, Order max_part,
                   std::vector<Order>& acc,
                   const std::function<void(const std::vector<Order>&)>& fn) {
    if (parts == 1) {
        if (remaining >= at_least && remaining <= max_part) {
            acc.push_back(remaining);
            fn(acc);
            acc.pop_back();
        }
        return;
    }
    // Nondecreasing parts: l >= previous part, l <= remaining / parts-left.
    Order hi = std::min(max_part, remaining / parts);
    for (Order l = at_least; l <= hi; ++l) {
        acc.push_back(l);
        partition_rec(remaining - l, parts - 1, l, max_part, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(Order total, int parts, Order min_part, Order max_part,
                        const std::function<void(const std::vector<Order>&)>& fn) {
    if (parts < 1 || total < 1) return;
    std::vector<Order> acc;
    acc.reserve(parts);
    partition_rec(total, parts, std::max<Order>(1, min_part), max_part, acc, fn);
}

ForestList seed_list(int n) {
    if (n < 1) throw validation_error("seed_list: n must be positive");
    std::vector<Order> orders;
    for (int i = 1; i <= n; ++i) orders.push_back(2 * i - 1);
    ForestList out{n, n, ListKind::Well, 0, {}};
    out.items.emplace_back(std::move(orders));
    return out;
}

ForestList extend_level(const ForestList& prev_n_minus_1, const ForestList& prev_n,
                        Order item_cap) {
    if (prev_n.kind != ListKind::Well || prev_n_minus_1.kind != ListKind::Well)
        throw validation_error("extend_level: inputs must be well lists");
    if (!prev_n_minus_1.items.empty()) {
        if (prev_n_minus_1.n != prev_n.n - 1 || prev_n_minus_1.m != prev_n.m)
            throw validation_error("extend_level: inconsistent (n, m) across inputs");
    }
    const int m = prev_n.m;
    const Order new_path = 2 * static_cast<Order>(m) + 1;
    ForestList out{prev_n.n, m + 1, ListKind::Well, 0, {}};
    out.items.reserve(prev_n.items.size() * prev_n.n + prev_n_minus_1.items.size());
    for (const auto& t : prev_n_minus_1.items) {
        std::vector<Order> next = t.orders();
        next.push_back(new_path);
        out.items.emplace_back(std::move(next));
    }
    for (const auto& t : prev_n.items) {
        for (int i = 0; i < t.n(); ++i) {
            // Extending two equal paths gives the same child once.
            if (i > 0 && t.orders()[i] == t.orders()[i - 1]) continue;
            out.items.push_back(extend(t, i));
            if (item_cap > 0 && static_cast<Order>(out.items.size()) > item_cap)
                throw resource_limit_error("extend_level: item cap exceeded at level (" +
                                           std::to_string(out.n) + "," +
                                           std::to_string(out.m) + ")");
        }
    }
    out.sort_dedup();
    return out;
}

ListFamily build_lists(int n, int m_max, const BuildOptions& opts) {
    if (n < 1 || m_max < n)
        throw validation_error("build_lists: need n >= 1 and m_max >= n");
    ListFamily fam;
    auto persist = [&](const ForestList& list) {
        if (opts.persist_dir.empty()) return;
        write_list(list, list_stem(opts.persist_dir, list.n, list.m, list.kind,
                                   list.l1_min));
    };
    for (int k = 1; k <= n; ++k) {
        fam.well[{k, k}] = seed_list(k);
        persist(fam.well[{k, k}]);
        for (int m = k; m < m_max; ++m) {
            static const ForestList empty_list{0, 0, ListKind::Well, 0, {}};
            const ForestList* below = &empty_list;
            if (k > 1) below = &fam.well.at({k - 1, m});
            fam.well[{k, m + 1}] =
                extend_level(*below, fam.well.at({k, m}), opts.item_cap);
            persist(fam.well[{k, m + 1}]);
        }
    }
    if (opts.l1_filter) {
        for (const auto& [key, list] : fam.well) {
            fam.filtered[key] = filter_l1(list, *opts.l1_filter);
            persist(fam.filtered[key]);
        }
    }
    return fam;
}

ForestList deficient_complement(const ForestList& well, Order l1_min) {
    if (well.kind != ListKind::Well)
        throw validation_error("deficient_complement: input must be a well list");
    ForestList out{well.n, well.m, ListKind::Deficient, l1_min, {}};
    const Order total = static_cast<Order>(well.m) * well.m;
    for_each_partition(total, well.n, l1_min, total,
                       [&](const std::vector<Order>& parts) {
                           PathForest t{parts};
                           if (!well.contains(t)) out.items.push_back(std::move(t));
                       });
    // Partition enumeration is already lexicographic and duplicate-free.
    return out;
}

}  // namespace burnlab
