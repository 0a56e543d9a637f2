#include "burnlab/oracle.hpp"

#include <cmath>

#include "burnlab/enumerate.hpp"

namespace burnlab {

namespace {

void check_guard(int branching, int values) {
    if (std::pow(static_cast<double>(branching), values) > kOracleMaxAssignments)
        throw oracle_limit_error("oracle: instance too large (" +
                                 std::to_string(branching) + "^" +
                                 std::to_string(values) + " assignments)");
}

// Assign value 2k-1 (then 2k-3, ...) to one of the paths; exact sums.
bool assign_exact(std::vector<Order>& residual,
                  std::vector<std::vector<Order>>& blocks, Order k) {
    if (k == 0) {
        for (Order r : residual)
            if (r != 0) return false;
        return true;
    }
    const Order v = 2 * k - 1;
    for (std::size_t p = 0; p < residual.size(); ++p) {
        if (residual[p] < v) continue;
        residual[p] -= v;
        blocks[p].push_back(v);
        if (assign_exact(residual, blocks, k - 1)) return true;
        blocks[p].pop_back();
        residual[p] += v;
    }
    return false;
}

// Covering: each value goes to a path or is discarded.
bool assign_covering(std::vector<Order>& residual,
                     std::vector<std::vector<Order>>& blocks, Order k) {
    bool done = true;
    for (Order r : residual)
        if (r > 0) { done = false; break; }
    if (done) return true;
    if (k == 0) return false;
    const Order v = 2 * k - 1;
    for (std::size_t p = 0; p < residual.size(); ++p) {
        if (residual[p] <= 0) continue;
        Order saved = residual[p];
        residual[p] -= v;
        blocks[p].push_back(v);
        if (assign_covering(residual, blocks, k - 1)) return true;
        blocks[p].pop_back();
        residual[p] = saved;
    }
    return assign_covering(residual, blocks, k - 1);
}

}  // namespace

std::optional<BurnCertificate> oracle_decide_exact(const PathForest& t) {
    int m = square_side(t);
    check_guard(t.n(), m);
    std::vector<Order> residual = t.orders();
    std::vector<std::vector<Order>> blocks(t.n());
    if (!assign_exact(residual, blocks, m)) return std::nullopt;
    return BurnCertificate{m, BurnMode::Exact, std::move(blocks)};
}

int oracle_burning_number(const PathForest& t) {
    int m = static_cast<int>(std::max<Order>(t.n(), ceil_sqrt(t.total())));
    for (;; ++m) {
        check_guard(t.n() + 1, m);
        std::vector<Order> residual = t.orders();
        std::vector<std::vector<Order>> blocks(t.n());
        if (assign_covering(residual, blocks, m)) return m;
    }
}

ForestList oracle_enumerate_well(int n, int m) {
    if (n < 1 || m < n)
        throw validation_error("oracle_enumerate_well: need 1 <= n <= m");
    check_guard(n, m);
    const Order total = static_cast<Order>(m) * m;
    ForestList out{n, m, ListKind::Well, 0, {}};
    for_each_partition(total, n, 1, total, [&](const std::vector<Order>& parts) {
        PathForest t{parts};
        if (oracle_decide_exact(t)) out.items.push_back(std::move(t));
    });
    return out;
}

}  // namespace burnlab
