// Canonical path-forest representation, B_m computation, impossibly-burnable
// detection, and the extension/reduction operators.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace burnlab {

using Order = std::int64_t;

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a forest's total order is not a perfect square.
struct not_square_error : std::runtime_error {
    Order total;
    explicit not_square_error(Order n)
        : std::runtime_error("forest order " + std::to_string(n) +
                             " is not a perfect square"),
          total(n) {}
};

struct not_reducible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// floor(sqrt(x)) for x >= 0, exact.
Order isqrt(Order x);
Order ceil_sqrt(Order x);

// An n-path forest, kept as the nondecreasing tuple of its path orders.
// Two forests built from permutations of the same multiset compare equal.
class PathForest {
public:
    explicit PathForest(std::vector<Order> raw);

    // Comma-separated decimal orders, no spaces: "8,13,15".
    static PathForest parse(std::string_view text);

    const std::vector<Order>& orders() const { return orders_; }
    int n() const { return static_cast<int>(orders_.size()); }
    Order total() const { return total_; }
    Order shortest() const { return orders_.front(); }
    Order longest() const { return orders_.back(); }

    std::string str() const;

    auto operator<=>(const PathForest&) const = default;

private:
    std::vector<Order> orders_;
    Order total_ = 0;
};

PathForest canonicalize(std::vector<Order> raw);

// Side m with m^2 == total order; throws not_square_error otherwise.
int square_side(const PathForest& t);
std::optional<int> try_square_side(const PathForest& t);

// B_m(l): least t of l's parity with l <= 2mt - t^2.  1 <= l <= m^2.
Order b_required(Order m, Order l);

// Per-path B_m values, the A/B split of the proof of the extremal bound,
// and the verdict sum(t_i) > m.
struct ImpossibilityReport {
    int m = 0;
    std::vector<Order> t;       // t_i = B_m(l_i)
    Order sum_t = 0;
    std::vector<int> set_a;     // indices with t_i >= 4
    std::vector<int> set_b;     // indices with t_i <= 3
    std::vector<Order> s_values;  // t_i - 2 for i in set_a
    Order s = 0;
    bool verdict = false;       // sum_t > m
};

ImpossibilityReport impossibility_report(const PathForest& t);

// Lengthen path i (0-based index into the canonical tuple) by 2m+1,
// moving from order m^2 to (m+1)^2.
PathForest extend(const PathForest& t, int i);

// Inverse of extend: shorten path i of an order-(m+1)^2 forest by 2m+1.
// When l_i == 2m+1 exactly, the path is deleted instead (n shrinks by one).
PathForest reduce(const PathForest& t, int i);

}  // namespace burnlab
