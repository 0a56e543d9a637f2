#include "burnlab/forest.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace burnlab {

Order isqrt(Order x) {
    if (x < 0) throw validation_error("isqrt of negative value");
    auto r = static_cast<Order>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

Order ceil_sqrt(Order x) {
    Order r = isqrt(x);
    return r * r == x ? r : r + 1;
}

PathForest::PathForest(std::vector<Order> raw) : orders_(std::move(raw)) {
    if (orders_.empty()) throw validation_error("forest needs at least one path");
    for (Order l : orders_)
        if (l < 1) throw validation_error("path order must be positive");
    std::sort(orders_.begin(), orders_.end());
    total_ = std::accumulate(orders_.begin(), orders_.end(), Order{0});
}

PathForest PathForest::parse(std::string_view text) {
    std::vector<Order> raw;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        Order v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{} || next == p)
            throw validation_error("bad forest literal: " + std::string(text));
        raw.push_back(v);
        p = next;
        if (p < end) {
            if (*p != ',')
                throw validation_error("bad forest literal: " + std::string(text));
            ++p;
            if (p == end)
                throw validation_error("trailing comma in forest literal");
        }
    }
    return PathForest(std::move(raw));
}

std::string PathForest::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) out << ',';
        out << orders_[i];
    }
    return out.str();
}

PathForest canonicalize(std::vector<Order> raw) { return PathForest(std::move(raw)); }

std::optional<int> try_square_side(const PathForest& t) {
    Order r = isqrt(t.total());
    if (r * r != t.total()) return std::nullopt;
    return static_cast<int>(r);
}

int square_side(const PathForest& t) {
    auto m = try_square_side(t);
    if (!m) throw not_square_error(t.total());
    return *m;
}

Order b_required(Order m, Order l) {
    if (m < 1) throw validation_error("b_required: m must be positive");
    if (l < 1 || l > m * m)
        throw validation_error("b_required: l out of range [1, m^2]");
    // Closed form t >= m - sqrt(m^2 - l), then fix parity and re-check the
    // defining inequality near the boundary.
    Order t = m - isqrt(m * m - l);
    if (((t ^ l) & 1) != 0) ++t;
    while (l > 2 * m * t - t * t) t += 2;
    while (t - 2 >= 1 && l <= 2 * m * (t - 2) - (t - 2) * (t - 2)) t -= 2;
    assert(t >= 1 && t <= m);
    return t;
}

ImpossibilityReport impossibility_report(const PathForest& t) {
    ImpossibilityReport rep;
    rep.m = square_side(t);
    rep.t.reserve(t.n());
    for (int i = 0; i < t.n(); ++i) {
        Order ti = b_required(rep.m, t.orders()[i]);
        rep.t.push_back(ti);
        rep.sum_t += ti;
        if (ti >= 4) {
            rep.set_a.push_back(i);
            rep.s_values.push_back(ti - 2);
            rep.s += ti - 2;
        } else {
            rep.set_b.push_back(i);
        }
    }
    rep.verdict = rep.sum_t > rep.m;
    return rep;
}

PathForest extend(const PathForest& t, int i) {
    int m = square_side(t);
    if (i < 0 || i >= t.n()) throw validation_error("extend: path index out of range");
    std::vector<Order> next = t.orders();
    next[i] += 2 * static_cast<Order>(m) + 1;
    return PathForest(std::move(next));
}

PathForest reduce(const PathForest& t, int i) {
    int side = square_side(t);
    if (side < 2) throw not_reducible_error("reduce: forest of order 1 has no reduction");
    if (i < 0 || i >= t.n()) throw validation_error("reduce: path index out of range");
    Order step = 2 * static_cast<Order>(side - 1) + 1;
    Order li = t.orders()[i];
    if (li < step)
        throw not_reducible_error("reduce: path of order " + std::to_string(li) +
                                  " is shorter than " + std::to_string(step));
    std::vector<Order> next = t.orders();
    if (li == step)
        next.erase(next.begin() + i);
    else
        next[i] -= step;
    if (next.empty())
        throw not_reducible_error("reduce: deleting the only path");
    return PathForest(std::move(next));
}

}  // namespace burnlab
