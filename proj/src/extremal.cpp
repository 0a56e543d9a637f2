#include "burnlab/extremal.hpp"

#include <algorithm>
#include <cassert>

namespace burnlab {

Order m_n_closed_form(int n) {
    if (n < 2) throw validation_error("m_n_closed_form: n >= 2 required");
    if (n == 2) return 2;
    const Order nn = n;
    const Order d = 4 * (18 * nn - 12);  // (2*sqrt(18n-12))^2
    Order s = isqrt(d);
    Order gap = (s * s == d) ? s : s + 1;  // least integer >= 2*sqrt(18n-12)
    Order m = 12 * nn - 6 - gap;
    if ((m & 1) == 0) --m;
    return m;
}

namespace {

// x0 maximizing 3x - (6n-4)/(n-x) over the floor/ceiling of
// n - sqrt((6n-4)/3); ties broken toward the smaller value.
Order pick_x0(int n, double* f_floor = nullptr, double* f_ceil = nullptr) {
    const Order nn = n;
    const Order q = 6 * nn - 4;
    // Least t with 3t^2 >= 6n-4; never an exact tie (6n-4 is not 0 mod 3).
    Order t = isqrt(q / 3);
    while (3 * t * t < q) ++t;
    Order a = nn - t;      // floor of n - sqrt((6n-4)/3)
    Order b = a + 1;       // ceiling
    auto f = [&](Order x) {
        return 3.0 * static_cast<double>(x) -
               static_cast<double>(q) / static_cast<double>(nn - x);
    };
    if (f_floor) *f_floor = f(a);
    if (f_ceil) *f_ceil = f(b);
    if (a < 0) return b;
    // f(a) >= f(b)  <=>  3(n-a)(n-b) <= 6n-4
    return (3 * (nn - a) * (nn - b) <= q) ? a : b;
}

}  // namespace

std::pair<ExtremalParams, PathForest> extremal_forest(int n) {
    if (n < 3) throw validation_error("extremal_forest: n >= 3 required");
    ExtremalParams p;
    p.n = n;
    p.x0 = pick_x0(n, &p.f_floor, &p.f_ceil);
    p.m = 3 * static_cast<Order>(n) + p.x0 - 2;
    p.long_count = p.x0;
    p.odd_count = n - p.x0;
    p.odd_total = p.m * p.m - p.x0 * (4 * p.m - 2);

    const Order q = p.odd_count;
    const Order s = p.odd_total;
    Order v = s / q;
    if ((v & 1) == 0) --v;
    const Order bumped = (s - q * v) / 2;  // this many odd paths get v+2
    assert((s - q * v) % 2 == 0 && bumped >= 0 && bumped < q);

    std::vector<Order> orders;
    orders.reserve(n);
    for (Order i = 0; i < q - bumped; ++i) orders.push_back(v);
    for (Order i = 0; i < bumped; ++i) orders.push_back(v + 2);
    for (Order i = 0; i < p.x0; ++i) orders.push_back(4 * p.m - 2);
    return {p, PathForest(std::move(orders))};
}

namespace {

// Interval of l values with B_m(l) == t: ((t-2) sources' reach, t sources'
// reach], restricted to l's parity == t's parity.
Order interval_lo(Order m, Order t) {
    if (t <= 2) return t;  // t=1 -> l>=1 odd, t=2 -> l>=2 even
    Order u = t - 2;
    return 2 * m * u - u * u + 2;
}

Order interval_hi(Order m, Order t) { return 2 * m * t - t * t; }

struct BruteBest {
    Order value = 0;
    std::vector<Order> witness;
};

// For a fixed t-vector, the largest floor lambda such that path orders
// l_i >= lambda with B_m(l_i) == t_i can sum to exactly m^2.
void score_vector(Order m, const std::vector<Order>& tvec, BruteBest& best) {
    const Order mm = m * m;
    const int n = static_cast<int>(tvec.size());
    Order lo_sum = 0, hi_sum = 0, hi_min = mm;
    for (Order t : tvec) {
        lo_sum += interval_lo(m, t);
        hi_sum += interval_hi(m, t);
        hi_min = std::min(hi_min, interval_hi(m, t));
    }
    if (hi_sum < mm) return;
    if (((mm - lo_sum) & 1) != 0) return;  // parity: sums move in steps of 2

    auto lower_bounds = [&](Order lambda, std::vector<Order>& lo) {
        Order sum = 0;
        lo.resize(n);
        for (int i = 0; i < n; ++i) {
            Order lifted = lambda + (((lambda ^ tvec[i]) & 1) ? 1 : 0);
            lo[i] = std::max(interval_lo(m, tvec[i]), lifted);
            if (lo[i] > interval_hi(m, tvec[i])) return false;
            sum += lo[i];
        }
        return sum <= mm;
    };

    std::vector<Order> lo;
    Order a = 1, b = hi_min;  // invariant: feasible at a (if at all), not above b
    if (!lower_bounds(a, lo)) return;
    while (a < b) {
        Order mid = (a + b + 1) / 2;
        if (lower_bounds(mid, lo))
            a = mid;
        else
            b = mid - 1;
    }
    if (a <= best.value) return;
    lower_bounds(a, lo);
    Order spare = mm;
    for (Order x : lo) spare -= x;
    for (int i = n - 1; i >= 0 && spare > 0; --i) {
        Order add = std::min(spare, interval_hi(m, tvec[i]) - lo[i]);
        lo[i] += add;
        spare -= add;
    }
    if (spare != 0) return;
    best.value = a;
    best.witness = lo;
}

void gen_vectors(Order m, int n, int pos, Order min_t, Order sum_t, Order lo_sum,
                 std::vector<Order>& tvec, BruteBest& best) {
    const Order mm = m * m;
    if (pos == n) {
        if (sum_t >= m + 2) score_vector(m, tvec, best);
        return;
    }
    for (Order t = min_t; t <= m; ++t) {
        Order lo = interval_lo(m, t);
        // Remaining paths all need at least this interval floor.
        if (lo_sum + lo * (n - pos) > mm) break;
        // The shortest path lives in the first entry's interval, so the
        // achievable l_1 is capped by that interval's ceiling.
        if (pos == 0 && interval_hi(m, t) <= best.value) continue;
        tvec[pos] = t;
        gen_vectors(m, n, pos + 1, t, sum_t + t, lo_sum + lo, tvec, best);
    }
}

}  // namespace

std::pair<Order, PathForest> m_n_bruteforce(int n, int m_max) {
    if (n < 2) throw validation_error("m_n_bruteforce: n >= 2 required");
    if (m_max <= 0) m_max = 4 * n - 2;
    BruteBest best;
    std::vector<Order> tvec(n);
    // High sides first: the optimum sits near the top of the range, and the
    // incumbent value then prunes the bushy low-t branches everywhere else.
    for (int m = m_max; m >= n; --m) {
        // n paths of order >= l_1 need l_1 <= m^2/n.
        if (static_cast<Order>(m) * m <= best.value * n) break;
        gen_vectors(m, n, 0, 1, 0, 0, tvec, best);
    }
    if (best.witness.empty())
        throw validation_error("m_n_bruteforce: no impossibly burnable forest found");
    PathForest witness{best.witness};
    assert(impossibility_report(witness).verdict);
    assert(witness.shortest() == best.value);
    return {best.value, std::move(witness)};
}

OptimalStructureReport optimal_structure_check(int n, const PathForest& witness) {
    auto rep = impossibility_report(witness);
    if (!rep.verdict)
        throw validation_error("optimal_structure_check: witness is not impossibly burnable");
    if (witness.shortest() != m_n_closed_form(n))
        throw validation_error("optimal_structure_check: witness l_1 != M_n");
    OptimalStructureReport out;
    out.t = rep.t;
    out.b_all_three = true;
    out.a_all_four = true;
    for (int i : rep.set_b)
        if (rep.t[i] != 3) out.b_all_three = false;
    for (int i : rep.set_a)
        if (rep.t[i] != 4) out.a_all_four = false;
    out.a_side_binding = n >= 8;
    out.pass = out.b_all_three && (!out.a_side_binding || out.a_all_four);
    return out;
}

}  // namespace burnlab
