#include "burnlab/solver.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace burnlab {

namespace {

// Least t of r's parity with r <= 2kt - t^2, or -1 when even t = k fails
// (i.e. r exceeds what the k remaining odd values can sum to).
Order sources_needed(Order k, Order r) {
    if (r > k * k) return -1;
    Order t = k - isqrt(k * k - r);
    if (((t ^ r) & 1) != 0) ++t;
    while (r > 2 * k * t - t * t) t += 2;
    return t <= k ? t : -1;
}

struct ResidualKeyHash {
    std::size_t operator()(const std::vector<Order>& v) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Order x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

struct Search {
    int n = 0;
    BurnMode mode = BurnMode::Exact;
    std::vector<Order> residual;
    std::vector<std::vector<Order>> blocks;
    std::unordered_set<std::vector<Order>, ResidualKeyHash> failed;
    std::uint64_t nodes = 0;
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    bool exhausted = false;

    bool run(Order k) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        if (mode == BurnMode::Exact) {
            // Residual total equals k^2 throughout, so k == 0 means done.
            if (k == 0) return true;
        } else {
            bool done = true;
            for (Order r : residual)
                if (r > 0) { done = false; break; }
            if (done) return true;
            if (k == 0) return false;
        }

        // Lower bound on sources still needed vs. sources remaining.
        Order need = 0;
        for (Order r : residual) {
            if (r <= 0) continue;
            Order t = sources_needed(k, r);
            if (t < 0) return false;
            need += t;
            if (need > k) return false;
        }

        std::vector<Order> key(residual);
        std::sort(key.begin(), key.end());
        key.push_back(k);
        if (failed.contains(key)) return false;

        const Order v = 2 * k - 1;
        // Paths in descending residual order; symmetric siblings (equal
        // residuals) explored once.
        std::vector<int> idx(residual.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return residual[a] > residual[b]; });
        Order last_tried = -1;
        for (int p : idx) {
            Order r = residual[p];
            if (r == last_tried) continue;
            if (mode == BurnMode::Exact) {
                if (r < v) break;
            } else if (r <= 0) {
                break;
            }
            last_tried = r;
            residual[p] = std::max<Order>(0, r - v);
            blocks[p].push_back(v);
            if (run(k - 1)) return true;
            blocks[p].pop_back();
            residual[p] = r;
            if (exhausted) return false;
        }
        if (mode == BurnMode::Covering) {
            if (run(k - 1)) return true;
            if (exhausted) return false;
        }
        failed.insert(std::move(key));
        return false;
    }
};

DecideOutcome decide_exact_impl(const PathForest& t, std::uint64_t budget) {
    int m = square_side(t);
    Search s;
    s.n = t.n();
    s.mode = BurnMode::Exact;
    s.residual = t.orders();
    s.blocks.assign(t.n(), {});
    s.budget = budget;
    if (t.n() > m) {
        // More paths than sources; no assignment exists.
        return {Verdict::NotBurnable, std::nullopt};
    }
    if (s.run(m)) {
        BurnCertificate cert{m, BurnMode::Exact, std::move(s.blocks)};
        return {Verdict::Burnable, std::move(cert)};
    }
    if (s.exhausted) return {Verdict::Unknown, std::nullopt};
    return {Verdict::NotBurnable, std::nullopt};
}

}  // namespace

std::optional<BurnCertificate> decide_exact(const PathForest& t) {
    auto out = decide_exact_impl(t, std::numeric_limits<std::uint64_t>::max());
    return std::move(out.certificate);
}

DecideOutcome decide_exact_limited(const PathForest& t, std::uint64_t node_budget) {
    return decide_exact_impl(t, node_budget);
}

std::optional<BurnCertificate> decide_burnable(const PathForest& t, int m) {
    if (m < 1) throw validation_error("decide_burnable: m must be positive");
    if (m < t.n()) return std::nullopt;  // one source per path is needed
    Order cap = static_cast<Order>(m) * m;
    if (t.total() > cap) return std::nullopt;
    Search s;
    s.n = t.n();
    s.mode = BurnMode::Covering;
    s.residual = t.orders();
    s.blocks.assign(t.n(), {});
    if (!s.run(m)) return std::nullopt;
    return BurnCertificate{m, BurnMode::Covering, std::move(s.blocks)};
}

BurningNumber burning_number(const PathForest& t) {
    int m = static_cast<int>(std::max<Order>(t.n(), ceil_sqrt(t.total())));
    for (;; ++m) {
        if (auto cert = decide_burnable(t, m))
            return BurningNumber{m, std::move(*cert)};
    }
}

WellResult is_well_burnable(const PathForest& t) {
    Order target = ceil_sqrt(t.total());
    if (target < t.n()) return {false, std::nullopt};
    if (auto side = try_square_side(t)) {
        auto cert = decide_exact(t);
        return {cert.has_value(), std::move(cert)};
    }
    auto cert = decide_burnable(t, static_cast<int>(target));
    return {cert.has_value(), std::move(cert)};
}

bool verify_certificate(const PathForest& t, const BurnCertificate& c,
                        CertFault* fault) {
    auto fail = [&](CertFault f) {
        if (fault) *fault = f;
        return false;
    };
    if (fault) *fault = CertFault::None;
    if (static_cast<int>(c.blocks.size()) != t.n()) return fail(CertFault::BlockCount);
    const Order top = 2 * static_cast<Order>(c.m) - 1;
    std::unordered_set<Order> seen;
    for (const auto& block : c.blocks) {
        for (Order v : block) {
            if (v < 1 || v > top) return fail(CertFault::ValueOutOfRange);
            if ((v & 1) == 0) return fail(CertFault::ValueEven);
            if (!seen.insert(v).second) return fail(CertFault::DuplicateValue);
        }
    }
    for (int i = 0; i < t.n(); ++i) {
        Order sum = std::accumulate(c.blocks[i].begin(), c.blocks[i].end(), Order{0});
        if (c.mode == BurnMode::Exact ? sum != t.orders()[i] : sum < t.orders()[i])
            return fail(CertFault::SumMismatch);
    }
    if (c.mode == BurnMode::Exact &&
        seen.size() != static_cast<std::size_t>(c.m))
        return fail(CertFault::NotPartition);
    return true;
}

}  // namespace burnlab
