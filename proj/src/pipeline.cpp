#include "burnlab/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "burnlab/list_store.hpp"

namespace burnlab {

namespace {

int effective_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Classify a batch of candidate forests in parallel; decisions are
// independent and the solver keeps no shared state.
void classify_batch(const std::vector<PathForest>& candidates, int threads,
                    std::vector<char>& verdicts /* 0 deficient-imp, 1 well, 2 deficient-not-imp */) {
    verdicts.assign(candidates.size(), 0);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const PathForest& t = candidates[i];
            if (impossibility_report(t).verdict) {
                verdicts[i] = 0;  // impossibly burnable, hence deficient
            } else if (decide_exact(t)) {
                verdicts[i] = 1;
            } else {
                verdicts[i] = 2;
            }
        }
    };
    int cap = static_cast<int>(std::max<std::size_t>(1, candidates.size() / 64));
    int nt = std::min(effective_threads(threads), cap);
    if (nt <= 1) {
        work(0, candidates.size());
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (candidates.size() + nt - 1) / nt;
    for (int k = 0; k < nt; ++k) {
        std::size_t lo = k * chunk;
        std::size_t hi = std::min(candidates.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
}

std::vector<PathForest> level_candidates(int n, int m, Order l1_min,
                                         Order max_part = 0) {
    const Order total = static_cast<Order>(m) * m;
    if (max_part <= 0) max_part = total;
    std::vector<PathForest> out;
    for_each_partition(total, n, std::max<Order>(1, l1_min), max_part,
                       [&](const std::vector<Order>& parts) {
                           out.emplace_back(parts);
                       });
    return out;
}

}  // namespace

LevelClassification classify_level(int n, int m, Order l1_min, int threads) {
    LevelClassification out;
    out.well = ForestList{n, m, ListKind::Well, l1_min, {}};
    out.deficient = ForestList{n, m, ListKind::Deficient, l1_min, {}};
    auto candidates = level_candidates(n, m, l1_min);
    std::vector<char> verdicts;
    classify_batch(candidates, threads, verdicts);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (verdicts[i] == 1) {
            out.well.items.push_back(std::move(candidates[i]));
        } else {
            if (verdicts[i] == 2)
                out.deficient_not_impossible.push_back(candidates[i]);
            out.deficient.items.push_back(std::move(candidates[i]));
        }
    }
    return out;
}

std::string ln_status_name(LnStatus s) {
    switch (s) {
        case LnStatus::Proved: return "proved-at-desk-scale";
        case LnStatus::Refuted: return "refuted";
        case LnStatus::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

LnVerification verify_L(int n, Order candidate_L, int m_max, int threads) {
    if (n < 2 || candidate_L < 1)
        throw validation_error("verify_L: need n >= 2 and candidate_L >= 1");
    LnVerification out;
    out.n = n;
    out.candidate_L = candidate_L;
    out.m_verified_up_to = m_max;

    // Exhaustive phase: every forest of order m^2 with l_1 >= L, m <= m_max.
    for (int m = n; m <= m_max; ++m) {
        auto level = classify_level(n, m, candidate_L, threads);
        for (auto& t : level.deficient.items) out.exceptional_deficient.push_back(t);
    }
    if (!out.exceptional_deficient.empty()) {
        out.status = LnStatus::Refuted;
        return out;
    }
    out.closure_m = m_max;

    // Induction closure: at level mm, any forest with l_1 >= L whose longest
    // path reduces to at least L lands in the already-verified level mm-1.
    // The rest have all parts in [L, L + 2(mm-1)]; decide those directly.
    const Order L = candidate_L;
    auto arithmetic_closed = [&](int mm) {
        Order min_longest = (static_cast<Order>(mm) * mm + n - 1) / n;
        return min_longest - (2 * static_cast<Order>(mm) - 1) >= L;
    };
    int mm = m_max + 1;
    const int mm_limit = std::max(m_max + 64, 16 * n + static_cast<int>(L));
    while (!arithmetic_closed(mm)) {
        Order step = 2 * static_cast<Order>(mm) - 1;
        auto exceptional = level_candidates(n, mm, L, L + step - 1);
        std::vector<char> verdicts;
        classify_batch(exceptional, threads, verdicts);
        for (std::size_t i = 0; i < exceptional.size(); ++i) {
            if (verdicts[i] != 1)
                out.exceptional_deficient.push_back(exceptional[i]);
        }
        if (!out.exceptional_deficient.empty()) {
            out.status = LnStatus::Refuted;
            return out;
        }
        if (++mm > mm_limit) {
            out.status = LnStatus::Inconclusive;
            return out;
        }
    }

    // Minimality: a deficient forest with l_1 == L-1 must exist.
    for (int m = n; m <= m_max && !out.minimality_witness; ++m) {
        const Order total = static_cast<Order>(m) * m;
        std::vector<PathForest> at_floor;
        for_each_partition(total - (L - 1), n - 1, L - 1, total,
                           [&](const std::vector<Order>& rest) {
                               std::vector<Order> parts;
                               parts.reserve(n);
                               parts.push_back(L - 1);
                               parts.insert(parts.end(), rest.begin(), rest.end());
                               at_floor.emplace_back(std::move(parts));
                           });
        for (auto& t : at_floor) {
            if (impossibility_report(t).verdict || !decide_exact(t)) {
                out.minimality_witness = std::move(t);
                break;
            }
        }
    }
    out.status = out.minimality_witness ? LnStatus::Proved : LnStatus::Inconclusive;
    return out;
}

ForestList deficient_band(int n, int m, Order l1_lo, Order l1_hi, Order l2_min,
                          int threads) {
    const Order total = static_cast<Order>(m) * m;
    std::vector<PathForest> candidates;
    for (Order l1 = std::max<Order>(1, l1_lo); l1 <= l1_hi; ++l1) {
        if (n == 1) {
            if (l1 == total) candidates.emplace_back(std::vector<Order>{l1});
            continue;
        }
        for_each_partition(total - l1, n - 1, std::max(l1, l2_min), total,
                           [&](const std::vector<Order>& rest) {
                               std::vector<Order> parts;
                               parts.reserve(n);
                               parts.push_back(l1);
                               parts.insert(parts.end(), rest.begin(), rest.end());
                               candidates.emplace_back(std::move(parts));
                           });
    }
    std::vector<char> verdicts;
    classify_batch(candidates, threads, verdicts);
    ForestList out{n, m, ListKind::Deficient, l1_lo, {}};
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (verdicts[i] != 1) out.items.push_back(std::move(candidates[i]));
    out.sort_dedup();
    return out;
}

ForestList candidates_for_level(int n, int m_child, Order bound, int threads) {
    const int m = m_child - 1;
    const Order step = 2 * static_cast<Order>(m) + 1;
    auto prev = classify_level(n, m, bound, threads);
    auto band = deficient_band(n, m, std::max<Order>(1, bound - step), bound - 1,
                               bound, threads);
    return potentially_deficient_candidates(prev.deficient, band, bound);
}

ForestList potentially_deficient_candidates(const ForestList& deficient_prev,
                                            const ForestList& low_band,
                                            Order l1_bound) {
    if (!deficient_prev.items.empty() && !low_band.items.empty() &&
        (deficient_prev.n != low_band.n || deficient_prev.m != low_band.m))
        throw validation_error(
            "potentially_deficient_candidates: inconsistent (n, m) inputs");
    const int n = deficient_prev.items.empty() ? low_band.n : deficient_prev.n;
    const int m = deficient_prev.items.empty() ? low_band.m : deficient_prev.m;
    ForestList out{n, m + 1, ListKind::Candidates, l1_bound, {}};
    for (const auto& t : low_band.items) out.items.push_back(extend(t, 0));
    for (const auto& t : deficient_prev.items) {
        for (int i = 0; i < t.n(); ++i) {
            if (i > 0 && t.orders()[i] == t.orders()[i - 1]) continue;
            out.items.push_back(extend(t, i));
        }
    }
    std::erase_if(out.items,
                  [&](const PathForest& t) { return t.shortest() < l1_bound; });
    out.sort_dedup();
    return out;
}

Certification certify_candidates(const ForestList& candidates,
                                 const std::map<int, Order>& known_L,
                                 const std::vector<const ForestList*>& reference_deficient,
                                 std::uint64_t decide_budget) {
    Certification out;
    const int m = candidates.m;
    const Order deleted_path = 2 * static_cast<Order>(m) - 1;
    for (const auto& t : candidates.items) {
        // (1) counting/parity obstruction
        if (impossibility_report(t).verdict) {
            out.impossibly_burnable.push_back(t);
            continue;
        }
        // (2) known-L path deletion: a path of order 2m-1 burns alone with
        // the first source; the rest must be well by the L table.
        bool classified = false;
        for (int i = 0; i < t.n() && !classified; ++i) {
            if (t.orders()[i] != deleted_path) continue;
            auto it = known_L.find(t.n() - 1);
            if (it == known_L.end()) break;
            std::vector<Order> rest = t.orders();
            rest.erase(rest.begin() + i);
            if (!rest.empty() && PathForest(rest).shortest() >= it->second) {
                out.well_burnable.emplace_back(t, "deletion of a 2m-1 path, known L");
                classified = true;
            }
            break;
        }
        if (classified) continue;
        // (3) a reduction absent from a complete deficient reference list
        // is well-burnable, and extensions of well forests are well.
        for (int i = 0; i < t.n() && !classified; ++i) {
            if (i > 0 && t.orders()[i] == t.orders()[i - 1]) continue;
            if (t.orders()[i] < deleted_path) continue;  // not reducible
            PathForest red = reduce(t, i);
            for (const ForestList* ref : reference_deficient) {
                if (!ref || ref->n != red.n() || ref->m != m - 1) continue;
                if (red.shortest() < ref->l1_min) continue;
                if (!ref->contains(red)) {
                    out.well_burnable.emplace_back(t, "reduction outside deficient list");
                    classified = true;
                    break;
                }
            }
        }
        if (classified) continue;
        // (4) direct decision within budget
        auto outcome = decide_exact_limited(t, decide_budget);
        switch (outcome.verdict) {
            case Verdict::Burnable:
                out.well_burnable.emplace_back(t, "direct decision");
                break;
            case Verdict::NotBurnable:
                out.deficient_not_impossible.push_back(t);
                break;
            case Verdict::Unknown:
                out.undecided.push_back(t);
                break;
        }
    }
    return out;
}

DeltaSearchResult delta_search(int n, Order l1_floor, int m_max, int threads) {
    if (n < 3) throw validation_error("delta_search: n >= 3 required");
    DeltaSearchResult out{n, l1_floor, m_max, {}};
    for (int m = n; m <= m_max; ++m) {
        if (static_cast<Order>(m) * m < l1_floor * n) continue;
        auto level = classify_level(n, m, l1_floor, threads);
        for (auto& t : level.deficient_not_impossible) out.items.push_back(std::move(t));
    }
    return out;
}

Table1Row table1_row(int m, const std::string& lists_dir, int threads) {
    constexpr int kPaths = 7;
    constexpr Order kFloor = 46;
    if (!lists_dir.empty()) {
        auto well_stem = list_stem(lists_dir, kPaths, m, ListKind::Well, kFloor);
        auto def_stem = list_stem(lists_dir, kPaths, m, ListKind::Deficient, kFloor);
        if (list_exists(well_stem) && list_exists(def_stem)) {
            auto well = read_list(well_stem);
            auto def = read_list(def_stem);
            return {static_cast<long long>(well.items.size()),
                    static_cast<long long>(def.items.size())};
        }
    }
    auto level = classify_level(kPaths, m, kFloor, threads);
    if (!lists_dir.empty()) {
        write_list(level.well, list_stem(lists_dir, kPaths, m, ListKind::Well, kFloor));
        write_list(level.deficient,
                   list_stem(lists_dir, kPaths, m, ListKind::Deficient, kFloor));
    }
    return {static_cast<long long>(level.well.items.size()),
            static_cast<long long>(level.deficient.items.size())};
}

}  // namespace burnlab
