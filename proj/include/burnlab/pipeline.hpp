// Verification workflows: L_n determination with induction closure, the
// Delta_n search, candidate generation via extensions of deficient lists,
// and the seven-path table reproduction.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "burnlab/enumerate.hpp"
#include "burnlab/solver.hpp"

namespace burnlab {

// Full classification of one (n, m, l1_min) level by direct decision.
struct LevelClassification {
    ForestList well;
    ForestList deficient;
    // The deficient items that are NOT impossibly burnable (subset of
    // deficient.items).
    std::vector<PathForest> deficient_not_impossible;
};

LevelClassification classify_level(int n, int m, Order l1_min, int threads = 0);

enum class LnStatus { Proved, Refuted, Inconclusive };

std::string ln_status_name(LnStatus s);

struct LnVerification {
    int n = 0;
    Order candidate_L = 0;
    int m_verified_up_to = 0;
    // Deficient forests with l_1 >= candidate_L found below closure; any
    // entry refutes the candidate.
    std::vector<PathForest> exceptional_deficient;
    int closure_m = 0;
    LnStatus status = LnStatus::Inconclusive;
    std::optional<PathForest> minimality_witness;  // deficient with l_1 == L-1
};

// Exhaustively verifies levels n..m_max, then closes the induction upward:
// forests whose longest-path reduction keeps l_1 >= candidate_L reduce into
// an already-verified level; the rest are decided directly.
LnVerification verify_L(int n, Order candidate_L, int m_max, int threads = 0);

// Deficient n-path forests of order m^2 with l_1 in [l1_lo, l1_hi] and
// l_2 >= l2_min, by direct classification.
ForestList deficient_band(int n, int m, Order l1_lo, Order l1_hi, Order l2_min,
                          int threads = 0);

// Union of extensions: every member of low_band extended at the first
// component, plus every member of deficient_prev extended at every
// component; canonicalized, deduplicated, filtered to l_1 >= l1_bound.
ForestList potentially_deficient_candidates(const ForestList& deficient_prev,
                                            const ForestList& low_band,
                                            Order l1_bound);

// Potentially deficient candidates of order m_child^2 with l_1 >= bound,
// derived from the deficient lists one level below: the band that can reach
// the bound by a first-component extension, plus the bounded deficient list
// extended everywhere.  The band floor is bound - (2m+1), not hard-coded.
ForestList candidates_for_level(int n, int m_child, Order bound, int threads = 0);

struct Certification {
    std::vector<PathForest> impossibly_burnable;
    std::vector<std::pair<PathForest, std::string>> well_burnable;  // with reason
    std::vector<PathForest> undecided;
    // Candidates the fallback proved deficient without being impossibly
    // burnable.
    std::vector<PathForest> deficient_not_impossible;
};

Certification certify_candidates(const ForestList& candidates,
                                 const std::map<int, Order>& known_L,
                                 const std::vector<const ForestList*>& reference_deficient,
                                 std::uint64_t decide_budget = 50'000'000);

struct DeltaSearchResult {
    int n = 0;
    Order l1_floor = 0;
    int m_max = 0;
    // Deficient but not impossibly burnable forests with l_1 >= l1_floor,
    // across all checked orders.
    std::vector<PathForest> items;
};

DeltaSearchResult delta_search(int n, Order l1_floor, int m_max, int threads = 0);

struct Table1Row {
    long long well = 0;
    long long deficient = 0;
};

// Counts of well-burnable and deficient 7-path forests of order m^2 with
// l_1 >= 46.  When lists_dir is set, computed lists are cached there.
Table1Row table1_row(int m, const std::string& lists_dir = "", int threads = 0);

}  // namespace burnlab
