#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <unistd.h>

#include "burnlab/oracle.hpp"
#include "burnlab/pipeline.hpp"

using namespace burnlab;

namespace {

const std::map<int, Order> kKnownL = {{1, 1}, {2, 3}, {3, 18}, {4, 26},
                                      {5, 36}, {6, 46}, {7, 56}};

}  // namespace

TEST_CASE("classify_level splits a level exactly") {
    auto level = classify_level(3, 6, 8);
    REQUIRE(level.well.items.size() + level.deficient.items.size() > 0);
    CHECK(level.deficient.items.size() == 2);
    CHECK(level.deficient.contains(PathForest({8, 13, 15})));
    CHECK(level.deficient.contains(PathForest({10, 13, 13})));
    CHECK(level.deficient_not_impossible.empty());
    for (const auto& t : level.well.items) {
        CHECK(t.shortest() >= 8);
        CHECK(oracle_decide_exact(t).has_value());
    }
    for (const auto& t : level.deficient.items)
        CHECK_FALSE(oracle_decide_exact(t).has_value());

    // Multithreaded run returns the identical split.
    auto threaded = classify_level(3, 6, 8, 3);
    CHECK(threaded.well.items == level.well.items);
    CHECK(threaded.deficient.items == level.deficient.items);
}

TEST_CASE("verify_L: two paths") {
    auto res = verify_L(2, 3, 6);
    CHECK(res.status == LnStatus::Proved);
    CHECK(res.exceptional_deficient.empty());
    REQUIRE(res.minimality_witness.has_value());
    CHECK(res.minimality_witness->shortest() == 2);
    CHECK_FALSE(decide_exact(*res.minimality_witness).has_value());
}

TEST_CASE("verify_L: three paths, closure past the checked band") {
    auto res = verify_L(3, 18, 9);
    CHECK(res.status == LnStatus::Proved);
    CHECK(res.exceptional_deficient.empty());
    CHECK(res.closure_m >= 9);
    REQUIRE(res.minimality_witness.has_value());
    CHECK(res.minimality_witness->shortest() == 17);

    // One lower is refutable: a deficient forest with l_1 = 17 exists.
    auto low = verify_L(3, 17, 9);
    CHECK(low.status == LnStatus::Refuted);
    REQUIRE_FALSE(low.exceptional_deficient.empty());
    for (const auto& t : low.exceptional_deficient) {
        CHECK(t.shortest() >= 17);
        CHECK_FALSE(decide_exact(t).has_value());
    }
}

TEST_CASE("ln_status_name") {
    CHECK(ln_status_name(LnStatus::Proved) == "proved-at-desk-scale");
    CHECK(ln_status_name(LnStatus::Refuted) == "refuted");
    CHECK(ln_status_name(LnStatus::Inconclusive) == "inconclusive");
}

TEST_CASE("deficient_band") {
    auto band = deficient_band(3, 6, 8, 10, 1);
    CHECK(band.items.size() == 2);
    auto narrow = deficient_band(3, 6, 9, 10, 13);
    REQUIRE(narrow.items.size() == 1);
    CHECK(narrow.items[0] == PathForest({10, 13, 13}));
}

TEST_CASE("candidate generation covers the known deficient forests above it") {
    // Level (3, 7) candidates at bound 8, built from the (3, 6) deficient lists.
    auto cand = candidates_for_level(3, 7, 8);
    CHECK(cand.contains(PathForest({8, 15, 26})));
    for (const auto& t : cand.items) {
        CHECK(t.total() == 49);
        CHECK(t.shortest() >= 8);
    }
    // Completeness: every deficient forest at the child level is a candidate.
    auto child = classify_level(3, 7, 8);
    for (const auto& t : child.deficient.items) CHECK(cand.contains(t));

    auto cand8 = candidates_for_level(3, 8, 8);
    auto child8 = classify_level(3, 8, 8);
    CHECK(child8.deficient.items.size() == 1);  // (17,17,30)
    for (const auto& t : child8.deficient.items) CHECK(cand8.contains(t));
}

TEST_CASE("certify_candidates disposes of a full candidate set") {
    auto cand = candidates_for_level(3, 7, 8);
    auto prev = classify_level(3, 6, 8);
    std::vector<const ForestList*> refs{&prev.deficient};
    auto cert = certify_candidates(cand, kKnownL, refs);
    CHECK(cert.undecided.empty());
    CHECK(cert.deficient_not_impossible.empty());

    std::vector<PathForest> imp = cert.impossibly_burnable;
    std::sort(imp.begin(), imp.end());
    std::vector<PathForest> expect{PathForest({8, 15, 26}), PathForest({15, 15, 19}),
                                   PathForest({15, 17, 17})};
    CHECK(imp == expect);
    for (const auto& [t, reason] : cert.well_burnable) {
        CHECK_FALSE(reason.empty());
        CHECK(oracle_decide_exact(t).has_value());
    }

    // A starved fallback budget leaves hard cases undecided, never misfiled.
    auto starved = certify_candidates(cand, {}, {}, 1);
    CHECK(starved.deficient_not_impossible.empty());
    std::vector<PathForest> imp2 = starved.impossibly_burnable;
    std::sort(imp2.begin(), imp2.end());
    CHECK(imp2 == expect);
}

TEST_CASE("delta_search finds deficient-but-not-impossible forests") {
    auto res = delta_search(3, 3, 4);
    CHECK(std::find(res.items.begin(), res.items.end(), PathForest({3, 3, 3})) !=
          res.items.end());
    for (const auto& t : res.items) {
        CHECK_FALSE(decide_exact(t).has_value());
        CHECK_FALSE(impossibility_report(t).verdict);
        CHECK(t.shortest() >= 3);
    }

    // Nothing deficient survives at l_1 >= 26 for four paths.
    auto empty = delta_search(4, 26, 13);
    CHECK(empty.items.empty());
}

TEST_CASE("table1_row small side, with list caching") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("burnlab-pipe-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    auto row = table1_row(18, dir.string());
    CHECK(row.well == 2);
    CHECK(row.deficient == 0);

    // Second call reads the cache and agrees.
    auto again = table1_row(18, dir.string());
    CHECK(again.well == 2);
    CHECK(again.deficient == 0);
    fs::remove_all(dir);
}
