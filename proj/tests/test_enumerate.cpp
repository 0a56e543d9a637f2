#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <unistd.h>

#include "burnlab/enumerate.hpp"
#include "burnlab/list_store.hpp"
#include "burnlab/oracle.hpp"

using namespace burnlab;

TEST_CASE("for_each_partition") {
    std::vector<std::vector<Order>> got;
    for_each_partition(9, 3, 1, 9, [&](const std::vector<Order>& p) { got.push_back(p); });
    // 1+1+7, 1+2+6, 1+3+5, 1+4+4, 2+2+5, 2+3+4, 3+3+3
    CHECK(got.size() == 7);
    for (const auto& p : got) {
        CHECK(p.size() == 3);
        CHECK(p[0] <= p[1]);
        CHECK(p[1] <= p[2]);
        CHECK(p[0] + p[1] + p[2] == 9);
    }
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());

    got.clear();
    for_each_partition(9, 3, 2, 4, [&](const std::vector<Order>& p) { got.push_back(p); });
    CHECK(got == std::vector<std::vector<Order>>{{2, 3, 4}, {3, 3, 3}});

    got.clear();
    for_each_partition(5, 3, 2, 9, [&](const std::vector<Order>& p) { got.push_back(p); });
    CHECK(got.empty());
}

TEST_CASE("seed lists") {
    for (int n = 1; n <= 5; ++n) {
        ForestList seed = seed_list(n);
        REQUIRE(seed.items.size() == 1);
        std::vector<Order> expect;
        for (int i = 0; i < n; ++i) expect.push_back(2 * i + 1);
        CHECK(seed.items[0] == PathForest(expect));
        CHECK(seed.n == n);
        CHECK(seed.m == n);
    }
}

TEST_CASE("one extension step from the two-path seed") {
    auto fam = build_lists(2, 3);
    const ForestList& level = fam.well.at({2, 3});
    REQUIRE(level.items.size() == 3);
    CHECK(level.items[0] == PathForest({1, 8}));
    CHECK(level.items[1] == PathForest({3, 6}));
    CHECK(level.items[2] == PathForest({4, 5}));
}

TEST_CASE("recursive lists equal the oracle at small scale") {
    auto fam = build_lists(3, 7);
    for (int k = 1; k <= 3; ++k) {
        for (int m = k; m <= 7; ++m) {
            const ForestList& built = fam.well.at({k, m});
            ForestList truth = oracle_enumerate_well(k, m);
            CHECK(built.items == truth.items);
        }
    }
}

TEST_CASE("deficient complements") {
    auto fam = build_lists(3, 9);
    ForestList def6 = deficient_complement(fam.well.at({3, 6}), 8);
    REQUIRE(def6.items.size() == 2);
    CHECK(def6.items[0] == PathForest({8, 13, 15}));
    CHECK(def6.items[1] == PathForest({10, 13, 13}));
    CHECK(def6.kind == ListKind::Deficient);
    CHECK(def6.l1_min == 8);

    // At the threshold floor the three-path story is clean at sides 7..9 ...
    for (int m = 7; m <= 9; ++m)
        CHECK(deficient_complement(fam.well.at({3, m}), 18).items.empty());
    // ... but not just below it: side 8 still has a straggler.
    ForestList below = deficient_complement(fam.well.at({3, 8}), 17);
    REQUIRE(below.items.size() == 1);
    CHECK(below.items[0] == PathForest({17, 17, 30}));
}

TEST_CASE("item cap raises resource_limit_error") {
    BuildOptions opts;
    opts.item_cap = 2;
    CHECK_THROWS_AS(build_lists(3, 8, opts), resource_limit_error);
}

TEST_CASE("l1 filter views") {
    BuildOptions opts;
    opts.l1_filter = 8;
    auto fam = build_lists(3, 6, opts);
    const ForestList& view = fam.filtered.at({3, 6});
    for (const auto& t : view.items) CHECK(t.shortest() >= 8);
    ForestList manual = filter_l1(fam.well.at({3, 6}), 8);
    CHECK(view.items == manual.items);
    CHECK_FALSE(view.items.empty());
}

TEST_CASE("persisted levels round-trip through the list store") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("burnlab-enum-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    BuildOptions opts;
    opts.persist_dir = dir.string();
    auto fam = build_lists(2, 5, opts);
    std::string stem = list_stem(dir.string(), 2, 5, ListKind::Well, 0);
    REQUIRE(list_exists(stem));
    ForestList back = read_list(stem);
    CHECK(back.items == fam.well.at({2, 5}).items);
    fs::remove_all(dir);
}
