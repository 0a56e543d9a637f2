#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "burnlab/solver.hpp"

using namespace burnlab;

namespace {

// Checks an exact certificate by hand, independent of verify_certificate.
void check_exact_certificate(const PathForest& t, const BurnCertificate& c) {
    REQUIRE(c.blocks.size() == static_cast<std::size_t>(t.n()));
    std::vector<Order> used;
    for (int i = 0; i < t.n(); ++i) {
        Order sum = 0;
        for (Order v : c.blocks[i]) {
            CHECK(v % 2 == 1);
            CHECK(v >= 1);
            CHECK(v <= 2 * static_cast<Order>(c.m) - 1);
            used.push_back(v);
            sum += v;
        }
        CHECK(sum == t.orders()[i]);
    }
    std::sort(used.begin(), used.end());
    CHECK(static_cast<int>(used.size()) == c.m);
    CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
}

PathForest random_forest(std::mt19937_64& rng, Order total, int n) {
    std::vector<Order> cuts{0, total};
    std::uniform_int_distribution<Order> cut_dist(1, total - 1);
    std::set<Order> seen{0, total};
    while (static_cast<int>(seen.size()) < n + 1) seen.insert(cut_dist(rng));
    std::vector<Order> parts;
    Order prev = -1;
    for (Order c : seen) {
        if (prev >= 0) parts.push_back(c - prev);
        prev = c;
    }
    return PathForest(parts);
}

}  // namespace

TEST_CASE("decide_exact fixtures") {
    auto cert = decide_exact(PathForest({1, 3, 5}));
    REQUIRE(cert.has_value());
    check_exact_certificate(PathForest({1, 3, 5}), *cert);
    CHECK(cert->m == 3);

    CHECK_FALSE(decide_exact(PathForest({8, 13, 15})).has_value());
    CHECK_FALSE(decide_exact(PathForest({10, 13, 13})).has_value());
    CHECK_FALSE(decide_exact(PathForest({3, 3, 3})).has_value());

    cert = decide_exact(PathForest({7, 9}));
    REQUIRE(cert.has_value());
    check_exact_certificate(PathForest({7, 9}), *cert);

    // Too many paths for the side: m = 2 but n = 3.
    CHECK_FALSE(decide_exact(PathForest({1, 1, 2})).has_value());

    CHECK_THROWS_AS(decide_exact(PathForest({2, 7, 8})), not_square_error);
}

TEST_CASE("decide_burnable covering fixtures") {
    // (2,7,7): order 16 is square but the forest is deficient at m=4;
    // covering at m=5 succeeds.
    PathForest t({2, 7, 7});
    CHECK_FALSE(decide_burnable(t, 4).has_value());
    auto cert = decide_burnable(t, 5);
    REQUIRE(cert.has_value());
    CHECK(cert->mode == BurnMode::Covering);
    CHECK(verify_certificate(t, *cert));

    CHECK_FALSE(decide_burnable(t, 2).has_value());  // m < n
    CHECK_FALSE(decide_burnable(PathForest({30}), 5).has_value());  // total > m^2
}

TEST_CASE("burning_number fixtures") {
    CHECK(burning_number(PathForest({3, 3, 3})).m == 4);
    CHECK(burning_number(PathForest({1})).m == 1);
    CHECK(burning_number(PathForest({2, 7, 7})).m == 5);
    auto res = burning_number(PathForest({8, 13, 15}));
    CHECK(res.m == 7);
    CHECK(verify_certificate(PathForest({8, 13, 15}), res.certificate));
}

TEST_CASE("single paths burn at ceil(sqrt(k))") {
    for (Order k = 1; k <= 400; ++k) {
        CHECK(burning_number(PathForest({k})).m == ceil_sqrt(k));
        CHECK(is_well_burnable(PathForest({k})).well);
    }
}

TEST_CASE("is_well_burnable fixtures") {
    CHECK(is_well_burnable(PathForest({1, 3, 5})).well);
    CHECK(is_well_burnable(PathForest({7, 9})).well);
    CHECK_FALSE(is_well_burnable(PathForest({8, 13, 15})).well);
    CHECK_FALSE(is_well_burnable(PathForest({2, 7, 7})).well);
    // Non-square order with a covering at the ceiling side.
    PathForest odd_total({2, 7, 8});  // total 17, ceil side 5
    auto res = is_well_burnable(odd_total);
    CHECK(res.well);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->mode == BurnMode::Covering);
    CHECK(verify_certificate(odd_total, *res.certificate));
    // More paths than the ceiling side allows.
    CHECK_FALSE(is_well_burnable(PathForest({1, 1, 1, 1, 1})).well);
}

TEST_CASE("verify_certificate fault detection") {
    PathForest t({7, 9});
    auto cert = decide_exact(t);
    REQUIRE(cert.has_value());
    CertFault fault = CertFault::None;
    CHECK(verify_certificate(t, *cert, &fault));
    CHECK(fault == CertFault::None);

    BurnCertificate bad = *cert;
    bad.blocks.pop_back();
    CHECK_FALSE(verify_certificate(t, bad, &fault));
    CHECK(fault == CertFault::BlockCount);

    bad = *cert;
    bad.blocks[0][0] += 100;
    CHECK_FALSE(verify_certificate(t, bad, &fault));
    CHECK(fault == CertFault::ValueOutOfRange);

    BurnCertificate even{4, BurnMode::Exact, {{7}, {5, 3, 1}}};
    even.blocks[1][1] = 4;
    CHECK_FALSE(verify_certificate(t, even, &fault));
    CHECK(fault == CertFault::ValueEven);

    // {7},{5,3,1} is valid for (7,9)?  7 != 7... build faults explicitly.
    BurnCertificate dup{4, BurnMode::Exact, {{7}, {7, 1, 1}}};
    CHECK_FALSE(verify_certificate(t, dup, &fault));
    CHECK(fault == CertFault::DuplicateValue);

    BurnCertificate mismatch{4, BurnMode::Exact, {{5}, {7, 3, 1}}};
    CHECK_FALSE(verify_certificate(t, mismatch, &fault));
    CHECK(fault == CertFault::SumMismatch);

    PathForest small({3, 5});
    BurnCertificate skip{3, BurnMode::Exact, {{3}, {5}}};
    CHECK_FALSE(verify_certificate(small, skip, &fault));
    CHECK(fault == CertFault::NotPartition);

    // Covering mode: unused values are fine, short sums are not.
    BurnCertificate cover{3, BurnMode::Covering, {{3}, {5}}};
    CHECK(verify_certificate(small, cover, &fault));
    BurnCertificate low{3, BurnMode::Covering, {{1}, {5}}};
    CHECK_FALSE(verify_certificate(small, low, &fault));
    CHECK(fault == CertFault::SumMismatch);
}

TEST_CASE("every positive decision carries a valid certificate") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> m_dist(2, 10);
    for (int iter = 0; iter < 1500; ++iter) {
        int m = m_dist(rng);
        std::uniform_int_distribution<int> n_dist(1, m);
        PathForest t = random_forest(rng, static_cast<Order>(m) * m, n_dist(rng));
        auto cert = decide_exact(t);
        if (cert) check_exact_certificate(t, *cert);
    }
}

TEST_CASE("covering is monotone in m and bounded by 2m-1 pieces") {
    std::mt19937_64 rng(1311);
    for (int iter = 0; iter < 400; ++iter) {
        std::uniform_int_distribution<Order> tot_dist(4, 60);
        Order total = tot_dist(rng);
        std::uniform_int_distribution<int> n_dist(1, std::min<Order>(4, total - 1));
        PathForest t = random_forest(rng, total, n_dist(rng));
        int m0 = burning_number(t).m;
        CHECK(m0 >= ceil_sqrt(total));
        if (m0 > std::max<Order>(t.n(), ceil_sqrt(total)))
            CHECK_FALSE(decide_burnable(t, m0 - 1).has_value());
        auto cert = decide_burnable(t, m0 + 1);
        REQUIRE(cert.has_value());
        CHECK(verify_certificate(t, *cert));
    }
}

TEST_CASE("decide_exact_limited reports Unknown only under tiny budgets") {
    // A 7-path forest of order 400 assembled from an explicit block partition
    // of {1,3,...,39}, hence well-burnable.
    PathForest hard({44, 49, 51, 52, 60, 68, 76});
    auto full = decide_exact_limited(hard, 50'000'000);
    CHECK(full.verdict == Verdict::Burnable);
    REQUIRE(full.certificate.has_value());
    check_exact_certificate(hard, *full.certificate);

    // The known deficient (not impossibly burnable) 7-path forest of order 400.
    PathForest witness({45, 45, 45, 45, 72, 74, 74});
    auto refuted = decide_exact_limited(witness, 500'000'000);
    CHECK(refuted.verdict == Verdict::NotBurnable);

    auto starved = decide_exact_limited(hard, 1);
    CHECK(starved.verdict == Verdict::Unknown);

    auto easy = decide_exact_limited(PathForest({1, 3, 5}), 1'000);
    CHECK(easy.verdict == Verdict::Burnable);
    auto no = decide_exact_limited(PathForest({8, 13, 15}), 1'000'000);
    CHECK(no.verdict == Verdict::NotBurnable);
}
