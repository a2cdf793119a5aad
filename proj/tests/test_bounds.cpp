#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "bilform/bounds.hpp"
#include "bilform/resolving.hpp"

using namespace bilform;

namespace {

GraphSpec h(std::uint32_t p, std::uint32_t n, std::uint32_t d) {
    return GraphSpec(make_field(p, 1), n, d);
}

// Counts the 2-dimensional subspaces of F_2^m by deduplicating spanned sets;
// no echelon forms involved.
std::uint64_t count_planes_brute(std::uint32_t m) {
    const std::uint32_t total = 1u << m;
    std::set<std::set<std::uint32_t>> spans;
    for (std::uint32_t u = 1; u < total; ++u)
        for (std::uint32_t v = u + 1; v < total; ++v) {
            if (v == (u ^ v)) continue;
            std::set<std::uint32_t> span{0, u, v, u ^ v};
            if (span.size() == 4) spans.insert(std::move(span));
        }
    return spans.size();
}

}  // namespace

TEST_CASE("gaussian binomials against brute subspace counts") {
    CHECK(gaussian(5, 0, 2).to_u64() == 1);
    CHECK(gaussian(2, 1, 2).to_u64() == 3);
    CHECK(gaussian(4, 2, 2).to_u64() == count_planes_brute(4));  // 35
    CHECK(gaussian(4, 2, 2).to_u64() == 35);
    CHECK(gaussian(5, 2, 2).to_u64() == count_planes_brute(5));
    CHECK_THROWS_AS(gaussian(3, 4, 2), std::invalid_argument);
}

TEST_CASE("theorem bound branches") {
    CHECK(theorem_bound(2, 4, 2).to_u64() == 32);    // n >= d+2: q^{n+d-1}
    CHECK(theorem_bound(2, 4, 4).to_u64() == 256);   // otherwise: q^{n+d}
    CHECK(theorem_bound(3, 3, 2).to_u64() == 243);   // n = d+1 is the second branch
    CHECK(theorem_bound(2, 2, 2).to_u64() == 16);
    CHECK_THROWS_AS(theorem_bound(2, 3, 1), std::invalid_argument);  // d < 2
    CHECK_THROWS_AS(theorem_bound(2, 2, 3), std::invalid_argument);  // n < d
}

TEST_CASE("the general bound, natural log") {
    // direct evaluation: 4 sqrt(2^16) ln(2^16) = 1024 * 16 ln 2
    const double direct = 4.0 * 256.0 * 16.0 * std::log(2.0);
    CHECK(babai_general(2, 4, 4) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(babai_general(2, 4, 4) == doctest::Approx(11356.5234).epsilon(1e-6));
    CHECK(babai_general(2, 4, 4) > theorem_bound(2, 4, 4).to_double());

    // strictly increasing in n*d for fixed q
    double prev = 0.0;
    for (std::uint32_t nd : {4u, 6u, 8u, 9u, 12u, 16u, 20u}) {
        double cur = babai_general(2, nd, 1);
        CHECK(cur > prev);
        prev = cur;
    }

    // base conversion just rescales
    CHECK(babai_general(2, 4, 4, LogBase::two) ==
          doctest::Approx(babai_general(2, 4, 4) / std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("the stronger bound and its largest rank class") {
    BabaiStrong bs = babai_strong(2, 2, 2);
    CHECK(bs.largest_class.to_u64() == 9);  // max of [1, 9, 6]
    const double direct = 4.0 * (16.0 / 7.0) * std::log(16.0);
    CHECK(bs.bound == doctest::Approx(direct).epsilon(1e-12));
    CHECK(bs.bound == doctest::Approx(25.35).epsilon(1e-3));

    // the rank-0 class is always the single zero matrix
    for (auto [q, n, d] : {std::tuple{2ull, 4u, 2u}, {3ull, 2u, 2u}, {2ull, 5u, 3u}})
        CHECK(rank_class_sizes(q, n, d)[0].to_u64() == 1);
}

TEST_CASE("largest class matches rank_class_sizes on the acceptance specs") {
    for (auto [q, n, d] : {std::tuple{2ull, 4u, 2u}, {2ull, 5u, 2u}, {2ull, 5u, 3u},
                           {2ull, 2u, 2u}, {2ull, 3u, 2u}, {2ull, 3u, 3u},
                           {2ull, 4u, 3u}, {3ull, 2u, 2u}}) {
        std::vector<BigUint> classes = rank_class_sizes(q, n, d);
        BigUint expect = classes[0];
        for (const BigUint& c : classes)
            if (c > expect) expect = c;
        CHECK(babai_strong(q, n, d).largest_class == expect);
    }
}

TEST_CASE("greedy baseline") {
    CHECK(greedy_resolving(h(2, 1, 0)).empty());  // single vertex

    // H_2(2,1) is K_4: three landmarks are needed and found
    GraphSpec k4 = h(2, 2, 1);
    std::vector<std::uint64_t> picks = greedy_resolving(k4);
    CHECK(picks.size() == 3);
    std::vector<Mat> lms;
    for (std::uint64_t i : picks) lms.push_back(vertex_matrix(k4, i));
    CHECK(verify_resolving(k4, lms).resolving);

    GraphSpec g22 = h(2, 2, 2);
    std::vector<std::uint64_t> picks22 = greedy_resolving(g22);
    CHECK(picks22.size() <= 16);
    std::vector<Mat> lms22;
    for (std::uint64_t i : picks22) lms22.push_back(vertex_matrix(g22, i));
    CHECK(verify_resolving(g22, lms22).resolving);

    // deterministic output
    CHECK(greedy_resolving(g22) == picks22);
}

TEST_CASE("exact minimum resolving sets") {
    CHECK(exact_min_resolving(h(2, 1, 1), 4) == 1);  // K_2
    CHECK(exact_min_resolving(h(2, 2, 1), 4) == 3);  // K_4: q^n - 1
    CHECK(!exact_min_resolving(h(2, 2, 1), 2).has_value());  // k_max too small

    GraphSpec g22 = h(2, 2, 2);
    auto exact = exact_min_resolving(g22, 16);
    REQUIRE(exact.has_value());
    std::size_t greedy_size = greedy_resolving(g22).size();
    CHECK(*exact <= greedy_size);
    CHECK(greedy_size <= 16);
    MESSAGE("exact minimum resolving set size of H_2(2,2): ", *exact,
            ", greedy: ", greedy_size);
}

TEST_CASE("comparison report") {
    CHECK(compare_report({}).empty());

    BoundsRow row = bounds_row(2, 2, 2);
    CHECK(row.theorem.to_u64() == 16);
    CHECK(row.babai_str == doctest::Approx(25.35).epsilon(1e-3));
    CHECK(row.best == "theorem");

    // q = 2, 4 <= d <= n <= 6: the theorem bound beats the general bound
    std::vector<GridPoint> grid;
    for (std::uint32_t d = 4; d <= 6; ++d)
        for (std::uint32_t n = d; n <= 6; ++n) grid.push_back({2, n, d});
    for (const BoundsRow& r : compare_report(grid)) {
        CHECK(r.theorem.to_double() < r.babai_gen);
        CHECK(r.best != "babai_general");
    }
}

TEST_CASE("construction size equals the theorem bound on both branches") {
    for (GraphSpec g : {h(2, 4, 2), h(2, 2, 2), h(2, 3, 2), h(3, 2, 2)}) {
        Construction c = build_landmarks(g);
        CHECK(BigUint(c.set.items.size()) == theorem_bound(g.q(), g.n, g.d));
    }
}
