#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <set>

#include "bilform/resolving.hpp"

using namespace bilform;

namespace {

GraphSpec h(std::uint32_t p, std::uint32_t n, std::uint32_t d) {
    return GraphSpec(make_field(p, 1), n, d);
}

// all hyperplanes of w, by brute force over spanned sets of basis combinations
std::vector<Subspace> all_hyperplanes(const Subspace& w) {
    const Field& k = *w.field();
    const std::uint64_t q = k.q();
    std::uint64_t combos = 1;
    for (std::uint32_t i = 0; i < w.dim(); ++i) combos *= q;

    std::set<std::vector<code_t>> seen;
    std::vector<Subspace> out;
    // enumerate (dim-1)-subsets of vectors by picking dim-1 independent vectors
    std::vector<std::vector<code_t>> elems;
    for (std::uint64_t pick = 1; pick < combos; ++pick) {
        std::vector<code_t> v(w.ambient(), 0);
        std::uint64_t tmp = pick;
        for (std::uint32_t r = 0; r < w.dim(); ++r) {
            code_t coef = static_cast<code_t>(tmp % q);
            tmp /= q;
            for (std::uint32_t c = 0; c < w.ambient(); ++c)
                v[c] = k.add(v[c], k.mul(coef, w.basis().at(r, c)));
        }
        elems.push_back(std::move(v));
    }
    const std::uint32_t hdim = w.dim() - 1;
    std::vector<std::size_t> idx(hdim);
    auto try_tuple = [&](const std::vector<std::size_t>& tuple) {
        std::vector<std::vector<code_t>> rows;
        for (std::size_t i : tuple) rows.push_back(elems[i]);
        Subspace s = Subspace::from_generators(
            Mat::from_rows(w.field(), w.ambient(), rows));
        if (s.dim() == hdim && seen.insert(s.basis().data()).second) out.push_back(s);
    };
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        if (depth == hdim) {
            try_tuple(idx);
            return;
        }
        for (std::size_t i = start; i < elems.size(); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

TEST_CASE("hyperplanes avoiding a line: plane case") {
    FieldPtr f2 = make_field(2, 1);
    Subspace w = Subspace::coordinate_prefix(f2, 3, 2);  // a plane
    Subspace line = Subspace::from_generators(Mat::from_rows(f2, 3, {{1, 0, 0}}));
    std::vector<Subspace> planes = hyperplanes_avoiding(w, line);
    REQUIRE(planes.size() == 2);  // 3 lines in the plane, one excluded
    for (const Subspace& u : planes) {
        CHECK(intersect_dim(u, line) == 0);
        CHECK(sum(u, line) == w);
    }
    CHECK(!(planes[0] == planes[1]));
}

TEST_CASE("hyperplanes avoiding a line: 4 of the 7 planes of a 3-space") {
    FieldPtr f2 = make_field(2, 1);
    Subspace w = Subspace::coordinate_prefix(f2, 4, 3);
    Subspace line = Subspace::from_generators(Mat::from_rows(f2, 4, {{1, 1, 0, 0}}));

    std::vector<Subspace> got = hyperplanes_avoiding(w, line);
    REQUIRE(got.size() == 4);

    std::vector<Subspace> brute = all_hyperplanes(w);
    REQUIRE(brute.size() == 7);
    std::set<std::vector<code_t>> expect;
    for (const Subspace& u : brute)
        if (intersect_dim(u, line) == 0) expect.insert(u.basis().data());
    REQUIRE(expect.size() == 4);

    std::set<std::vector<code_t>> got_keys;
    for (const Subspace& u : got) {
        CHECK(w.contains(u));
        got_keys.insert(u.basis().data());
    }
    CHECK(got_keys == expect);

    CHECK_THROWS_AS(hyperplanes_avoiding(w, Subspace::from_generators(Mat::from_rows(
                                                f2, 4, {{0, 0, 0, 1}}))),
                    std::invalid_argument);  // line outside w
}

TEST_CASE("landmark family sizes match the two construction branches") {
    CHECK(build_landmarks(h(2, 4, 2)).set.items.size() == 32);   // q^{n+d-1}
    CHECK(build_landmarks(h(2, 2, 2)).set.items.size() == 16);   // q^{n+d}
    CHECK(build_landmarks(h(2, 3, 2)).set.items.size() == 32);   // n = d+1
    CHECK(build_landmarks(h(3, 2, 2)).set.items.size() == 81);
    CHECK_THROWS_AS(build_landmarks(h(2, 2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(build_landmarks(h(2, 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(build_landmarks(h(2, 5, 3), 64), cap_exceeded);
}

TEST_CASE("wide-case construction frame") {
    Construction c = build_landmarks(h(2, 4, 2));
    const ConstructionContext& ctx = c.context;
    CHECK(ctx.case_tag == 1);
    CHECK(ctx.anchor.dim() == 3);                  // dim n-1
    CHECK(ctx.fixed_n.contains(ctx.anchor));       // anchor sits inside N
    CHECK(ctx.fixed_n == distinguished_subspace(ctx.graph));
    REQUIRE(ctx.blocks.size() == 8);               // q^{n-1}
    for (const Block& b : ctx.blocks) {
        CHECK(b.space.dim() == 3);                 // d+1
        CHECK(b.line.dim() == 1);
        CHECK(b.space.contains(b.line));
        CHECK(intersect(b.space, ctx.fixed_n) == b.line);  // the W cap N line
        CHECK(sum(b.space, ctx.fixed_n).dim() == 6);       // W + N is everything
    }
}

TEST_CASE("near-square construction frame") {
    Construction c = build_landmarks(h(2, 2, 2));
    const ConstructionContext& ctx = c.context;
    CHECK(ctx.case_tag == 2);
    CHECK(ctx.anchor.dim() == 1);
    CHECK(ctx.fixed_n.contains(ctx.anchor));
    REQUIRE(ctx.blocks.size() == 4);  // q^n
    for (const Block& b : ctx.blocks) {
        CHECK(b.space.dim() == 3);
        CHECK(b.line == ctx.anchor);
        CHECK(b.space.contains(b.line));
    }
}

TEST_CASE("landmarks are distinct vertices avoiding N, with provenance intact") {
    for (GraphSpec g : {h(2, 4, 2), h(2, 2, 2), h(3, 2, 2)}) {
        Construction c = build_landmarks(g);
        std::set<std::vector<code_t>> keys;
        for (std::size_t i = 0; i < c.set.items.size(); ++i) {
            const Landmark& lm = c.set.items[i];
            const Block& blk = c.context.blocks[lm.block];
            Subspace u = subspace_of(g, lm.vertex);
            CHECK(u.dim() == g.d);
            CHECK(blk.space.contains(u));
            CHECK(intersect_dim(u, blk.line) == 0);
            CHECK(intersect_dim(u, c.context.fixed_n) == 0);
            keys.insert(lm.vertex.data());
            REQUIRE(lm.functional.size() == g.d);
        }
        CHECK(keys.size() == c.set.items.size());

        // provenance recomputes to the same subspace
        const Landmark& probe = c.set.items[c.set.items.size() / 2];
        const Block& blk = c.context.blocks[probe.block];
        std::vector<Subspace> planes = hyperplanes_avoiding(blk.space, blk.line);
        std::uint64_t code = 0;
        for (code_t digit : probe.functional) code = code * g.q() + digit;
        CHECK(subspace_of(g, probe.vertex) == planes[code]);
    }
}

TEST_CASE("construction is deterministic") {
    Construction a = build_landmarks(h(2, 3, 2));
    Construction b = build_landmarks(h(2, 3, 2));
    REQUIRE(a.set.items.size() == b.set.items.size());
    for (std::size_t i = 0; i < a.set.items.size(); ++i)
        CHECK(a.set.items[i].vertex == b.set.items[i].vertex);
}

TEST_CASE("signatures") {
    GraphSpec g = h(2, 2, 2);
    Construction c = build_landmarks(g);
    Mat zero(g.field, 2, 2);
    std::vector<std::uint32_t> sig = signature(g, zero, c.set);
    REQUIRE(sig.size() == 16);
    for (std::size_t k = 0; k < sig.size(); ++k) {
        CHECK(sig[k] <= g.diameter());
        // distance from the zero matrix is the rank of the landmark matrix
        CHECK(sig[k] == rank_of(c.set.items[k].vertex));
    }
    // a landmark's own signature has a zero at its position
    std::vector<std::uint32_t> own = signature(g, c.set.items[3].vertex, c.set);
    CHECK(own[3] == 0);
}

TEST_CASE("verify_resolving verdicts") {
    GraphSpec g = h(2, 2, 2);
    Construction c = build_landmarks(g);

    Certificate good = verify_resolving(c.set);
    CHECK(good.resolving);
    CHECK(!good.counterexample.has_value());
    CHECK(good.stats.vertices_checked == 16);

    // the empty landmark set cannot resolve two or more vertices
    Certificate empty = verify_resolving(g, {});
    CHECK(!empty.resolving);
    REQUIRE(empty.counterexample.has_value());
    CHECK(empty.counterexample->first == 0);
    CHECK(empty.counterexample->second == 1);

    // every vertex as a landmark always resolves
    std::vector<Mat> all;
    for (std::uint64_t i = 0; i < 16; ++i) all.push_back(vertex_matrix(g, i));
    CHECK(verify_resolving(g, all).resolving);

    // a single landmark collides, and the counterexample re-checks
    std::vector<Mat> lone{vertex_matrix(g, 5)};
    Certificate bad = verify_resolving(g, lone);
    CHECK(!bad.resolving);
    REQUIRE(bad.counterexample.has_value());
    auto [u, v] = *bad.counterexample;
    CHECK(u != v);
    CHECK(distance(g, vertex_matrix(g, u), lone[0]) ==
          distance(g, vertex_matrix(g, v), lone[0]));
}

TEST_CASE("worker count does not change the certificate") {
    GraphSpec g = h(2, 3, 2);
    Construction c = build_landmarks(g);
    Certificate one = verify_resolving(c.set, 1);
    Certificate four = verify_resolving(c.set, 4);
    CHECK(one.resolving == four.resolving);
    CHECK(one.counterexample == four.counterexample);

    std::vector<Mat> lone{vertex_matrix(g, 9)};
    Certificate a = verify_resolving(g, lone, 1);
    Certificate b = verify_resolving(g, lone, 3);
    CHECK(a.resolving == b.resolving);
    CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("separating witnesses, exhaustive on the 120 pairs of H_2(2,2)") {
    GraphSpec g = h(2, 2, 2);
    Construction c = build_landmarks(g);
    std::map<WitnessBranch, int> branches;
    for (std::uint64_t i = 0; i < 16; ++i)
        for (std::uint64_t j = i + 1; j < 16; ++j) {
            Mat a = vertex_matrix(g, i), b = vertex_matrix(g, j);
            Witness w = find_separating_landmark(a, b, c.context, c.set);
            ++branches[w.branch];
            REQUIRE(w.landmark_pos < c.set.items.size());
            CHECK(subspace_of(g, c.set.items[w.landmark_pos].vertex) == w.separator);
            // independent re-check of the separation
            CHECK(intersect_dim(subspace_of(g, a), w.separator) == w.dim_a);
            CHECK(intersect_dim(subspace_of(g, b), w.separator) == w.dim_b);
            CHECK(w.dim_a != w.dim_b);
        }
    CHECK(branches.size() >= 2);  // both equal-trace and gap branches occur here

    Mat same = vertex_matrix(g, 7);
    CHECK_THROWS_AS(find_separating_landmark(same, same, c.context, c.set),
                    std::invalid_argument);
}

TEST_CASE("the off-span branch builds a landmark through alpha + theta") {
    GraphSpec g = h(2, 3, 2);  // blocks of dimension 3 leave room for independent traces
    Construction c = build_landmarks(g);
    const Field& k = *g.field;
    bool seen = false;
    for (std::uint64_t i = 0; i < 64 && !seen; ++i)
        for (std::uint64_t j = i + 1; j < 64; ++j) {
            Witness w = find_separating_landmark(vertex_matrix(g, i), vertex_matrix(g, j),
                                                 c.context, c.set);
            if (w.branch != WitnessBranch::off_span) continue;
            seen = true;
            REQUIRE(!w.alpha.empty());
            std::vector<code_t> mixed(w.alpha.size());
            for (std::size_t t = 0; t < mixed.size(); ++t)
                mixed[t] = k.add(w.alpha[t], w.theta[t]);
            CHECK(w.separator.contains(mixed));
            CHECK(!w.separator.contains(w.alpha));
            CHECK(!w.separator.contains(w.theta));
            break;
        }
    CHECK(seen);
}
