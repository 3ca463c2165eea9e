#include <doctest.h>

#include "polyforge/bounce.hpp"
#include "polyforge/enumerate.hpp"
#include "polyforge/verify.hpp"

using namespace polyforge;

namespace {

Polyomino square2() { return normalize({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
Polyomino hbar(int n) {
    std::vector<std::pair<int, int>> raw;
    for (int i = 0; i < n; ++i) raw.push_back({i, 0});
    return normalize(raw);
}
Polyomino vbar(int n) {
    std::vector<std::pair<int, int>> raw;
    for (int j = 0; j < n; ++j) raw.push_back({0, j});
    return normalize(raw);
}

} // namespace

TEST_SUITE("bounce") {

TEST_CASE("bounce_path hand traces") {
    BouncePath r = bounce_path(square2(), {0, 0}, {1, 1}, StepDir::east);
    CHECK(r.segments == std::vector<std::pair<StepDir, int>>{{StepDir::east, 1}, {StepDir::north, 1}});
    CHECK(r.changes() == 1);

    BouncePath straight = bounce_path(hbar(3), {0, 0}, {2, 0}, StepDir::east);
    CHECK(straight.segments == std::vector<std::pair<StepDir, int>>{{StepDir::east, 2}});
    CHECK(straight.changes() == 0);

    BouncePath degenerate = bounce_path(square2(), {1, 1}, {1, 1}, StepDir::east);
    CHECK(degenerate.segments.empty());
    CHECK(degenerate.changes() == 0);

    // the tail direction costs a change when no movement in it is possible
    BouncePath tail = bounce_path(vbar(3), {0, 0}, {0, 2}, StepDir::east);
    CHECK(tail.segments == std::vector<std::pair<StepDir, int>>{{StepDir::north, 2}});
    CHECK(tail.changes() == 1);

    CHECK_THROWS_AS(bounce_path(square2(), {0, 0}, {5, 5}, StepDir::east), error);
    CHECK_THROWS_AS(bounce_path(square2(), {1, 1}, {0, 0}, StepDir::east), error);
}

TEST_CASE("minimal_bounce tie goes to the east-first path") {
    BouncePath m = minimal_bounce(square2(), {0, 0}, {1, 1});
    CHECK(m.first_direction == StepDir::east);
    CHECK(m.changes() == 1);
    // straight runs win regardless of the tie rule
    CHECK(minimal_bounce(vbar(3), {0, 0}, {0, 2}).changes() == 0);
    CHECK(minimal_bounce(hbar(3), {0, 0}, {2, 0}).changes() == 0);
}

TEST_CASE("cell_degree") {
    CHECK(cell_degree(square2(), {0, 0}) == 0);
    CHECK(cell_degree(square2(), {1, 1}) == 1);
    CHECK(cell_degree(square2(), {1, 0}) == 0);
    CHECK(cell_degree(square2(), {0, 1}) == 0);
    CHECK_THROWS_AS(cell_degree(square2(), {3, 3}), error);
}

TEST_CASE("degree_directed on frozen shapes") {
    CHECK(degree_directed(hbar(4)) == 0);
    CHECK(degree_directed(vbar(4)) == 0);
    CHECK(degree_directed(square2()) == 1);
    // the south-west L needs one change between its two arms even though
    // every cell is straight-reachable from the root
    CHECK(degree_directed(normalize({{0, 0}, {1, 0}, {0, 1}})) == 1);
}

TEST_CASE("degree oracles agree at small scale") {
    CheckResult r = check_degree_agreement(8);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("bounce paths beat exhaustive monotone path search") {
    CheckResult r = check_bounce_optimality(7);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("difference dichotomy between r and u") {
    CheckResult r = check_difference_u_r(8);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("root-to-corner bounce dominates all pairs") {
    CheckResult r = check_max_bounce(7);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("skeleton of the unit square and the 2x2 square") {
    Skeleton s1 = bounce_skeleton(normalize({{0, 0}}));
    CHECK(s1.k == 0);
    CHECK(s1.flat);
    CHECK(s1.M == 0);
    CHECK(s1.crossings == std::vector<std::pair<Cell, int>>{{{0, 0}, 0}});

    Skeleton s2 = bounce_skeleton(square2());
    CHECK(s2.k == 1);
    CHECK(s2.flat);
    CHECK(s2.M == 1);
    CHECK(s2.crossings == std::vector<std::pair<Cell, int>>{{{0, 0}, 0}, {{1, 1}, 1}});

    // bars are not flat once they have length: the paths join at S
    Skeleton s3 = bounce_skeleton(vbar(3));
    CHECK(s3.k == 0);
    CHECK_FALSE(s3.flat);
    CHECK(s3.J == Cell{0, 0});
}

TEST_CASE("skeleton labels and zones") {
    CHECK_MESSAGE(check_skeleton_labels(8).pass, "labels");
    CHECK_MESSAGE(check_label_zones(7).pass, "zones");
}

TEST_CASE("region_r on the 2x2 square") {
    auto region = region_r(square2());
    CHECK(region == std::vector<Cell>{{1, 1}});
    CHECK_THROWS_AS(region_r(normalize({{0, 0}})), error); // degree 0
}

TEST_CASE("region_r properties") {
    CheckResult r = check_region_r(8);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("lambda_r on the 2x2 square and in general") {
    CHECK(lambda_r(square2()).word == "eses");
    CHECK_THROWS_AS(lambda_r(vbar(3)), error); // not flat
    CheckResult r = check_lambda_r(8);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("weakly_above profiles") {
    CHECK(weakly_above(CutPath{"eess"}, CutPath{"eses"}));
    CHECK_FALSE(weakly_above(CutPath{"eses"}, CutPath{"eess"}));
    CHECK(weakly_above(CutPath{"eses"}, CutPath{"eses"}));
    CHECK_FALSE(weakly_above(CutPath{"ees"}, CutPath{"eess"})); // different step counts
}

TEST_CASE("is_directed_k matches the degree") {
    CHECK(is_directed_k(hbar(5), 0));
    CHECK(is_directed_k(vbar(2), 0));
    CHECK_FALSE(is_directed_k(normalize({{0, 0}, {1, 0}, {0, 1}}), 0));
    CHECK(is_directed_k(normalize({{0, 0}, {1, 0}, {0, 1}}), 1));
    CheckResult r = check_charact_k_directed(8);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("the characterization example with cut e3sese3s") {
    // a flat parallelogram of degree 3 whose rectangle-removal cut is
    // e2s2e5s; carving e3sese3s into it exceeds 2-convexity
    std::vector<std::pair<int, int>> raw;
    const int bottoms[9] = {0, 0, 1, 1, 2, 2, 2, 2, 2};
    const int tops[9] = {1, 2, 4, 4, 4, 4, 4, 4, 4};
    for (int i = 0; i < 9; ++i)
        for (int j = bottoms[i]; j <= tops[i]; ++j) raw.push_back({i, j});
    Polyomino p = normalize(raw);
    REQUIRE(classify(p).parallelogram);
    CHECK(alpha_beta(p) == std::pair<int, int>{6, 2});
    Skeleton sk = bounce_skeleton(p);
    CHECK(sk.flat);
    CHECK(sk.k == 3);
    CHECK(lambda_r(p).word == "eesseeeees"); // e2 s2 e5 s

    Polyomino d = assemble(p, CutPath{"eeeseseees"}); // e3 s e s e3 s
    CHECK(complete_to_parallelogram(d) == p);
    CHECK_FALSE(weakly_above(lambda_r(p), cut_of(d)));
    CHECK_FALSE(is_directed_k(d, 2));
    CHECK(is_directed_k(d, 3));
    CHECK(degree_directed(d) == 3);
}

TEST_CASE("disjoint union of the relaxed class") {
    CheckResult r = check_include_dk(8);
    CHECK_MESSAGE(r.pass, r.detail);
}

} // TEST_SUITE
