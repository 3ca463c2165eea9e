#include <doctest.h>

#include "polyforge/enumerate.hpp"
#include "polyforge/lattice.hpp"

using namespace polyforge;

namespace {

Polyomino unit_square() { return normalize({{0, 0}}); }
Polyomino square2() { return normalize({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
Polyomino sw_l() { return normalize({{0, 0}, {1, 0}, {0, 1}}); }

bool has_code(const error& e, errc c) { return e.code() == c; }

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("normalize translates and validates") {
    CHECK(unit_square().cells() == std::vector<Cell>{{0, 0}});
    CHECK(normalize({{5, 7}, {6, 7}}).cells() == std::vector<Cell>{{0, 0}, {1, 0}});
    CHECK(normalize({{-3, -9}, {-3, -8}}).cells() == std::vector<Cell>{{0, 0}, {0, 1}});
    CHECK_THROWS_WITH_AS(normalize({}), "normalize: no cells", error);
    CHECK_THROWS_AS(normalize({{0, 0}, {2, 0}}), error);
    CHECK_THROWS_AS(normalize({{0, 0}, {1, 1}}), error); // diagonal contact only
    CHECK_THROWS_AS(normalize({{0, 0}, {0, 0}}), error);
    try {
        normalize({{0, 0}, {2, 0}});
    } catch (const error& e) {
        CHECK(has_code(e, errc::disconnected));
    }
    try {
        normalize({{4, 4}, {4, 4}});
    } catch (const error& e) {
        CHECK(has_code(e, errc::duplicate_cell));
    }
}

TEST_CASE("normalize is idempotent") {
    for (int sp = 2; sp <= 7; ++sp)
        for_each_convex(sp, [&](const Polyomino& p) {
            std::vector<std::pair<int, int>> raw;
            for (const Cell& c : p.cells()) raw.push_back({c.i + 3, c.j + 11});
            CHECK(normalize(raw) == p);
        });
}

TEST_CASE("classify basics") {
    ClassReport unit = classify(unit_square());
    CHECK(unit.column_convex);
    CHECK(unit.row_convex);
    CHECK(unit.convex);
    CHECK(unit.directed);
    CHECK(unit.parallelogram);

    // the south-west L is the one non-parallelogram among the six directed
    // convex polyominoes of semi-perimeter 4
    ClassReport l = classify(sw_l());
    CHECK(l.convex);
    CHECK(l.directed);
    CHECK_FALSE(l.parallelogram);

    // no cell at the bounding box's south-west position
    ClassReport no_root = classify(normalize({{0, 1}, {1, 0}, {1, 1}}));
    CHECK(no_root.convex);
    CHECK_FALSE(no_root.directed);

    // the U pentomino has a gap in its top row
    ClassReport bend = classify(normalize({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}}));
    CHECK_FALSE(bend.row_convex);
    CHECK(bend.column_convex);
    CHECK_FALSE(bend.convex);
}

TEST_CASE("statistics on frozen shapes") {
    StatRecord s1 = statistics(unit_square());
    CHECK(s1.semi_perimeter == 2);
    CHECK(s1.area == 1);
    CHECK(s1.outside_corners == 4);
    CHECK(s1.inside_corners == 0);
    CHECK(s1.site_perimeter == 4);
    CHECK(s1.diagonal_symmetric);

    StatRecord s2 = statistics(square2());
    CHECK(s2.semi_perimeter == 4);
    CHECK(s2.area == 4);
    CHECK(s2.outside_corners == 4);
    CHECK(s2.inside_corners == 0);
    CHECK(s2.site_perimeter == 8);
    CHECK(s2.diagonal_symmetric);

    StatRecord s3 = statistics(sw_l());
    CHECK(s3.semi_perimeter == 4);
    CHECK(s3.area == 3);
    CHECK(s3.outside_corners == 5);
    CHECK(s3.inside_corners == 1);
    CHECK(s3.site_perimeter == 2 * 4 - 1);
    CHECK(s3.diagonal_symmetric); // transpose maps the L to itself
}

TEST_CASE("corner and site invariants over all convex shapes") {
    for (int sp = 2; sp <= 9; ++sp)
        for_each_convex(sp, [&](const Polyomino& p) {
            StatRecord s = statistics(p);
            CHECK(s.semi_perimeter == sp);
            CHECK(s.semi_perimeter == s.width + s.height);
            CHECK(s.outside_corners == s.inside_corners + 4);
            CHECK(s.site_perimeter + s.inside_corners == 2 * s.semi_perimeter);
            CHECK(s.area >= std::max(s.width, s.height));
        });
}

TEST_CASE("alpha_beta") {
    CHECK(alpha_beta(unit_square()) == std::pair<int, int>{0, 0});
    CHECK(alpha_beta(square2()) == std::pair<int, int>{1, 1});
    CHECK_THROWS_AS(alpha_beta(sw_l()), error);
}

TEST_CASE("complete_to_parallelogram") {
    CHECK(complete_to_parallelogram(sw_l()) == square2());
    CHECK(complete_to_parallelogram(square2()) == square2());
    for (int sp = 2; sp <= 9; ++sp)
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            CHECK(complete_to_parallelogram(p) == p);
        });
    CHECK_THROWS_AS(complete_to_parallelogram(normalize({{0, 1}, {1, 0}, {1, 1}})), error);
}

TEST_CASE("cut_of frozen examples") {
    CHECK(cut_of(square2()).word == "eess");
    CHECK(cut_of(sw_l()).word == "eses");
    CHECK(cut_of(unit_square()).word == "es");
    // parallelogram polyominoes carry the trivial cut e^{a+1} s^{b+1}
    for (int sp = 2; sp <= 9; ++sp)
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            auto [a, b] = alpha_beta(p);
            CHECK(cut_of(p).word == std::string(a + 1, 'e') + std::string(b + 1, 's'));
        });
}

TEST_CASE("assemble frozen examples and errors") {
    CHECK(assemble(square2(), CutPath{"eess"}) == square2());
    CHECK(assemble(square2(), CutPath{"eses"}) == sw_l());
    CHECK_THROWS_AS(assemble(square2(), CutPath{"esse"}), error); // ends with e
    CHECK_THROWS_AS(assemble(square2(), CutPath{"es"}), error);   // wrong counts
    CHECK_THROWS_AS(assemble(square2(), CutPath{"sees"}), error); // starts with s
    CHECK_THROWS_AS(assemble(sw_l(), CutPath{"eses"}), error);    // not a parallelogram
}

TEST_CASE("assemble round-trips the completion and the cut") {
    for (int sp = 2; sp <= 9; ++sp)
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            Polyomino pd = complete_to_parallelogram(d);
            CHECK(assemble(pd, cut_of(d)) == d);
        });
}

TEST_CASE("a cut of the form e2 s e2 s e2 s3 pins alpha = 5, beta = 4") {
    // completed parallelogram: 6 columns stepping up to height 5
    std::vector<std::pair<int, int>> raw;
    const int bottoms[6] = {0, 0, 0, 0, 0, 0};
    const int tops[6] = {4, 4, 4, 4, 4, 4};
    for (int i = 0; i < 6; ++i)
        for (int j = bottoms[i]; j <= tops[i]; ++j) raw.push_back({i, j});
    Polyomino pd = normalize(raw);
    REQUIRE(classify(pd).parallelogram);
    CHECK(alpha_beta(pd) == std::pair<int, int>{5, 4});
    Polyomino d = assemble(pd, CutPath{"eeseeseesss"});
    CHECK(cut_of(d).word == "eeseeseesss");
    CHECK(alpha_beta(complete_to_parallelogram(d)) == std::pair<int, int>{5, 4});
}

} // TEST_SUITE
