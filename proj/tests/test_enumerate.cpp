#include <doctest.h>

#include <set>

#include "polyforge/enumerate.hpp"
#include "polyforge/verify.hpp"

using namespace polyforge;

namespace {

uint64_t stream_count(PolyominoClass cls, int sp) { return count_one(cls, sp); }

} // namespace

TEST_SUITE("enumerate") {

TEST_CASE("parallelogram counts are Catalan numbers") {
    CHECK(stream_count(PolyominoClass::parallelogram, 2) == 1);
    CHECK(stream_count(PolyominoClass::parallelogram, 4) == 5);
    CHECK(stream_count(PolyominoClass::parallelogram, 5) == 14);
    CHECK(stream_count(PolyominoClass::parallelogram, 7) == 132);
}

TEST_CASE("directed convex counts are central binomials") {
    CHECK(stream_count(PolyominoClass::directed, 2) == 1);
    CHECK(stream_count(PolyominoClass::directed, 4) == 6);
    CHECK(stream_count(PolyominoClass::directed, 8) == 924);
}

TEST_CASE("convex counts match the closed form") {
    CHECK(stream_count(PolyominoClass::convex, 2) == 1);
    CHECK(stream_count(PolyominoClass::convex, 3) == 2);
    CHECK(stream_count(PolyominoClass::convex, 4) == 7);
    CHECK(stream_count(PolyominoClass::convex, 5) == 28);
    CHECK(stream_count(PolyominoClass::convex, 6) == 120);
    CHECK(BigInt(static_cast<long long>(stream_count(PolyominoClass::convex, 6))) ==
          closed_form_convex(6));
}

TEST_CASE("empty streams below sp 2") {
    CHECK(stream_count(PolyominoClass::parallelogram, 1) == 0);
    CHECK(stream_count(PolyominoClass::convex, 0) == 0);
}

TEST_CASE("profile characterization matches naive enumeration") {
    CheckResult r = check_convex_characterization(6);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("the two directed generators agree") {
    CheckResult r = check_directed_generators_agree(8);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("streams yield no duplicates and stay in class") {
    CheckResult r = check_stream_wellformed(7);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("degree_generic on frozen shapes") {
    CHECK(degree_generic(normalize({{0, 0}, {1, 0}, {2, 0}})) == 0); // horizontal bar
    CHECK(degree_generic(normalize({{0, 0}, {0, 1}, {0, 2}})) == 0); // vertical bar
    CHECK(degree_generic(normalize({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 1);
    CHECK(degree_generic(normalize({{0, 0}, {1, 0}, {0, 1}})) == 1);
    CHECK_THROWS_AS(degree_generic(normalize({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}})), error);
}

TEST_CASE("degree is bounded by the semi-perimeter") {
    for (int sp = 2; sp <= 8; ++sp)
        for_each_convex(sp, [&](const Polyomino& p) {
            int d = degree_generic(p);
            CHECK(d <= sp);
            CHECK(is_k_convex_generic(p, d));
            if (d > 0) CHECK_FALSE(is_k_convex_generic(p, d - 1));
        });
}

TEST_CASE("count_table with degree caps") {
    auto l1 = count_table(PolyominoClass::convex, 4, 1);
    CHECK(l1.back().sp == 4);
    CHECK(l1.back().count == 7); // every convex shape of semi-perimeter 4 needs one bend
    auto directed = count_table(PolyominoClass::directed, 4);
    CHECK(directed.back().count == 6);
    auto para = count_table(PolyominoClass::parallelogram, 5);
    CHECK(para.back().count == 14);
}

TEST_CASE("collect_sorted is canonically ordered") {
    auto all = collect_sorted(PolyominoClass::directed, 5);
    CHECK(all.size() == 20);
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::set<Polyomino> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
}

} // TEST_SUITE
