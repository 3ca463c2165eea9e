#include <doctest.h>

#include <cmath>

#include "polyforge/enumerate.hpp"
#include "polyforge/forest.hpp"
#include "polyforge/marked_series.hpp"
#include "polyforge/series.hpp"
#include "polyforge/verify.hpp"

using namespace polyforge;

namespace {

Rational coeff_int(long long v) { return Rational(BigInt(v)); }

} // namespace

TEST_SUITE("series") {

TEST_CASE("fibonacci polynomials") {
    CHECK(fibonacci_poly(0) == IntPoly());
    CHECK(fibonacci_poly(1) == IntPoly::constant(1));
    CHECK(fibonacci_poly(2) == IntPoly::constant(1));
    CHECK(fibonacci_poly(3) == IntPoly({BigInt(1), BigInt(-1)}));
    CHECK(fibonacci_poly(4) == IntPoly({BigInt(1), BigInt(-2)}));
    CHECK(fibonacci_poly(5) == IntPoly({BigInt(1), BigInt(-3), BigInt(1)}));
    for (int k = 1; k <= 20; ++k) CHECK(fibonacci_poly(k).degree() == (k - 1) / 2);
}

TEST_CASE("two-way fibonacci identity up to k = 30") {
    for (int k = 1; k <= 30; ++k) {
        IntPoly lhs =
            fibonacci_poly(k) * fibonacci_poly(k) - fibonacci_poly(k + 1) * fibonacci_poly(k - 1);
        CHECK(lhs == IntPoly::monomial(1, k - 1));
    }
    // spot value: F_3^2 - F_4 F_2 = z^2
    CHECK(fibonacci_poly(3) * fibonacci_poly(3) - fibonacci_poly(4) * fibonacci_poly(2) ==
          IntPoly::monomial(1, 2));
}

TEST_CASE("series sqrt of 1-4z") {
    Series s = Series::from_poly(IntPoly({BigInt(1), BigInt(-4)}), 4).sqrt();
    CHECK(s.coeff(0) == coeff_int(1));
    CHECK(s.coeff(1) == coeff_int(-2));
    CHECK(s.coeff(2) == coeff_int(-2));
    CHECK(s.coeff(3) == coeff_int(-4));
    CHECK(s.coeff(4) == coeff_int(-10));
    CHECK_THROWS_AS(Series::from_poly(IntPoly({BigInt(2)}), 3).sqrt(), error);
}

TEST_CASE("catalan shift series (1 - sqrt(1-4z)) / 2") {
    Series s = Series::from_poly(IntPoly({BigInt(1), BigInt(-4)}), 6).sqrt();
    Series t = (Series::constant(Rational(1), 6) - s) / Series::constant(Rational(2), 6);
    long long expect[] = {0, 1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 6; ++n) CHECK(t.coeff(n) == coeff_int(expect[n]));
}

TEST_CASE("series division by a unit is exact") {
    Series f = Series::from_poly(IntPoly({BigInt(3), BigInt(7), BigInt(-5), BigInt(2)}), 10);
    Series q = f / f;
    CHECK(q.coeff(0) == coeff_int(1));
    for (int n = 1; n <= 10; ++n) CHECK(q.coeff(n) == Rational(0));
    Series zf = Series::monomial(Rational(1), 1, 8);
    CHECK_THROWS_AS(zf / zf, error); // zero constant term in the divisor
}

TEST_CASE("compose requires a vanishing inner constant") {
    Series outer = Series::from_poly(IntPoly({BigInt(1), BigInt(1)}), 6);
    Series z2 = Series::monomial(Rational(1), 2, 6);
    Series composed = outer.compose(z2);
    CHECK(composed.coeff(0) == coeff_int(1));
    CHECK(composed.coeff(2) == coeff_int(1));
    CHECK_THROWS_AS(outer.compose(Series::constant(Rational(1), 6)), error);
}

TEST_CASE("directed generating function") {
    Series d = gf_univariate(GfName::directed, 0, 8);
    long long expect[] = {0, 0, 1, 2, 6, 20, 70, 252, 924};
    for (int n = 0; n <= 8; ++n) CHECK(d.coeff(n) == coeff_int(expect[n]));
}

TEST_CASE("symmetric generating function") {
    Series s = gf_univariate(GfName::symmetric, 0, 8);
    long long expect[] = {0, 0, 1, 0, 2, 0, 6, 0, 20};
    for (int n = 0; n <= 8; ++n) CHECK(s.coeff(n) == coeff_int(expect[n]));
}

TEST_CASE("height-bounded tree series") {
    Series le2 = gf_univariate(GfName::trees_le, 2, 6);
    // only the star has height <= 2 at each size
    for (int n = 1; n <= 6; ++n) CHECK(le2.coeff(n) == coeff_int(1));
    Series eq2 = gf_univariate(GfName::trees_eq, 2, 6);
    CHECK(eq2.coeff(1) == coeff_int(0));
    for (int n = 2; n <= 6; ++n) CHECK(eq2.coeff(n) == coeff_int(1));
}

TEST_CASE("kdir series frozen coefficients") {
    Series k1 = gf_univariate(GfName::kdir, 1, 6);
    long long expect[] = {0, 0, 1, 2, 6, 18, 53};
    for (int n = 0; n <= 6; ++n) CHECK(k1.coeff(n) == coeff_int(expect[n]));

    Series k0 = gf_univariate(GfName::kdir, 0, 6);
    CHECK(k0.coeff(2) == coeff_int(1));
    for (int n = 3; n <= 6; ++n) CHECK(k0.coeff(n) == coeff_int(2)); // two bars each size
}

TEST_CASE("kpar series at k = 1") {
    Series k1 = gf_univariate(GfName::kpar, 1, 6);
    CHECK(k1.coeff(2) == coeff_int(1));
    CHECK(k1.coeff(3) == coeff_int(2));
    CHECK(k1.coeff(4) == coeff_int(5)); // all five parallelograms of semi-perimeter 4
}

TEST_CASE("zconvex series counts 2-convex polyominoes") {
    // expected values from the degree-capped convex enumeration
    int cap = 9;
    Series gf = gf_univariate(GfName::zconvex, 0, cap);
    auto rows = count_table(PolyominoClass::convex, cap, 2);
    for (const auto& row : rows)
        CHECK(gf.coeff(row.sp) == coeff_int(static_cast<long long>(row.count)));
}

TEST_CASE("dk_minus counts forests of bounded height") {
    // D-_{<=1} carries single-node forests only: 2^n triplets of size n
    Series d1 = gf_univariate(GfName::dk_minus, 1, 8);
    for (int n = 0; n <= 6; ++n) CHECK(d1.coeff(n + 2) == coeff_int(1LL << n));
}

TEST_CASE("closed-form convex counts") {
    CHECK(closed_form_convex(2) == BigInt(1));
    CHECK(closed_form_convex(3) == BigInt(2));
    CHECK(closed_form_convex(4) == BigInt(7));
    CHECK(closed_form_convex(5) == BigInt(28));
    CHECK(closed_form_convex(6) == BigInt(120));
    CHECK(closed_form_convex(7) == BigInt(528));
}

TEST_CASE("lconvex sequence") {
    auto l = lconvex_seq(12);
    CHECK(l[2] == BigInt(7));
    CHECK(l[3] == BigInt(24));
    CHECK(l[4] == BigInt(82));
    CHECK(l[5] == BigInt(280));
}

TEST_CASE("series family argument checks") {
    CHECK_THROWS_AS(fibonacci_poly(-1), error);
    CHECK_THROWS_AS(gf_univariate(GfName::trees_le, 0, 5), error);
    CHECK_THROWS_AS(gf_univariate(GfName::kpar, 0, 5), error);
    CHECK_THROWS_AS(gf_univariate(GfName::kdir, -1, 5), error);
    CHECK_THROWS_AS(asymptotic_mu(0), error);
    CHECK_NOTHROW(gf_univariate(GfName::kdir, 0, 5));
}

TEST_CASE("identity battery passes") {
    IdentityReport rep = identities_check(30, 30);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
    CHECK(rep.all_pass());
}

TEST_CASE("gf cross-identities") {
    CHECK_MESSAGE(check_gf_sum_identity(0).pass, "dk_minus = kdir + fd_flat");
    CHECK_MESSAGE(check_kdir_limit(0).pass, "kdir limit");
}

TEST_CASE("asymptotic mu and root") {
    AsymptoticInfo info = asymptotic_mu(1);
    CHECK(std::abs(info.mu - 2.618033988749895) < 1e-12);
    CHECK(std::abs(info.root - 0.3819660112501051) < 1e-9);
    for (int k = 1; k <= 10; ++k) {
        AsymptoticInfo a = asymptotic_mu(k);
        CHECK(std::abs(a.mu * a.root - 1.0) <= 1e-9);
        CHECK(a.mu < 4.0);
    }
    // mu approaches 4 from below
    CHECK(asymptotic_mu(40).mu > 3.98);
}

TEST_CASE("marked series basics") {
    MarkedSeries wh = gf_marked(MarkedName::width_height, 4);
    CHECK(wh.coeff(2).coeff(1, 1) == coeff_int(1)); // unit square
    CHECK(wh.coeff(3).coeff(2, 1) == coeff_int(1));
    CHECK(wh.coeff(3).coeff(1, 2) == coeff_int(1));
    // marginal equals the plain directed count
    Series d = gf_univariate(GfName::directed, 0, 4);
    for (int n = 0; n <= 4; ++n) {
        Rational sum(0);
        for (const auto& [key, v] : wh.coeff(n).terms()) sum += v;
        CHECK(sum == d.coeff(n));
    }
}

TEST_CASE("corner series marks") {
    MarkedSeries out = gf_marked(MarkedName::corners_out, 4);
    CHECK(out.coeff(2).coeff(4, 0) == coeff_int(1)); // unit square: 4 outside corners
    MarkedSeries in = gf_marked(MarkedName::corners_in, 4);
    CHECK(in.coeff(2).coeff(0, 0) == coeff_int(1)); // no inside corners
};

TEST_CASE("site series substitutes without residue") {
    MarkedSeries site = gf_marked(MarkedName::site, 6);
    CHECK(site.coeff(2).coeff(0, 4) == coeff_int(1)); // unit square: site-perimeter 4
    for (int n = 0; n <= 6; ++n)
        for (const auto& [key, v] : site.coeff(n).terms()) {
            CHECK(key.first == 0);
            CHECK(key.second >= 0);
        }
}

TEST_CASE("tree height counts against brute force") {
    CHECK_MESSAGE(check_tree_height_counts(0).pass, "tree height table");
}

} // TEST_SUITE
