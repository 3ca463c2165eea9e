// Acceptance suite: every criterion is exercised at its stated bound and
// printed as a single pass/fail line.  Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polyforge/polyforge.hpp"

using namespace polyforge;

namespace {

struct Criterion {
    int id = 0;
    std::string title;
    bool pass = true;
    std::string detail;
    double seconds = 0;

    void expect(bool ok, const std::string& where) {
        if (!ok && pass) {
            pass = false;
            detail = where;
        }
    }
};

std::vector<Criterion> g_results;

template <typename Fn>
void run_criterion(int id, const std::string& title, Fn&& body) {
    Criterion c;
    c.id = id;
    c.title = title;
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %-58s (%.1fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.seconds, c.pass ? "" : " — ", c.pass ? "" : c.detail.c_str());
    std::fflush(stdout);
    g_results.push_back(c);
}

BigInt catalan(int n) { return BigInt::binomial(2 * n, n) / BigInt(n + 1); }

// forests with exactly m trees and a given total size, for the corner search
template <typename Fn>
void for_each_forest_of(int m, int total, Fn&& fn) {
    Forest cur;
    auto rec = [&](auto&& self, int left_trees, int left_size) -> void {
        if (left_trees == 0) {
            if (left_size == 0) fn(const_cast<const Forest&>(cur));
            return;
        }
        int max_here = left_size - (left_trees - 1);
        for (int s = 1; s <= max_here; ++s) {
            for_each_tree(s, [&](const OrderedTree& t) {
                cur.push_back(t);
                self(self, left_trees - 1, left_size - s);
                cur.pop_back();
            });
        }
    };
    rec(rec, m, total);
}

void criterion_1(Criterion& c) {
    Series gf = gf_univariate(GfName::directed, 0, 12);
    for (int sp = 2; sp <= 12; ++sp) {
        uint64_t n = 0;
        for_each_directed_convex(sp, [&](const Polyomino&) { ++n; });
        BigInt expect = BigInt::binomial(2 * (sp - 2), sp - 2);
        c.expect(BigInt(static_cast<long long>(n)) == expect, "count sp=" + std::to_string(sp));
        c.expect(gf.coeff(sp) == Rational(expect), "gf sp=" + std::to_string(sp));
    }
}

void criterion_2(Criterion& c) {
    for (int sp = 2; sp <= 14; ++sp) {
        uint64_t n = 0;
        for_each_parallelogram(sp, [&](const Polyomino&) { ++n; });
        c.expect(BigInt(static_cast<long long>(n)) == catalan(sp - 1), "sp=" + std::to_string(sp));
    }
}

void criterion_3(Criterion& c) {
    for (int sp = 2; sp <= 11; ++sp) {
        uint64_t n = 0;
        for_each_convex(sp, [&](const Polyomino&) { ++n; });
        c.expect(BigInt(static_cast<long long>(n)) == closed_form_convex(sp),
                 "sp=" + std::to_string(sp));
    }
}

void criterion_4(Criterion& c) {
    for (int sp = 2; sp <= 12; ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            Triplet t = to_triplet(d);
            if (from_triplet(t) != d) c.expect(false, "triplet roundtrip sp=" + std::to_string(sp));
            Polyomino pd = complete_to_parallelogram(d);
            auto [fe, fs] = phi(pd);
            if (phi_inv(fe, fs) != pd) c.expect(false, "phi roundtrip sp=" + std::to_string(sp));
            std::string w = directed_to_bilateral(d);
            if (bilateral_to_directed(w) != d)
                c.expect(false, "bilateral roundtrip sp=" + std::to_string(sp));
        });
    }
    for (int n = 0; n <= 8; ++n) {
        std::set<std::string> image;
        uint64_t count = 0;
        for_each_directed_convex(n + 2, [&](const Polyomino& d) {
            ++count;
            image.insert(directed_to_bilateral(d));
        });
        c.expect(image.size() == count, "bilateral collisions n=" + std::to_string(n));
        uint64_t words = 0;
        bool covered = true;
        for_each_balanced_word(n, [&](const std::string& w) {
            ++words;
            if (!image.count(w)) covered = false;
        });
        c.expect(covered && words == image.size(), "bilateral image n=" + std::to_string(n));
    }
}

void criterion_5(Criterion& c) {
    for (int sp = 2; sp <= 10; ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            int generic = degree_generic(d);
            if (degree_directed(d) != generic) c.expect(false, "bounce sp=" + std::to_string(sp));
            if (classify(d).parallelogram) {
                if (bounce_skeleton(d).k != generic)
                    c.expect(false, "skeleton sp=" + std::to_string(sp));
                if (degree_via_forests(d) != generic)
                    c.expect(false, "forests sp=" + std::to_string(sp));
            }
        });
    }
    // the two cheap routes stay in agreement further out
    for (int sp = 11; sp <= 12; ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            if (degree_via_forests(p) != bounce_skeleton(p).k)
                c.expect(false, "forests vs skeleton sp=" + std::to_string(sp));
        });
    }
}

void criterion_6(Criterion& c) {
    for (int k = 1; k <= 4; ++k) {
        Series gf = gf_univariate(GfName::kpar, k, 12);
        std::vector<uint64_t> counts(13, 0);
        for (int sp = 2; sp <= 12; ++sp)
            for_each_parallelogram(sp, [&](const Polyomino& p) {
                if (bounce_skeleton(p).k <= k) ++counts[sp];
            });
        for (int sp = 2; sp <= 12; ++sp)
            c.expect(gf.coeff(sp) == Rational(BigInt(static_cast<long long>(counts[sp]))),
                     "k=" + std::to_string(k) + " sp=" + std::to_string(sp));
    }
}

void criterion_7(Criterion& c) {
    for (int k = 0; k <= 3; ++k) {
        Series gf = gf_univariate(GfName::kdir, k, 12);
        for (int sp = 2; sp <= 12; ++sp) {
            uint64_t n = 0;
            for_each_directed_convex(sp, [&](const Polyomino& d) {
                if (degree_directed(d) <= k) ++n;
            });
            c.expect(gf.coeff(sp) == Rational(BigInt(static_cast<long long>(n))),
                     "k=" + std::to_string(k) + " sp=" + std::to_string(sp));
        }
    }
    // k = 0 double-check: the series counts exactly the bars
    Series k0 = gf_univariate(GfName::kdir, 0, 12);
    c.expect(k0.coeff(2) == Rational(1), "one bar at sp 2");
    for (int sp = 3; sp <= 12; ++sp) c.expect(k0.coeff(sp) == Rational(2), "two bars per sp");
}

void criterion_8(Criterion& c) {
    for (int k = 1; k <= 6; ++k) {
        Series lhs = gf_univariate(GfName::dk_minus, k + 1, 20);
        Series rhs = gf_univariate(GfName::kdir, k, 20) + gf_univariate(GfName::fd_flat, k, 20);
        c.expect(lhs == rhs, "series k=" + std::to_string(k));
    }
    for (int k = 1; k <= 4; ++k) {
        for (int sp = 2; sp <= 10; ++sp) {
            uint64_t in_minus = 0, in_dk = 0, in_flat = 0;
            bool disjoint = true, partitioned = true;
            for_each_directed_convex(sp, [&](const Polyomino& d) {
                Polyomino pd = complete_to_parallelogram(d);
                auto [fe, fs] = phi(pd);
                Skeleton sk = bounce_skeleton(pd);
                bool minus = std::max(forest_height(fe), forest_height(fs)) <= k + 1;
                bool dk = degree_directed(d) <= k;
                bool flat_exact = sk.flat && sk.k == k + 1 && degree_directed(d) == k + 1;
                if (minus) ++in_minus;
                if (dk) ++in_dk;
                if (flat_exact) ++in_flat;
                if (dk && flat_exact) disjoint = false;
                if (minus != (dk || flat_exact)) partitioned = false;
            });
            c.expect(disjoint, "overlap k=" + std::to_string(k) + " sp=" + std::to_string(sp));
            c.expect(partitioned, "membership k=" + std::to_string(k) + " sp=" + std::to_string(sp));
            c.expect(in_minus == in_dk + in_flat, "cardinality k=" + std::to_string(k));
        }
    }
}

void criterion_9(Criterion& c) {
    CheckResult tables = check_statistic_tables(10);
    c.expect(tables.pass, tables.detail);
    CheckResult sym = check_symmetric_counts(12);
    c.expect(sym.pass, sym.detail);

    // spot check: directed convex polyominoes with cut e2sese3s2 carrying
    // 11 outside and 7 inside corners exist (the smallest at semi-perimeter 15)
    const CutPath cut{"eeseseeess"}; // e2 s e s e3 s2
    bool found = false;
    for (int se = 5; se <= 10 && !found; ++se) {
        for_each_forest_of(5, se, [&](const Forest& fe) {
            if (found) return;
            for (int ss = 3; ss <= 13 - se && !found; ++ss) {
                for_each_forest_of(3, ss, [&](const Forest& fs) {
                    if (found) return;
                    Polyomino d = from_triplet(Triplet{fe, fs, cut});
                    StatRecord st = statistics(d);
                    if (st.outside_corners == 11 && st.inside_corners == 7) found = true;
                });
            }
        });
    }
    c.expect(found, "no polyomino with cut e2sese3s2 and 11/7 corners found");
}

void criterion_10(Criterion& c) {
    uint64_t trees4 = 0;
    for_each_tree(4, [&](const OrderedTree&) { ++trees4; });
    c.expect(trees4 == 5, "trees of size 4");

    CheckResult heights = check_tree_height_counts(0);
    c.expect(heights.pass, heights.detail);
    CheckResult split = check_split_height(8);
    c.expect(split.pass, split.detail);
}

void criterion_11(Criterion& c) {
    IdentityReport rep = identities_check(30, 30);
    for (const auto& chk : rep.checks) c.expect(chk.pass, chk.name);
}

void criterion_12(Criterion& c) {
    for (int k = 1; k <= 10; ++k) {
        AsymptoticInfo info = asymptotic_mu(k);
        c.expect(std::abs(info.mu * info.root - 1.0) <= 1e-9, "mu*root k=" + std::to_string(k));
    }
    RatioDrift drift = asymptotic_ratio_drift(1, 40, 60);
    c.expect(drift.max_drift < 0.05, "ratio drift " + std::to_string(drift.max_drift));
}

} // namespace

int main() {
    run_criterion(1, "directed convex counts = C(2n,n) = [z^sp] z^2/sqrt(1-4z)", criterion_1);
    run_criterion(2, "parallelogram counts = Catalan(sp-1), sp <= 14", criterion_2);
    run_criterion(3, "convex counts = closed form, sp <= 11", criterion_3);
    run_criterion(4, "bijection roundtrips sp <= 12; bilateral image exact", criterion_4);
    run_criterion(5, "four degree computations agree, sp <= 10", criterion_5);
    run_criterion(6, "k-parallelogram gf matches enumeration, k <= 4", criterion_6);
    run_criterion(7, "directed k-convex gf matches enumeration, k <= 3", criterion_7);
    run_criterion(8, "dk_minus(k+1) = kdir(k) + fd_flat(k); disjoint union", criterion_8);
    run_criterion(9, "statistic gfs match joint tables; corner spot check", criterion_9);
    run_criterion(10, "tree layer: counts, height series, split bijection", criterion_10);
    run_criterion(11, "fibonacci identity battery to order 30", criterion_11);
    run_criterion(12, "asymptotics: mu*root = 1; ratio drift < 5%", criterion_12);

    int failures = 0;
    for (const auto& r : g_results)
        if (!r.pass) ++failures;
    std::printf("%zu criteria, %d failed\n", g_results.size(), failures);
    return failures ? 1 : 0;
}
