#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polyforge/bigint.hpp"
#include "polyforge/bounce.hpp"
#include "polyforge/enumerate.hpp"
#include "polyforge/forest.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/marked_series.hpp"
#include "polyforge/series.hpp"

namespace polyforge {

// Cross-checks wiring the enumeration oracle, the bijections, the bounce
// machinery and the generating functions against one another.  The CLI
// verify verb runs them; the test suites reuse them at smaller bounds.

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace verify_detail {

class Check {
public:
    Check(std::string suite, std::string name) {
        res_.suite = std::move(suite);
        res_.name = std::move(name);
    }
    // records the first failure with a location string
    void expect(bool ok, const std::string& where) {
        if (!ok && res_.pass) {
            res_.pass = false;
            res_.detail = where;
        }
    }
    CheckResult result() const { return res_; }

private:
    CheckResult res_;
};

inline std::string cells_string(const Polyomino& p) {
    std::ostringstream os;
    for (const Cell& c : p.cells()) os << "(" << c.i << "," << c.j << ")";
    return os.str();
}

inline BigInt catalan(int n) {
    return BigInt::binomial(2 * n, n) / BigInt(n + 1);
}

// Fixed polyominoes (up to translation) with at most max_area cells, by
// canonical-form growth.  Exercised only at desk scale.
template <typename Fn>
void naive_for_each_polyomino(int max_area, Fn&& fn) {
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<std::vector<std::pair<int, int>>> frontier{{{0, 0}}};
    seen.insert(frontier[0]);
    fn(normalize(frontier[0]));
    for (int area = 2; area <= max_area; ++area) {
        std::vector<std::vector<std::pair<int, int>>> next;
        for (const auto& shape : frontier) {
            std::set<std::pair<int, int>> cells(shape.begin(), shape.end());
            for (const auto& [i, j] : shape) {
                const int di[4] = {1, -1, 0, 0};
                const int dj[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    std::pair<int, int> cand{i + di[d], j + dj[d]};
                    if (cells.count(cand)) continue;
                    std::vector<std::pair<int, int>> grown(shape);
                    grown.push_back(cand);
                    Polyomino p = normalize(grown);
                    std::vector<std::pair<int, int>> key;
                    for (const Cell& c : p.cells()) key.push_back({c.i, c.j});
                    if (seen.insert(key).second) {
                        next.push_back(key);
                        fn(p);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
}

// every monotone lattice path between two comparable cells, by step words
template <typename Fn>
void for_each_monotone_path(const Polyomino& p, Cell b, Cell c, Fn&& fn) {
    // fn receives the number of direction changes of one complete path
    int dj_sign = c.j >= b.j ? 1 : -1;
    auto rec = [&](auto&& self, Cell cur, int last, int changes) -> void {
        if (cur == c) {
            fn(changes);
            return;
        }
        if (cur.i < c.i && p.contains(cur.i + 1, cur.j))
            self(self, {cur.i + 1, cur.j}, 0, changes + (last == 1 ? 1 : 0));
        if (dj_sign * (c.j - cur.j) > 0 && p.contains(cur.i, cur.j + dj_sign))
            self(self, {cur.i, cur.j + dj_sign}, 1, changes + (last == 0 ? 1 : 0));
    };
    if (b == c) {
        fn(0);
        return;
    }
    if (b.i < c.i && p.contains(b.i + 1, b.j)) rec(rec, {b.i + 1, b.j}, 0, 0);
    if (dj_sign * (c.j - b.j) > 0 && p.contains(b.i, b.j + dj_sign)) rec(rec, {b.i, b.j + dj_sign}, 1, 0);
}

} // namespace verify_detail

// ---- counts suite -----------------------------------------------------------

inline CheckResult check_parallelogram_counts(int max_sp) {
    verify_detail::Check ck("counts", "parallelogram_counts_catalan");
    for (int sp = 2; sp <= std::min(max_sp, 14); ++sp) {
        uint64_t n = 0;
        for_each_parallelogram(sp, [&](const Polyomino&) { ++n; });
        ck.expect(BigInt(static_cast<long long>(n)) == verify_detail::catalan(sp - 1),
                  "sp=" + std::to_string(sp));
    }
    return ck.result();
}

inline CheckResult check_directed_counts(int max_sp) {
    verify_detail::Check ck("counts", "directed_counts_central_binomial");
    int cap = std::min(max_sp, 12);
    Series gf = gf_univariate(GfName::directed, 0, cap);
    for (int sp = 2; sp <= cap; ++sp) {
        uint64_t n = 0;
        for_each_directed_convex(sp, [&](const Polyomino&) { ++n; });
        BigInt expect = BigInt::binomial(2 * (sp - 2), sp - 2);
        ck.expect(BigInt(static_cast<long long>(n)) == expect, "sp=" + std::to_string(sp));
        ck.expect(gf.coeff(sp) == Rational(expect), "gf sp=" + std::to_string(sp));
    }
    return ck.result();
}

inline CheckResult check_convex_counts(int max_sp) {
    verify_detail::Check ck("counts", "convex_counts_closed_form");
    for (int sp = 2; sp <= std::min(max_sp, 11); ++sp) {
        uint64_t n = 0;
        for_each_convex(sp, [&](const Polyomino&) { ++n; });
        ck.expect(BigInt(static_cast<long long>(n)) == closed_form_convex(sp),
                  "sp=" + std::to_string(sp));
    }
    return ck.result();
}

inline CheckResult check_directed_generators_agree(int max_sp) {
    verify_detail::Check ck("counts", "directed_generators_agree");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        std::set<Polyomino> via_cuts, via_filter;
        for_each_directed_convex(sp, [&](const Polyomino& p) { via_cuts.insert(p); });
        for_each_directed_convex_filtered(sp, [&](const Polyomino& p) { via_filter.insert(p); });
        ck.expect(via_cuts == via_filter, "sp=" + std::to_string(sp));
    }
    return ck.result();
}

inline CheckResult check_stream_wellformed(int max_sp) {
    verify_detail::Check ck("counts", "streams_unique_and_in_class");
    for (int sp = 2; sp <= std::min(max_sp, 8); ++sp) {
        std::set<Polyomino> seen;
        uint64_t n = 0;
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            ++n;
            seen.insert(p);
            ClassReport c = classify(p);
            ck.expect(c.parallelogram && c.directed && c.convex, "parallelogram class sp=" + std::to_string(sp));
            ck.expect(statistics(p).semi_perimeter == sp, "parallelogram sp stat");
        });
        ck.expect(seen.size() == n, "parallelogram duplicates sp=" + std::to_string(sp));
        seen.clear();
        n = 0;
        for_each_directed_convex(sp, [&](const Polyomino& p) {
            ++n;
            seen.insert(p);
            ClassReport c = classify(p);
            ck.expect(c.directed && c.convex, "directed class sp=" + std::to_string(sp));
        });
        ck.expect(seen.size() == n, "directed duplicates sp=" + std::to_string(sp));
        seen.clear();
        n = 0;
        for_each_convex(sp, [&](const Polyomino& p) {
            ++n;
            seen.insert(p);
            ck.expect(classify(p).convex, "convex class sp=" + std::to_string(sp));
        });
        ck.expect(seen.size() == n, "convex duplicates sp=" + std::to_string(sp));
    }
    return ck.result();
}

inline CheckResult check_convex_characterization(int max_sp) {
    verify_detail::Check ck("counts", "convex_profiles_match_naive");
    int cap = std::min(max_sp, 6);
    std::map<int, std::set<Polyomino>> naive;
    verify_detail::naive_for_each_polyomino(9, [&](const Polyomino& p) {
        if (!classify(p).convex) return;
        int sp = statistics(p).semi_perimeter;
        if (sp <= cap) naive[sp].insert(p);
    });
    for (int sp = 2; sp <= cap; ++sp) {
        std::set<Polyomino> mine;
        for_each_convex(sp, [&](const Polyomino& p) { mine.insert(p); });
        ck.expect(mine == naive[sp], "sp=" + std::to_string(sp));
    }
    return ck.result();
}

inline CheckResult check_lconvex_recurrence(int max_sp) {
    verify_detail::Check ck("counts", "lconvex_counts_recurrence");
    int cap = std::min(max_sp, 10);
    auto rows = count_table(PolyominoClass::convex, cap, 1);
    auto l = lconvex_seq(cap);
    for (const auto& row : rows)
        ck.expect(BigInt(static_cast<long long>(row.count)) == l[row.sp - 2],
                  "sp=" + std::to_string(row.sp));
    return ck.result();
}

inline CheckResult check_zconvex_counts(int max_sp) {
    verify_detail::Check ck("counts", "zconvex_counts_match_gf");
    int cap = std::min(max_sp, 10);
    Series gf = gf_univariate(GfName::zconvex, 0, cap);
    auto rows = count_table(PolyominoClass::convex, cap, 2);
    for (const auto& row : rows)
        ck.expect(Rational(BigInt(static_cast<long long>(row.count))) == gf.coeff(row.sp),
                  "sp=" + std::to_string(row.sp));
    return ck.result();
}

inline CheckResult check_symmetric_counts(int max_sp) {
    verify_detail::Check ck("counts", "symmetric_counts_match_gf");
    int cap = std::min(max_sp, 12);
    Series gf = gf_univariate(GfName::symmetric, 0, cap);
    for (int sp = 2; sp <= cap; ++sp) {
        uint64_t n = 0;
        for_each_directed_convex(sp, [&](const Polyomino& p) {
            if (statistics(p).diagonal_symmetric) ++n;
        });
        ck.expect(Rational(BigInt(static_cast<long long>(n))) == gf.coeff(sp),
                  "sp=" + std::to_string(sp));
    }
    return ck.result();
}

// ---- bijections suite ---------------------------------------------------------

inline CheckResult check_cut_roundtrip(int max_sp) {
    verify_detail::Check ck("bijections", "cut_assemble_roundtrip");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            Polyomino pd = complete_to_parallelogram(d);
            ck.expect(classify(pd).parallelogram, "completion parallelogram");
            ck.expect(pd.width() == d.width() && pd.height() == d.height(), "completion bbox");
            CutPath cut = cut_of(d);
            ck.expect(!cut.word.empty() && cut.word.front() == 'e' && cut.word.back() == 's',
                      "cut endpoints");
            auto [alpha, beta] = alpha_beta(pd);
            ck.expect(cut.count_e() == alpha + 1 && cut.count_s() == beta + 1, "cut step counts");
            ck.expect(assemble(pd, cut) == d, "assemble roundtrip " + verify_detail::cells_string(d));
            std::string trivial = std::string(alpha + 1, 'e') + std::string(beta + 1, 's');
            ck.expect(classify(d).parallelogram == (cut.word == trivial), "trivial cut iff parallelogram");
        });
    }
    return ck.result();
}

inline CheckResult check_phi_roundtrip(int max_sp) {
    verify_detail::Check ck("bijections", "phi_roundtrip");
    for (int sp = 2; sp <= std::min(max_sp, 12); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            auto [fe, fs] = phi(p);
            ck.expect(forest_size(fe) + forest_size(fs) == sp - 2, "phi size");
            auto [alpha, beta] = alpha_beta(p);
            ck.expect(static_cast<int>(fe.size()) == alpha && static_cast<int>(fs.size()) == beta,
                      "root counts");
            ck.expect(phi_inv(fe, fs) == p, "phi_inv(phi(P)) " + verify_detail::cells_string(p));
        });
    }
    return ck.result();
}

inline CheckResult check_phi_injective(int max_sp) {
    verify_detail::Check ck("bijections", "phi_injective_and_surjective");
    for (int sp = 2; sp <= std::min(max_sp, 8); ++sp) {
        std::set<std::string> images;
        uint64_t n = 0;
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            ++n;
            auto [fe, fs] = phi(p);
            std::string key;
            for (const auto& t : fe) key += tree_to_paren(t);
            key += "|";
            for (const auto& t : fs) key += tree_to_paren(t);
            images.insert(key);
        });
        ck.expect(images.size() == n, "distinct images sp=" + std::to_string(sp));
        // surjectivity at the counting level: pairs of forests of total size
        // n-2 are counted by Catalan(n-1)
        BigInt pairs(0);
        for (int a = 0; a <= sp - 2; ++a)
            pairs += verify_detail::catalan(a) * verify_detail::catalan(sp - 2 - a);
        ck.expect(pairs == verify_detail::catalan(sp - 1), "forest pair count sp=" + std::to_string(sp));
    }
    return ck.result();
}

inline CheckResult check_triplet_roundtrip(int max_sp) {
    verify_detail::Check ck("bijections", "triplet_roundtrip");
    for (int sp = 2; sp <= std::min(max_sp, 12); ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            Triplet t = to_triplet(d);
            ck.expect(t.cut.count_e() == static_cast<int>(t.fe.size()) + 1 &&
                          t.cut.count_s() == static_cast<int>(t.fs.size()) + 1,
                      "triplet counts");
            ck.expect(forest_size(t.fe) + forest_size(t.fs) == sp - 2, "triplet size");
            ck.expect(from_triplet(t) == d, "from_triplet " + verify_detail::cells_string(d));
        });
    }
    return ck.result();
}

inline CheckResult check_bilateral_bijection(int max_sp) {
    verify_detail::Check ck("bijections", "bilateral_image_is_all_words");
    for (int n = 0; n <= std::min(max_sp - 2, 8); ++n) {
        std::set<std::string> image;
        uint64_t count = 0;
        for_each_directed_convex(n + 2, [&](const Polyomino& d) {
            ++count;
            std::string w = directed_to_bilateral(d);
            ck.expect(static_cast<int>(w.size()) == 2 * n, "semi-length");
            ck.expect(bilateral_to_directed(w) == d, "bilateral roundtrip");
            image.insert(w);
        });
        ck.expect(image.size() == count, "no collisions n=" + std::to_string(n));
        uint64_t words = 0;
        bool all_present = true;
        for_each_balanced_word(n, [&](const std::string& w) {
            ++words;
            if (!image.count(w)) all_present = false;
        });
        ck.expect(words == image.size() && all_present, "image covers all words n=" + std::to_string(n));
    }
    return ck.result();
}

inline CheckResult check_tree_dyck_roundtrip(int max_size) {
    verify_detail::Check ck("bijections", "tree_dyck_roundtrip");
    for (int n = 1; n <= std::min(max_size, 8); ++n) {
        uint64_t count = 0;
        for_each_tree(n, [&](const OrderedTree& t) {
            ++count;
            std::string w = tree_to_dyck(t);
            ck.expect(static_cast<int>(w.size()) == 2 * n, "semi-length is size");
            ck.expect(dyck_to_tree(w) == t, "roundtrip");
        });
        ck.expect(BigInt(static_cast<long long>(count)) == verify_detail::catalan(n - 1),
                  "tree count n=" + std::to_string(n));
    }
    return ck.result();
}

inline CheckResult check_split_height(int max_size) {
    verify_detail::Check ck("bijections", "split_height_k_bijection");
    for (int n = 2; n <= std::min(max_size, 8); ++n) {
        for_each_tree(n, [&](const OrderedTree& t) {
            int k = tree_height(t);
            if (k < 2) return;
            auto seq = split_height_k(t);
            ck.expect(static_cast<int>(seq.size()) == 2 * (k - 1), "sequence length");
            int total = 0;
            for (int m = 1; m <= k - 1; ++m) {
                ck.expect(tree_height(seq[2 * (m - 1)]) <= m, "right height bound");
                ck.expect(tree_height(seq[2 * (m - 1) + 1]) <= m + 1, "left height bound");
                total += tree_size(seq[2 * (m - 1)]) + tree_size(seq[2 * (m - 1) + 1]);
            }
            // each of the k-1 chain nodes roots both trees of its pair
            ck.expect(tree_size(t) == 1 + total - (k - 1), "size conservation");
            ck.expect(join_height_k(seq) == t, "join inverse");
        });
    }
    return ck.result();
}

inline CheckResult check_symmetry_transfer(int max_sp) {
    verify_detail::Check ck("bijections", "symmetry_transfer");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            Triplet t = to_triplet(d);
            std::string rev(t.cut.word.rbegin(), t.cut.word.rend());
            for (char& c : rev) c = c == 'e' ? 's' : 'e';
            bool code_symmetric = t.fe == t.fs && rev == t.cut.word;
            ck.expect(statistics(d).diagonal_symmetric == code_symmetric,
                      "sp=" + std::to_string(sp) + " " + verify_detail::cells_string(d));
        });
    }
    return ck.result();
}

// ---- bounce suite --------------------------------------------------------------

inline CheckResult check_difference_u_r(int max_sp) {
    verify_detail::Check ck("bounce", "bounce_difference_dichotomy");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            Cell s{0, 0}, e{p.width() - 1, p.height() - 1};
            int lr = bounce_path(p, s, e, StepDir::east).changes();
            int lu = bounce_path(p, s, e, StepDir::north).changes();
            Skeleton sk = bounce_skeleton(p);
            if (sk.flat)
                ck.expect(lr == lu, "flat but |r-u|!=0 " + verify_detail::cells_string(p));
            else
                ck.expect(std::abs(lr - lu) == 1, "non-flat but |r-u|!=1 " + verify_detail::cells_string(p));
            // pairwise weak form
            for (const Cell& b : p.cells())
                for (const Cell& c : p.cells()) {
                    if (c.i < b.i || c.j < b.j) continue;
                    int pr = bounce_path(p, b, c, StepDir::east).changes();
                    int pu = bounce_path(p, b, c, StepDir::north).changes();
                    ck.expect(std::abs(pr - pu) <= 1, "pairwise difference");
                }
        });
    }
    return ck.result();
}

inline CheckResult check_bounce_optimality(int max_sp) {
    verify_detail::Check ck("bounce", "bounce_minimal_among_paths");
    for (int sp = 2; sp <= std::min(max_sp, 8); ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            for (const Cell& b : d.cells())
                for (const Cell& c : d.cells()) {
                    if (c.i < b.i || c.j < b.j || (b == c)) continue;
                    int best = minimal_bounce(d, b, c).changes();
                    int seen_best = -1;
                    verify_detail::for_each_monotone_path(d, b, c, [&](int changes) {
                        if (seen_best < 0 || changes < seen_best) seen_best = changes;
                    });
                    if (seen_best >= 0)
                        ck.expect(best <= seen_best, "bounce not minimal " + verify_detail::cells_string(d));
                }
        });
    }
    return ck.result();
}

inline CheckResult check_max_bounce(int max_sp) {
    verify_detail::Check ck("bounce", "root_to_corner_dominates");
    for (int sp = 2; sp <= std::min(max_sp, 9); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            Cell s{0, 0}, e{p.width() - 1, p.height() - 1};
            int m = minimal_bounce(p, s, e).changes();
            for (const Cell& b : p.cells())
                for (const Cell& c : p.cells()) {
                    if (c.i < b.i || c.j < b.j) continue;
                    ck.expect(minimal_bounce(p, b, c).changes() <= m,
                              "pair exceeds m(P) " + verify_detail::cells_string(p));
                }
        });
    }
    return ck.result();
}

inline CheckResult check_degree_agreement(int max_sp) {
    verify_detail::Check ck("bounce", "degree_oracles_agree");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            int generic = degree_generic(d);
            int bounce = degree_directed(d);
            ck.expect(generic == bounce, "generic vs bounce " + verify_detail::cells_string(d));
            if (classify(d).parallelogram) {
                ck.expect(bounce_skeleton(d).k == generic, "skeleton k " + verify_detail::cells_string(d));
                ck.expect(degree_via_forests(d) == generic, "forest degree " + verify_detail::cells_string(d));
            }
        });
    }
    return ck.result();
}

inline CheckResult check_skeleton_labels(int max_sp) {
    verify_detail::Check ck("bounce", "skeleton_cell_degrees");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            Skeleton sk = bounce_skeleton(p);
            ck.expect(sk.crossings.front().first == Cell{0, 0}, "I_0 = S");
            if (sk.flat)
                ck.expect(sk.crossings.back().first == Cell{p.width() - 1, p.height() - 1},
                          "flat ends at E");
            for (const auto& [cell, h] : sk.crossings) {
                int expect = h <= sk.M ? h : h - 1;
                ck.expect(cell_degree(p, cell) == expect,
                          "I_h degree " + verify_detail::cells_string(p));
            }
        });
    }
    return ck.result();
}

inline CheckResult check_label_zones(int max_sp) {
    verify_detail::Check ck("bounce", "skeleton_label_zones");
    for (int sp = 2; sp <= std::min(max_sp, 9); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            Skeleton sk = bounce_skeleton(p);
            for (int h = 1; h <= sk.k; ++h) {
                Cell prev = sk.crossings[h - 1].first;
                Cell cur = sk.crossings[h].first;
                for (const Cell& c : p.cells()) {
                    if (c.i > prev.i && c.i <= cur.i && c.j > prev.j)
                        ck.expect(cell_degree(p, c) == h, "zone 1 " + verify_detail::cells_string(p));
                    if (c.j > prev.j && c.j <= cur.j && c.i > cur.i)
                        ck.expect(cell_degree(p, c) == h, "zone 2 " + verify_detail::cells_string(p));
                    if (c.i > cur.i && c.j > cur.j)
                        ck.expect(cell_degree(p, c) > h, "zone 3 " + verify_detail::cells_string(p));
                }
            }
        });
    }
    return ck.result();
}

inline CheckResult check_region_r(int max_sp) {
    verify_detail::Check ck("bounce", "region_r_degree_and_rectangle");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            Skeleton sk = bounce_skeleton(p);
            if (sk.k == 0) return;
            auto region = region_r(p);
            std::set<Cell> rset(region.begin(), region.end());
            for (const Cell& c : p.cells())
                ck.expect((cell_degree(p, c) == sk.k) == rset.count(c),
                          "region vs degree " + verify_detail::cells_string(p));
            if (sk.flat) {
                ck.expect(!region.empty(), "flat region nonempty");
                int lo_i = p.width(), hi_i = -1, lo_j = p.height(), hi_j = -1;
                for (const Cell& c : region) {
                    lo_i = std::min(lo_i, c.i);
                    hi_i = std::max(hi_i, c.i);
                    lo_j = std::min(lo_j, c.j);
                    hi_j = std::max(hi_j, c.j);
                }
                ck.expect(static_cast<int>(region.size()) == (hi_i - lo_i + 1) * (hi_j - lo_j + 1),
                          "flat region is a rectangle " + verify_detail::cells_string(p));
            }
        });
    }
    return ck.result();
}

inline CheckResult check_lambda_r(int max_sp) {
    verify_detail::Check ck("bounce", "lambda_r_is_cut_of_removal");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            Skeleton sk = bounce_skeleton(p);
            if (!sk.flat || sk.k == 0) return;
            CutPath lr = lambda_r(p);
            auto [alpha, beta] = alpha_beta(p);
            ck.expect(lr.count_e() == alpha + 1 && lr.count_s() == beta + 1, "lambda_r step counts");
            ck.expect(lr.word.front() == 'e' && lr.word.back() == 's', "lambda_r endpoints");
            // removing R_P yields the directed convex polyomino with this cut
            auto region = region_r(p);
            std::set<Cell> rset(region.begin(), region.end());
            std::vector<std::pair<int, int>> rest;
            for (const Cell& c : p.cells())
                if (!rset.count(c)) rest.push_back({c.i, c.j});
            Polyomino removed = normalize(rest);
            ck.expect(cut_of(removed) == lr, "cut of P minus R_P " + verify_detail::cells_string(p));
            ck.expect(assemble(p, lr) == removed, "assemble lambda_r");
        });
    }
    return ck.result();
}

inline CheckResult check_charact_k_directed(int max_sp) {
    verify_detail::Check ck("bounce", "k_directed_characterization");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            int deg = degree_directed(d);
            for (int k = 0; k <= 4; ++k)
                ck.expect(is_directed_k(d, k) == (deg <= k),
                          "k=" + std::to_string(k) + " " + verify_detail::cells_string(d));
        });
    }
    return ck.result();
}

inline CheckResult check_include_dk(int max_sp) {
    verify_detail::Check ck("bounce", "dk_minus_disjoint_union");
    int cap = std::min(max_sp, 10);
    for (int k = 1; k <= 4; ++k) {
        Series fd = gf_univariate(GfName::fd_flat, k, cap);
        for (int sp = 2; sp <= cap; ++sp) {
            uint64_t in_minus = 0, in_dk = 0, in_flat = 0, overlap = 0;
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
                if (dk && flat_exact) ++overlap;
                ck.expect(minus == (dk || flat_exact), "membership " + verify_detail::cells_string(d));
            });
            ck.expect(overlap == 0, "disjointness sp=" + std::to_string(sp));
            ck.expect(in_minus == in_dk + in_flat, "union count sp=" + std::to_string(sp));
            ck.expect(Rational(BigInt(static_cast<long long>(in_flat))) == fd.coeff(sp),
                      "fd_flat coefficient k=" + std::to_string(k) + " sp=" + std::to_string(sp));
        }
    }
    return ck.result();
}

inline CheckResult check_chains(int max_sp) {
    verify_detail::Check ck("bounce", "chain_forest_equivalences");
    for (int sp = 2; sp <= std::min(max_sp, 10); ++sp) {
        for_each_parallelogram(sp, [&](const Polyomino& p) {
            auto [fe, fs] = phi(p);
            int he = forest_height(fe), hs = forest_height(fs);
            ChainsReport rep = chains_dr_du(p);
            ck.expect(std::max(he, hs) == std::max(rep.l_r, rep.l_u),
                      "max heights equal max chain lengths " + verify_detail::cells_string(p));
            if (he == hs) {
                ck.expect(rep.l_r == rep.l_u, "case i lengths " + verify_detail::cells_string(p));
                ck.expect(!rep.same_forest || rep.l_r == 0,
                          "case i different forests " + verify_detail::cells_string(p));
            } else {
                ck.expect(std::abs(rep.l_r - rep.l_u) == 1, "case ii/iii lengths");
                ChainForest taller = he > hs ? ChainForest::east_forest : ChainForest::south_forest;
                ck.expect(rep.same_forest && rep.forest_id == taller,
                          "case ii/iii taller forest " + verify_detail::cells_string(p));
            }
        });
    }
    return ck.result();
}

// ---- identities suite -----------------------------------------------------------

inline CheckResult check_fibonacci_identities(int, int order = 30) {
    verify_detail::Check ck("identities", "fibonacci_identity_battery");
    IdentityReport rep = identities_check(30, order);
    for (const auto& c : rep.checks) ck.expect(c.pass, c.name);
    return ck.result();
}

inline CheckResult check_gf_sum_identity(int) {
    verify_detail::Check ck("identities", "dk_minus_equals_kdir_plus_flat");
    for (int k = 1; k <= 6; ++k) {
        Series lhs = gf_univariate(GfName::dk_minus, k + 1, 20);
        Series rhs = gf_univariate(GfName::kdir, k, 20) + gf_univariate(GfName::fd_flat, k, 20);
        ck.expect(lhs == rhs, "k=" + std::to_string(k));
    }
    return ck.result();
}

inline CheckResult check_kpar_counts(int max_sp) {
    verify_detail::Check ck("identities", "kpar_gf_matches_enumeration");
    int cap = std::min(max_sp, 12);
    for (int k = 1; k <= 4; ++k) {
        Series gf = gf_univariate(GfName::kpar, k, cap);
        for (int sp = 2; sp <= cap; ++sp) {
            uint64_t n = 0;
            for_each_parallelogram(sp, [&](const Polyomino& p) {
                if (bounce_skeleton(p).k <= k) ++n;
            });
            ck.expect(Rational(BigInt(static_cast<long long>(n))) == gf.coeff(sp),
                      "k=" + std::to_string(k) + " sp=" + std::to_string(sp));
        }
    }
    return ck.result();
}

inline CheckResult check_kdir_counts(int max_sp) {
    verify_detail::Check ck("identities", "kdir_gf_matches_enumeration");
    int cap = std::min(max_sp, 12);
    for (int k = 0; k <= 3; ++k) {
        Series gf = gf_univariate(GfName::kdir, k, cap);
        for (int sp = 2; sp <= cap; ++sp) {
            uint64_t n = 0;
            for_each_directed_convex(sp, [&](const Polyomino& d) {
                if (degree_directed(d) <= k) ++n;
            });
            ck.expect(Rational(BigInt(static_cast<long long>(n))) == gf.coeff(sp),
                      "k=" + std::to_string(k) + " sp=" + std::to_string(sp));
        }
    }
    return ck.result();
}

inline CheckResult check_kdir_limit(int) {
    verify_detail::Check ck("identities", "kdir_nondecreasing_to_limit");
    int order = 12;
    Series directed = gf_univariate(GfName::directed, 0, order);
    Series prev = gf_univariate(GfName::kdir, 0, order);
    for (int k = 1; k <= 10; ++k) {
        Series cur = gf_univariate(GfName::kdir, k, order);
        for (int n = 0; n + 2 <= order; ++n) {
            Rational a = prev.coeff(n + 2), b = cur.coeff(n + 2);
            ck.expect((b - a).num().sign() >= 0, "nondecreasing k=" + std::to_string(k));
            if (k >= n) ck.expect(b == directed.coeff(n + 2), "limit reached k=" + std::to_string(k));
        }
        prev = cur;
    }
    return ck.result();
}

inline CheckResult check_tree_height_counts(int) {
    verify_detail::Check ck("identities", "tree_height_gf_matches_enumeration");
    int max_n = 12;
    std::vector<std::vector<uint64_t>> by_height(max_n + 1); // [size][height]
    for (int n = 1; n <= max_n; ++n) {
        by_height[n].assign(max_n + 2, 0);
        for_each_tree(n, [&](const OrderedTree& t) { ++by_height[n][tree_height(t)]; });
    }
    for (int k = 1; k <= 6; ++k) {
        Series le = gf_univariate(GfName::trees_le, k, max_n);
        Series eq = gf_univariate(GfName::trees_eq, k, max_n);
        for (int n = 1; n <= max_n; ++n) {
            uint64_t cle = 0;
            for (int h = 1; h <= std::min(k, max_n + 1); ++h) cle += by_height[n][h];
            ck.expect(Rational(BigInt(static_cast<long long>(cle))) == le.coeff(n),
                      "le k=" + std::to_string(k) + " n=" + std::to_string(n));
            uint64_t ceq = k <= max_n + 1 ? by_height[n][k] : 0;
            ck.expect(Rational(BigInt(static_cast<long long>(ceq))) == eq.coeff(n),
                      "eq k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    return ck.result();
}

// joint (sp, statistic) tables from enumeration vs marker coefficients
inline CheckResult check_statistic_tables(int max_sp) {
    verify_detail::Check ck("identities", "statistic_gfs_match_enumeration");
    int cap = std::min(max_sp, 10);
    std::map<std::tuple<int, int, int>, long long> t_pd, t_d, t_wh;
    std::map<std::pair<int, int>, long long> t_out, t_in, t_site;
    for (int sp = 2; sp <= cap; ++sp) {
        for_each_directed_convex(sp, [&](const Polyomino& d) {
            StatRecord st = statistics(d);
            ck.expect(st.outside_corners == st.inside_corners + 4, "corner difference");
            ck.expect(st.site_perimeter == 2 * st.semi_perimeter - st.inside_corners,
                      "site = 2 sp - inside");
            Polyomino pd = complete_to_parallelogram(d);
            auto [alpha, beta] = alpha_beta(pd);
            ++t_pd[{sp, alpha + 1, beta + 1}];
            int top_d = 0, right_d = 0;
            for (const Cell& c : d.cells()) {
                if (c.j == d.height() - 1) ++top_d;
                if (c.i == d.width() - 1) ++right_d;
            }
            ++t_d[{sp, top_d, right_d}];
            ++t_wh[{sp, st.width, st.height}];
            ++t_out[{sp, st.outside_corners}];
            ++t_in[{sp, st.inside_corners}];
            ++t_site[{sp, st.site_perimeter}];
        });
    }
    auto check_xyz = [&](MarkedName name, const std::map<std::tuple<int, int, int>, long long>& table,
                         const std::string& label) {
        MarkedSeries gf = gf_marked(name, cap);
        for (int n = 2; n <= cap; ++n) {
            Rational total(0);
            for (const auto& [key, v] : gf.coeff(n).terms()) {
                auto it = table.find({n, key.first, key.second});
                long long enumerated = it == table.end() ? 0 : it->second;
                ck.expect(v == Rational(BigInt(enumerated)), label + " sp=" + std::to_string(n));
                total += v;
            }
            long long row_total = 0;
            for (const auto& [key, v] : table)
                if (std::get<0>(key) == n) row_total += v;
            ck.expect(total == Rational(BigInt(row_total)), label + " marginal sp=" + std::to_string(n));
        }
    };
    auto check_x = [&](MarkedName name, const std::map<std::pair<int, int>, long long>& table,
                       bool use_y, const std::string& label) {
        MarkedSeries gf = gf_marked(name, cap);
        for (int n = 2; n <= cap; ++n) {
            Rational total(0);
            for (const auto& [key, v] : gf.coeff(n).terms()) {
                int stat = use_y ? key.second : key.first;
                auto it = table.find({n, stat});
                long long enumerated = it == table.end() ? 0 : it->second;
                ck.expect(v == Rational(BigInt(enumerated)), label + " sp=" + std::to_string(n));
                total += v;
            }
            long long row_total = 0;
            for (const auto& [key, v] : table)
                if (key.first == n) row_total += v;
            ck.expect(total == Rational(BigInt(row_total)), label + " marginal sp=" + std::to_string(n));
        }
    };
    check_xyz(MarkedName::toprow_pd, t_pd, "toprow_pd");
    check_xyz(MarkedName::toprow_d, t_d, "toprow_d");
    check_xyz(MarkedName::width_height, t_wh, "width_height");
    check_x(MarkedName::corners_out, t_out, false, "corners_out");
    check_x(MarkedName::corners_in, t_in, false, "corners_in");
    check_x(MarkedName::site, t_site, true, "site");

    // marker erasure: corners_out at x = 1 recovers the plain directed series
    MarkedSeries out = gf_marked(MarkedName::corners_out, cap);
    Series plain = gf_univariate(GfName::directed, 0, cap);
    for (int n = 0; n <= cap; ++n) {
        Rational sum(0);
        for (const auto& [key, v] : out.coeff(n).terms()) sum += v;
        ck.expect(sum == plain.coeff(n), "corner erasure n=" + std::to_string(n));
    }
    return ck.result();
}

inline CheckResult check_asymptotics(int) {
    verify_detail::Check ck("identities", "asymptotics_mu_and_ratio");
    for (int k = 1; k <= 10; ++k) {
        AsymptoticInfo info = asymptotic_mu(k);
        ck.expect(std::abs(info.mu * info.root - 1.0) <= 1e-9, "mu*root k=" + std::to_string(k));
        ck.expect(info.mu < 4.0, "mu below 4");
    }
    RatioDrift drift = asymptotic_ratio_drift(1, 40, 60);
    ck.expect(drift.max_drift < 0.05, "ratio drift k=1");
    return ck.result();
}

// ---- suite runner ----------------------------------------------------------------

inline std::vector<CheckResult> run_verification(const std::string& suite, int max_sp) {
    std::vector<CheckResult> out;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("counts")) {
        out.push_back(check_parallelogram_counts(max_sp));
        out.push_back(check_directed_counts(max_sp));
        out.push_back(check_convex_counts(max_sp));
        out.push_back(check_directed_generators_agree(max_sp));
        out.push_back(check_stream_wellformed(max_sp));
        out.push_back(check_convex_characterization(max_sp));
        out.push_back(check_lconvex_recurrence(max_sp));
        out.push_back(check_zconvex_counts(max_sp));
        out.push_back(check_symmetric_counts(max_sp));
    }
    if (want("bijections")) {
        out.push_back(check_cut_roundtrip(max_sp));
        out.push_back(check_phi_roundtrip(max_sp));
        out.push_back(check_phi_injective(max_sp));
        out.push_back(check_triplet_roundtrip(max_sp));
        out.push_back(check_bilateral_bijection(max_sp));
        out.push_back(check_tree_dyck_roundtrip(max_sp));
        out.push_back(check_split_height(max_sp));
        out.push_back(check_symmetry_transfer(max_sp));
    }
    if (want("bounce")) {
        out.push_back(check_difference_u_r(max_sp));
        out.push_back(check_bounce_optimality(max_sp));
        out.push_back(check_max_bounce(max_sp));
        out.push_back(check_degree_agreement(max_sp));
        out.push_back(check_skeleton_labels(max_sp));
        out.push_back(check_label_zones(max_sp));
        out.push_back(check_region_r(max_sp));
        out.push_back(check_lambda_r(max_sp));
        out.push_back(check_charact_k_directed(max_sp));
        out.push_back(check_include_dk(max_sp));
        out.push_back(check_chains(max_sp));
    }
    if (want("identities")) {
        out.push_back(check_fibonacci_identities(max_sp));
        out.push_back(check_gf_sum_identity(max_sp));
        out.push_back(check_kpar_counts(max_sp));
        out.push_back(check_kdir_counts(max_sp));
        out.push_back(check_kdir_limit(max_sp));
        out.push_back(check_tree_height_counts(max_sp));
        out.push_back(check_statistic_tables(max_sp));
        out.push_back(check_asymptotics(max_sp));
    }
    if (out.empty()) fail(errc::unknown_name, "run_verification: unknown suite " + suite);
    return out;
}

} // namespace polyforge
