#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "polyforge/lattice.hpp"

namespace polyforge {

enum class StepDir { east, north };

inline StepDir other(StepDir d) { return d == StepDir::east ? StepDir::north : StepDir::east; }

// Greedy monotone path with maximal straight sides, joining two cells of a
// directed convex polyomino.  The path conceptually starts half a step before
// the first cell (the "tail"), which fixes its first direction even when no
// movement in that direction is possible; a path whose first real segment
// runs against the tail direction therefore pays one extra change.
struct BouncePath {
    Cell start;
    StepDir first_direction;
    std::vector<std::pair<StepDir, int>> segments; // alternating, lengths >= 1
    Cell target;

    int changes() const {
        if (segments.empty()) return 0;
        int c = static_cast<int>(segments.size()) - 1;
        if (segments.front().first != first_direction) ++c;
        return c;
    }
};

inline BouncePath bounce_path(const Polyomino& p, Cell b, Cell c, StepDir first) {
    if (!p.contains(b) || !p.contains(c)) fail(errc::cell_outside, "bounce_path: cell outside polyomino");
    if (c.i < b.i || c.j < b.j) fail(errc::not_comparable, "bounce_path: target not weakly north-east");
    BouncePath path{b, first, {}, c};
    Cell cur = b;
    StepDir dir = first;
    int stalls = 0;
    while (!(cur == c)) {
        int len = 0;
        if (dir == StepDir::east) {
            while (cur.i < c.i && p.contains(cur.i + 1, cur.j)) {
                ++cur.i;
                ++len;
            }
        } else {
            while (cur.j < c.j && p.contains(cur.i, cur.j + 1)) {
                ++cur.j;
                ++len;
            }
        }
        if (len > 0) {
            path.segments.push_back({dir, len});
            stalls = 0;
        } else if (++stalls == 2) {
            // both directions blocked away from the target: the host is not
            // directed convex between these cells
            fail(errc::not_directed_convex, "bounce_path: no monotone progress");
        }
        dir = other(dir);
    }
    return path;
}

// The bounce path with fewer changes of direction; ties go to the east-first
// path r.
inline BouncePath minimal_bounce(const Polyomino& p, Cell b, Cell c) {
    BouncePath r = bounce_path(p, b, c, StepDir::east);
    BouncePath u = bounce_path(p, b, c, StepDir::north);
    return u.changes() < r.changes() ? u : r;
}

// Number of changes of the minimal bounce path joining the root S to b.
inline int cell_degree(const Polyomino& d, Cell b) {
    if (!d.contains(b)) fail(errc::cell_outside, "cell_degree: cell outside polyomino");
    return minimal_bounce(d, Cell{0, 0}, b).changes();
}

namespace detail {

// A pair of cells lying strictly south-east of each other forces at least one
// change of direction; bounce paths from S never see such pairs.
inline bool has_strict_se_pair(const Polyomino& d) {
    auto spans = d.column_spans();
    for (int i = 0; i + 1 < d.width(); ++i)
        if (spans[i].second > spans[i + 1].first) return true;
    return false;
}

} // namespace detail

// Degree of convexity of a directed convex polyomino: cells weakly north-east
// of S are covered by the bounce degrees from S; a strictly south-east pair
// contributes exactly one change when present.
inline int degree_directed(const Polyomino& d) {
    ClassReport cls = classify(d);
    if (!(cls.directed && cls.convex)) fail(errc::not_directed_convex, "degree_directed: not directed convex");
    int deg = detail::has_strict_se_pair(d) ? 1 : 0;
    for (const Cell& b : d.cells()) deg = std::max(deg, minimal_bounce(d, Cell{0, 0}, b).changes());
    return deg;
}

// Skeleton of a parallelogram polyomino: the cells I_h where the two bounce
// paths r and u cross, followed (once the paths have joined at J) by the
// cells where the common path changes direction.  The maximal label equals
// the degree of convexity.
struct Skeleton {
    std::vector<std::pair<Cell, int>> crossings; // all I_h with labels 0..k
    int M = 0;                                   // index with I_M = J
    bool flat = false;                           // J coincides with E
    Cell J;
    int k = 0;
};

inline Skeleton bounce_skeleton(const Polyomino& p) {
    if (!classify(p).parallelogram) fail(errc::not_parallelogram, "bounce_skeleton: not a parallelogram");
    Cell s{0, 0};
    Cell e{p.width() - 1, p.height() - 1};
    BouncePath r = bounce_path(p, s, e, StepDir::east);
    BouncePath u = bounce_path(p, s, e, StepDir::north);

    // cell -> outgoing direction along the path (0 east, 1 north, 2 none/end)
    auto trace = [&](const BouncePath& path) {
        std::vector<std::pair<Cell, int>> cells;
        Cell cur = path.start;
        for (const auto& [dir, len] : path.segments)
            for (int t = 0; t < len; ++t) {
                cells.push_back({cur, dir == StepDir::east ? 0 : 1});
                cur = dir == StepDir::east ? Cell{cur.i + 1, cur.j} : Cell{cur.i, cur.j + 1};
            }
        cells.push_back({cur, 2});
        return cells;
    };
    auto rt = trace(r);
    auto ut = trace(u);
    std::vector<int> r_out(static_cast<size_t>(p.width()) * p.height(), -1);
    for (const auto& [cell, dir] : rt) r_out[static_cast<size_t>(cell.j) * p.width() + cell.i] = dir;

    Skeleton sk;
    size_t join_pos = ut.size() - 1;
    for (size_t pos = 0; pos < ut.size(); ++pos) {
        const auto& [cell, udir] = ut[pos];
        int rdir = r_out[static_cast<size_t>(cell.j) * p.width() + cell.i];
        if (rdir == -1) continue;
        if (rdir == udir) { // paths merge here and stay superimposed
            sk.J = cell;
            join_pos = pos;
            break;
        }
        sk.crossings.push_back({cell, static_cast<int>(sk.crossings.size())});
    }
    sk.M = static_cast<int>(sk.crossings.size());
    sk.crossings.push_back({sk.J, sk.M});
    sk.flat = sk.J == e;

    // direction changes of the superimposed path, strictly after J
    for (size_t pos = join_pos + 1; pos + 1 < ut.size(); ++pos) {
        if (ut[pos].second != ut[pos - 1].second)
            sk.crossings.push_back({ut[pos].first, static_cast<int>(sk.crossings.size())});
    }
    sk.k = static_cast<int>(sk.crossings.size()) - 1;
    return sk;
}

// Cells strictly north-east of I_{k-1}; for flat polyominoes a non-empty
// axis-aligned rectangle, and exactly the cells of degree k.
inline std::vector<Cell> region_r(const Polyomino& p) {
    Skeleton sk = bounce_skeleton(p);
    if (sk.k == 0) fail(errc::degree_zero, "region_r: degree 0 has no I_{k-1}");
    Cell anchor = sk.crossings[sk.k - 1].first;
    std::vector<Cell> out;
    for (const Cell& c : p.cells())
        if (c.i > anchor.i && c.j > anchor.j) out.push_back(c);
    return out;
}

// The cut e e^(alpha-a) s^b e^a s^(beta-b) s of a flat parallelogram polyomino
// with degree k >= 1, where a x b is the rectangle R_P.  Removing R_P from P
// yields the directed convex polyomino whose cut this is.
inline CutPath lambda_r(const Polyomino& p) {
    Skeleton sk = bounce_skeleton(p);
    if (!sk.flat) fail(errc::not_flat, "lambda_r: polyomino is not flat");
    if (sk.k == 0) fail(errc::degree_zero, "lambda_r: degree 0");
    Cell anchor = sk.crossings[sk.k - 1].first;
    int a = p.width() - 1 - anchor.i;
    int b = p.height() - 1 - anchor.j;
    auto [alpha, beta] = alpha_beta(p);
    std::string w = "e";
    w.append(static_cast<size_t>(alpha - a), 'e');
    w.append(static_cast<size_t>(b), 's');
    w.append(static_cast<size_t>(a), 'e');
    w.append(static_cast<size_t>(beta - b), 's');
    w += 's';
    return CutPath{std::move(w)};
}

// True iff the left word stays weakly above the right one: scanning east
// steps, the left word must never have seen more south steps.
inline bool weakly_above(const CutPath& high, const CutPath& low) {
    auto profile = [](const CutPath& c) {
        std::vector<int> s_before; // s count before each e, then the total
        int s = 0;
        for (char ch : c.word) {
            if (ch == 'e')
                s_before.push_back(s);
            else
                ++s;
        }
        s_before.push_back(s);
        return s_before;
    };
    auto h = profile(high), l = profile(low);
    if (h.size() != l.size() || h.back() != l.back()) return false;
    for (size_t x = 0; x < h.size(); ++x)
        if (h[x] > l[x]) return false;
    return true;
}

// Characterization of directed k-convexity through the completed
// parallelogram: either P_D itself has degree <= k, or P_D is flat with
// degree exactly k+1 and the cut stays weakly below lambda_{R_P}.
inline bool is_directed_k(const Polyomino& d, int k) {
    ClassReport cls = classify(d);
    if (!(cls.directed && cls.convex)) fail(errc::not_directed_convex, "is_directed_k: not directed convex");
    if (k < 0) fail(errc::bad_k, "is_directed_k: k must be >= 0");
    Polyomino pd = complete_to_parallelogram(d);
    Skeleton sk = bounce_skeleton(pd);
    if (k == 0) return sk.k == 0; // 0-convex directed polyominoes are exactly the bars
    if (sk.k <= k) return true;
    if (sk.k == k + 1 && sk.flat) return weakly_above(lambda_r(pd), cut_of(d));
    return false;
}

} // namespace polyforge
