#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "polyforge/bounce.hpp"
#include "polyforge/lattice.hpp"

namespace polyforge {

// Brute-force generators for the three classes, used as ground truth against
// the bijections and the generating functions.  Each stream yields every
// polyomino of the class exactly once, in a deterministic order.

namespace detail {

inline Polyomino from_spans(const std::vector<std::pair<int, int>>& spans) {
    std::vector<Cell> cells;
    for (int i = 0; i < static_cast<int>(spans.size()); ++i)
        for (int j = spans[i].first; j <= spans[i].second; ++j) cells.push_back({i, j});
    return Polyomino::from_sorted_cells(std::move(cells));
}

} // namespace detail

// Parallelogram polyominoes are generated straight from their column
// profiles: bottoms and tops both weakly increasing, consecutive columns
// overlapping.  This encodes the two monotone boundary paths directly and
// shares no code with the bijection machinery.
template <typename Fn>
void for_each_parallelogram(int sp, Fn&& fn) {
    if (sp < 2) return;
    std::vector<std::pair<int, int>> spans;
    for (int l1 = 1; l1 <= sp - 1; ++l1) {
        int l2 = sp - l1;
        spans.assign(l1, {0, 0});
        // column c gets [a, b]; recursion fixes columns left to right
        auto rec = [&](auto&& self, int c, int prev_a, int prev_b) -> void {
            if (c == l1) {
                if (spans[l1 - 1].second == l2 - 1) fn(detail::from_spans(spans));
                return;
            }
            int max_top_rest = l2 - 1;
            for (int a = prev_a; a <= prev_b; ++a) {
                for (int b = std::max(a, prev_b); b <= max_top_rest; ++b) {
                    spans[c] = {a, b};
                    self(self, c + 1, a, b);
                }
            }
        };
        // first column: a = 0
        for (int b0 = 0; b0 <= l2 - 1; ++b0) {
            spans[0] = {0, b0};
            rec(rec, 1, 0, b0);
        }
    }
}

// Convex polyominoes from column-interval profiles: tops unimodal, bottoms
// reverse-unimodal, consecutive intervals overlapping, bounding box tight.
// The characterization itself is validated against naive enumeration of all
// connected cell sets at small semi-perimeter (see tests).
template <typename Fn>
void for_each_convex(int sp, Fn&& fn) {
    if (sp < 2) return;
    std::vector<std::pair<int, int>> spans;
    for (int l1 = 1; l1 <= sp - 1; ++l1) {
        int l2 = sp - l1;
        spans.assign(l1, {0, 0});
        auto rec = [&](auto&& self, int c, int prev_a, int prev_b, bool a_rising, bool b_falling,
                       bool seen_bottom, bool seen_top) -> void {
            if (c == l1) {
                if (seen_bottom && seen_top) fn(detail::from_spans(spans));
                return;
            }
            int a_lo = a_rising ? prev_a : 0;
            for (int a = a_lo; a <= prev_b; ++a) { // a <= prev_b keeps columns overlapping
                bool na_rising = a_rising || a > prev_a;
                bool nsb = seen_bottom || a == 0;
                // once the bottom profile rises it never returns to 0
                if (!nsb && na_rising) continue;
                int b_lo = std::max(a, prev_a);
                int b_hi = b_falling ? prev_b : l2 - 1;
                for (int b = b_lo; b <= b_hi; ++b) {
                    bool nb_falling = b_falling || b < prev_b;
                    bool nst = seen_top || b == l2 - 1;
                    // once the top profile falls it never reaches l2-1 again
                    if (!nst && nb_falling) continue;
                    spans[c] = {a, b};
                    self(self, c + 1, a, b, na_rising, nb_falling, nsb, nst);
                }
            }
        };
        for (int a0 = 0; a0 <= l2 - 1; ++a0) {
            for (int b0 = a0; b0 <= l2 - 1; ++b0) {
                spans[0] = {a0, b0};
                rec(rec, 1, a0, b0, false, false, a0 == 0, b0 == l2 - 1);
            }
        }
    }
}

// All cuts of a parallelogram polyomino: words with alpha+1 east steps and
// beta+1 south steps, first step east, last step south.
template <typename Fn>
void for_each_cut(int alpha, int beta, Fn&& fn) {
    std::string w = "e";
    auto rec = [&](auto&& self, int e_left, int s_left) -> void {
        if (e_left == 0 && s_left == 0) {
            w += 's';
            fn(CutPath{w});
            w.pop_back();
            return;
        }
        if (e_left > 0) {
            w += 'e';
            self(self, e_left - 1, s_left);
            w.pop_back();
        }
        if (s_left > 0) {
            w += 's';
            self(self, e_left, s_left - 1);
            w.pop_back();
        }
    };
    rec(rec, alpha, beta);
}

// Directed convex polyominoes of semi-perimeter sp, produced as
// (parallelogram, cut) pairs through assemble.
template <typename Fn>
void for_each_directed_convex(int sp, Fn&& fn) {
    for_each_parallelogram(sp, [&](const Polyomino& p) {
        auto [alpha, beta] = alpha_beta(p);
        for_each_cut(alpha, beta, [&](const CutPath& cut) { fn(assemble(p, cut)); });
    });
}

// Independent cross-check: directed convex as a filter over the convex stream.
template <typename Fn>
void for_each_directed_convex_filtered(int sp, Fn&& fn) {
    for_each_convex(sp, [&](const Polyomino& p) {
        if (classify(p).directed) fn(p);
    });
}

// Minimum number of direction changes over all monotone lattice paths between
// the centers of two cells, by 0-1 BFS on (cell, last direction) states.
// Returns -1 when no monotone path exists.  This is the degree oracle; it is
// deliberately independent of the bounce-path machinery.
namespace detail {

class MonotonePathSearch {
public:
    // dirs: two unit steps, e.g. {+1,0} and {0,+1} for a north-east pair
    int min_changes(const Polyomino& p, Cell from, Cell to, int di0, int dj0, int di1, int dj1,
                    int cap = -1) {
        if (from == to) return 0;
        size_t states = static_cast<size_t>(p.width()) * p.height() * 2;
        dist_.assign(states, -1);
        dq_.clear();
        auto id = [&](int i, int j, int d) {
            return (static_cast<size_t>(j) * p.width() + i) * 2 + d;
        };
        const int di[2] = {di0, di1};
        const int dj[2] = {dj0, dj1};
        for (int d = 0; d < 2; ++d) {
            int ni = from.i + di[d], nj = from.j + dj[d];
            if (p.contains(ni, nj)) {
                dist_[id(ni, nj, d)] = 0;
                dq_.push_back(id(ni, nj, d));
            }
        }
        while (!dq_.empty()) {
            size_t s = dq_.front();
            dq_.pop_front();
            int d = static_cast<int>(s & 1);
            int cellidx = static_cast<int>(s >> 1);
            int i = cellidx % p.width(), j = cellidx / p.width();
            int cur = dist_[s];
            if (cap >= 0 && cur > cap) return cur; // everything later is no better
            if (i == to.i && j == to.j) return cur;
            for (int nd = 0; nd < 2; ++nd) {
                int ni = i + di[nd], nj = j + dj[nd];
                if (!p.contains(ni, nj)) continue;
                int w = nd == d ? 0 : 1;
                size_t t = id(ni, nj, nd);
                if (dist_[t] == -1 || dist_[t] > cur + w) {
                    dist_[t] = cur + w;
                    if (w == 0)
                        dq_.push_front(t);
                    else
                        dq_.push_back(t);
                }
            }
        }
        return -1;
    }

private:
    std::vector<int> dist_;
    std::deque<size_t> dq_;
};

// Min direction changes for one (unordered) cell pair; monotonicity is fixed
// by the pair's coordinate order.
inline int pair_min_changes(const Polyomino& p, Cell a, Cell b, MonotonePathSearch& search,
                            int cap = -1) {
    if (a.i > b.i) std::swap(a, b);
    if (a.i == b.i && a.j > b.j) std::swap(a, b);
    int r;
    if (b.j >= a.j)
        r = search.min_changes(p, a, b, 1, 0, 0, 1, cap); // east / north
    else
        r = search.min_changes(p, a, b, 1, 0, 0, -1, cap); // east / south
    return r;
}

} // namespace detail

// Degree of convexity: max over cell pairs of the minimal number of direction
// changes of a monotone path joining them.
inline int degree_generic(const Polyomino& p) {
    if (!classify(p).convex) fail(errc::not_convex, "degree_generic: not convex");
    detail::MonotonePathSearch search;
    int deg = 0;
    const auto& cells = p.cells();
    for (size_t x = 0; x < cells.size(); ++x)
        for (size_t y = x + 1; y < cells.size(); ++y) {
            int c = detail::pair_min_changes(p, cells[x], cells[y], search);
            deg = std::max(deg, c);
        }
    return deg;
}

// Early-exit variant of the same search: true iff every pair joins with at
// most k changes.  Distant pairs are tried first since they violate soonest.
inline bool is_k_convex_generic(const Polyomino& p, int k) {
    if (!classify(p).convex) fail(errc::not_convex, "is_k_convex_generic: not convex");
    detail::MonotonePathSearch search;
    const auto& cells = p.cells();
    std::vector<std::pair<int, std::pair<size_t, size_t>>> pairs;
    pairs.reserve(cells.size() * (cells.size() - 1) / 2);
    for (size_t x = 0; x < cells.size(); ++x)
        for (size_t y = x + 1; y < cells.size(); ++y) {
            int d = std::abs(cells[x].i - cells[y].i) + std::abs(cells[x].j - cells[y].j);
            pairs.push_back({-d, {x, y}});
        }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& pr : pairs) {
        int c = detail::pair_min_changes(p, cells[pr.second.first], cells[pr.second.second], search, k);
        if (c > k) return false;
    }
    return true;
}

enum class PolyominoClass { convex, directed, parallelogram };

struct CountRow {
    int sp;
    uint64_t count;
};

// Count of one class at one semi-perimeter, optionally restricted to degree
// of convexity <= cap.  The degree filter uses the generic path-search oracle
// for the convex class and the bounce-path degree for the directed classes.
inline uint64_t count_one(PolyominoClass cls, int sp, int degree_cap = -1) {
    uint64_t n = 0;
    auto visit = [&](const Polyomino& p) {
        if (degree_cap < 0)
            ++n;
        else if (cls == PolyominoClass::convex) {
            if (is_k_convex_generic(p, degree_cap)) ++n;
        } else {
            if (degree_directed(p) <= degree_cap) ++n;
        }
    };
    switch (cls) {
        case PolyominoClass::convex: for_each_convex(sp, visit); break;
        case PolyominoClass::directed: for_each_directed_convex(sp, visit); break;
        case PolyominoClass::parallelogram: for_each_parallelogram(sp, visit); break;
    }
    return n;
}

// Exact counts per semi-perimeter, sp = 2 .. max_sp.
inline std::vector<CountRow> count_table(PolyominoClass cls, int max_sp, int degree_cap = -1) {
    std::vector<CountRow> out;
    for (int sp = 2; sp <= max_sp; ++sp) out.push_back({sp, count_one(cls, sp, degree_cap)});
    return out;
}

// Canonical ordering for externally visible listings.
inline std::vector<Polyomino> collect_sorted(PolyominoClass cls, int sp, int degree_cap = -1) {
    std::vector<Polyomino> all;
    auto visit = [&](const Polyomino& p) {
        if (degree_cap >= 0) {
            if (cls == PolyominoClass::convex) {
                if (!is_k_convex_generic(p, degree_cap)) return;
            } else if (degree_directed(p) > degree_cap) {
                return;
            }
        }
        all.push_back(p);
    };
    switch (cls) {
        case PolyominoClass::convex: for_each_convex(sp, visit); break;
        case PolyominoClass::directed: for_each_directed_convex(sp, visit); break;
        case PolyominoClass::parallelogram: for_each_parallelogram(sp, visit); break;
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace polyforge
