#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyforge/error.hpp"

namespace polyforge {

// Unit cell of the square lattice.  Coordinates are 0-based with the
// south-west corner of the bounding box at (0,0); i indexes columns
// (west to east) and j indexes rows (south to north).
struct Cell {
    int i = 0;
    int j = 0;

    friend bool operator==(const Cell& a, const Cell& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

// A finite edge-connected set of cells, normalized so min i = min j = 0.
// Cells are kept sorted (i, then j); an occupancy bitmask over the bounding
// box gives O(1) membership, which dominates enumeration throughput.
class Polyomino {
public:
    Polyomino() = default;

    // Trusted constructor: cells must be sorted, distinct, normalized and
    // connected.  The enumerators build their output through this path.
    static Polyomino from_sorted_cells(std::vector<Cell> cells) {
        Polyomino p;
        p.cells_ = std::move(cells);
        p.finish();
        return p;
    }

    const std::vector<Cell>& cells() const { return cells_; }
    int width() const { return width_; }   // l1, number of columns
    int height() const { return height_; } // l2, number of rows
    int area() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }

    bool contains(int i, int j) const {
        if (i < 0 || j < 0 || i >= width_ || j >= height_) return false;
        size_t bit = static_cast<size_t>(j) * width_ + i;
        return (mask_[bit >> 6] >> (bit & 63)) & 1u;
    }
    bool contains(Cell c) const { return contains(c.i, c.j); }

    // Per-column (min j, max j).  Gap-free only when column-convex.
    std::vector<std::pair<int, int>> column_spans() const {
        std::vector<std::pair<int, int>> s(width_, {height_, -1});
        for (const Cell& c : cells_) {
            s[c.i].first = std::min(s[c.i].first, c.j);
            s[c.i].second = std::max(s[c.i].second, c.j);
        }
        return s;
    }

    std::vector<std::pair<int, int>> row_spans() const {
        std::vector<std::pair<int, int>> s(height_, {width_, -1});
        for (const Cell& c : cells_) {
            s[c.j].first = std::min(s[c.j].first, c.i);
            s[c.j].second = std::max(s[c.j].second, c.i);
        }
        return s;
    }

    friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }
    friend bool operator!=(const Polyomino& a, const Polyomino& b) { return !(a == b); }
    friend bool operator<(const Polyomino& a, const Polyomino& b) { return a.cells_ < b.cells_; }

private:
    std::vector<Cell> cells_;
    int width_ = 0;
    int height_ = 0;
    std::vector<uint64_t> mask_;

    void finish() {
        width_ = height_ = 0;
        for (const Cell& c : cells_) {
            width_ = std::max(width_, c.i + 1);
            height_ = std::max(height_, c.j + 1);
        }
        size_t bits = static_cast<size_t>(width_) * height_;
        mask_.assign((bits + 63) / 64, 0);
        for (const Cell& c : cells_) {
            size_t bit = static_cast<size_t>(c.j) * width_ + c.i;
            mask_[bit >> 6] |= uint64_t(1) << (bit & 63);
        }
    }
};

struct ClassReport {
    bool column_convex = false;
    bool row_convex = false;
    bool convex = false;
    bool directed = false;
    bool parallelogram = false;
};

struct StatRecord {
    int semi_perimeter = 0;
    int area = 0;
    int width = 0;
    int height = 0;
    int outside_corners = 0;
    int inside_corners = 0;
    int site_perimeter = 0;
    bool diagonal_symmetric = false;
};

// Monotone east/south word framing a directed convex polyomino inside its
// completed parallelogram.  Serialized as a lowercase string over {e,s}.
struct CutPath {
    std::string word;

    int count_e() const { return static_cast<int>(std::count(word.begin(), word.end(), 'e')); }
    int count_s() const { return static_cast<int>(std::count(word.begin(), word.end(), 's')); }

    friend bool operator==(const CutPath& a, const CutPath& b) { return a.word == b.word; }
    friend bool operator!=(const CutPath& a, const CutPath& b) { return !(a == b); }
};

inline CutPath make_cut(std::string word) {
    for (char c : word)
        if (c != 'e' && c != 's') fail(errc::bad_input, "cut words use letters e and s only");
    return CutPath{std::move(word)};
}

// Builds a normalized polyomino from raw coordinates (any translate).
inline Polyomino normalize(const std::vector<std::pair<int, int>>& raw) {
    if (raw.empty()) fail(errc::empty_input, "normalize: no cells");
    int mini = raw[0].first, minj = raw[0].second;
    for (auto [i, j] : raw) {
        mini = std::min(mini, i);
        minj = std::min(minj, j);
    }
    std::vector<Cell> cells;
    cells.reserve(raw.size());
    for (auto [i, j] : raw) cells.push_back({i - mini, j - minj});
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        fail(errc::duplicate_cell, "normalize: duplicate cell");
    Polyomino p = Polyomino::from_sorted_cells(std::move(cells));

    // flood fill from the first cell; 4-connectivity
    std::vector<Cell> stack{p.cells()[0]};
    std::vector<char> seen(p.cells().size(), 0);
    auto index_of = [&](Cell c) {
        return static_cast<size_t>(
            std::lower_bound(p.cells().begin(), p.cells().end(), c) - p.cells().begin());
    };
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            Cell n{c.i + di[d], c.j + dj[d]};
            if (!p.contains(n)) continue;
            size_t idx = index_of(n);
            if (!seen[idx]) {
                seen[idx] = 1;
                ++reached;
                stack.push_back(n);
            }
        }
    }
    if (reached != p.cells().size()) fail(errc::disconnected, "normalize: cells are not 4-connected");
    return p;
}

namespace detail {

inline bool spans_contiguous(const Polyomino& p, const std::vector<std::pair<int, int>>& spans,
                             bool columns) {
    for (size_t k = 0; k < spans.size(); ++k) {
        auto [lo, hi] = spans[k];
        if (hi < lo) return false; // empty slice inside the bounding box
        for (int t = lo; t <= hi; ++t) {
            bool in = columns ? p.contains(static_cast<int>(k), t) : p.contains(t, static_cast<int>(k));
            if (!in) return false;
        }
    }
    return true;
}

} // namespace detail

// Sets the five class flags.  Directedness is reachability from the cell at
// the bounding box's south-west position using north/east moves only; when
// that cell is absent the polyomino is not directed.
inline ClassReport classify(const Polyomino& p) {
    ClassReport r;
    auto cols = p.column_spans();
    auto rows = p.row_spans();
    r.column_convex = detail::spans_contiguous(p, cols, true);
    r.row_convex = detail::spans_contiguous(p, rows, false);
    r.convex = r.column_convex && r.row_convex;

    if (p.contains(0, 0)) {
        // north/east reachability from (0,0)
        std::vector<char> reach(static_cast<size_t>(p.width()) * p.height(), 0);
        auto at = [&](int i, int j) -> char& { return reach[static_cast<size_t>(j) * p.width() + i]; };
        size_t count = 0;
        at(0, 0) = 1;
        ++count;
        // sweep order (increasing i+j) makes a single pass sufficient
        for (int s = 1; s <= p.width() + p.height() - 2; ++s) {
            for (int i = std::max(0, s - p.height() + 1); i <= std::min(s, p.width() - 1); ++i) {
                int j = s - i;
                if (!p.contains(i, j)) continue;
                bool ok = (i > 0 && p.contains(i - 1, j) && at(i - 1, j)) ||
                          (j > 0 && p.contains(i, j - 1) && at(i, j - 1));
                if (ok) {
                    at(i, j) = 1;
                    ++count;
                }
            }
        }
        r.directed = count == p.cells().size();
    }

    if (r.convex) {
        bool para = true;
        for (int i = 0; i + 1 < p.width(); ++i) {
            if (cols[i].first > cols[i + 1].first || cols[i].second > cols[i + 1].second ||
                cols[i + 1].first > cols[i].second)
                para = false;
        }
        r.parallelogram = para;
    }
    return r;
}

namespace detail {

enum class Dir4 { north, east, south, west };

inline Cell right_front(Cell v, Dir4 d) {
    switch (d) {
        case Dir4::north: return {v.i, v.j};
        case Dir4::east: return {v.i, v.j - 1};
        case Dir4::south: return {v.i - 1, v.j - 1};
        case Dir4::west: return {v.i - 1, v.j};
    }
    return v;
}

inline Cell left_front(Cell v, Dir4 d) {
    switch (d) {
        case Dir4::north: return {v.i - 1, v.j};
        case Dir4::east: return {v.i, v.j};
        case Dir4::south: return {v.i, v.j - 1};
        case Dir4::west: return {v.i - 1, v.j - 1};
    }
    return v;
}

inline Cell step(Cell v, Dir4 d) {
    switch (d) {
        case Dir4::north: return {v.i, v.j + 1};
        case Dir4::east: return {v.i + 1, v.j};
        case Dir4::south: return {v.i, v.j - 1};
        case Dir4::west: return {v.i - 1, v.j};
    }
    return v;
}

inline Dir4 turn_right(Dir4 d) { return static_cast<Dir4>((static_cast<int>(d) + 1) % 4); }
inline Dir4 turn_left(Dir4 d) { return static_cast<Dir4>((static_cast<int>(d) + 3) % 4); }

// Clockwise walk of the outer boundary (interior on the right); returns
// (right turns, left turns) = (outside corners, inside corners).
inline std::pair<int, int> boundary_corners(const Polyomino& p) {
    int i0 = 0;
    while (!p.contains(i0, 0)) ++i0;
    Cell start{i0, 0};
    Dir4 dir = Dir4::north;
    int outside = 0, inside = 0;
    Cell v = start;
    do {
        v = step(v, dir);
        if (!p.contains(right_front(v, dir))) {
            dir = turn_right(dir);
            ++outside;
        } else if (p.contains(left_front(v, dir))) {
            dir = turn_left(dir);
            ++inside;
        }
    } while (!(v == start && dir == Dir4::north));
    return {outside, inside};
}

} // namespace detail

inline StatRecord statistics(const Polyomino& p) {
    StatRecord s;
    s.area = p.area();
    s.width = p.width();
    s.height = p.height();

    int adjacent_pairs = 0;
    for (const Cell& c : p.cells()) {
        if (p.contains(c.i + 1, c.j)) ++adjacent_pairs;
        if (p.contains(c.i, c.j + 1)) ++adjacent_pairs;
    }
    s.semi_perimeter = 2 * s.area - adjacent_pairs;

    auto [outside, inside] = detail::boundary_corners(p);
    s.outside_corners = outside;
    s.inside_corners = inside;

    // vacant cells edge-adjacent to the polyomino, counted once each
    std::vector<char> vac(static_cast<size_t>(p.width() + 2) * (p.height() + 2), 0);
    auto mark = [&](int i, int j) { vac[static_cast<size_t>(j + 1) * (p.width() + 2) + (i + 1)] = 1; };
    for (const Cell& c : p.cells()) {
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d)
            if (!p.contains(c.i + di[d], c.j + dj[d])) mark(c.i + di[d], c.j + dj[d]);
    }
    s.site_perimeter = static_cast<int>(std::count(vac.begin(), vac.end(), 1));

    std::vector<Cell> t;
    t.reserve(p.cells().size());
    for (const Cell& c : p.cells()) t.push_back({c.j, c.i});
    std::sort(t.begin(), t.end());
    s.diagonal_symmetric = t == p.cells();
    return s;
}

// Number of cells in the top row (resp. rightmost column) minus one.
inline std::pair<int, int> alpha_beta(const Polyomino& p) {
    if (!classify(p).parallelogram) fail(errc::not_parallelogram, "alpha_beta: not a parallelogram polyomino");
    int alpha = -1, beta = -1;
    for (const Cell& c : p.cells()) {
        if (c.j == p.height() - 1) ++alpha;
        if (c.i == p.width() - 1) ++beta;
    }
    return {alpha, beta};
}

// The parallelogram polyomino P_D: same bounding box as D, with the region
// between D's north-east staircase boundary and the corner filled in.  On
// column profiles this is the running maximum (from the west) of the tops.
inline Polyomino complete_to_parallelogram(const Polyomino& d) {
    ClassReport cls = classify(d);
    if (!(cls.directed && cls.convex))
        fail(errc::not_directed_convex, "complete_to_parallelogram: not directed convex");
    auto spans = d.column_spans();
    std::vector<Cell> cells;
    int top = 0;
    for (int i = 0; i < d.width(); ++i) {
        top = std::max(top, spans[i].second);
        for (int j = spans[i].first; j <= top; ++j) cells.push_back({i, j});
    }
    return Polyomino::from_sorted_cells(std::move(cells));
}

// The path from the leftmost corner of the top row, clockwise along D's
// boundary, down to the lowest corner of the rightmost column.
inline CutPath cut_of(const Polyomino& d) {
    ClassReport cls = classify(d);
    if (!(cls.directed && cls.convex)) fail(errc::not_directed_convex, "cut_of: not directed convex");
    auto spans = d.column_spans();
    int top_start = 0;
    while (spans[top_start].second != d.height() - 1) ++top_start;
    std::string w;
    for (int i = top_start; i < d.width(); ++i) {
        w += 'e';
        int next_top = (i + 1 < d.width()) ? spans[i + 1].second : spans[i].first - 1;
        w.append(static_cast<size_t>(spans[i].second - next_top), 's');
    }
    return CutPath{std::move(w)};
}

// Carves the cut path into a parallelogram polyomino, recovering the directed
// convex polyomino it frames.  Inverse of (complete_to_parallelogram, cut_of).
inline Polyomino assemble(const Polyomino& p, const CutPath& cut) {
    ClassReport cls = classify(p);
    if (!cls.parallelogram) fail(errc::not_parallelogram, "assemble: not a parallelogram polyomino");
    auto [alpha, beta] = alpha_beta(p);
    if (cut.word.empty() || cut.word.front() != 'e' || cut.word.back() != 's')
        fail(errc::invalid_cut, "assemble: cut must start with e and end with s");
    if (cut.count_e() != alpha + 1 || cut.count_s() != beta + 1)
        fail(errc::invalid_cut, "assemble: cut step counts do not match alpha+1/beta+1");

    auto spans = p.column_spans();
    int top_start = p.width() - 1 - alpha;
    std::vector<int> new_top(p.width());
    for (int i = 0; i < top_start; ++i) new_top[i] = spans[i].second;
    int col = top_start, y = p.height();
    for (char c : cut.word) {
        if (c == 'e') {
            new_top[col] = y - 1;
            ++col;
        } else {
            --y;
        }
    }
    for (int i = 0; i < p.width(); ++i) {
        if (new_top[i] < spans[i].first) fail(errc::invalid_cut, "assemble: cut leaves the polyomino");
        if (i + 1 < p.width() && new_top[i] < spans[i + 1].first)
            fail(errc::invalid_cut, "assemble: cut disconnects the polyomino");
    }
    std::vector<Cell> cells;
    for (int i = 0; i < p.width(); ++i)
        for (int j = spans[i].first; j <= new_top[i]; ++j) cells.push_back({i, j});
    return Polyomino::from_sorted_cells(std::move(cells));
}

} // namespace polyforge
