#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polyforge/bounce.hpp"
#include "polyforge/lattice.hpp"

namespace polyforge {

// Rooted plane tree.  When produced by phi each node remembers its source
// cell; the cell is provenance only and does not take part in equality.
struct OrderedTree {
    std::vector<OrderedTree> children;
    Cell cell{-1, -1};

    friend bool operator==(const OrderedTree& a, const OrderedTree& b) {
        return a.children == b.children;
    }
    friend bool operator!=(const OrderedTree& a, const OrderedTree& b) { return !(a == b); }
};

using Forest = std::vector<OrderedTree>;

inline int tree_size(const OrderedTree& t) {
    int n = 1;
    for (const auto& c : t.children) n += tree_size(c);
    return n;
}

// Number of nodes on a maximal simple path starting at the root.
inline int tree_height(const OrderedTree& t) {
    int h = 0;
    for (const auto& c : t.children) h = std::max(h, tree_height(c));
    return h + 1;
}

inline int forest_size(const Forest& f) {
    int n = 0;
    for (const auto& t : f) n += tree_size(t);
    return n;
}

inline int forest_height(const Forest& f) {
    int h = 0;
    for (const auto& t : f) h = std::max(h, tree_height(t));
    return h;
}

// Balanced-parentheses serialization, children left to right: "()" is a
// single node, "(())" the two-node path.
inline void tree_to_paren(const OrderedTree& t, std::string& out) {
    out += '(';
    for (const auto& c : t.children) tree_to_paren(c, out);
    out += ')';
}

inline std::string tree_to_paren(const OrderedTree& t) {
    std::string s;
    tree_to_paren(t, s);
    return s;
}

inline OrderedTree tree_from_paren(std::string_view s) {
    size_t pos = 0;
    auto rec = [&](auto&& self) -> OrderedTree {
        if (pos >= s.size() || s[pos] != '(') fail(errc::bad_input, "tree_from_paren: expected (");
        ++pos;
        OrderedTree t;
        while (pos < s.size() && s[pos] == '(') t.children.push_back(self(self));
        if (pos >= s.size() || s[pos] != ')') fail(errc::bad_input, "tree_from_paren: expected )");
        ++pos;
        return t;
    };
    OrderedTree t = rec(rec);
    if (pos != s.size()) fail(errc::bad_input, "tree_from_paren: trailing characters");
    return t;
}

// All Dyck words (balanced over u/d, never dipping below zero) of a given
// semi-length, generated by backtracking in lexicographic order (d < u).
template <typename Fn>
void for_each_dyck_word(int semilen, Fn&& fn) {
    std::string w;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == semilen && downs == semilen) {
            fn(const_cast<const std::string&>(w));
            return;
        }
        if (downs < ups) {
            w += 'd';
            self(self, ups, downs + 1);
            w.pop_back();
        }
        if (ups < semilen) {
            w += 'u';
            self(self, ups + 1, downs);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
}

// All balanced u/d words of a given semi-length (bilateral Dyck paths).
template <typename Fn>
void for_each_balanced_word(int semilen, Fn&& fn) {
    std::string w;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == semilen && downs == semilen) {
            fn(const_cast<const std::string&>(w));
            return;
        }
        if (downs < semilen) {
            w += 'd';
            self(self, ups, downs + 1);
            w.pop_back();
        }
        if (ups < semilen) {
            w += 'u';
            self(self, ups + 1, downs);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
}

inline OrderedTree dyck_to_tree(std::string_view word);

// A Dyck word of semi-length n splits into elevated blocks, one tree each.
inline Forest forest_from_dyck(std::string_view w) {
    Forest f;
    size_t pos = 0;
    while (pos < w.size()) {
        int level = 0;
        size_t start = pos;
        do {
            if (pos >= w.size() || (w[pos] != 'u' && w[pos] != 'd'))
                fail(errc::not_dyck, "forest_from_dyck: malformed word");
            level += w[pos] == 'u' ? 1 : -1;
            if (level < 0) fail(errc::not_dyck, "forest_from_dyck: word dips below zero");
            ++pos;
        } while (level != 0);
        f.push_back(dyck_to_tree(w.substr(start, pos - start)));
    }
    return f;
}

// All ordered trees of a given size, through their Dyck encodings.
template <typename Fn>
void for_each_tree(int size, Fn&& fn) {
    if (size < 1) return;
    for_each_dyck_word(size - 1, [&](const std::string& w) {
        OrderedTree t;
        t.children = forest_from_dyck(w);
        fn(const_cast<const OrderedTree&>(t));
    });
}

// --- the lighting bijection -------------------------------------------------

// Pair of forests encoding a parallelogram polyomino: dot the cells lit from
// the east (rightmost of each row) and from the north (topmost of each
// column), except the top-right cell E.  Top-row dots root the trees of F_e,
// rightmost-column dots root the trees of F_s; within a column the topmost
// dot fathers the others (north to south), within a row the rightmost dot
// fathers the others (east to west).
inline std::pair<Forest, Forest> phi(const Polyomino& p) {
    if (!classify(p).parallelogram) fail(errc::not_parallelogram, "phi: not a parallelogram polyomino");
    int w = p.width(), h = p.height();
    auto cols = p.column_spans();
    auto rows = p.row_spans();

    // east-lit dots per column (rows whose rightmost cell sits in it)
    std::vector<std::vector<int>> elit_rows(w);
    for (int j = 0; j < h; ++j) {
        if (j == h - 1) continue; // rightmost of the top row is E
        elit_rows[rows[j].second].push_back(j);
    }
    // north-lit dots per row (columns topping out in it)
    std::vector<std::vector<int>> nlit_cols(h);
    for (int i = 0; i < w; ++i) {
        if (i == w - 1) continue; // top of the rightmost column is E
        nlit_cols[cols[i].second].push_back(i);
    }

    auto make_nlit = [&](auto&& self_n, auto&& self_e, int i) -> OrderedTree {
        OrderedTree t;
        t.cell = {i, cols[i].second};
        const auto& kids = elit_rows[i];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) // north to south
            t.children.push_back(self_e(self_n, self_e, *it));
        return t;
    };
    auto make_elit = [&](auto&& self_n, auto&& self_e, int j) -> OrderedTree {
        OrderedTree t;
        t.cell = {rows[j].second, j};
        const auto& kids = nlit_cols[j];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) // east to west
            t.children.push_back(self_n(self_n, self_e, *it));
        return t;
    };

    Forest fe, fs;
    for (int i : nlit_cols[h - 1]) fe.push_back(make_nlit(make_nlit, make_elit, i)); // west to east
    for (int j : elit_rows[w - 1]) fs.push_back(make_elit(make_nlit, make_elit, j)); // bottom to top
    return {fe, fs};
}

// Inverse of phi.  Columns are recovered east to west and rows top to bottom
// by a mutual sweep: expanding a column emits the rows that end in it (its
// east-lit children, north to south), expanding a row emits the columns that
// top out in it (its north-lit children, east to west).
inline Polyomino phi_inv(const Forest& fe, const Forest& fs) {
    struct ColEntry {
        const OrderedTree* node; // nullptr for E
        size_t top_row;          // index into rows (top to bottom order)
    };
    struct RowEntry {
        const OrderedTree* node; // nullptr for the top row
        size_t end_col;          // index into cols (east to west order)
    };
    std::vector<ColEntry> cols{{nullptr, 0}};
    std::vector<RowEntry> rows{{nullptr, 0}};
    for (auto it = fe.rbegin(); it != fe.rend(); ++it) cols.push_back({&*it, 0});
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) rows.push_back({&*it, 0});

    size_t pc = 1, pr = 1;
    while (pc < cols.size() || pr < rows.size()) {
        if (pc < cols.size()) {
            const OrderedTree* x = cols[pc].node;
            if (x)
                for (const auto& child : x->children) rows.push_back({&child, pc});
            ++pc;
        }
        if (pr < rows.size()) {
            const OrderedTree* y = rows[pr].node;
            if (y)
                for (const auto& child : y->children) cols.push_back({&child, pr});
            ++pr;
        }
    }

    int l1 = static_cast<int>(cols.size());
    int l2 = static_cast<int>(rows.size());
    std::vector<int> top(l1), end(l2);
    for (size_t t = 0; t < cols.size(); ++t)
        top[l1 - 1 - static_cast<int>(t)] = l2 - 1 - static_cast<int>(cols[t].top_row);
    for (size_t t = 0; t < rows.size(); ++t)
        end[l2 - 1 - static_cast<int>(t)] = l1 - 1 - static_cast<int>(rows[t].end_col);

    // bottom of column i: lowest row whose rightmost column reaches i
    std::vector<Cell> cells;
    int j = 0;
    for (int i = 0; i < l1; ++i) {
        while (end[j] < i) ++j;
        for (int y = j; y <= top[i]; ++y) cells.push_back({i, y});
    }
    return Polyomino::from_sorted_cells(std::move(cells));
}

// --- triplets ---------------------------------------------------------------

// (F_e, F_s, lambda): the bijective code of a directed convex polyomino.
struct Triplet {
    Forest fe;
    Forest fs;
    CutPath cut;

    friend bool operator==(const Triplet& a, const Triplet& b) {
        return a.fe == b.fe && a.fs == b.fs && a.cut == b.cut;
    }
};

inline Triplet to_triplet(const Polyomino& d) {
    ClassReport cls = classify(d);
    if (!(cls.directed && cls.convex)) fail(errc::not_directed_convex, "to_triplet: not directed convex");
    Polyomino pd = complete_to_parallelogram(d);
    auto [fe, fs] = phi(pd);
    return Triplet{std::move(fe), std::move(fs), cut_of(d)};
}

inline Polyomino from_triplet(const Triplet& t) {
    if (t.cut.word.empty() || t.cut.word.front() != 'e' || t.cut.word.back() != 's')
        fail(errc::invalid_triplet, "from_triplet: cut must start with e and end with s");
    if (t.cut.count_e() != static_cast<int>(t.fe.size()) + 1 ||
        t.cut.count_s() != static_cast<int>(t.fs.size()) + 1)
        fail(errc::invalid_triplet, "from_triplet: cut step counts do not match tree counts");
    return assemble(phi_inv(t.fe, t.fs), t.cut);
}

// --- Dyck encodings ---------------------------------------------------------

// Elevated Dyck encoding D(T) = u D'(T) d, where D'(T) concatenates the
// encodings of the children.  Semi-length equals the tree size.
inline void tree_to_dyck(const OrderedTree& t, std::string& out) {
    out += 'u';
    for (const auto& c : t.children) tree_to_dyck(c, out);
    out += 'd';
}

inline std::string tree_to_dyck(const OrderedTree& t) {
    std::string s;
    tree_to_dyck(t, s);
    return s;
}

inline OrderedTree dyck_to_tree(std::string_view word) {
    size_t pos = 0;
    auto rec = [&](auto&& self) -> OrderedTree {
        if (pos >= word.size() || word[pos] != 'u') fail(errc::not_dyck, "dyck_to_tree: expected u");
        ++pos;
        OrderedTree t;
        while (pos < word.size() && word[pos] == 'u') t.children.push_back(self(self));
        if (pos >= word.size() || word[pos] != 'd') fail(errc::not_dyck, "dyck_to_tree: expected d");
        ++pos;
        return t;
    };
    OrderedTree t = rec(rec);
    if (pos != word.size()) fail(errc::not_dyck, "dyck_to_tree: trailing steps");
    return t;
}

// Frame-free triplet -> bilateral Dyck word.  The j-th step of lambda sends
// the next unused tree of its forest: east steps contribute elevated Dyck
// blocks, south steps the mirrored blocks (u and d exchanged).
inline std::string triplet_to_bilateral(const Forest& fe, const Forest& fs, const std::string& lambda) {
    size_t ie = 0, is = 0;
    std::string out;
    for (char step : lambda) {
        if (step == 'e') {
            if (ie >= fe.size()) fail(errc::invalid_triplet, "triplet_to_bilateral: too many east steps");
            tree_to_dyck(fe[ie++], out);
        } else if (step == 's') {
            if (is >= fs.size()) fail(errc::invalid_triplet, "triplet_to_bilateral: too many south steps");
            std::string block;
            tree_to_dyck(fs[is++], block);
            for (char& ch : block) ch = ch == 'u' ? 'd' : 'u';
            out += block;
        } else {
            fail(errc::invalid_triplet, "triplet_to_bilateral: lambda uses letters e and s only");
        }
    }
    if (ie != fe.size() || is != fs.size())
        fail(errc::invalid_triplet, "triplet_to_bilateral: step counts do not match tree counts");
    return out;
}

struct BilateralParse {
    Forest fe;
    Forest fs;
    std::string lambda; // frame-free: one letter per primitive block
};

inline BilateralParse bilateral_to_triplet(std::string_view word) {
    BilateralParse out;
    size_t pos = 0;
    while (pos < word.size()) {
        char lead = word[pos];
        if (lead != 'u' && lead != 'd') fail(errc::not_dyck, "bilateral word uses letters u and d only");
        int level = 0;
        size_t start = pos;
        do {
            if (pos >= word.size()) fail(errc::not_dyck, "bilateral word is unbalanced");
            level += word[pos] == lead ? 1 : -1;
            ++pos;
        } while (level != 0);
        std::string block(word.substr(start, pos - start));
        if (lead == 'u') {
            out.fe.push_back(dyck_to_tree(block));
            out.lambda += 'e';
        } else {
            for (char& ch : block) ch = ch == 'u' ? 'd' : 'u';
            out.fs.push_back(dyck_to_tree(block));
            out.lambda += 's';
        }
    }
    return out;
}

// Directed convex polyomino <-> bilateral Dyck word of semi-length sp - 2:
// strip the frame (first east, last south step) off the cut and concatenate.
inline std::string directed_to_bilateral(const Polyomino& d) {
    Triplet t = to_triplet(d);
    std::string core = t.cut.word.substr(1, t.cut.word.size() - 2);
    return triplet_to_bilateral(t.fe, t.fs, core);
}

inline Polyomino bilateral_to_directed(std::string_view word) {
    BilateralParse parse = bilateral_to_triplet(word);
    Triplet t{std::move(parse.fe), std::move(parse.fs), CutPath{"e" + parse.lambda + "s"}};
    return from_triplet(t);
}

// --- height-k split ---------------------------------------------------------

// A tree of height exactly k splits along the chain from the root to its
// rightmost depth-k node e into 2(k-1) trees: the chain node at depth k-m
// yields the pair (right part, left part) with heights <= m and <= m+1.
inline std::vector<OrderedTree> split_height_k(const OrderedTree& t) {
    int k = tree_height(t);
    if (k < 2) fail(errc::height_too_small, "split_height_k: height must be at least 2");

    // chain[j] = child index taken at depth j+1 on the path to the rightmost
    // deepest node
    std::vector<int> chain;
    auto descend = [&](auto&& self, const OrderedTree& node, int depth) -> bool {
        if (depth == k) return true;
        for (int idx = static_cast<int>(node.children.size()) - 1; idx >= 0; --idx) {
            chain.push_back(idx);
            if (self(self, node.children[idx], depth + 1)) return true;
            chain.pop_back();
        }
        return false;
    };
    descend(descend, t, 1);

    std::vector<OrderedTree> out(2 * (k - 1));
    const OrderedTree* node = &t;
    for (int j = 1; j <= k - 1; ++j) {
        int idx = chain[j - 1];
        int m = k - j;
        OrderedTree right, left;
        for (int q = idx + 1; q < static_cast<int>(node->children.size()); ++q)
            right.children.push_back(node->children[q]);
        for (int q = 0; q < idx; ++q) left.children.push_back(node->children[q]);
        out[2 * (m - 1)] = std::move(right);   // T_{2m-1}, height <= m
        out[2 * (m - 1) + 1] = std::move(left); // T_{2m},  height <= m+1
        node = &node->children[idx];
    }
    return out;
}

inline OrderedTree join_height_k(const std::vector<OrderedTree>& seq) {
    if (seq.empty() || seq.size() % 2 != 0) fail(errc::bad_input, "join_height_k: sequence length must be 2(k-1)");
    int k = static_cast<int>(seq.size()) / 2 + 1;
    for (int m = 1; m <= k - 1; ++m) {
        if (tree_height(seq[2 * (m - 1)]) > m || tree_height(seq[2 * (m - 1) + 1]) > m + 1)
            fail(errc::bad_input, "join_height_k: height bound violated");
    }
    OrderedTree cur; // the node e
    for (int m = 1; m <= k - 1; ++m) {
        const OrderedTree& right = seq[2 * (m - 1)];
        const OrderedTree& left = seq[2 * (m - 1) + 1];
        OrderedTree v;
        v.children = left.children;
        v.children.push_back(std::move(cur));
        v.children.insert(v.children.end(), right.children.begin(), right.children.end());
        cur = std::move(v);
    }
    return cur;
}

// --- degree through the forests ----------------------------------------------

// Degree of convexity of a parallelogram polyomino from the forest heights.
inline int degree_via_forests(const Polyomino& p) {
    auto [fe, fs] = phi(p);
    int he = forest_height(fe), hs = forest_height(fs);
    return std::max(he, hs) - (he == hs ? 0 : 1);
}

enum class ChainForest { east_forest, south_forest, different };

struct ChainsReport {
    int l_r = 0;
    int l_u = 0;
    bool same_forest = false;
    ChainForest forest_id = ChainForest::different;
};

// The turning cells of r(P) and u(P) form chains d_r, d_u in the forests;
// their lengths are the change counts, and the forest holding each chain is
// read off the final approach direction into E.
inline ChainsReport chains_dr_du(const Polyomino& p) {
    if (!classify(p).parallelogram) fail(errc::not_parallelogram, "chains_dr_du: not a parallelogram");
    Cell s{0, 0};
    Cell e{p.width() - 1, p.height() - 1};
    BouncePath r = bounce_path(p, s, e, StepDir::east);
    BouncePath u = bounce_path(p, s, e, StepDir::north);
    ChainsReport rep;
    rep.l_r = r.changes();
    rep.l_u = u.changes();
    auto forest_of = [](const BouncePath& path) {
        if (path.segments.empty() || path.changes() == 0) return ChainForest::different; // empty chain
        return path.segments.back().first == StepDir::east ? ChainForest::east_forest
                                                           : ChainForest::south_forest;
    };
    ChainForest fr = forest_of(r), fu = forest_of(u);
    if (fr == fu && fr != ChainForest::different) {
        rep.same_forest = true;
        rep.forest_id = fr;
    } else if (fr != ChainForest::different && fu != ChainForest::different) {
        rep.same_forest = false;
        rep.forest_id = ChainForest::different;
    } else {
        // one chain empty: it lives wherever the other does
        ChainForest present = fr != ChainForest::different ? fr : fu;
        rep.same_forest = present != ChainForest::different;
        rep.forest_id = present;
    }
    return rep;
}

} // namespace polyforge
