// Walks one directed convex polyomino through its codes: the completed
// parallelogram, the cut, the forest pair, and the bilateral Dyck word.

#include <cstdio>

#include "polyforge/polyforge.hpp"

using namespace polyforge;

namespace {

void draw(const Polyomino& p) {
    for (int j = p.height() - 1; j >= 0; --j) {
        for (int i = 0; i < p.width(); ++i) std::putchar(p.contains(i, j) ? '#' : '.');
        std::putchar('\n');
    }
}

} // namespace

int main() {
    Polyomino d = normalize({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 2}});
    std::printf("directed convex polyomino (semi-perimeter %d):\n", statistics(d).semi_perimeter);
    draw(d);

    Polyomino pd = complete_to_parallelogram(d);
    std::printf("\ncompleted parallelogram P_D:\n");
    draw(pd);

    Triplet t = to_triplet(d);
    std::printf("\ncut: %s\n", t.cut.word.c_str());
    std::printf("F_e:");
    for (const auto& tree : t.fe) std::printf(" %s", tree_to_paren(tree).c_str());
    std::printf("\nF_s:");
    for (const auto& tree : t.fs) std::printf(" %s", tree_to_paren(tree).c_str());

    std::printf("\n\nbilateral word: %s\n", directed_to_bilateral(d).c_str());
    std::printf("degree of convexity: %d (bounce) = %d (path search)\n", degree_directed(d),
                degree_generic(d));

    Skeleton sk = bounce_skeleton(pd);
    std::printf("skeleton of P_D: k=%d flat=%s cells:", sk.k, sk.flat ? "yes" : "no");
    for (const auto& [cell, h] : sk.crossings) std::printf(" (%d,%d)@%d", cell.i, cell.j, h);
    std::printf("\n");

    Polyomino back = from_triplet(t);
    std::printf("roundtrip ok: %s\n", back == d ? "yes" : "no");
    return 0;
}
