// Counts the three polyomino classes at small semi-perimeter and puts the
// enumeration side by side with the closed-form predictions.

#include <cstdio>

#include "polyforge/polyforge.hpp"

int main() {
    using namespace polyforge;
    std::printf("%4s %14s %14s %14s\n", "sp", "parallelogram", "directed", "convex");
    for (int sp = 2; sp <= 9; ++sp) {
        std::printf("%4d %14llu %14llu %14llu\n", sp,
                    (unsigned long long)count_one(PolyominoClass::parallelogram, sp),
                    (unsigned long long)count_one(PolyominoClass::directed, sp),
                    (unsigned long long)count_one(PolyominoClass::convex, sp));
    }

    std::printf("\ndirected k-convex counts per semi-perimeter (rows: k = 0..3)\n");
    for (int k = 0; k <= 3; ++k) {
        Series gf = gf_univariate(GfName::kdir, k, 9);
        std::printf("k=%d:", k);
        for (int sp = 2; sp <= 9; ++sp) std::printf(" %6s", gf.coeff(sp).num().to_string().c_str());
        std::printf("\n");
    }
    return 0;
}
