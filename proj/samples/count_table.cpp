// Prints the knight-path triangle by size: row n lists counts for heights 0..2n.
#include <knightpaths/knightpaths.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace knightpaths;
    const long rows = argc > 1 ? std::atol(argv[1]) : 6;
    const auto table = build_table(PathClass::Knight, Measure::Size, rows);
    for (long n = 0; n <= rows; ++n) {
        for (long k = 0; k <= 2 * n; ++k) std::cout << (k ? " " : "") << table.total(n, k);
        std::cout << '\n';
    }
}
