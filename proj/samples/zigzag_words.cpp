// Lists zigzag paths of a given size ending on the axis, with their Motzkin and Dyck images.
#include <knightpaths/knightpaths.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace knightpaths;
    const long size = argc > 1 ? std::atol(argv[1]) : 6;
    for (const auto& word : enumerate_partial(PathClass::Zigzag, Measure::Size, size, 0))
        std::cout << render_word(word) << "  psi=" << render_lattice_word(psi(word)) << '\n';

    const long length = argc > 2 ? std::atol(argv[2]) : 4;
    for (const auto& word : enumerate_partial(PathClass::Zigzag, Measure::Length, length, 0))
        std::cout << render_word(word) << "  phi=" << render_lattice_word(phi(word)) << '\n';
}
