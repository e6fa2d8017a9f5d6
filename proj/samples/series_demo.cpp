// Prints A(z) and E(z) to a chosen order and confirms their quartic residuals vanish.
#include <knightpaths/knightpaths.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace knightpaths;
    const int order = argc > 1 ? std::atoi(argv[1]) : 12;
    const auto A = kernel::series_A(order);
    const auto E = kernel::series_E(order);
    std::cout << "A = " << to_string(A) << '\n';
    std::cout << "E = " << to_string(E) << '\n';
    const bool ok = kernel::quartic_A_residual(A).is_zero() && kernel::quartic_E_residual(E).is_zero();
    std::cout << (ok ? "quartic residuals vanish" : "quartic residual is nonzero") << '\n';
    return ok ? 0 : 1;
}
