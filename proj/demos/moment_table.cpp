// Prints a small table of asymptotic moments for the quantum-transport
// ensemble with N1 = N2 = N channels, comparing the four backends.

#include "betamom/moments.hpp"

#include <cstdio>

int main() {
    using namespace betamom;
    const auto spec = transport_to_jacobi(10, 10, Rational(2));
    MomentEngine engine(spec);
    std::printf("%-4s %-22s %-18s\n", "n", "<T^n> (exact)", "<T^n> (float)");
    for (long n = 1; n <= 8; ++n) {
        const Rational v = engine.recurrence(n);
        std::printf("%-4ld %-22s %-18.12f\n", n, v.str().c_str(), v.to_double());
    }
    return 0;
}
