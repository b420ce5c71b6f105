// Prints the canonical-class divisibility of the blow-down family together
// with the wall-witness data that pins each value.

#include <cstdio>

#include "fourfold/lattice.hpp"

int main() {
    using namespace fourfold;
    std::printf("%3s %14s %16s %6s %6s\n", "n", "divisibility", "witness square", "x.K", "x.h");
    for (Int n = 2; n <= 10; ++n) {
        DnConfiguration dn = dn_configuration(n);
        SphereConfig combined = dn.combined();
        HomClass x = dn_wall_witness(dn);
        std::printf("%3lld %14lld %16lld %6lld %6lld\n", static_cast<long long>(n),
                    static_cast<long long>(descended_divisibility(dn.canonical_class, combined)),
                    static_cast<long long>(square(x)),
                    static_cast<long long>(pairing(x, dn.canonical_class)),
                    static_cast<long long>(pairing(x, h_class(dn.lattice))));
    }
    return 0;
}
