// Tabulates the quotient families W(m,n): invariants, w2-type, and the
// topological model each family lands on.

#include <iostream>

#include "fourfold/manifold.hpp"
#include "fourfold/parser.hpp"

int main() {
    using namespace fourfold;
    for (Int n = 1; n <= 8; ++n) {
        ManifoldExpr w = ManifoldExpr::w_family(1, n);
        InvariantRecord rec = invariants(w);
        std::cout << "W(m," << n << "): e = " << rec.euler << ", sigma = " << rec.signature
                  << ", type " << to_string(rec.w2type)
                  << ", cover = " << pretty_print(universal_cover(w)) << "\n";
    }
    return 0;
}
