#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "fourfold/laurent.hpp"

namespace fourfold {

// A knot as this library sees it: a label, a symmetrized Alexander
// polynomial, and the Seifert genus / fiberedness facts carried as given
// data. Any knot whose polynomial is symmetric with |evaluation at 1| = 1
// is accepted; nothing here is computed from a diagram.
struct KnotModel {
    std::string label;
    LaurentPoly alexander;
    Int seifert_genus = 0;
    bool fibered = false;

    void validate() const {
        if (!alexander.is_symmetric())
            throw std::invalid_argument("Alexander polynomial must be symmetric in t <-> t^-1");
        Int at_one = alexander.evaluate_at_unit(1);
        if (at_one != 1 && at_one != -1)
            throw std::invalid_argument("Alexander polynomial must evaluate to +-1 at t = 1");
        if (seifert_genus < 0) throw std::invalid_argument("Seifert genus cannot be negative");
    }

    bool operator==(const KnotModel&) const = default;
};

// The twist knot with 2m+1 crossings: Alexander polynomial
// m t - (2m-1) + m t^-1, genus 1, fibered exactly for m = 1 (the trefoil).
inline KnotModel twist_knot(Int m) {
    if (m < 1) throw std::domain_error("twist knots are indexed by m >= 1");
    LaurentPoly delta = LaurentPoly::monomial(1, m) + LaurentPoly(-(2 * m - 1)) +
                        LaurentPoly::monomial(-1, m);
    KnotModel knot{"K_" + std::to_string(m), delta, 1, m == 1};
    knot.validate();
    return knot;
}

}  // namespace fourfold
