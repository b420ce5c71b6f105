#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourfold/knot.hpp"
#include "fourfold/lattice.hpp"
#include "fourfold/laurent.hpp"

namespace fourfold {

// Seiberg-Witten series of a fiber-sum construction, written in the formal
// variable u where the exponent r stands for the class r*F (F the fiber).
// Valid series have a single exponent parity and satisfy conjugation
// symmetry up to one global sign.
class SwSeries {
  public:
    explicit SwSeries(LaurentPoly poly) : poly_(std::move(poly)) {
        if (poly_.is_zero()) return;
        Int parity = ((poly_.degree() % 2) + 2) % 2;
        int sign = 0;
        for (const auto& [e, c] : poly_.terms()) {
            if (((e % 2) + 2) % 2 != parity)
                throw std::invalid_argument("series mixes exponent parities");
            Int mirror = poly_.coeff(-e);
            if (mirror != c && mirror != checked_neg(c))
                throw std::invalid_argument("series violates conjugation symmetry");
            if (e != 0) {
                int s = (mirror == c) ? 1 : -1;
                if (sign == 0)
                    sign = s;
                else if (s != sign)
                    throw std::invalid_argument("series has no single conjugation sign");
            }
        }
    }

    const LaurentPoly& poly() const { return poly_; }
    Int degree() const { return poly_.degree(); }
    Int leading_coefficient() const { return poly_.leading_coefficient(); }
    Int value_at(Int fiber_multiple) const { return poly_.coeff(fiber_multiple); }

    // +1 if coeff(r) == coeff(-r) throughout, -1 if they are opposite.
    int conjugation_sign() const {
        for (const auto& [e, c] : poly_.terms())
            if (e != 0 && poly_.coeff(-e) != c) return -1;
        return 1;
    }

    bool operator==(const SwSeries&) const = default;

  private:
    LaurentPoly poly_;
};

// Product formula for the elliptic surface with surgeries along distinct
// fiber tori: (prod over knots of Delta_K(u^2)) * (u - u^-1)^(n-2).
// The exponent convention makes u encode F itself. Only n >= 2 has an
// unambiguous series; the n = 1 values are chamber-dependent and live in
// e1_double_twist_values instead.
inline SwSeries knot_surgery_series(Int n, const std::vector<KnotModel>& knots) {
    if (n < 2)
        throw std::domain_error(
            "series form needs n >= 2; use e1_double_twist_values for the n = 1 manifolds");
    LaurentPoly p = LaurentPoly::one();
    for (const KnotModel& knot : knots) {
        knot.validate();
        p = p * knot.alexander.substitute_power(2);
    }
    LaurentPoly bracket = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1);
    return SwSeries(p * bracket.pow(n - 2));
}

// One basic-class datum: the spin-c structure dual to fiber_multiple * F
// carries absolute invariant `value` (global sign left unresolved).
struct BasicClassRecord {
    Int fiber_multiple = 0;
    Int value = 0;
    std::string chamber_note;

    bool operator==(const BasicClassRecord&) const = default;
};

// Stated values for the double twist-knot surgery on the rational elliptic
// surface: |SW| = m^2 on PD(+-3F) and |SW| = 2m(2m-1) on PD(+-F). These are
// small-perturbation chamber values, so they are recorded, not derived.
inline std::vector<BasicClassRecord> e1_double_twist_values(Int m) {
    if (m < 1) throw std::domain_error("twist parameter must be m >= 1");
    const std::string note = "small-perturbation chamber value";
    Int msq = checked_mul(m, m);
    Int fval = checked_mul(2 * m, 2 * m - 1);
    return {{3, msq, note}, {-3, msq, note}, {1, fval, note}, {-1, fval, note}};
}

// Absolute values reachable across chambers after blow-ups on a b2+ = 1
// manifold: each wall crossing moves the invariant by one.
struct ChamberValueSet {
    std::set<Int> values;

    Int max() const { return *values.rbegin(); }
    Int min_nonzero() const {
        for (Int v : values)
            if (v != 0) return v;
        throw std::domain_error("chamber set has no nonzero value");
    }

    bool operator==(const ChamberValueSet&) const = default;
};

inline ChamberValueSet blowup_value_set(Int base) {
    if (base < 0) throw std::domain_error("chamber base value must be nonnegative");
    ChamberValueSet s;
    if (base > 0) s.values.insert(base - 1);
    s.values.insert(base);
    s.values.insert(checked_add(base, 1));
    return s;
}

// Whether the chamber value sets of the twist families m and m' stay
// disjoint under blow-ups, i.e. the two families cannot be confused in any
// chamber. Symmetric; false on the diagonal.
inline bool families_distinct(Int m, Int m_prime) {
    if (m < 1 || m_prime < 1) throw std::domain_error("twist parameters must be >= 1");
    if (m == m_prime) return false;
    Int lo = m < m_prime ? m : m_prime;
    Int hi = m < m_prime ? m_prime : m;
    ChamberValueSet small = blowup_value_set(checked_mul(2 * lo, 2 * lo - 1));
    ChamberValueSet big = blowup_value_set(checked_mul(2 * hi, 2 * hi - 1));
    return small.max() < big.min_nonzero();
}

// Top exponent of Delta_K(u^2)^2 * (u - u^-1)^(n-2) for deg Delta_K = d:
// the extremal basic class is a (4d + n - 2)-fold multiple of a primitive
// class (4d - 1 at n = 1).
inline Int extremal_multiplicity_knot_surgery(Int n, Int d) {
    if (n < 1) throw std::domain_error("need n >= 1");
    if (d < 1) throw std::domain_error("Alexander degree must be >= 1");
    return checked_add(checked_mul(4, d), n - 2);
}

// The mod-4 obstruction: a double knot surgery on the rational elliptic
// surface has extremal multiplicity 4d - 1 = 3 (mod 4), while the 2k-th
// blow-down manifold realizes 4k - 3 = 1 (mod 4). The residues never meet.
inline bool not_knot_surgery_obstruction(Int k) {
    if (k < 1) throw std::domain_error("need k >= 1");
    Int dn_residue = ((4 * k - 3) % 4 + 4) % 4;
    // 4d - 1 = 3 (mod 4) independently of d
    return dn_residue != 3;
}

enum class BasicClassVerdict { excluded_adjunction, excluded_taubes, candidate };

inline const char* to_string(BasicClassVerdict v) {
    switch (v) {
        case BasicClassVerdict::excluded_adjunction: return "excluded_adjunction";
        case BasicClassVerdict::excluded_taubes: return "excluded_taubes";
        default: return "candidate";
    }
}

// Exclusion rules for basic classes of the blown-down manifolds, whose
// anticanonical class is represented by a square-zero torus: a class
// pairing nonzero with K is killed by the adjunction inequality, and a
// rational multiple r*K with |r| > 1 is killed by the multiple bound.
inline BasicClassVerdict basic_class_exclusion(const HomClass& l, const HomClass& k) {
    if (!is_characteristic(l))
        throw std::invalid_argument("basic-class candidates must be characteristic");
    if (k.is_zero()) throw std::invalid_argument("canonical class must be nonzero");
    if (pairing(k, l) != 0) return BasicClassVerdict::excluded_adjunction;
    bool proportional = true;
    Int rank = l.lattice().rank();
    for (Int i = 0; i < rank && proportional; ++i)
        for (Int j = i + 1; j < rank; ++j) {
            if (checked_mul(l.coeff(i), k.coeff(j)) != checked_mul(l.coeff(j), k.coeff(i))) {
                proportional = false;
                break;
            }
        }
    if (proportional) {
        for (Int i = 0; i < rank; ++i) {
            if (k.coeff(i) == 0) continue;
            if (checked_abs(l.coeff(i)) > checked_abs(k.coeff(i)))
                return BasicClassVerdict::excluded_taubes;
            break;
        }
    }
    return BasicClassVerdict::candidate;
}

}  // namespace fourfold
