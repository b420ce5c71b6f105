#include <catch2/catch_amalgamated.hpp>

#include "fourfold/swcalc.hpp"
#include "helpers.hpp"

using namespace fourfold;

TEST_CASE("surgery series for the doubly trefoil-surgered E(2)") {
    SwSeries s = knot_surgery_series(2, {twist_knot(1), twist_knot(1)});
    // (u^2 - 1 + u^-2)^2, convolved by hand
    LaurentPoly expected = LaurentPoly::monomial(4, 1) + LaurentPoly::monomial(2, -2) +
                           LaurentPoly(3) + LaurentPoly::monomial(-2, -2) +
                           LaurentPoly::monomial(-4, 1);
    CHECK(s.poly() == expected);
}

TEST_CASE("surgery series degenerate cases") {
    CHECK(knot_surgery_series(2, {}).poly() == LaurentPoly::one());
    CHECK(knot_surgery_series(3, {}).poly() ==
          LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(-1, 1));
    CHECK_THROWS_AS(knot_surgery_series(1, {twist_knot(1)}), std::domain_error);
}

TEST_CASE("series symmetry, parity, and degree bookkeeping") {
    for (Int n = 2; n <= 6; ++n)
        for (Int m = 1; m <= 5; ++m) {
            SwSeries s = knot_surgery_series(n, {twist_knot(m), twist_knot(m)});
            for (const auto& [e, c] : s.poly().terms()) {
                REQUIRE(std::abs(s.poly().coeff(-e)) == std::abs(c));
                REQUIRE(((e % 2) + 2) % 2 == ((n % 2) + 2) % 2);
            }
            // one global conjugation sign, (-1)^n for this construction
            REQUIRE(s.conjugation_sign() == (n % 2 == 0 ? 1 : -1));
            REQUIRE(s.degree() == extremal_multiplicity_knot_surgery(n, 1));
        }
}

TEST_CASE("leading coefficient is the square of the twist parameter") {
    for (Int n = 2; n <= 6; ++n)
        for (Int m = 1; m <= 10; ++m)
            REQUIRE(knot_surgery_series(n, {twist_knot(m), twist_knot(m)}).leading_coefficient() ==
                    m * m);
}

TEST_CASE("series evaluation at u = 1") {
    for (Int n = 3; n <= 6; ++n)
        REQUIRE(knot_surgery_series(n, {twist_knot(2), twist_knot(3)})
                    .poly()
                    .evaluate_at_unit(1) == 0);
    CHECK(knot_surgery_series(2, {twist_knot(2), twist_knot(3)}).poly().evaluate_at_unit(1) == 1);
}

TEST_CASE("series validation rejects malformed data") {
    CHECK_THROWS_AS(SwSeries(LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SwSeries(LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(-2, 3)),
                    std::invalid_argument);
}

TEST_CASE("stated values for the twist-surgered rational elliptic surface") {
    auto vals1 = e1_double_twist_values(1);
    CHECK(vals1[0].value == 1);
    CHECK(vals1[2].value == 2);
    auto vals2 = e1_double_twist_values(2);
    CHECK(vals2[0].value == 4);
    CHECK(vals2[2].value == 12);
    auto vals3 = e1_double_twist_values(3);
    CHECK(vals3[0].value == 9);
    CHECK(vals3[2].value == 30);
    CHECK(vals1[0].fiber_multiple == 3);
    CHECK(vals1[1].fiber_multiple == -3);
    CHECK(vals1[2].fiber_multiple == 1);
    CHECK(vals1[3].fiber_multiple == -1);
    for (const auto& r : vals2) CHECK_FALSE(r.chamber_note.empty());
    CHECK_THROWS_AS(e1_double_twist_values(0), std::domain_error);
}

TEST_CASE("chamber value sets") {
    CHECK(blowup_value_set(12).values == std::set<Int>{11, 12, 13});
    CHECK(blowup_value_set(0).values == std::set<Int>{0, 1});
    CHECK(blowup_value_set(2).values == std::set<Int>{1, 2, 3});
}

TEST_CASE("family separation") {
    CHECK(families_distinct(2, 1));
    CHECK_FALSE(families_distinct(3, 3));
    CHECK(families_distinct(5, 4));
    CHECK(families_distinct(4, 5));
    for (Int m = 1; m <= 20; ++m)
        for (Int mp = 1; mp <= 20; ++mp) REQUIRE(families_distinct(m, mp) == (m != mp));
}

TEST_CASE("extremal multiplicities") {
    CHECK(extremal_multiplicity_knot_surgery(1, 1) == 3);
    CHECK(extremal_multiplicity_knot_surgery(1, 5) == 19);
    CHECK(extremal_multiplicity_knot_surgery(2, 1) == 4);
    CHECK(extremal_multiplicity_knot_surgery(2, 1) ==
          knot_surgery_series(2, {twist_knot(1), twist_knot(1)}).degree());
}

TEST_CASE("mod-4 obstruction") {
    CHECK(not_knot_surgery_obstruction(1));
    CHECK(not_knot_surgery_obstruction(7));
    for (Int d = 1; d <= 200; ++d)
        for (Int k = 1; k <= 50; ++k)
            REQUIRE(extremal_multiplicity_knot_surgery(1, d) != 4 * k - 3);
}

TEST_CASE("user-supplied knots flow through the series") {
    // the family is open: any symmetric polynomial with value +-1 at 1 works
    KnotModel figure_eight{"4_1", parse_laurent("-t + 3 - t^-1"), 1, true};
    figure_eight.validate();
    SwSeries s = knot_surgery_series(2, {figure_eight, twist_knot(2)});
    CHECK(s.degree() == 4);
    CHECK(s.leading_coefficient() == -2);
    CHECK(s.poly().evaluate_at_unit(1) == 1);
}

TEST_CASE("basic class exclusion rules") {
    DiagonalLattice lat(1, 9);
    HomClass primitive = 3 * h_class(lat);
    for (Int i = 1; i <= 9; ++i) primitive = primitive - e_class(lat, i);
    HomClass k = 3 * primitive;  // divisibility-3 canonical class, square 0

    CHECK(basic_class_exclusion(k + 2 * e_class(lat, 1), k) ==
          BasicClassVerdict::excluded_adjunction);
    CHECK(basic_class_exclusion(3 * k, k) == BasicClassVerdict::excluded_taubes);
    CHECK(basic_class_exclusion(-k, k) == BasicClassVerdict::candidate);
    CHECK(basic_class_exclusion(k, k) == BasicClassVerdict::candidate);
    CHECK(basic_class_exclusion(primitive, k) == BasicClassVerdict::candidate);
    CHECK_THROWS_AS(basic_class_exclusion(2 * primitive, k), std::invalid_argument);
}
