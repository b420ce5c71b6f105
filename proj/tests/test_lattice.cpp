#include <catch2/catch_amalgamated.hpp>

#include "fourfold/intmat.hpp"
#include "fourfold/lattice.hpp"
#include "helpers.hpp"

using namespace fourfold;
using testutil::rand_int;

namespace {

DiagonalLattice dn_lattice(Int n) { return DiagonalLattice(1, 9 + 2 * n); }

HomClass fiber(const DiagonalLattice& lat) {
    HomClass f = 3 * h_class(lat);
    for (Int i = 1; i <= 9; ++i) f = f - e_class(lat, i);
    return f;
}

HomClass canonical(const DiagonalLattice& lat) {
    HomClass k = 3 * h_class(lat);
    for (Int i = 1; i <= lat.negative_count(); ++i) k = k - e_class(lat, i);
    return k;
}

}  // namespace

TEST_CASE("pairing on the diagonal basis") {
    DiagonalLattice lat(1, 9);
    CHECK(pairing(h_class(lat), h_class(lat)) == 1);
    CHECK(pairing(e_class(lat, 1), e_class(lat, 1)) == -1);
    CHECK(pairing(h_class(lat), e_class(lat, 1)) == 0);
    CHECK(pairing(fiber(lat), e_class(lat, 1)) == 1);
    CHECK(square(fiber(lat)) == 0);
}

TEST_CASE("witness pairing for the smallest blow-down member") {
    DiagonalLattice lat = dn_lattice(2);
    HomClass x = 4 * h_class(lat);
    for (Int i = 1; i <= 13; ++i) x = x - e_class(lat, i);
    CHECK(pairing(x, canonical(lat)) == -1);
    CHECK(square(x) == 3);
}

TEST_CASE("pairing rejects mixed lattices") {
    DiagonalLattice a(1, 2), b(1, 3);
    CHECK_THROWS_AS(pairing(h_class(a), h_class(b)), std::invalid_argument);
}

TEST_CASE("pairing is symmetric and bilinear") {
    for (int trial = 0; trial < 1000; ++trial) {
        DiagonalLattice lat(rand_int(1, 2), rand_int(1, 5));
        HomClass x = testutil::random_class(lat);
        HomClass y = testutil::random_class(lat);
        HomClass z = testutil::random_class(lat);
        REQUIRE(pairing(x, y) == pairing(y, x));
        REQUIRE(pairing(x + y, z) == pairing(x, z) + pairing(y, z));
    }
}

TEST_CASE("characteristic classes have all-odd coefficients") {
    DiagonalLattice lat(1, 13);
    CHECK(is_characteristic(canonical(lat)));
    CHECK_FALSE(is_characteristic(h_class(lat)));
    CHECK_FALSE(is_characteristic(2 * h_class(lat)));
}

TEST_CASE("overflow is detected, not wrapped") {
    DiagonalLattice lat(1, 1);
    HomClass big(lat, {Int{1} << 62, 0});
    CHECK_THROWS_AS(square(big), std::overflow_error);
}

TEST_CASE("Smith normal form on known matrices") {
    IntMat a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 4;
    a(1, 0) = 6;
    a(1, 1) = 8;
    SmithResult s = smith_normal_form(a);
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 1) == 4);
    CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);

    IntMat b(2, 3);
    b(0, 0) = 1;
    b(0, 1) = 2;
    b(0, 2) = 3;
    b(1, 0) = 4;
    b(1, 1) = 5;
    b(1, 2) = 6;
    SmithResult t = smith_normal_form(b);
    CHECK(t.d(0, 0) == 1);
    CHECK(t.d(1, 1) == 3);
}

TEST_CASE("Smith normal form properties on random matrices") {
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = static_cast<std::size_t>(rand_int(1, 5));
        std::size_t n = static_cast<std::size_t>(rand_int(1, 5));
        IntMat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rand_int(-6, 6);
        SmithResult s = smith_normal_form(a);
        REQUIRE(mat_mul(mat_mul(s.u, a), s.v) == s.d);
        REQUIRE(std::abs(testutil::naive_det(s.u)) == 1);
        REQUIRE(std::abs(testutil::naive_det(s.v)) == 1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) REQUIRE(s.d(i, j) == 0);
        for (std::size_t i = 0; i + 1 < std::min(m, n); ++i) {
            REQUIRE(s.d(i, i) >= 0);
            if (s.d(i + 1, i + 1) != 0) {
                REQUIRE(s.d(i, i) != 0);
                REQUIRE(s.d(i + 1, i + 1) % s.d(i, i) == 0);
            }
        }
    }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = static_cast<std::size_t>(rand_int(1, 4));
        IntMat a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rand_int(-5, 5);
        REQUIRE(determinant(a) == testutil::naive_det(a));
    }
}

TEST_CASE("orthogonal complement of a single sphere") {
    DiagonalLattice lat(1, 2);
    HomClass c = e_class(lat, 1) - e_class(lat, 2);
    SphereConfig config(lat, {c}, {-2}, false);
    std::vector<HomClass> basis = orth_complement(config);
    REQUIRE(basis.size() == 2);
    std::vector<HomClass> expected = {h_class(lat), e_class(lat, 1) + e_class(lat, 2)};
    CHECK(testutil::same_span(basis, expected));
    for (const HomClass& b : basis) CHECK(pairing(b, c) == 0);
}

TEST_CASE("orthogonal complement of the empty configuration is the standard basis") {
    DiagonalLattice lat(2, 3);
    SphereConfig config(lat, {}, {}, false);
    std::vector<HomClass> basis = orth_complement(config);
    REQUIRE(basis.size() == 5);
    for (Int i = 0; i < 5; ++i) CHECK(basis[static_cast<std::size_t>(i)] == basis_class(lat, i));
}

TEST_CASE("complement rank drops by the configuration rank") {
    DiagonalLattice lat(1, 2);
    SphereConfig full(lat, {h_class(lat), e_class(lat, 1), e_class(lat, 2)}, {1, -1, -1}, false);
    CHECK(orth_complement(full).empty());
}

TEST_CASE("complement basis is saturated (brute force, small ranks)") {
    for (int trial = 0; trial < 46; ++trial) {
        DiagonalLattice lat = trial < 40 ? DiagonalLattice(rand_int(1, 2), rand_int(1, 4))
                                         : DiagonalLattice(rand_int(1, 2), rand_int(5, 6));
        Int rank = lat.rank();
        std::vector<HomClass> classes;
        Int count = rand_int(1, 2);
        for (Int i = 0; i < count; ++i) classes.push_back(testutil::random_class(lat, 2));
        std::vector<Int> squares;
        for (const HomClass& c : classes) squares.push_back(square(c));
        SphereConfig config(lat, classes, squares, false);
        std::vector<HomClass> basis = orth_complement(config);
        for (const HomClass& b : basis)
            for (const HomClass& c : classes) REQUIRE(pairing(b, c) == 0);

        std::vector<std::vector<Int>> rows = testutil::class_rows(basis);
        std::vector<Int> v(static_cast<std::size_t>(rank), -2);
        while (true) {
            HomClass x(lat, v);
            bool orth = true;
            for (const HomClass& c : classes) orth = orth && pairing(x, c) == 0;
            if (orth) REQUIRE(testutil::in_span(v, rows));
            std::size_t pos = 0;
            while (pos < v.size() && v[pos] == 2) {
                v[pos] = -2;
                ++pos;
            }
            if (pos == v.size()) break;
            ++v[pos];
        }
    }
}

TEST_CASE("blow-down chain data matches the stated squares") {
    DnConfiguration d2 = dn_configuration(2);
    CHECK(d2.chain1.expected_squares() == std::vector<Int>{-2, -5});
    CHECK(d2.chain2.expected_squares() == std::vector<Int>{-2, -5});
    DnConfiguration d5 = dn_configuration(5);
    CHECK(d5.chain1.expected_squares() == std::vector<Int>{-5, -5, -2, -2, -2});
    CHECK_THROWS_AS(dn_configuration(1), std::domain_error);
}

TEST_CASE("blow-down chains validate and are mutually orthogonal") {
    for (Int n = 2; n <= 10; ++n) {
        DnConfiguration dn = dn_configuration(n);
        CHECK_NOTHROW(dn.chain1.validate());
        CHECK_NOTHROW(dn.chain2.validate());
        CHECK_NOTHROW(dn.combined().validate());
        for (const HomClass& a : dn.chain1.classes())
            for (const HomClass& b : dn.chain2.classes()) REQUIRE(pairing(a, b) == 0);
    }
}

TEST_CASE("chain validation catches broken data") {
    DiagonalLattice lat(1, 2);
    SphereConfig wrong_square(lat, {e_class(lat, 1)}, {-2}, true);
    CHECK_THROWS_AS(wrong_square.validate(), std::invalid_argument);
    SphereConfig not_definite(lat, {h_class(lat)}, {1}, false);
    CHECK_THROWS_AS(not_definite.validate(), std::invalid_argument);
    SphereConfig bad_adjacency(lat, {e_class(lat, 1), e_class(lat, 2)}, {-1, -1}, true);
    CHECK_THROWS_AS(bad_adjacency.validate(), std::invalid_argument);
}

TEST_CASE("descended divisibility of the canonical class") {
    CHECK(descended_divisibility(dn_configuration(2).canonical_class,
                                 dn_configuration(2).combined()) == 1);
    CHECK(descended_divisibility(dn_configuration(3).canonical_class,
                                 dn_configuration(3).combined()) == 3);
    CHECK(descended_divisibility(dn_configuration(4).canonical_class,
                                 dn_configuration(4).combined()) == 5);
    for (Int n = 2; n <= 10; ++n) {
        DnConfiguration dn = dn_configuration(n);
        REQUIRE(descended_divisibility(dn.canonical_class, dn.combined()) == 2 * n - 3);
    }
}

TEST_CASE("descended divisibility rejects bad inputs") {
    DnConfiguration dn = dn_configuration(2);
    CHECK_THROWS_AS(descended_divisibility(h_class(dn.lattice), dn.combined()),
                    std::invalid_argument);
    DiagonalLattice lat(1, 2);
    SphereConfig invalid(lat, {h_class(lat)}, {1}, false);
    HomClass odd(lat, {1, 1, 1});
    CHECK_THROWS_AS(descended_divisibility(odd, invalid), std::invalid_argument);
}

TEST_CASE("divisibility is zero when the class kills the whole complement") {
    DiagonalLattice lat(0, 2);
    HomClass k = e_class(lat, 1) - e_class(lat, 2);
    SphereConfig config(lat, {k}, {-2}, false);
    // complement is spanned by e1 + e2, and k pairs to zero with it
    CHECK(descended_divisibility(k, config) == 0);
}

TEST_CASE("wall witness checks") {
    for (Int n = 2; n <= 10; ++n) {
        DnConfiguration dn = dn_configuration(n);
        HomClass x = dn_wall_witness(dn);
        HomClass h = h_class(dn.lattice);
        REQUIRE(square(x) == 4 * n - 5);
        REQUIRE(pairing(x, dn.canonical_class) == 3 - 2 * n);
        REQUIRE(pairing(x, h) == 3 * n - 2);
        REQUIRE(check_wall_witness(x, dn.canonical_class, dn.combined(), h));
        REQUIRE_FALSE(check_wall_witness(h, dn.canonical_class, dn.combined(), h));
        REQUIRE_FALSE(
            check_wall_witness(e_class(dn.lattice, 10), dn.canonical_class, dn.combined(), h));
    }
}

TEST_CASE("wall witness search finds a witness for the blow-down data") {
    DnConfiguration dn = dn_configuration(2);
    SphereConfig combined = dn.combined();
    std::optional<HomClass> found = wall_witness_search(dn.canonical_class, combined, 3);
    REQUIRE(found.has_value());
    CHECK(check_wall_witness(*found, dn.canonical_class, combined, h_class(dn.lattice)));
}

TEST_CASE("wall witness search on an empty configuration") {
    DiagonalLattice lat(1, 3);
    SphereConfig empty(lat, {}, {}, false);
    HomClass k = h_class(lat) - 2 * e_class(lat, 1);
    std::optional<HomClass> found = wall_witness_search(k, empty, 3);
    REQUIRE(found.has_value());
    CHECK(check_wall_witness(*found, k, empty, h_class(lat)));
}

TEST_CASE("no wall separates a class from itself") {
    DiagonalLattice lat(1, 2);
    SphereConfig empty(lat, {}, {}, false);
    CHECK_FALSE(wall_witness_search(h_class(lat), empty, 2).has_value());
}

TEST_CASE("no wall reaches across the light cone") {
    // a forward null class pairs nonnegatively with every forward class of
    // positive square, so the search must come back empty
    DiagonalLattice lat(1, 2);
    SphereConfig empty(lat, {}, {}, false);
    HomClass null_class = h_class(lat) - e_class(lat, 1);
    REQUIRE(square(null_class) == 0);
    CHECK_FALSE(wall_witness_search(null_class, empty, 3).has_value());
}
