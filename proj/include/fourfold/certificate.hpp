#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fourfold/lattice.hpp"
#include "fourfold/manifold.hpp"
#include "fourfold/parser.hpp"
#include "fourfold/swcalc.hpp"

namespace fourfold {

// Named background facts a certificate relies on. Each id stands for one
// classical result or recorded geometric input; reports list the ids so a
// reader knows what the arithmetic is conditional on.
namespace anchors {
inline constexpr const char* hk_classification = "hambleton-kreck-classification";
inline constexpr const char* freedman_classification = "freedman-classification";
inline constexpr const char* elliptic_invariants = "elliptic-surface-invariants";
inline constexpr const char* branched_cover_formulas = "double-branched-cover-formulas";
inline constexpr const char* knot_surgery_invariance = "knot-surgery-preserves-topological-type";
inline constexpr const char* knot_surgery_sw = "knot-surgery-sw-product-formula";
inline constexpr const char* e1_sw_values = "rational-elliptic-double-surgery-sw-values";
inline constexpr const char* wall_crossing = "b2plus-one-wall-crossing-step";
inline constexpr const char* psc_chamber = "positive-scalar-curvature-chamber-vanishing";
inline constexpr const char* blowup_formula = "sw-blowup-formula";
inline constexpr const char* rational_blowdown = "rational-blowdown-effect";
inline constexpr const char* taubes_bound = "multiple-bound-for-basic-classes";
inline constexpr const char* adjunction_torus = "adjunction-along-square-zero-torus";
inline constexpr const char* quotient_covers = "free-involution-quotient-covers";
inline constexpr const char* extremal_degree = "extremal-basic-class-multiplicity";
inline constexpr const char* twist_knot_data = "twist-knot-alexander-polynomials";
inline constexpr const char* blowup_trade = "quotient-blowup-trade";
inline constexpr const char* irreducibility = "irreducibility-from-sw-invariants";
inline constexpr const char* double_node_spheres = "double-node-surgery-sphere-configurations";
}  // namespace anchors

using CheckValue = std::variant<bool, Int, std::string>;

inline std::string to_text(const CheckValue& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    if (std::holds_alternative<Int>(v)) return std::to_string(std::get<Int>(v));
    return std::get<std::string>(v);
}

struct Check {
    std::string desc;
    CheckValue expected;
    CheckValue computed;
    bool pass = false;

    bool operator==(const Check&) const = default;
};

struct ScenarioSpec {
    std::string id;
    std::vector<std::pair<std::string, Int>> params;  // insertion order is report order

    Int param(const std::string& name) const {
        for (const auto& [k, v] : params)
            if (k == name) return v;
        throw std::invalid_argument("scenario " + id + " is missing parameter " + name);
    }

    bool operator==(const ScenarioSpec&) const = default;
};

struct Certificate {
    ScenarioSpec scenario;
    std::vector<Check> checks;
    bool overall = false;
    std::vector<std::string> anchors;

    bool operator==(const Certificate&) const = default;
};

class CertificateBuilder {
  public:
    explicit CertificateBuilder(ScenarioSpec spec) { cert_.scenario = std::move(spec); }

    void anchor(const char* id) {
        for (const std::string& a : cert_.anchors)
            if (a == id) return;
        cert_.anchors.emplace_back(id);
    }

    void check(std::string desc, CheckValue expected, CheckValue computed) {
        bool pass = expected == computed;
        cert_.checks.push_back({std::move(desc), std::move(expected), std::move(computed), pass});
    }
    void check_int(std::string desc, Int expected, Int computed) {
        check(std::move(desc), expected, computed);
    }
    void check_true(std::string desc, bool computed) { check(std::move(desc), true, computed); }
    void check_text(std::string desc, std::string expected, std::string computed) {
        check(std::move(desc), std::move(expected), std::move(computed));
    }

    Certificate finish() {
        cert_.overall = true;
        for (const Check& c : cert_.checks) cert_.overall = cert_.overall && c.pass;
        return std::move(cert_);
    }

  private:
    Certificate cert_;
};

struct ScenarioInfo {
    std::string id;
    std::string summary;
    std::vector<std::pair<std::string, Int>> defaults;
};

inline const std::vector<ScenarioInfo>& scenario_registry() {
    static const std::vector<ScenarioInfo> registry = {
        {"thm-main", "infinitely many smooth structures on the definite quotients Z0 # p CP2bar",
         {{"p", 4}, {"m_max", 10}}},
        {"thm-general",
         "smooth structures on Z0 # (n-1) CP2 # p CP2bar and the spin family Z0 # q K3 # (q-1) "
         "S2xS2",
         {{"n", 3}, {"q", 2}, {"p", 15}, {"m_max", 5}}},
        {"thm-moreex", "non-diffeomorphic manifolds homeomorphic to Z0 # 2n CP2 # 8n CP2bar",
         {{"n", 1}, {"m_max", 5}}},
        {"thm-theDns", "the even blow-down family is new: not a double knot surgery",
         {{"n", 2}}},
        {"thm-distinctXm", "the twist-surgered elliptic surfaces are pairwise distinct",
         {{"n", 1}, {"m_max", 10}}},
        {"thm-distinctWm", "their free quotients are pairwise distinct",
         {{"n", 1}, {"m_max", 10}}},
        {"prop-distinctDn", "the blow-down family D(n) is pairwise distinct",
         {{"n_max", 6}}},
        {"thm-notknotsurg", "mod-4 obstruction: no knot gives D(2k) by double surgery",
         {{"k_max", 50}}},
        {"thm-final", "smooth structures on Z1 # 2n CP2 # k CP2bar for k >= 8n",
         {{"n", 1}, {"k", 8}, {"m_max", 5}}},
    };
    return registry;
}

inline const ScenarioInfo& scenario_info(const std::string& id) {
    for (const ScenarioInfo& s : scenario_registry())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown scenario id: " + id);
}

// Defaults merged with overrides; unknown parameter names are rejected.
inline ScenarioSpec make_scenario(const std::string& id,
                                  const std::vector<std::pair<std::string, Int>>& overrides = {}) {
    const ScenarioInfo& info = scenario_info(id);
    ScenarioSpec spec{info.id, info.defaults};
    for (const auto& [name, value] : overrides) {
        bool found = false;
        for (auto& [k, v] : spec.params)
            if (k == name) {
                v = value;
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("unknown parameter '" + name + "' for scenario " + id);
    }
    return spec;
}

namespace detail {

inline ManifoldExpr repeated_sum(ManifoldExpr base, const ManifoldExpr& atom, Int count) {
    std::vector<ManifoldExpr> parts{std::move(base)};
    for (Int i = 0; i < count; ++i) parts.push_back(atom);
    return ManifoldExpr::conn_sum(std::move(parts));
}

// Z0 # a CP2 # b CP2bar
inline ManifoldExpr z0_sum(Int cp2_count, Int cp2bar_count) {
    ManifoldExpr e = repeated_sum(ManifoldExpr::z0(), ManifoldExpr::cp2(), cp2_count);
    return repeated_sum(std::move(e), ManifoldExpr::cp2bar(), cp2bar_count);
}
inline ManifoldExpr z1_sum(Int cp2_count, Int cp2bar_count) {
    ManifoldExpr e = repeated_sum(ManifoldExpr::z1(), ManifoldExpr::cp2(), cp2_count);
    return repeated_sum(std::move(e), ManifoldExpr::cp2bar(), cp2bar_count);
}

// The quotient construction behind the final family: E(2n+1) with two
// twist-knot surgeries, four blow-ups, two chains (-2n-9, -2 x (2n+5))
// blown down, then the free quotient.
inline ManifoldExpr final_family_quotient(Int n, Int m) {
    ManifoldExpr upstairs = ManifoldExpr::knot_surgery(ManifoldExpr::elliptic(2 * n + 1),
                                                       twist_knot(m), 2);
    upstairs = ManifoldExpr::blowup(std::move(upstairs), 4);
    ChainShape chain;
    chain.length = 2 * n + 6;
    chain.squares.push_back(-2 * n - 9);
    for (Int i = 0; i < 2 * n + 5; ++i) chain.squares.push_back(-2);
    upstairs = ManifoldExpr::rational_blowdown(std::move(upstairs), {chain, chain}, true);
    return ManifoldExpr::free_quotient(std::move(upstairs), "iota", false);
}

// homeomorphism target of the quotient family W(m,n)
inline ManifoldExpr w_family_target(Int n) {
    if (n % 4 == 0) {
        Int q = n / 4;
        ManifoldExpr e = repeated_sum(ManifoldExpr::z0(), ManifoldExpr::k3(), q);
        return repeated_sum(std::move(e), ManifoldExpr::s2xs2(), q - 1);
    }
    return z0_sum(n - 1, 5 * n - 1);
}

inline W2Type w_family_expected_type(Int n) {
    if (n % 2 == 1) return W2Type::type_i;
    return n % 4 == 0 ? W2Type::type_ii : W2Type::type_iii;
}

inline void require(bool ok, const std::string& message) {
    if (!ok) throw std::domain_error(message);
}

inline Certificate run_thm_main(const ScenarioSpec& spec) {
    Int p = spec.param("p");
    Int m_max = spec.param("m_max");
    require(p >= 4, "thm-main needs p >= 4");
    require(m_max >= 1, "thm-main needs m_max >= 1");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::hk_classification);
    cert.anchor(anchors::quotient_covers);
    cert.anchor(anchors::knot_surgery_invariance);
    cert.anchor(anchors::e1_sw_values);
    cert.anchor(anchors::wall_crossing);
    cert.anchor(anchors::psc_chamber);
    if (p > 4) cert.anchor(anchors::blowup_formula);
    if (p == 4) cert.anchor(anchors::irreducibility);

    ManifoldExpr target = z0_sum(0, p);
    InvariantRecord target_rec = invariants(target);
    cert.check_int("b2+ of Z0 # " + std::to_string(p) + " CP2bar (definite)", 0,
                   target_rec.b2plus);

    for (Int m = 1; m <= m_max; ++m) {
        ManifoldExpr family = repeated_sum(ManifoldExpr::w_family(m, 1), ManifoldExpr::cp2bar(),
                                           p - 4);
        HomeoVerdict v = homeomorphic(family, target);
        cert.check_true("W(" + std::to_string(m) + ",1) # " + std::to_string(p - 4) +
                            " CP2bar homeomorphic to Z0 # " + std::to_string(p) + " CP2bar",
                        v.homeomorphic);
        cert.check_int("family member b2+ stays 0 (definite) at m = " + std::to_string(m), 0,
                       invariants(family).b2plus);
    }

    for (Int m = 1; m <= m_max; ++m) {
        std::vector<BasicClassRecord> values = e1_double_twist_values(m);
        cert.check_int("|SW| on PD(+-3F) of the cover, m = " + std::to_string(m), m * m,
                       values[0].value);
        cert.check_int("|SW| on PD(+-F) of the cover, m = " + std::to_string(m),
                       2 * m * (2 * m - 1), values[2].value);
    }

    bool all_distinct = true;
    for (Int m = 1; m <= m_max; ++m)
        for (Int mp = 1; mp < m; ++mp) all_distinct = all_distinct && families_distinct(m, mp);
    cert.check_true("chamber value sets separate every pair m != m' <= " + std::to_string(m_max),
                    all_distinct);
    return cert.finish();
}

inline Certificate run_thm_general(const ScenarioSpec& spec) {
    Int n = spec.param("n");
    Int q = spec.param("q");
    Int p = spec.param("p");
    Int m_max = spec.param("m_max");
    require(n >= 1, "thm-general needs n >= 1");
    require(q >= 1, "thm-general needs q >= 1");
    require(p >= 5 * n - 1, "thm-general needs p >= 5n-1");
    require(m_max >= 1, "thm-general needs m_max >= 1");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::hk_classification);
    cert.anchor(anchors::quotient_covers);
    cert.anchor(anchors::knot_surgery_sw);
    if (p > 5 * n - 1) cert.anchor(anchors::blowup_formula);

    Int extra = p - (5 * n - 1);
    ManifoldExpr target = z0_sum(n - 1, p);
    for (Int m = 1; m <= m_max; ++m) {
        ManifoldExpr family = repeated_sum(ManifoldExpr::w_family(m, n), ManifoldExpr::cp2bar(),
                                           extra);
        cert.check_true("W(" + std::to_string(m) + "," + std::to_string(n) + ") # " +
                            std::to_string(extra) + " CP2bar homeomorphic to Z0 # " +
                            std::to_string(n - 1) + " CP2 # " + std::to_string(p) + " CP2bar",
                        homeomorphic(family, target).homeomorphic);
    }

    ManifoldExpr spin_target = w_family_target(4 * q);
    for (Int m = 1; m <= m_max; ++m) {
        cert.check_true("W(" + std::to_string(m) + "," + std::to_string(4 * q) +
                            ") homeomorphic to Z0 # " + std::to_string(q) + " K3 # " +
                            std::to_string(q - 1) + " S2xS2",
                        homeomorphic(ManifoldExpr::w_family(m, 4 * q), spin_target).homeomorphic);
    }
    cert.check_text("the spin family target is Type II", "II",
                    to_string(invariants(spin_target).w2type));

    bool all_distinct = true;
    for (Int m = 1; m <= m_max; ++m)
        for (Int mp = 1; mp < m; ++mp) all_distinct = all_distinct && families_distinct(m, mp);
    cert.check_true(
        "families separated for all pairs m != m' <= " + std::to_string(m_max) +
            (p > 5 * n - 1 ? " (conditional on the blow-up formula for the covers)" : ""),
        all_distinct);
    return cert.finish();
}

inline Certificate run_thm_moreex(const ScenarioSpec& spec) {
    Int n = spec.param("n");
    Int m_max = spec.param("m_max");
    require(n >= 1, "thm-moreex needs n >= 1");
    require(m_max >= 1, "thm-moreex needs m_max >= 1");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::hk_classification);
    cert.anchor(anchors::rational_blowdown);
    cert.anchor(anchors::double_node_spheres);
    cert.anchor(anchors::knot_surgery_sw);
    cert.anchor(anchors::blowup_trade);
    cert.anchor(anchors::quotient_covers);

    ManifoldExpr z1_target = z1_sum(2 * n, 8 * n);
    ManifoldExpr z0_target = z0z1_rewrite(z1_target, RewriteDirection::z1_to_z0);
    cert.check_true("rewrite Z1 # 2n CP2 # 8n CP2bar -> Z0 form preserves all invariants",
                    invariants(z0_target) == invariants(z1_target));

    for (Int m = 1; m <= m_max; ++m) {
        ManifoldExpr quotient = final_family_quotient(n, m);
        InvariantRecord rec = invariants(quotient);
        if (m == 1) {
            cert.check_int("euler characteristic of the quotient construction", 10 * n + 2,
                           rec.euler);
            cert.check_int("signature of the quotient construction", -6 * n, rec.signature);
        }
        cert.check_true("quotient (m = " + std::to_string(m) + ") homeomorphic to Z0 # " +
                            std::to_string(2 * n) + " CP2 # " + std::to_string(8 * n) + " CP2bar",
                        homeomorphic(quotient, z0_target).homeomorphic);
    }

    bool distinct = true;
    for (Int m = 1; m <= m_max; ++m) {
        SwSeries series = knot_surgery_series(2 * n + 1, {twist_knot(m), twist_knot(m)});
        cert.check_int("leading SW coefficient of the cover series, m = " + std::to_string(m),
                       m * m, series.leading_coefficient());
        for (Int mp = 1; mp < m; ++mp) distinct = distinct && (m * m != mp * mp);
    }
    cert.check_true("leading coefficients separate the family members", distinct);
    return cert.finish();
}

inline Certificate run_thm_theDns(const ScenarioSpec& spec) {
    Int n = spec.param("n");
    require(n >= 2 && n % 2 == 0, "thm-theDns needs even n >= 2");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::freedman_classification);
    cert.anchor(anchors::hk_classification);
    cert.anchor(anchors::rational_blowdown);
    cert.anchor(anchors::extremal_degree);

    cert.check_true("D(" + std::to_string(n) + ") homeomorphic to E(1)",
                    homeomorphic(ManifoldExpr::d_family(n), ManifoldExpr::elliptic(1))
                        .homeomorphic);
    cert.check_true("G(" + std::to_string(n) + ") homeomorphic to Z0 # 4 CP2bar",
                    homeomorphic(ManifoldExpr::g_family(n), z0_sum(0, 4)).homeomorphic);
    cert.check_true("G(" + std::to_string(n) + ") homeomorphic to the twist-surgered quotients",
                    homeomorphic(ManifoldExpr::g_family(n), ManifoldExpr::w_family(1, 1))
                        .homeomorphic);

    Int k = n / 2;
    cert.check_int("extremal multiplicity residue mod 4, double knot surgeries", 3,
                   ((extremal_multiplicity_knot_surgery(1, 1) % 4) + 4) % 4);
    cert.check_int("extremal multiplicity residue mod 4, blow-down family", 1,
                   (((4 * k - 3) % 4) + 4) % 4);
    cert.check_true("mod-4 obstruction excludes every double knot surgery",
                    not_knot_surgery_obstruction(k));
    return cert.finish();
}

inline Certificate run_thm_distinctXm(const ScenarioSpec& spec) {
    Int n = spec.param("n");
    Int m_max = spec.param("m_max");
    require(n >= 1, "thm-distinctXm needs n >= 1");
    require(m_max >= 1, "thm-distinctXm needs m_max >= 1");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::freedman_classification);
    cert.anchor(anchors::knot_surgery_invariance);
    cert.anchor(anchors::twist_knot_data);

    for (Int m = 1; m <= m_max; ++m)
        cert.check_true("X(" + std::to_string(m) + "," + std::to_string(n) +
                            ") homeomorphic to E(" + std::to_string(n) + ")",
                        homeomorphic(ManifoldExpr::x_family(m, n), ManifoldExpr::elliptic(n))
                            .homeomorphic);

    if (n == 1) {
        cert.anchor(anchors::e1_sw_values);
        bool distinct = true;
        for (Int m = 1; m <= m_max; ++m) {
            std::vector<BasicClassRecord> vals = e1_double_twist_values(m);
            cert.check_int("|SW| on PD(+-3F), m = " + std::to_string(m), m * m, vals[0].value);
            cert.check_int("|SW| on PD(+-F), m = " + std::to_string(m), 2 * m * (2 * m - 1),
                           vals[2].value);
            for (Int mp = 1; mp < m; ++mp)
                distinct = distinct && (m * m != mp * mp ||
                                        2 * m * (2 * m - 1) != 2 * mp * (2 * mp - 1));
        }
        cert.check_true("SW values separate every pair m != m'", distinct);
    } else {
        cert.anchor(anchors::knot_surgery_sw);
        bool distinct = true;
        for (Int m = 1; m <= m_max; ++m) {
            SwSeries s = knot_surgery_series(n, {twist_knot(m), twist_knot(m)});
            cert.check_int("leading SW coefficient, m = " + std::to_string(m), m * m,
                           s.leading_coefficient());
            cert.check_int("SW series degree, m = " + std::to_string(m),
                           extremal_multiplicity_knot_surgery(n, 1), s.degree());
            for (Int mp = 1; mp < m; ++mp) distinct = distinct && (m * m != mp * mp);
        }
        cert.check_true("leading coefficients separate every pair m != m'", distinct);
    }
    return cert.finish();
}

inline Certificate run_thm_distinctWm(const ScenarioSpec& spec) {
    Int n = spec.param("n");
    Int m_max = spec.param("m_max");
    require(n >= 1, "thm-distinctWm needs n >= 1");
    require(m_max >= 1, "thm-distinctWm needs m_max >= 1");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::hk_classification);
    cert.anchor(anchors::quotient_covers);
    cert.anchor(anchors::irreducibility);

    InvariantRecord rec = invariants(ManifoldExpr::w_family(1, n));
    cert.check_int("euler characteristic of W(m," + std::to_string(n) + ")", 6 * n, rec.euler);
    cert.check_int("signature of W(m," + std::to_string(n) + ")", -4 * n, rec.signature);
    cert.check_text("w2-type of W(m," + std::to_string(n) + ")",
                    to_string(w_family_expected_type(n)), to_string(rec.w2type));

    bool same_type = true;
    for (Int m = 1; m <= m_max; ++m)
        for (Int mp = 1; mp < m; ++mp)
            same_type = same_type &&
                        homeomorphic(ManifoldExpr::w_family(m, n), ManifoldExpr::w_family(mp, n))
                            .homeomorphic;
    cert.check_true("all W(m," + std::to_string(n) + "), m <= " + std::to_string(m_max) +
                        ", are mutually homeomorphic",
                    same_type);

    ManifoldExpr target = w_family_target(n);
    for (Int m = 1; m <= m_max; ++m)
        cert.check_true("W(" + std::to_string(m) + "," + std::to_string(n) +
                            ") homeomorphic to " + pretty_print(target),
                        homeomorphic(ManifoldExpr::w_family(m, n), target).homeomorphic);

    cert.check_true("universal cover of W(m," + std::to_string(n) + ") is X(m," +
                        std::to_string(n) + ")",
                    universal_cover(ManifoldExpr::w_family(1, n)) == ManifoldExpr::x_family(1, n));

    bool covers_distinct = true;
    if (n == 1) {
        cert.anchor(anchors::e1_sw_values);
        for (Int m = 1; m <= m_max; ++m)
            for (Int mp = 1; mp < m; ++mp)
                covers_distinct = covers_distinct && families_distinct(m, mp);
    } else {
        cert.anchor(anchors::knot_surgery_sw);
        for (Int m = 1; m <= m_max; ++m)
            for (Int mp = 1; mp < m; ++mp) covers_distinct = covers_distinct && (m != mp);
    }
    cert.check_true("covers pairwise distinct for m != m' <= " + std::to_string(m_max),
                    covers_distinct);
    return cert.finish();
}

inline Certificate run_prop_distinctDn(const ScenarioSpec& spec) {
    Int n_max = spec.param("n_max");
    require(n_max >= 2, "prop-distinctDn needs n_max >= 2");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::freedman_classification);
    cert.anchor(anchors::rational_blowdown);
    cert.anchor(anchors::psc_chamber);
    cert.anchor(anchors::wall_crossing);
    cert.anchor(anchors::adjunction_torus);
    cert.anchor(anchors::taubes_bound);

    for (Int n = 2; n <= n_max; ++n) {
        std::string tag = "D(" + std::to_string(n) + "): ";
        DnConfiguration dn = dn_configuration(n);

        bool chains_ok = true;
        try {
            dn.chain1.validate();
            dn.chain2.validate();
        } catch (const std::invalid_argument&) {
            chains_ok = false;
        }
        cert.check_true(tag + "both blow-down chains validate (squares, adjacency, "
                              "negative definite)",
                        chains_ok);

        bool orthogonal = true;
        for (const HomClass& a : dn.chain1.classes())
            for (const HomClass& b : dn.chain2.classes())
                orthogonal = orthogonal && pairing(a, b) == 0;
        cert.check_true(tag + "the two chains are mutually orthogonal", orthogonal);

        SphereConfig combined = dn.combined();
        HomClass x = dn_wall_witness(dn);
        HomClass h = h_class(dn.lattice);
        cert.check_int(tag + "wall witness square", 4 * n - 5, square(x));
        cert.check_int(tag + "wall witness pairing with the canonical class", 3 - 2 * n,
                       pairing(x, dn.canonical_class));
        cert.check_int(tag + "wall witness pairing with h", 3 * n - 2, pairing(x, h));
        cert.check_int(tag + "h pairing with the canonical class", 3,
                       pairing(h, dn.canonical_class));
        cert.check_true(tag + "witness certifies a wall, so +-K is a basic class in some chamber",
                        check_wall_witness(x, dn.canonical_class, combined, h));

        cert.check_int(tag + "descended canonical class divisibility", 2 * n - 3,
                       descended_divisibility(dn.canonical_class, combined));

        cert.check_true(tag + "homeomorphic to E(1)",
                        homeomorphic(ManifoldExpr::d_family(n), ManifoldExpr::elliptic(1))
                            .homeomorphic);

        // exclusion spot checks in the blown-down rank-10 lattice, where the
        // canonical class is (2n-3) times a primitive null class
        DiagonalLattice small(1, 9);
        HomClass primitive = 3 * h_class(small);
        for (Int i = 1; i <= 9; ++i) primitive = primitive - e_class(small, i);
        HomClass kd = (2 * n - 3) * primitive;
        cert.check_text(tag + "class 3K is excluded (multiple bound)", "excluded_taubes",
                        to_string(basic_class_exclusion(3 * kd, kd)));
        cert.check_text(tag + "class -K stays a candidate", "candidate",
                        to_string(basic_class_exclusion(-kd, kd)));
        cert.check_text(tag + "class K + 2 e_1 is excluded (adjunction)", "excluded_adjunction",
                        to_string(basic_class_exclusion(kd + 2 * e_class(small, 1), kd)));
    }

    // worked checks for the two smallest non-trivial members
    if (n_max >= 3) {
        DnConfiguration dn = dn_configuration(3);
        const DiagonalLattice& lat = dn.lattice;
        auto e = [&](Int i) { return e_class(lat, i); };
        HomClass y = dn.chain1.classes()[1], z = dn.chain1.classes()[2];
        HomClass yp = dn.chain2.classes()[1], zp = dn.chain2.classes()[2];
        HomClass t = -dn.fiber_class + e(10) + e(11) + e(12) + e(13) - e(14) - e(15);
        cert.check_true("D(3): 3t = K + 2z + 2z' - 2y - 2y' in the blow-up basis",
                        3 * t == dn.canonical_class + 2 * z + 2 * zp - 2 * y - 2 * yp);
        HomClass omega = h_class(lat) + 2 * dn.fiber_class;
        for (Int i = 10; i <= 15; ++i) omega = omega - e(i);
        SphereConfig combined = dn.combined();
        bool omega_descends = true;
        for (const HomClass& c : combined.classes())
            omega_descends = omega_descends && pairing(omega, c) == 0;
        cert.check_true("D(3): period class omega is orthogonal to both chains", omega_descends);
        cert.check_int("D(3): omega pairing with K", -3, pairing(omega, dn.canonical_class));
        cert.check_int("D(3): omega pairing with t", -1, pairing(omega, t));
        cert.check_int("D(3): h pairing with t", -3, pairing(h_class(lat), t));
        cert.check_true("D(3): no wall for t (same signs), so SW(t') = 0 in both chambers",
                        pairing(omega, t) < 0 && pairing(h_class(lat), t) < 0);
    }
    if (n_max >= 4) {
        DnConfiguration dn = dn_configuration(4);
        const DiagonalLattice& lat = dn.lattice;
        auto e = [&](Int i) { return e_class(lat, i); };
        HomClass y = dn.chain1.classes()[1], z1 = dn.chain1.classes()[2],
                 z2 = dn.chain1.classes()[3];
        HomClass yp = dn.chain2.classes()[1], z1p = dn.chain2.classes()[2],
                 z2p = dn.chain2.classes()[3];
        HomClass t = dn.canonical_class + 2 * e(14) + 2 * e(15);
        cert.check_true("D(4): 5t = K + 2y + 2y' - 2z1 - 2z1' + 4z2 + 4z2'",
                        5 * t == dn.canonical_class + 2 * y + 2 * yp - 2 * z1 - 2 * z1p +
                                     4 * z2 + 4 * z2p);
        cert.check_true("D(4): t is characteristic", is_characteristic(t));
        HomClass omega = h_class(lat) + 3 * dn.fiber_class;
        for (Int i = 10; i <= 17; ++i) omega = omega - e(i);
        cert.check_int("D(4): omega pairing with K", -5, pairing(omega, dn.canonical_class));
        cert.check_int("D(4): omega pairing with t", -1, pairing(omega, t));
        cert.check_true("D(4): wall crossed for t (opposite signs), so SW(t') = +-1",
                        pairing(omega, t) < 0 && pairing(h_class(lat), t) > 0);
    }
    return cert.finish();
}

inline Certificate run_thm_notknotsurg(const ScenarioSpec& spec) {
    Int k_max = spec.param("k_max");
    require(k_max >= 1, "thm-notknotsurg needs k_max >= 1");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::extremal_degree);
    cert.anchor(anchors::knot_surgery_sw);

    Int surgery_residue = -1;
    bool surgery_uniform = true;
    for (Int d = 1; d <= 200; ++d) {
        Int r = ((extremal_multiplicity_knot_surgery(1, d) % 4) + 4) % 4;
        if (surgery_residue == -1) surgery_residue = r;
        surgery_uniform = surgery_uniform && (r == surgery_residue);
    }
    cert.check_true("double-surgery extremal multiplicities share one residue (d <= 200)",
                    surgery_uniform);
    cert.check_int("that residue mod 4", 3, surgery_residue);

    Int dn_residue = -1;
    bool dn_uniform = true;
    for (Int k = 1; k <= k_max; ++k) {
        Int r = (((4 * k - 3) % 4) + 4) % 4;
        if (dn_residue == -1) dn_residue = r;
        dn_uniform = dn_uniform && (r == dn_residue);
    }
    cert.check_true("blow-down extremal multiplicities share one residue (k <= " +
                        std::to_string(k_max) + ")",
                    dn_uniform);
    cert.check_int("that residue mod 4", 1, dn_residue);

    bool never_equal = true;
    for (Int d = 1; d <= 200; ++d)
        for (Int k = 1; k <= k_max; ++k)
            never_equal = never_equal &&
                          (extremal_multiplicity_knot_surgery(1, d) != 4 * k - 3);
    cert.check_true("exhaustive: 4d-1 never equals 4k-3 (d <= 200, k <= " +
                        std::to_string(k_max) + ")",
                    never_equal);

    bool obstruction = true;
    for (Int k = 1; k <= k_max; ++k) obstruction = obstruction && not_knot_surgery_obstruction(k);
    cert.check_true("obstruction holds for every k", obstruction);
    return cert.finish();
}

inline Certificate run_thm_final(const ScenarioSpec& spec) {
    Int n = spec.param("n");
    Int k = spec.param("k");
    Int m_max = spec.param("m_max");
    require(n >= 1, "thm-final needs n >= 1");
    require(k >= 8 * n, "thm-final needs k >= 8n");
    require(m_max >= 1, "thm-final needs m_max >= 1");

    CertificateBuilder cert(spec);
    cert.anchor(anchors::hk_classification);
    cert.anchor(anchors::rational_blowdown);
    cert.anchor(anchors::double_node_spheres);
    cert.anchor(anchors::knot_surgery_sw);
    cert.anchor(anchors::blowup_trade);
    if (k > 8 * n) cert.anchor(anchors::blowup_formula);

    cert.check_true("fiber-sum decomposition matches E(" + std::to_string(2 * n + 1) + ")",
                    invariants(ManifoldExpr::fiber_sum_elliptic(n, n + 1)) ==
                        invariants(ManifoldExpr::elliptic(2 * n + 1)));

    // before any blow-down: quotient of the doubly surgered E(2n+1)
    ManifoldExpr pre = ManifoldExpr::free_quotient(
        ManifoldExpr::knot_surgery(ManifoldExpr::elliptic(2 * n + 1), twist_knot(1), 2), "iota",
        false);
    InvariantRecord pre_rec = invariants(pre);
    cert.check_int("pre-blow-down quotient euler characteristic", 12 * n + 6, pre_rec.euler);
    cert.check_int("pre-blow-down quotient signature", -8 * n - 4, pre_rec.signature);
    cert.check_true("pre-blow-down quotient homeomorphic to Z1 # " + std::to_string(2 * n) +
                        " CP2 # " + std::to_string(10 * n + 4) + " CP2bar",
                    homeomorphic(pre, z1_sum(2 * n, 10 * n + 4)).homeomorphic);

    ManifoldExpr z1_target = z1_sum(2 * n, k);
    ManifoldExpr z0_target = z0z1_rewrite(z1_target, RewriteDirection::z1_to_z0);
    cert.check_true("rewrite Z1 -> Z0 form of the target preserves all invariants",
                    invariants(z0_target) == invariants(z1_target));

    for (Int m = 1; m <= m_max; ++m) {
        ManifoldExpr quotient = repeated_sum(final_family_quotient(n, m),
                                             ManifoldExpr::cp2bar(), k - 8 * n);
        if (m == 1) {
            InvariantRecord rec = invariants(final_family_quotient(n, m));
            cert.check_int("blown-down quotient euler characteristic (before extra blow-ups)",
                           10 * n + 2, rec.euler);
            cert.check_int("blown-down quotient signature (before extra blow-ups)", -6 * n,
                           rec.signature);
        }
        cert.check_true("member m = " + std::to_string(m) + " homeomorphic to Z1 # " +
                            std::to_string(2 * n) + " CP2 # " + std::to_string(k) + " CP2bar",
                        homeomorphic(quotient, z1_target).homeomorphic);
    }

    bool distinct = true;
    for (Int m = 1; m <= m_max; ++m) {
        SwSeries series = knot_surgery_series(2 * n + 1, {twist_knot(m), twist_knot(m)});
        cert.check_int("leading SW coefficient of the cover series, m = " + std::to_string(m),
                       m * m, series.leading_coefficient());
        for (Int mp = 1; mp < m; ++mp) distinct = distinct && (m * m != mp * mp);
    }
    cert.check_true("leading coefficients separate the family members" +
                        std::string(k > 8 * n
                                        ? " (conditional on the blow-up formula for the covers)"
                                        : ""),
                    distinct);
    return cert.finish();
}

}  // namespace detail

// Runs the check list of one theorem scenario in exact arithmetic. Unknown
// ids raise std::invalid_argument, out-of-bounds parameters std::domain_error.
inline Certificate run_scenario(const ScenarioSpec& spec) {
    if (spec.id == "thm-main") return detail::run_thm_main(spec);
    if (spec.id == "thm-general") return detail::run_thm_general(spec);
    if (spec.id == "thm-moreex") return detail::run_thm_moreex(spec);
    if (spec.id == "thm-theDns") return detail::run_thm_theDns(spec);
    if (spec.id == "thm-distinctXm") return detail::run_thm_distinctXm(spec);
    if (spec.id == "thm-distinctWm") return detail::run_thm_distinctWm(spec);
    if (spec.id == "prop-distinctDn") return detail::run_prop_distinctDn(spec);
    if (spec.id == "thm-notknotsurg") return detail::run_thm_notknotsurg(spec);
    if (spec.id == "thm-final") return detail::run_thm_final(spec);
    throw std::invalid_argument("unknown scenario id: " + spec.id);
}

}  // namespace fourfold
