#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourfold/checked.hpp"
#include "fourfold/knot.hpp"
#include "fourfold/lattice.hpp"

namespace fourfold {

enum class Pi1 { trivial, z2 };

inline const char* to_string(Pi1 p) { return p == Pi1::trivial ? "trivial" : "Z2"; }

// w2-type trichotomy for fundamental group Z/2 (I: cover non-spin,
// II: spin, III: non-spin with spin cover), extended with the two simply
// connected intersection-form parities.
enum class W2Type { sc_odd, sc_even, type_i, type_ii, type_iii };

inline const char* to_string(W2Type t) {
    switch (t) {
        case W2Type::sc_odd: return "SC_odd";
        case W2Type::sc_even: return "SC_even";
        case W2Type::type_i: return "I";
        case W2Type::type_ii: return "II";
        default: return "III";
    }
}

inline W2Type w2_type(bool spin_total, bool spin_cover) {
    if (spin_total && !spin_cover)
        throw std::invalid_argument("a spin manifold cannot have a non-spin cover");
    if (!spin_cover) return W2Type::type_i;
    if (spin_total) return W2Type::type_ii;
    return W2Type::type_iii;
}

struct InvariantRecord {
    Int euler = 0;
    Int signature = 0;
    Int b2plus = 0;
    Int b2minus = 0;
    Pi1 pi1 = Pi1::trivial;
    bool spin = false;
    W2Type w2type = W2Type::sc_odd;
    bool definite = false;

    bool cover_spin() const {
        return pi1 == Pi1::trivial ? spin : w2type != W2Type::type_i;
    }

    bool operator==(const InvariantRecord&) const = default;
};

// Negative-definite linear chain to be rationally blown down, recorded by
// its length and self-intersection sequence.
struct ChainShape {
    Int length = 0;
    std::vector<Int> squares;

    bool operator==(const ChainShape&) const = default;
};

// One component of a branch curve: its Euler characteristic and square.
struct BranchComponent {
    Int euler = 0;
    Int square = 0;

    bool operator==(const BranchComponent&) const = default;
};

// Expression tree over manifold atoms and construction operators. Values
// are immutable and share subtrees; all evaluators are pure functions.
class ManifoldExpr {
  public:
    enum class Kind {
        cp2,
        cp2bar,
        s2xs2,
        k3,
        z0,
        z1,
        elliptic,           // E(n)
        conn_sum,           // n-ary, at most one summand with pi1 = Z/2
        blowup,             // # k CP2bar
        fiber_sum_elliptic, // E(n1) fiber-sum E(n2) = E(n1+n2)
        knot_surgery,       // along `count` distinct fiber tori
        rational_blowdown,
        branched_double_cover,
        free_quotient,
        x_family,  // X(m,n): E(n) with two K_m surgeries
        w_family,  // W(m,n): X(m,n) / j
        d_family,  // D(n): blow-down of E(1) # 2n CP2bar
        g_family,  // G(n): D(n) / iota
    };

    // --- atom factories ---
    static ManifoldExpr cp2() { return make(Kind::cp2); }
    static ManifoldExpr cp2bar() { return make(Kind::cp2bar); }
    static ManifoldExpr s2xs2() { return make(Kind::s2xs2); }
    static ManifoldExpr k3() { return make(Kind::k3); }
    static ManifoldExpr z0() { return make(Kind::z0); }
    static ManifoldExpr z1() { return make(Kind::z1); }

    static ManifoldExpr elliptic(Int n) {
        if (n < 1) throw std::domain_error("elliptic surfaces are indexed by n >= 1");
        ManifoldExpr e = make(Kind::elliptic);
        e.node_->a = n;
        return e;
    }

    // Flattens nested sums and collapses a singleton to its only child.
    static ManifoldExpr conn_sum(std::vector<ManifoldExpr> summands) {
        std::vector<ManifoldExpr> flat;
        for (ManifoldExpr& s : summands) {
            if (s.kind() == Kind::conn_sum)
                for (const ManifoldExpr& c : s.children()) flat.push_back(c);
            else
                flat.push_back(std::move(s));
        }
        if (flat.empty()) throw std::invalid_argument("connected sum needs at least one summand");
        if (flat.size() == 1) return flat.front();
        ManifoldExpr e = make(Kind::conn_sum);
        e.node_->children = std::move(flat);
        return e;
    }

    static ManifoldExpr blowup(ManifoldExpr base, Int k) {
        if (k < 1) throw std::domain_error("blow-up count must be >= 1");
        ManifoldExpr e = make(Kind::blowup);
        e.node_->a = k;
        e.node_->children.push_back(std::move(base));
        return e;
    }

    static ManifoldExpr fiber_sum_elliptic(Int n1, Int n2) {
        if (n1 < 1 || n2 < 1) throw std::domain_error("fiber sum needs elliptic indices >= 1");
        ManifoldExpr e = make(Kind::fiber_sum_elliptic);
        e.node_->a = n1;
        e.node_->b = n2;
        return e;
    }

    static ManifoldExpr knot_surgery(ManifoldExpr base, KnotModel knot, Int count) {
        if (count < 1) throw std::domain_error("surgery count must be >= 1");
        knot.validate();
        ManifoldExpr e = make(Kind::knot_surgery);
        e.node_->a = count;
        e.node_->knot = std::move(knot);
        e.node_->children.push_back(std::move(base));
        return e;
    }

    static ManifoldExpr rational_blowdown(ManifoldExpr base, std::vector<ChainShape> chains,
                                          bool has_transverse_sphere) {
        for (const ChainShape& c : chains) {
            if (c.length < 1 || static_cast<Int>(c.squares.size()) != c.length)
                throw std::invalid_argument("chain length does not match its square list");
            for (Int s : c.squares)
                if (s > -2) throw std::invalid_argument("blow-down chains need squares <= -2");
        }
        ManifoldExpr e = make(Kind::rational_blowdown);
        e.node_->chains = std::move(chains);
        e.node_->flag = has_transverse_sphere;
        e.node_->children.push_back(std::move(base));
        return e;
    }

    // base_* are the invariants of the manifold underneath; `spin` is the
    // (supplied, not derived) spin-ness of the resulting cover.
    static ManifoldExpr branched_double_cover(Int base_euler, Int base_signature,
                                              std::vector<BranchComponent> branch, bool spin) {
        ManifoldExpr e = make(Kind::branched_double_cover);
        e.node_->a = base_euler;
        e.node_->b = base_signature;
        e.node_->branch = std::move(branch);
        e.node_->flag = spin;
        return e;
    }

    static ManifoldExpr free_quotient(ManifoldExpr base, std::string involution_label,
                                      bool quotient_spin) {
        if (involution_label != "j" && involution_label != "iota")
            throw std::invalid_argument("unknown involution label: " + involution_label);
        ManifoldExpr e = make(Kind::free_quotient);
        e.node_->label = std::move(involution_label);
        e.node_->flag = quotient_spin;
        e.node_->children.push_back(std::move(base));
        return e;
    }

    // --- named constructions ---
    static ManifoldExpr x_family(Int m, Int n) {
        if (m < 1 || n < 1) throw std::domain_error("X(m,n) needs m >= 1 and n >= 1");
        ManifoldExpr e = make(Kind::x_family);
        e.node_->a = m;
        e.node_->b = n;
        return e;
    }
    static ManifoldExpr w_family(Int m, Int n) {
        if (m < 1 || n < 1) throw std::domain_error("W(m,n) needs m >= 1 and n >= 1");
        ManifoldExpr e = make(Kind::w_family);
        e.node_->a = m;
        e.node_->b = n;
        return e;
    }
    static ManifoldExpr d_family(Int n) {
        if (n < 2) throw std::domain_error("D(n) needs n >= 2");
        ManifoldExpr e = make(Kind::d_family);
        e.node_->a = n;
        return e;
    }
    static ManifoldExpr g_family(Int n) {
        if (n < 2) throw std::domain_error("G(n) needs n >= 2");
        ManifoldExpr e = make(Kind::g_family);
        e.node_->a = n;
        return e;
    }

    Kind kind() const { return node_->kind; }
    Int param_a() const { return node_->a; }
    Int param_b() const { return node_->b; }
    const std::vector<ManifoldExpr>& children() const { return node_->children; }
    const KnotModel& knot() const { return node_->knot; }
    const std::vector<ChainShape>& chains() const { return node_->chains; }
    const std::vector<BranchComponent>& branch() const { return node_->branch; }
    bool flag() const { return node_->flag; }
    const std::string& involution_label() const { return node_->label; }

    // Deterministic desugaring of the named constructions.
    ManifoldExpr expand() const;

    bool operator==(const ManifoldExpr& o) const {
        if (node_ == o.node_) return true;
        const Node& x = *node_;
        const Node& y = *o.node_;
        return x.kind == y.kind && x.a == y.a && x.b == y.b && x.flag == y.flag &&
               x.label == y.label && x.knot == y.knot && x.chains == y.chains &&
               x.branch == y.branch && x.children == y.children;
    }

  private:
    struct Node {
        Kind kind{};
        Int a = 0, b = 0;
        bool flag = false;
        std::string label;
        KnotModel knot;
        std::vector<ChainShape> chains;
        std::vector<BranchComponent> branch;
        std::vector<ManifoldExpr> children;
    };

    static ManifoldExpr make(Kind k) {
        ManifoldExpr e;
        e.node_ = std::make_shared<Node>();
        e.node_->kind = k;
        return e;
    }

    ManifoldExpr() = default;

    std::shared_ptr<Node> node_;
};

namespace detail {

struct EvalResult {
    Int euler = 0;
    Int signature = 0;
    Pi1 pi1 = Pi1::trivial;
    bool spin = false;
    bool cover_spin = false;  // spin-ness of the universal cover
};

inline EvalResult evaluate(const ManifoldExpr& x) {
    using Kind = ManifoldExpr::Kind;
    switch (x.kind()) {
        case Kind::cp2: return {3, 1, Pi1::trivial, false, false};
        case Kind::cp2bar: return {3, -1, Pi1::trivial, false, false};
        case Kind::s2xs2: return {4, 0, Pi1::trivial, true, true};
        case Kind::k3: return {24, -16, Pi1::trivial, true, true};
        case Kind::z0: return {2, 0, Pi1::z2, true, true};
        case Kind::z1: return {2, 0, Pi1::z2, false, true};
        case Kind::elliptic: {
            Int n = x.param_a();
            bool spin = (n % 2 == 0);
            return {12 * n, -8 * n, Pi1::trivial, spin, spin};
        }
        case Kind::fiber_sum_elliptic: {
            Int n = checked_add(x.param_a(), x.param_b());
            bool spin = (n % 2 == 0);
            return {checked_mul(12, n), checked_mul(-8, n), Pi1::trivial, spin, spin};
        }
        case Kind::conn_sum: {
            EvalResult acc;
            bool first = true;
            for (const ManifoldExpr& c : x.children()) {
                EvalResult r = evaluate(c);
                if (first) {
                    acc = r;
                    first = false;
                    continue;
                }
                if (acc.pi1 == Pi1::z2 && r.pi1 == Pi1::z2)
                    throw std::invalid_argument(
                        "connected sum of two Z/2 pieces leaves the supported class of "
                        "fundamental groups");
                // a simply connected summand appears twice in the cover
                if (acc.pi1 == Pi1::z2)
                    acc.cover_spin = acc.cover_spin && r.spin;
                else if (r.pi1 == Pi1::z2)
                    acc.cover_spin = r.cover_spin && acc.spin;
                else
                    acc.cover_spin = acc.spin && r.spin;
                acc.euler = checked_sub(checked_add(acc.euler, r.euler), 2);
                acc.signature = checked_add(acc.signature, r.signature);
                acc.spin = acc.spin && r.spin;
                if (r.pi1 == Pi1::z2) acc.pi1 = Pi1::z2;
            }
            return acc;
        }
        case Kind::blowup: {
            EvalResult r = evaluate(x.children().front());
            r.euler = checked_add(r.euler, x.param_a());
            r.signature = checked_sub(r.signature, x.param_a());
            r.spin = false;
            r.cover_spin = false;
            return r;
        }
        case Kind::knot_surgery:
            return evaluate(x.children().front());
        case Kind::rational_blowdown: {
            EvalResult r = evaluate(x.children().front());
            if (!x.flag())
                throw std::invalid_argument(
                    "cannot certify the fundamental group of a blow-down without a "
                    "transverse sphere");
            Int total = 0;
            for (const ChainShape& c : x.chains()) total = checked_add(total, c.length);
            Int b2minus = (r.euler - 2 - r.signature) / 2;
            if (total > b2minus)
                throw std::invalid_argument("blow-down chains exceed the available b2-");
            r.euler = checked_sub(r.euler, total);
            r.signature = checked_add(r.signature, total);
            return r;
        }
        case Kind::branched_double_cover: {
            Int euler = checked_mul(2, x.param_a());
            Int square_sum = 0;
            for (const BranchComponent& b : x.branch()) {
                euler = checked_sub(euler, b.euler);
                square_sum = checked_add(square_sum, b.square);
            }
            if (square_sum % 2 != 0)
                throw std::invalid_argument("branch curve square sum must be even");
            Int sig = checked_sub(checked_mul(2, x.param_b()), square_sum / 2);
            return {euler, sig, Pi1::trivial, x.flag(), x.flag()};
        }
        case Kind::free_quotient: {
            EvalResult r = evaluate(x.children().front());
            if (r.pi1 != Pi1::trivial)
                throw std::invalid_argument("free quotients act on simply connected pieces only");
            if (r.euler % 2 != 0 || r.signature % 2 != 0)
                throw std::invalid_argument(
                    "free quotient needs even Euler characteristic and signature");
            bool qspin = x.flag();
            if (qspin && !r.spin)
                throw std::invalid_argument("a quotient of a non-spin manifold cannot be spin");
            return {r.euler / 2, r.signature / 2, Pi1::z2, qspin, r.spin};
        }
        case Kind::x_family:
        case Kind::w_family:
        case Kind::d_family:
        case Kind::g_family:
            return evaluate(x.expand());
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace detail

inline ManifoldExpr ManifoldExpr::expand() const {
    switch (kind()) {
        case Kind::x_family:
            return knot_surgery(elliptic(param_b()), twist_knot(param_a()), 2);
        case Kind::w_family:
            return free_quotient(x_family(param_a(), param_b()).expand(), "j",
                                 param_b() % 4 == 0);
        case Kind::d_family: {
            DnConfiguration dn = dn_configuration(param_a());
            ChainShape shape{param_a(), dn.chain1.expected_squares()};
            return rational_blowdown(blowup(elliptic(1), 2 * param_a()), {shape, shape}, true);
        }
        case Kind::g_family:
            return free_quotient(d_family(param_a()).expand(), "iota", false);
        default:
            return *this;
    }
}

// Full invariant record; throws when the expression violates a structural
// precondition (parity, b2 bounds, spin consistency).
inline InvariantRecord invariants(const ManifoldExpr& x) {
    detail::EvalResult r = detail::evaluate(x);
    Int plus2 = checked_add(checked_sub(r.euler, 2), r.signature);
    Int minus2 = checked_sub(checked_sub(r.euler, 2), r.signature);
    if (plus2 < 0 || minus2 < 0 || plus2 % 2 != 0 || minus2 % 2 != 0)
        throw std::invalid_argument("invariants violate the b2 identities");
    InvariantRecord rec;
    rec.euler = r.euler;
    rec.signature = r.signature;
    rec.b2plus = plus2 / 2;
    rec.b2minus = minus2 / 2;
    rec.pi1 = r.pi1;
    rec.spin = r.spin;
    if (r.pi1 == Pi1::trivial) {
        if (r.spin && r.signature % 16 != 0)
            throw std::invalid_argument("spin invariants contradict the signature divisibility");
        rec.w2type = r.spin ? W2Type::sc_even : W2Type::sc_odd;
    } else {
        rec.w2type = w2_type(r.spin, r.cover_spin);
    }
    rec.definite = (rec.b2plus == 0 || rec.b2minus == 0);
    return rec;
}

// The universal double cover of an expression with pi1 = Z/2: the quotient
// node is stripped and everything attached after it appears twice.
inline ManifoldExpr universal_cover(const ManifoldExpr& x) {
    using Kind = ManifoldExpr::Kind;
    if (invariants(x).pi1 != Pi1::z2)
        throw std::domain_error("only Z/2 fundamental group admits the double cover here");
    switch (x.kind()) {
        case Kind::z0:
        case Kind::z1:
            return ManifoldExpr::s2xs2();
        case Kind::free_quotient:
            return x.children().front();
        case Kind::w_family:
            return ManifoldExpr::x_family(x.param_a(), x.param_b());
        case Kind::g_family:
            return ManifoldExpr::d_family(x.param_a());
        case Kind::conn_sum: {
            std::vector<ManifoldExpr> out;
            for (const ManifoldExpr& c : x.children()) {
                if (invariants(c).pi1 == Pi1::z2) {
                    out.push_back(universal_cover(c));
                } else {
                    out.push_back(c);
                    out.push_back(c);
                }
            }
            return ManifoldExpr::conn_sum(std::move(out));
        }
        case Kind::blowup:
            return ManifoldExpr::blowup(universal_cover(x.children().front()),
                                        checked_mul(2, x.param_a()));
        case Kind::knot_surgery:
            return ManifoldExpr::knot_surgery(universal_cover(x.children().front()), x.knot(),
                                              checked_mul(2, x.param_a()));
        case Kind::rational_blowdown: {
            std::vector<ChainShape> doubled = x.chains();
            for (const ChainShape& c : x.chains()) doubled.push_back(c);
            return ManifoldExpr::rational_blowdown(universal_cover(x.children().front()),
                                                   std::move(doubled), x.flag());
        }
        default:
            throw std::logic_error("Z/2 expression with an unexpected root node");
    }
}

struct HomeoVerdict {
    bool homeomorphic = false;
    std::string reason;
};

// Homeomorphism decision: Z/2 pieces compare (w2-type, signature, Euler
// characteristic); simply connected pieces compare (Euler characteristic,
// signature, intersection form parity).
inline HomeoVerdict homeomorphic(const ManifoldExpr& a, const ManifoldExpr& b) {
    InvariantRecord ra = invariants(a);
    InvariantRecord rb = invariants(b);
    auto fail = [](std::string what) { return HomeoVerdict{false, std::move(what)}; };
    if (ra.pi1 != rb.pi1)
        return fail(std::string("fundamental group mismatch: ") + to_string(ra.pi1) + " vs " +
                    to_string(rb.pi1));
    if (ra.pi1 == Pi1::z2) {
        if (ra.w2type != rb.w2type)
            return fail(std::string("w2-type mismatch: ") + to_string(ra.w2type) + " vs " +
                        to_string(rb.w2type));
        if (ra.signature != rb.signature)
            return fail("signature mismatch: " + std::to_string(ra.signature) + " vs " +
                        std::to_string(rb.signature));
        if (ra.euler != rb.euler)
            return fail("euler characteristic mismatch: " + std::to_string(ra.euler) + " vs " +
                        std::to_string(rb.euler));
    } else {
        if (ra.euler != rb.euler)
            return fail("euler characteristic mismatch: " + std::to_string(ra.euler) + " vs " +
                        std::to_string(rb.euler));
        if (ra.signature != rb.signature)
            return fail("signature mismatch: " + std::to_string(ra.signature) + " vs " +
                        std::to_string(rb.signature));
        if (ra.spin != rb.spin)
            return fail(std::string("intersection form parity mismatch: ") +
                        (ra.spin ? "even" : "odd") + " vs " + (rb.spin ? "even" : "odd"));
    }
    return {true, "all invariants match"};
}

enum class RewriteDirection { z1_to_z0, z0_to_z1 };

// The blow-up trade between the two quotient atoms: in the presence of a
// CP2bar summand, Z1 may be replaced by Z0 (or back). Invariants are
// checked to be unchanged.
inline ManifoldExpr z0z1_rewrite(const ManifoldExpr& x,
                                 RewriteDirection dir = RewriteDirection::z1_to_z0) {
    using Kind = ManifoldExpr::Kind;
    Kind from = dir == RewriteDirection::z1_to_z0 ? Kind::z1 : Kind::z0;
    if (x.kind() != Kind::conn_sum)
        throw std::domain_error("rewrite applies to connected sums containing a CP2bar summand");
    bool has_cp2bar = false;
    std::size_t target = x.children().size();
    for (std::size_t i = 0; i < x.children().size(); ++i) {
        Kind k = x.children()[i].kind();
        if (k == Kind::cp2bar) has_cp2bar = true;
        if (k == from && target == x.children().size()) target = i;
    }
    if (target == x.children().size())
        throw std::domain_error("expression has no summand to rewrite");
    if (!has_cp2bar) throw std::domain_error("rewrite needs at least one CP2bar summand");
    std::vector<ManifoldExpr> out = x.children();
    out[target] = dir == RewriteDirection::z1_to_z0 ? ManifoldExpr::z0() : ManifoldExpr::z1();
    ManifoldExpr result = ManifoldExpr::conn_sum(std::move(out));
    if (!(invariants(result) == invariants(x)))
        throw std::logic_error("rewrite unexpectedly changed the invariants");
    return result;
}

}  // namespace fourfold
