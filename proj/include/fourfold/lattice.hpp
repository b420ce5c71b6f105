#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourfold/checked.hpp"
#include "fourfold/intmat.hpp"

namespace fourfold {

// Diagonal unimodular lattice diag(+1,...,+1,-1,...,-1). Basis vectors are
// indexed 0..rank-1 with the positive ones first; in the geometric setting
// the single positive generator is h and the negative ones are e_1, e_2, ...
class DiagonalLattice {
  public:
    DiagonalLattice(Int positive_count, Int negative_count)
        : pos_(positive_count), neg_(negative_count) {
        if (pos_ < 0 || neg_ < 0 || pos_ + neg_ < 1)
            throw std::domain_error("lattice rank must be at least 1");
    }

    Int positive_count() const { return pos_; }
    Int negative_count() const { return neg_; }
    Int rank() const { return pos_ + neg_; }

    // +1 or -1 for the index-th basis vector
    Int basis_sign(Int index) const {
        if (index < 0 || index >= rank()) throw std::out_of_range("basis index out of range");
        return index < pos_ ? 1 : -1;
    }

    bool operator==(const DiagonalLattice&) const = default;

  private:
    Int pos_, neg_;
};

// Integer homology class in a fixed diagonal lattice. Immutable after
// construction; all arithmetic is overflow-checked.
class HomClass {
  public:
    HomClass(DiagonalLattice lattice, std::vector<Int> coeffs)
        : lattice_(lattice), coeffs_(std::move(coeffs)) {
        if (static_cast<Int>(coeffs_.size()) != lattice_.rank())
            throw std::invalid_argument("coefficient count does not match lattice rank");
    }

    const DiagonalLattice& lattice() const { return lattice_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(Int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const {
        for (Int c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    HomClass operator+(const HomClass& o) const {
        require_same_lattice(o);
        std::vector<Int> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coeffs_[i], o.coeffs_[i]);
        return HomClass(lattice_, std::move(c));
    }
    HomClass operator-(const HomClass& o) const {
        require_same_lattice(o);
        std::vector<Int> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
        return HomClass(lattice_, std::move(c));
    }
    HomClass operator-() const {
        std::vector<Int> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_neg(coeffs_[i]);
        return HomClass(lattice_, std::move(c));
    }
    friend HomClass operator*(Int s, const HomClass& x) {
        std::vector<Int> c(x.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(s, x.coeffs_[i]);
        return HomClass(x.lattice_, std::move(c));
    }

    bool operator==(const HomClass&) const = default;

    void require_same_lattice(const HomClass& o) const {
        if (!(lattice_ == o.lattice_))
            throw std::invalid_argument("classes live in different lattices");
    }

  private:
    DiagonalLattice lattice_;
    std::vector<Int> coeffs_;
};

// Intersection pairing sum_i eps_i x_i y_i.
inline Int pairing(const HomClass& x, const HomClass& y) {
    x.require_same_lattice(y);
    Int acc = 0;
    for (Int i = 0; i < x.lattice().rank(); ++i) {
        Int term = checked_mul(x.coeff(i), y.coeff(i));
        if (x.lattice().basis_sign(i) < 0) term = checked_neg(term);
        acc = checked_add(acc, term);
    }
    return acc;
}

inline Int square(const HomClass& x) { return pairing(x, x); }

// x is characteristic iff x.y = y.y (mod 2) for every y; in a diagonal
// lattice that reduces to all coefficients odd.
inline bool is_characteristic(const HomClass& x) {
    for (Int c : x.coeffs())
        if (c % 2 == 0) return false;
    return true;
}

// Convenience builders for the customary basis names (h, e_1, ..., e_k).
inline HomClass basis_class(const DiagonalLattice& lat, Int index) {
    std::vector<Int> c(static_cast<std::size_t>(lat.rank()), 0);
    c.at(static_cast<std::size_t>(index)) = 1;
    return HomClass(lat, std::move(c));
}
inline HomClass h_class(const DiagonalLattice& lat, Int which = 0) {
    if (which < 0 || which >= lat.positive_count())
        throw std::out_of_range("no such positive generator");
    return basis_class(lat, which);
}
// 1-based, matching the e_i naming
inline HomClass e_class(const DiagonalLattice& lat, Int i) {
    if (i < 1 || i > lat.negative_count()) throw std::out_of_range("no such negative generator");
    return basis_class(lat, lat.positive_count() + i - 1);
}
inline HomClass zero_class(const DiagonalLattice& lat) {
    return HomClass(lat, std::vector<Int>(static_cast<std::size_t>(lat.rank()), 0));
}

// An ordered collection of embedded-sphere classes with their expected
// self-intersections. With chain = true the validation also requires the
// linear plumbing pattern: consecutive classes pair to 1, all others to 0.
class SphereConfig {
  public:
    SphereConfig(DiagonalLattice lattice, std::vector<HomClass> classes,
                 std::vector<Int> expected_squares, bool chain)
        : lattice_(lattice),
          classes_(std::move(classes)),
          squares_(std::move(expected_squares)),
          chain_(chain) {
        if (classes_.size() != squares_.size())
            throw std::invalid_argument("class/square count mismatch");
        for (const HomClass& c : classes_)
            if (!(c.lattice() == lattice_))
                throw std::invalid_argument("configuration classes must share one lattice");
    }

    const DiagonalLattice& lattice() const { return lattice_; }
    const std::vector<HomClass>& classes() const { return classes_; }
    const std::vector<Int>& expected_squares() const { return squares_; }
    bool chain() const { return chain_; }
    std::size_t size() const { return classes_.size(); }

    IntMat gram() const {
        IntMat g(classes_.size(), classes_.size());
        for (std::size_t i = 0; i < classes_.size(); ++i)
            for (std::size_t j = i; j < classes_.size(); ++j) {
                Int p = pairing(classes_[i], classes_[j]);
                g(i, j) = p;
                g(j, i) = p;
            }
        return g;
    }

    // Throws std::invalid_argument on the first violated condition.
    void validate() const {
        for (std::size_t i = 0; i < classes_.size(); ++i)
            if (square(classes_[i]) != squares_[i])
                throw std::invalid_argument("sphere " + std::to_string(i) +
                                            " has unexpected self-intersection");
        if (chain_) {
            for (std::size_t i = 0; i < classes_.size(); ++i)
                for (std::size_t j = i + 1; j < classes_.size(); ++j) {
                    Int want = (j == i + 1) ? 1 : 0;
                    if (pairing(classes_[i], classes_[j]) != want)
                        throw std::invalid_argument("chain adjacency fails between spheres " +
                                                    std::to_string(i) + " and " + std::to_string(j));
                }
        }
        if (!is_negative_definite())
            throw std::invalid_argument("configuration Gram matrix is not negative definite");
    }

    // Leading principal minors must strictly alternate in sign starting
    // negative. Empty configurations count as (vacuously) definite.
    bool is_negative_definite() const {
        std::vector<Int> minors = leading_principal_minors(gram());
        for (std::size_t k = 0; k < minors.size(); ++k) {
            bool want_negative = (k % 2 == 0);
            if (minors[k] == 0) return false;
            if ((minors[k] < 0) != want_negative) return false;
        }
        return true;
    }

    // Concatenation, e.g. the union of the two blow-down chains. The result
    // carries no adjacency pattern.
    static SphereConfig concat(const SphereConfig& a, const SphereConfig& b) {
        if (!(a.lattice_ == b.lattice_))
            throw std::invalid_argument("cannot concatenate configurations in different lattices");
        std::vector<HomClass> cs = a.classes_;
        cs.insert(cs.end(), b.classes_.begin(), b.classes_.end());
        std::vector<Int> sq = a.squares_;
        sq.insert(sq.end(), b.squares_.begin(), b.squares_.end());
        return SphereConfig(a.lattice_, std::move(cs), std::move(sq), false);
    }

  private:
    DiagonalLattice lattice_;
    std::vector<HomClass> classes_;
    std::vector<Int> squares_;
    bool chain_;
};

// Integer basis of { x : x.c = 0 for all c in config }, saturated (any
// integer vector orthogonal to the configuration is an integer combination
// of the result). Computed as the Smith kernel of the pairing matrix.
inline std::vector<HomClass> orth_complement(const SphereConfig& config) {
    const DiagonalLattice& lat = config.lattice();
    std::size_t rank = static_cast<std::size_t>(lat.rank());
    IntMat a(config.size(), rank);
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            Int v = config.classes()[i].coeff(static_cast<Int>(j));
            if (lat.basis_sign(static_cast<Int>(j)) < 0) v = checked_neg(v);
            a(i, j) = v;
        }
    std::vector<HomClass> basis;
    for (std::vector<Int>& v : integer_kernel(a)) basis.emplace_back(lat, std::move(v));
    return basis;
}

// Divisibility of the restriction of K to the orthogonal complement of the
// configuration: gcd of the pairings of K with a complement basis. This is
// the divisibility (mod torsion) of the class descended through the
// blow-down. Returns 0 when K pairs to zero with the whole complement.
inline Int descended_divisibility(const HomClass& k, const SphereConfig& config) {
    if (!(k.lattice() == config.lattice()))
        throw std::invalid_argument("class and configuration live in different lattices");
    if (!is_characteristic(k))
        throw std::invalid_argument("descended divisibility expects a characteristic class");
    config.validate();
    Int g = 0;
    for (const HomClass& b : orth_complement(config)) g = gcd_abs(g, pairing(k, b));
    return g;
}

// The two disjoint linear chains blown down to produce the n-th member of
// the rational blow-down family, together with the ambient canonical and
// fiber classes. Lattice is (1, 9+2n); e_1, e_2 are the two sections and
// e_10 ... e_{9+2n} the new blow-ups.
struct DnConfiguration {
    DiagonalLattice lattice;
    SphereConfig chain1, chain2;
    HomClass canonical_class;  // K = 3h - sum_{i=1}^{9+2n} e_i
    HomClass fiber_class;      // F = 3h - sum_{i=1}^{9} e_i
    Int n;

    SphereConfig combined() const { return SphereConfig::concat(chain1, chain2); }
};

inline DnConfiguration dn_configuration(Int n) {
    if (n < 2) throw std::domain_error("blow-down configuration needs n >= 2");
    DiagonalLattice lat(1, 9 + 2 * n);
    auto e = [&](Int i) { return e_class(lat, i); };
    HomClass f = 3 * h_class(lat) - e(1);
    for (Int i = 2; i <= 9; ++i) f = f - e(i);
    HomClass k = f;
    for (Int i = 10; i <= 9 + 2 * n; ++i) k = k - e(i);

    // chain1: e_2 - sum e_{2i},  F - 2 e_11 - e_13,  then the (-2)-tail on
    // odd indices 13, 15, ...; chain2 is the mirror on the other parity.
    std::vector<HomClass> c1, c2;
    HomClass head1 = e(2), head2 = e(1);
    for (Int i = 6; i <= 4 + n; ++i) {
        head1 = head1 - e(2 * i);
        head2 = head2 - e(2 * i + 1);
    }
    c1.push_back(head1);
    c1.push_back(f - 2 * e(11) - e(13));
    for (Int j = 1; j <= n - 2; ++j) c1.push_back(e(11 + 2 * j) - e(13 + 2 * j));
    c2.push_back(head2);
    c2.push_back(f - 2 * e(10) - e(12));
    for (Int j = 1; j <= n - 2; ++j) c2.push_back(e(10 + 2 * j) - e(12 + 2 * j));

    std::vector<Int> squares;
    squares.push_back(-n);
    squares.push_back(-5);
    for (Int j = 1; j <= n - 2; ++j) squares.push_back(-2);

    return DnConfiguration{lat,
                           SphereConfig(lat, std::move(c1), squares, true),
                           SphereConfig(lat, std::move(c2), squares, true),
                           k,
                           f,
                           n};
}

// The explicit wall witness (3n-2)h - (n-1) sum_{1..9} e_i - sum_{10..9+2n} e_i:
// orthogonal to both chains, square 4n-5, pairs -(2n-3) with K and 3n-2 with h.
inline HomClass dn_wall_witness(const DnConfiguration& dn) {
    const DiagonalLattice& lat = dn.lattice;
    HomClass x = (3 * dn.n - 2) * h_class(lat);
    for (Int i = 1; i <= 9; ++i) x = x - (dn.n - 1) * e_class(lat, i);
    for (Int i = 10; i <= 9 + 2 * dn.n; ++i) x = x - e_class(lat, i);
    return x;
}

// True iff x certifies a wall between the chambers of h and K for the
// blown-down manifold: x is orthogonal to the configuration (so it descends),
// has positive square and lies in the forward cone of h, and K pairs with x
// and with h with opposite signs.
inline bool check_wall_witness(const HomClass& x, const HomClass& k, const SphereConfig& config,
                               const HomClass& h) {
    for (const HomClass& c : config.classes())
        if (pairing(x, c) != 0) return false;
    if (square(x) <= 0) return false;
    if (pairing(x, h) <= 0) return false;
    Int xk = pairing(x, k);
    Int hk = pairing(h, k);
    if (xk == 0 || hk == 0) return false;
    return (xk < 0) != (hk < 0);
}

// Exhaustive search for a wall witness with coordinates bounded by `bound`
// in the complement basis of the configuration. Worst case visits all
// (2*bound+1)^dim coordinate vectors, so it is only reasonable for
// complements of small rank; the sign conditions involve few basis vectors
// in practice, and whole blocks failing them are skipped wholesale. The
// reference class h is the first positive generator of the lattice.
inline std::optional<HomClass> wall_witness_search(const HomClass& k, const SphereConfig& config,
                                                   Int bound) {
    if (bound < 1) throw std::domain_error("search bound must be positive");
    const DiagonalLattice& lat = config.lattice();
    if (lat.positive_count() < 1)
        throw std::domain_error("wall search needs a positive generator");
    HomClass h = h_class(lat);
    Int hk = pairing(h, k);
    if (hk == 0) return std::nullopt;

    std::vector<HomClass> basis = orth_complement(config);
    std::size_t dim = basis.size();
    if (dim == 0) return std::nullopt;

    // coordinates that influence x.h or x.K go in the slow block, so a
    // failed sign check skips the whole fast block at once
    std::vector<std::size_t> order;
    for (std::size_t pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < dim; ++i) {
            bool sign_coord = pairing(h, basis[i]) != 0 || pairing(k, basis[i]) != 0;
            if (sign_coord == (pass == 0)) order.push_back(i);
        }
    std::vector<HomClass> b;
    for (std::size_t i : order) b.push_back(basis[i]);
    std::size_t slow = 0;
    while (slow < dim && (pairing(h, b[slow]) != 0 || pairing(k, b[slow]) != 0)) ++slow;

    IntMat gram(dim, dim);
    std::vector<Int> kv(dim), hv(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        kv[i] = pairing(k, b[i]);
        hv[i] = pairing(h, b[i]);
        for (std::size_t j = i; j < dim; ++j) {
            Int p = pairing(b[i], b[j]);
            gram(i, j) = p;
            gram(j, i) = p;
        }
    }

    const Int r = bound;
    std::vector<Int> v(dim, 0);
    std::vector<Int> px(dim, 0);  // px[j] = sum_i v[i] * gram(i, j)
    Int x2 = 0;
    auto shift = [&](std::size_t c, Int delta) {
        // adjust v[c] by delta, keeping px and x2 = v^T G v current
        x2 = checked_add(x2, checked_add(checked_mul(2 * delta, px[c]),
                                         checked_mul(checked_mul(delta, delta), gram(c, c))));
        for (std::size_t j = 0; j < dim; ++j)
            px[j] = checked_add(px[j], checked_mul(delta, gram(c, j)));
        v[c] += delta;
    };

    // odometer over the slow block; signs are final once it is fixed
    std::vector<Int> s(slow, -r);
    while (true) {
        Int xh = 0, xk = 0;
        for (std::size_t i = 0; i < slow; ++i) {
            xh = checked_add(xh, checked_mul(s[i], hv[i]));
            xk = checked_add(xk, checked_mul(s[i], kv[i]));
        }
        if (xh > 0 && xk != 0 && (xk < 0) != (hk < 0)) {
            for (std::size_t i = 0; i < dim; ++i) {
                Int target = i < slow ? s[i] : -r;
                if (v[i] != target) shift(i, target - v[i]);
            }
            while (true) {
                if (x2 > 0) {
                    HomClass x = zero_class(lat);
                    for (std::size_t i = 0; i < dim; ++i)
                        if (v[i] != 0) x = x + v[i] * b[i];
                    return x;
                }
                std::size_t pos = slow;
                while (pos < dim && v[pos] == r) {
                    shift(pos, -2 * r);
                    ++pos;
                }
                if (pos == dim) break;
                shift(pos, 1);
            }
        }
        std::size_t pos = 0;
        while (pos < slow && s[pos] == r) {
            s[pos] = -r;
            ++pos;
        }
        if (pos == slow) break;
        ++s[pos];
    }
    return std::nullopt;
}

}  // namespace fourfold
