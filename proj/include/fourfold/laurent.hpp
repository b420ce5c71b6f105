#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "fourfold/checked.hpp"

namespace fourfold {

// Integer Laurent polynomial: finitely supported exponent -> coefficient map
// with no stored zeros. Equality is structural.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant) {
        if (constant != 0) terms_[0] = constant;
    }

    static LaurentPoly monomial(Int exponent, Int coefficient) {
        LaurentPoly p;
        if (coefficient != 0) p.terms_[exponent] = coefficient;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(1); }

    const std::map<Int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(Int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    Int degree() const {
        if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
        return terms_.rbegin()->first;
    }
    Int min_degree() const {
        if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
        return terms_.begin()->first;
    }
    Int leading_coefficient() const {
        if (is_zero()) throw std::domain_error("the zero polynomial has no leading coefficient");
        return terms_.rbegin()->second;
    }

    bool is_symmetric() const {
        for (const auto& [e, c] : terms_)
            if (coeff(-e) != c) return false;
        return true;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, checked_neg(c));
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = checked_neg(c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                r.add_term(checked_add(e1, e2), checked_mul(c1, c2));
        return r;
    }

    LaurentPoly pow(Int k) const {
        if (k < 0) throw std::domain_error("negative powers are not supported");
        LaurentPoly r = one();
        for (Int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    // t -> t^k on exponents; coefficients unchanged.
    LaurentPoly substitute_power(Int k) const {
        if (k == 0) throw std::domain_error("exponent substitution needs a nonzero power");
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[checked_mul(k, e)] = c;
        return r;
    }

    // Evaluation only makes integer sense at t = 1 or t = -1.
    Int evaluate_at_unit(Int t) const {
        if (t != 1 && t != -1)
            throw std::domain_error("Laurent polynomials evaluate integrally only at 1 or -1");
        Int acc = 0;
        for (const auto& [e, c] : terms_) {
            bool negative = (t == -1) && (((e % 2) + 2) % 2 == 1);
            acc = checked_add(acc, negative ? checked_neg(c) : c);
        }
        return acc;
    }

    bool operator==(const LaurentPoly&) const = default;

    // Textual form like "3t - 5 + 3t^-1", descending exponents.
    std::string to_string(char variable = 't') const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int e = it->first, c = it->second;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            Int a = checked_abs(c);
            if (e == 0) {
                out += std::to_string(a);
            } else {
                if (a != 1) out += std::to_string(a);
                out += variable;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

  private:
    void add_term(Int e, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Int, Int> terms_;
};

// Parses the textual syntax accepted on the command line: terms like
// "3t^-1", "t^2", "-5", joined by + or -, whitespace insignificant.
inline LaurentPoly parse_laurent(const std::string& text, char variable = 't') {
    LaurentPoly result;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&](const char* what) {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = (text[i] == '-');
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument(std::string("expected ") + what + " at offset " +
                                        std::to_string(i));
        Int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = checked_add(checked_mul(v, 10), text[i] - '0');
            ++i;
        }
        return neg ? checked_neg(v) : v;
    };

    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        Int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected + or - at offset " + std::to_string(i));
        }
        first = false;
        Int coefficient = 1;
        bool saw_number = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coefficient = parse_int("coefficient");
            saw_number = true;
        }
        skip_ws();
        Int exponent = 0;
        if (i < text.size() && text[i] == variable) {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exponent = parse_int("exponent");
            }
        } else if (!saw_number) {
            throw std::invalid_argument("expected a term at offset " + std::to_string(i));
        }
        result = result + LaurentPoly::monomial(exponent, checked_mul(sign, coefficient));
        skip_ws();
    }
    return result;
}

}  // namespace fourfold
