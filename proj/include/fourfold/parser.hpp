#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourfold/manifold.hpp"

namespace fourfold {

// Parse failure with the byte offset it happened at. Syntax errors carry
// the expected-token description; semantic errors (bad parameters such as
// E(0)) carry the violated rule.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, std::string message, std::string expected = "")
        : std::runtime_error(render(offset, message, expected)),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }
    const std::string& expected() const { return expected_; }

  private:
    static std::string render(std::size_t offset, const std::string& message,
                              const std::string& expected) {
        std::string s = "parse error at offset " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) s += " (expected " + expected + ")";
        return s;
    }
    std::size_t offset_;
    std::string message_;
    std::string expected_;
};

inline ManifoldExpr parse_expr(const std::string& text);

namespace detail {

// Recursive-descent parser for the grammar
//   expr := term ("#" term)* ;  term := [INT] atom
//   atom := CP2 | CP2bar | S2xS2 | K3 | Z0 | Z1 | E(n) | X(m,n) | W(m,n)
//         | D(n) | G(n) | cover(expr)
// An integer prefix means an n-fold connected sum; whitespace is ignored.
class ExprParser {
  public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    ManifoldExpr parse() {
        std::vector<ManifoldExpr> summands;
        parse_term(summands);
        skip_ws();
        while (pos_ < text_.size()) {
            if (text_[pos_] != '#')
                throw ParseError(pos_, "unexpected input", "'#' or end of input");
            ++pos_;
            parse_term(summands);
            skip_ws();
        }
        if (summands.empty())
            throw ParseError(0, "connected sum has no summands (all multiplicities zero)");
        return ManifoldExpr::conn_sum(std::move(summands));
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Int parse_int(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, std::string("missing ") + what, "an integer");
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, "unexpected input", std::string("'") + c + "'");
        ++pos_;
    }

    void parse_term(std::vector<ManifoldExpr>& out) {
        skip_ws();
        Int multiplicity = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            multiplicity = parse_int("multiplicity");
        ManifoldExpr atom = parse_atom();
        for (Int i = 0; i < multiplicity; ++i) out.push_back(atom);
    }

    ManifoldExpr parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, "missing manifold atom",
                             "CP2, CP2bar, S2xS2, K3, Z0, Z1, E(n), X(m,n), W(m,n), D(n), "
                             "G(n), or cover(expr)");
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "CP2") return ManifoldExpr::cp2();
        if (name == "CP2bar") return ManifoldExpr::cp2bar();
        if (name == "S2xS2") return ManifoldExpr::s2xs2();
        if (name == "K3") return ManifoldExpr::k3();
        if (name == "Z0") return ManifoldExpr::z0();
        if (name == "Z1") return ManifoldExpr::z1();
        if (name == "E") return one_param(start, [](Int n) { return ManifoldExpr::elliptic(n); });
        if (name == "D") return one_param(start, [](Int n) { return ManifoldExpr::d_family(n); });
        if (name == "G") return one_param(start, [](Int n) { return ManifoldExpr::g_family(n); });
        if (name == "X")
            return two_param(start, [](Int m, Int n) { return ManifoldExpr::x_family(m, n); });
        if (name == "W")
            return two_param(start, [](Int m, Int n) { return ManifoldExpr::w_family(m, n); });
        if (name == "cover") return parse_cover(start);
        throw ParseError(start, "unknown manifold name '" + name + "'",
                         "CP2, CP2bar, S2xS2, K3, Z0, Z1, E, X, W, D, G, or cover");
    }

    // cover(expr): slice out the balanced parenthesis body and recurse.
    ManifoldExpr parse_cover(std::size_t at) {
        expect('(');
        std::size_t open = pos_;
        std::size_t depth = 1;
        while (pos_ < text_.size() && depth > 0) {
            if (text_[pos_] == '(') ++depth;
            if (text_[pos_] == ')') --depth;
            ++pos_;
        }
        if (depth != 0) throw ParseError(text_.size(), "unbalanced parentheses", "')'");
        std::string inner = text_.substr(open, pos_ - 1 - open);
        std::optional<ManifoldExpr> base;
        try {
            base = parse_expr(inner);
        } catch (const ParseError& e) {
            throw ParseError(open + e.offset(), e.message(), e.expected());
        }
        try {
            return universal_cover(*base);
        } catch (const std::domain_error& e) {
            throw ParseError(at, e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(at, e.what());
        }
    }

    template <typename F>
    ManifoldExpr one_param(std::size_t at, F make) {
        expect('(');
        Int n = parse_int("parameter");
        expect(')');
        try {
            return make(n);
        } catch (const std::domain_error& e) {
            throw ParseError(at, e.what());
        }
    }

    template <typename F>
    ManifoldExpr two_param(std::size_t at, F make) {
        expect('(');
        Int m = parse_int("parameter");
        expect(',');
        Int n = parse_int("parameter");
        expect(')');
        try {
            return make(m, n);
        } catch (const std::domain_error& e) {
            throw ParseError(at, e.what());
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ManifoldExpr parse_expr(const std::string& text) {
    detail::ExprParser p(text);
    return p.parse();
}

// Canonical textual form; parses back to a structurally equal tree for any
// tree the grammar can express. Construction operators that have no
// concrete syntax print in a functional notation for reports.
inline std::string pretty_print(const ManifoldExpr& x) {
    using Kind = ManifoldExpr::Kind;
    switch (x.kind()) {
        case Kind::cp2: return "CP2";
        case Kind::cp2bar: return "CP2bar";
        case Kind::s2xs2: return "S2xS2";
        case Kind::k3: return "K3";
        case Kind::z0: return "Z0";
        case Kind::z1: return "Z1";
        case Kind::elliptic: return "E(" + std::to_string(x.param_a()) + ")";
        case Kind::x_family:
            return "X(" + std::to_string(x.param_a()) + "," + std::to_string(x.param_b()) + ")";
        case Kind::w_family:
            return "W(" + std::to_string(x.param_a()) + "," + std::to_string(x.param_b()) + ")";
        case Kind::d_family: return "D(" + std::to_string(x.param_a()) + ")";
        case Kind::g_family: return "G(" + std::to_string(x.param_a()) + ")";
        case Kind::conn_sum: {
            std::string out;
            const std::vector<ManifoldExpr>& cs = x.children();
            for (std::size_t i = 0; i < cs.size();) {
                std::size_t j = i;
                while (j < cs.size() && cs[j] == cs[i]) ++j;
                if (!out.empty()) out += " # ";
                if (j - i > 1) out += std::to_string(j - i) + " ";
                out += pretty_print(cs[i]);
                i = j;
            }
            return out;
        }
        case Kind::blowup:
            return "blowup(" + pretty_print(x.children().front()) + ", " +
                   std::to_string(x.param_a()) + ")";
        case Kind::fiber_sum_elliptic:
            return "fibersum(E(" + std::to_string(x.param_a()) + "), E(" +
                   std::to_string(x.param_b()) + "))";
        case Kind::knot_surgery:
            return "surgery(" + pretty_print(x.children().front()) + ", " + x.knot().label +
                   ", " + std::to_string(x.param_a()) + ")";
        case Kind::rational_blowdown: {
            std::string out = "blowdown(" + pretty_print(x.children().front());
            for (const ChainShape& c : x.chains()) {
                out += ", chain[";
                for (std::size_t i = 0; i < c.squares.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(c.squares[i]);
                }
                out += "]";
            }
            return out + ")";
        }
        case Kind::branched_double_cover:
            return "branchedcover(e=" + std::to_string(x.param_a()) +
                   ", sigma=" + std::to_string(x.param_b()) + ")";
        case Kind::free_quotient:
            return "quotient(" + pretty_print(x.children().front()) + ", " +
                   x.involution_label() + ")";
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace fourfold
