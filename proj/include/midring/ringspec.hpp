#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "midring/ring.hpp"

namespace midring {

/// Malformed ring-spec text. offset is the byte position where the expected
/// token would have started; it never exceeds the input length.
class ParseError : public Error {
  public:
    ParseError(std::size_t offset, const std::string &expected)
        : Error("ParseError",
                "expected " + expected + " at offset " + std::to_string(offset)),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const { return offset_; }
    const std::string &expected() const { return expected_; }

  private:
    std::size_t offset_;
    std::string expected_;
};

/// Grammatically valid input that names no ring: modulus n <= 1, a non-monic
/// polynomial modulus, or a non-modular polynomial base.
class SemanticError : public Error {
  public:
    explicit SemanticError(const std::string &message,
                           std::optional<std::size_t> offset = std::nullopt)
        : Error("SemanticError", message), offset_(offset) {}

    std::optional<std::size_t> offset() const { return offset_; }

  private:
    std::optional<std::size_t> offset_;
};

/// Abstract syntax of a ring-spec expression:
///   expr := term { "x" term } ;
///   term := "Zn" "(" nat ")" | "poly" "(" expr "," poly ")" | "(" expr ")" ;
///   poly := mono { "+" mono } ; mono := nat | [nat "*"] "x" [ "^" nat ] ;
///   nat  := digit { digit }
///
/// Products are left-associative and whitespace is insignificant. Polynomial
/// coefficients are stored constant-first, already reduced mod the base
/// modulus, with trailing zeros dropped; duplicate monomials are summed.
class RingExpr {
  public:
    enum class Kind { Modular, Product, PolyQuotient };

    static RingExpr modular(std::size_t n) {
        if (n < 2)
            throw SemanticError("Zn(" + std::to_string(n) + ") is not a nonzero ring; need n >= 2");
        RingExpr e(Kind::Modular);
        e.n_ = n;
        return e;
    }

    static RingExpr product(RingExpr left, RingExpr right) {
        RingExpr e(Kind::Product);
        e.children_.push_back(std::move(left));
        e.children_.push_back(std::move(right));
        return e;
    }

    static RingExpr poly_quotient(RingExpr base, std::vector<std::size_t> coeffs) {
        if (base.kind() != Kind::Modular)
            throw SemanticError("polynomial base must be a modular ring Zn(m)");
        const std::size_t m = base.modulus();
        for (std::size_t &c : coeffs)
            c %= m;
        while (!coeffs.empty() && coeffs.back() == 0)
            coeffs.pop_back();
        if (coeffs.size() < 2 || coeffs.back() != 1)
            throw SemanticError("polynomial modulus must be monic of degree >= 1 after "
                                "reduction mod " +
                                std::to_string(m));
        RingExpr e(Kind::PolyQuotient);
        e.children_.push_back(std::move(base));
        e.coeffs_ = std::move(coeffs);
        return e;
    }

    Kind kind() const { return kind_; }

    std::size_t modulus() const { return n_; }
    const RingExpr &left() const { return children_[0]; }
    const RingExpr &right() const { return children_[1]; }
    const RingExpr &base() const { return children_[0]; }
    const std::vector<std::size_t> &poly_coeffs() const { return coeffs_; }

    bool operator==(const RingExpr &other) const {
        return kind_ == other.kind_ && n_ == other.n_ && coeffs_ == other.coeffs_ &&
               children_ == other.children_;
    }

  private:
    explicit RingExpr(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::size_t n_ = 0;
    std::vector<RingExpr> children_;
    std::vector<std::size_t> coeffs_;
};

namespace detail {

struct Token {
    enum class Type { Ident, Nat, LParen, RParen, Comma, Plus, Star, Caret, End };
    Type type;
    std::size_t offset;
    std::string text;      // Ident
    std::size_t value = 0; // Nat
};

inline const char *token_name(Token::Type t) {
    switch (t) {
    case Token::Type::Ident: return "identifier";
    case Token::Type::Nat: return "number";
    case Token::Type::LParen: return "'('";
    case Token::Type::RParen: return "')'";
    case Token::Type::Comma: return "','";
    case Token::Type::Plus: return "'+'";
    case Token::Type::Star: return "'*'";
    case Token::Type::Caret: return "'^'";
    case Token::Type::End: return "end of input";
    }
    return "token";
}

class RingSpecParser {
  public:
    explicit RingSpecParser(const std::string &text) : text_(text) { advance(); }

    RingExpr parse() {
        RingExpr e = parse_expr();
        if (current_.type != Token::Type::End)
            throw ParseError(current_.offset, "'x' or end of input");
        return e;
    }

  private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

    void advance() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = Token{Token::Type::End, start, "", 0};
            return;
        }
        const char c = text_[pos_];
        if (is_digit(c)) {
            std::size_t value = 0;
            while (pos_ < text_.size() && is_digit(text_[pos_])) {
                value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
                if (value > 1000000000)
                    throw SemanticError("number too large at offset " + std::to_string(start),
                                        start);
                ++pos_;
            }
            current_ = Token{Token::Type::Nat, start, "", value};
            return;
        }
        if (is_letter(c)) {
            std::string word;
            while (pos_ < text_.size() && is_letter(text_[pos_]))
                word += text_[pos_++];
            current_ = Token{Token::Type::Ident, start, std::move(word), 0};
            return;
        }
        ++pos_;
        switch (c) {
        case '(': current_ = Token{Token::Type::LParen, start, "", 0}; return;
        case ')': current_ = Token{Token::Type::RParen, start, "", 0}; return;
        case ',': current_ = Token{Token::Type::Comma, start, "", 0}; return;
        case '+': current_ = Token{Token::Type::Plus, start, "", 0}; return;
        case '*': current_ = Token{Token::Type::Star, start, "", 0}; return;
        case '^': current_ = Token{Token::Type::Caret, start, "", 0}; return;
        default: throw ParseError(start, "'Zn', 'poly', '(', or a valid token");
        }
    }

    Token expect(Token::Type type, const char *what) {
        if (current_.type != type)
            throw ParseError(current_.offset, what);
        Token t = current_;
        advance();
        return t;
    }

    bool at_ident(const char *word) const {
        return current_.type == Token::Type::Ident && current_.text == word;
    }

    RingExpr parse_expr() {
        RingExpr e = parse_term();
        while (at_ident("x")) {
            advance();
            RingExpr rhs = parse_term();
            e = RingExpr::product(std::move(e), std::move(rhs));
        }
        return e;
    }

    RingExpr parse_term() {
        if (at_ident("Zn")) {
            advance();
            expect(Token::Type::LParen, "'(' after 'Zn'");
            Token n = expect(Token::Type::Nat, "number");
            expect(Token::Type::RParen, "')'");
            if (n.value < 2)
                throw SemanticError("Zn(" + std::to_string(n.value) +
                                        ") is not a nonzero ring; need n >= 2 (offset " +
                                        std::to_string(n.offset) + ")",
                                    n.offset);
            return RingExpr::modular(n.value);
        }
        if (at_ident("poly")) {
            advance();
            expect(Token::Type::LParen, "'(' after 'poly'");
            const std::size_t base_offset = current_.offset;
            RingExpr base = parse_expr();
            expect(Token::Type::Comma, "','");
            const std::size_t poly_offset = current_.offset;
            std::vector<std::size_t> coeffs = parse_poly();
            expect(Token::Type::RParen, "')'");
            if (base.kind() != RingExpr::Kind::Modular)
                throw SemanticError("polynomial base must be a modular ring Zn(m) (offset " +
                                        std::to_string(base_offset) + ")",
                                    base_offset);
            try {
                return RingExpr::poly_quotient(std::move(base), std::move(coeffs));
            } catch (const SemanticError &e) {
                throw SemanticError(std::string(e.what()) + " (offset " +
                                        std::to_string(poly_offset) + ")",
                                    poly_offset);
            }
        }
        if (current_.type == Token::Type::LParen) {
            advance();
            RingExpr e = parse_expr();
            expect(Token::Type::RParen, "')'");
            return e;
        }
        throw ParseError(current_.offset, "'Zn', 'poly', or '('");
    }

    // Constant-first coefficients, duplicate powers summed, not yet reduced.
    std::vector<std::size_t> parse_poly() {
        std::vector<std::size_t> coeffs;
        auto accumulate = [&](std::size_t power, std::size_t coeff) {
            if (coeffs.size() <= power)
                coeffs.resize(power + 1, 0);
            coeffs[power] += coeff;
        };
        while (true) {
            auto [power, coeff] = parse_mono();
            accumulate(power, coeff);
            if (current_.type != Token::Type::Plus)
                break;
            advance();
        }
        return coeffs;
    }

    // Returns (power, coefficient).
    std::pair<std::size_t, std::size_t> parse_mono() {
        std::size_t coeff = 1;
        bool saw_nat = false;
        if (current_.type == Token::Type::Nat) {
            coeff = current_.value;
            saw_nat = true;
            advance();
            if (current_.type != Token::Type::Star)
                return {0, coeff}; // plain constant
            advance();
        }
        if (!at_ident("x"))
            throw ParseError(current_.offset, saw_nat ? "'x' after '*'" : "monomial");
        advance();
        std::size_t power = 1;
        if (current_.type == Token::Type::Caret) {
            advance();
            Token p = expect(Token::Type::Nat, "exponent");
            power = p.value;
            // Any degree this large is far past every order cap; rejecting it
            // here keeps the coefficient vector from ballooning.
            if (power > 4096)
                throw SemanticError("exponent too large at offset " + std::to_string(p.offset),
                                    p.offset);
        }
        return {power, coeff};
    }

    const std::string &text_;
    std::size_t pos_ = 0;
    Token current_{Token::Type::End, 0, "", 0};
};

} // namespace detail

/// Parses the ring-spec grammar. Throws ParseError (with byte offset and an
/// expected-token description) or SemanticError.
inline RingExpr parse_ring_spec(const std::string &text) {
    return detail::RingSpecParser(text).parse();
}

/// Canonical rendering; parse_ring_spec(format_ring_expr(e)) is structurally
/// equal to e, and formatting is a fixpoint on canonical strings.
inline std::string format_ring_expr(const RingExpr &e) {
    switch (e.kind()) {
    case RingExpr::Kind::Modular:
        return "Zn(" + std::to_string(e.modulus()) + ")";
    case RingExpr::Kind::Product: {
        // Products associate left; a product used as a right operand needs
        // parentheses to survive the round trip.
        std::string rhs = format_ring_expr(e.right());
        if (e.right().kind() == RingExpr::Kind::Product)
            rhs = "(" + rhs + ")";
        return format_ring_expr(e.left()) + " x " + rhs;
    }
    case RingExpr::Kind::PolyQuotient:
        return "poly(" + format_ring_expr(e.base()) + ", " + format_polynomial(e.poly_coeffs()) +
               ")";
    }
    return "";
}

/// Evaluates an expression to its ring by invoking the table constructors
/// recursively; the ring's label is the canonical rendering. Propagates
/// constructor errors (OrderCapExceeded etc).
inline FiniteRing eval_ring_expr(const RingExpr &e, std::size_t order_cap = kDefaultOrderCap) {
    switch (e.kind()) {
    case RingExpr::Kind::Modular:
        return make_modular_ring(e.modulus(), order_cap);
    case RingExpr::Kind::Product: {
        FiniteRing left = eval_ring_expr(e.left(), order_cap);
        FiniteRing right = eval_ring_expr(e.right(), order_cap);
        return make_product_ring(left, right, order_cap);
    }
    case RingExpr::Kind::PolyQuotient: {
        FiniteRing base = eval_ring_expr(e.base(), order_cap);
        return make_poly_quotient_ring(base, e.poly_coeffs(), order_cap);
    }
    }
    throw Error("Unreachable", "invalid ring expression kind");
}

} // namespace midring
