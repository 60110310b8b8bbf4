/* SPDX-License-Identifier: Apache-2.0 */

#include <cctype>

#include "reldyn/errors.hpp"
#include "reldyn/quantity.hpp"

namespace reldyn {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('+' | '-') unary | primary
// primary := number | 'sqrt' '(' expr ')' | '(' expr ')'
//
// The middle dot and the unicode minus sign are accepted as well.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Quantity parse() {
        Quantity q = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return q;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " in quantity literal \"" + std::string(text_) + "\"", 1,
                         pos_ + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
            ++pos_;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    bool accept_minus() { return accept("-") || accept("−"); }
    bool accept_times() { return accept("*") || accept("·"); }

    Quantity expr() {
        Quantity q = term();
        for (;;) {
            if (accept("+"))
                q += term();
            else if (accept_minus())
                q -= term();
            else
                return q;
        }
    }

    Quantity term() {
        Quantity q = unary();
        for (;;) {
            if (accept_times()) {
                q *= unary();
            } else if (accept("/")) {
                std::size_t at = pos_;
                Quantity d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                q /= d;
            } else {
                return q;
            }
        }
    }

    Quantity unary() {
        if (accept("+")) return unary();
        if (accept_minus()) return -unary();
        return primary();
    }

    Quantity primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept("sqrt") || accept("√")) {
            if (!accept("(")) fail("expected '(' after sqrt");
            std::size_t at = pos_;
            Quantity inner = expr();
            if (!accept(")")) fail("expected ')'");
            if (inner.sign() < 0) {
                pos_ = at;
                fail("square root of a negative value");
            }
            return sqrt(inner);
        }
        if (accept("(")) {
            Quantity inner = expr();
            if (!accept(")")) fail("expected ')'");
            return inner;
        }
        return number();
    }

    Quantity number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0)
            ++pos_;
        std::string whole(text_.substr(start, pos_ - start));
        std::string fraction;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t f = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0)
                ++pos_;
            fraction = std::string(text_.substr(f, pos_ - f));
        }
        if (whole.empty() && fraction.empty()) {
            pos_ = start;
            fail("expected a number");
        }
        mpz_class numerator(whole.empty() ? std::string("0") : whole + fraction);
        if (whole.empty()) numerator = mpz_class(fraction);
        mpz_class denominator;
        mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction.size());
        mpq_class value(numerator, denominator);
        value.canonicalize();
        return Quantity(value);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Quantity Quantity::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace reldyn
