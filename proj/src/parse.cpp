#include <cctype>
#include <string>

#include "klyachko/errors.hpp"
#include "klyachko/ratfun.hpp"
#include "klyachko/ring.hpp"

namespace klyachko {

namespace {

// Recursive-descent reader for the deterministic rendering grammar of
// Polynomial::str() and RatFun::str(). Whitespace-tolerant.
class Reader {
public:
    Reader(const std::string& text, const RingMode& mode) : text_(text), mode_(mode) {}

    Polynomial read_polynomial() {
        Polynomial p(mode_);
        skip_ws();
        bool negative = eat('-');
        read_term(p, negative);
        while (true) {
            skip_ws();
            if (eat('+')) {
                skip_ws();
                read_term(p, false);
            } else if (eat('-')) {
                skip_ws();
                read_term(p, true);
            } else {
                break;
            }
        }
        return p;
    }

    RatFun read_ratfun() {
        skip_ws();
        Polynomial num(mode_);
        if (peek() == '(') {
            get();
            num = read_polynomial();
            expect(')');
        } else {
            num = read_polynomial();
        }
        skip_ws();
        FactorMap den;
        if (eat('/')) {
            skip_ws();
            if (peek() == '(' && peek(1) == '(') {
                get();
                read_factor(den);
                skip_ws();
                while (eat('*')) {
                    skip_ws();
                    read_factor(den);
                    skip_ws();
                }
                expect(')');
            } else {
                read_factor(den);
            }
        }
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input: " + text_.substr(pos_));
        return RatFun::make(std::move(num), den);
    }

    void check_done() {
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input: " + text_.substr(pos_));
    }

private:
    const std::string& text_;
    RingMode mode_;
    size_t pos_ = 0;

    char peek(size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' at: " + text_.substr(pos_));
    }
    void skip_ws() {
        while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    long read_integer() {
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected digits at: " + text_.substr(pos_));
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
        return neg ? -v : v;
    }

    Rational read_rational() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        if (digits.empty()) throw ParseError("expected a number at: " + text_.substr(pos_));
        if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            get();
            std::string den;
            while (std::isdigit(static_cast<unsigned char>(peek()))) den += get();
            return parse_rational(digits + "/" + den);
        }
        return parse_rational(digits);
    }

    ExponentVec read_monomial() {
        ExponentVec e(mode_.n, 0);
        while (true) {
            if (peek() != mode_.var)
                throw ParseError(std::string("expected variable '") + mode_.var +
                                 "' at: " + text_.substr(pos_));
            get();
            long idx = read_integer();
            if (idx < 1 || idx > mode_.n) throw ParseError("variable index out of range");
            long exp = 1;
            if (eat('^')) exp = read_integer();
            e[idx - 1] += static_cast<int>(exp);
            if (peek() == '*' && peek(1) == mode_.var) {
                get();
                continue;
            }
            break;
        }
        return e;
    }

    void read_term(Polynomial& p, bool negative) {
        Rational coeff(1);
        ExponentVec e(mode_.n, 0);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = read_rational();
            if (peek() == '*' && peek(1) == mode_.var) {
                get();
                e = read_monomial();
            }
        } else if (peek() == mode_.var) {
            e = read_monomial();
        } else {
            throw ParseError("expected a term at: " + text_.substr(pos_));
        }
        if (negative) coeff = -coeff;
        p.add_term(e, coeff);
    }

    void read_factor(FactorMap& den) {
        expect('(');
        skip_ws();
        expect('1');
        skip_ws();
        expect('-');
        skip_ws();
        ExponentVec m = read_monomial();
        skip_ws();
        expect(')');
        int mult = 1;
        if (eat('^')) mult = static_cast<int>(read_integer());
        if (mult < 1) throw ParseError("factor multiplicity must be positive");
        den[canonicalize_exponents(m, mode_)] += mult;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingMode& mode) {
    if (text == "0") return Polynomial::zero(mode);
    Reader reader(text, mode);
    Polynomial p = reader.read_polynomial();
    reader.check_done();
    return p;
}

RatFun parse_ratfun(const std::string& text, const RingMode& mode) {
    if (text == "0") return RatFun::zero(mode);
    Reader reader(text, mode);
    return reader.read_ratfun();
}

}  // namespace klyachko
