#include "fuchsian/parser.hpp"

#include "fuchsian/error.hpp"

#include <cctype>
#include <string>

namespace fuchsian {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view var) : s_(text), var_(var) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction d = unary();
                if (d.is_zero())
                    throw Error(ErrorKind::DivisionByZeroFunction,
                                "division by zero function at position " + std::to_string(at));
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return factor();
    }

    RationalFunction factor() {
        RationalFunction b = base();
        if (!accept('^')) return b;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer exponent");
        BigInt e = integer();
        if (e > 100000) fail("exponent too large");
        int k = static_cast<int>(e.get_si());
        if (neg && b.is_zero())
            throw Error(ErrorKind::DivisionByZeroFunction,
                        "negative power of zero at position " + std::to_string(pos_));
        return b.pow(neg ? -k : k);
    }

    BigInt integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    RationalFunction base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name != var_) {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            return RationalFunction::x();
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, std::string_view variable) {
    return Parser(text, variable).parse();
}

}  // namespace fuchsian
