#include "curvegerm/parser.hpp"

#include <cctype>
#include <string>

#include "curvegerm/errors.hpp"

namespace curvegerm {

namespace {

class PolynomialReader {
   public:
    PolynomialReader(std::string_view text, unsigned max_degree) : text_(text), max_degree_(max_degree) {}

    Polynomial read() {
        Polynomial result;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        while (true) {
            add_term(result, negative);
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            negative = c == '-';
            ++pos_;
        }
        if (result.total_degree() > max_degree_) {
            throw Error(ErrorKind::DegreeTooLarge, "total degree " + std::to_string(result.total_degree()) +
                                                       " exceeds the limit " + std::to_string(max_degree_));
        }
        return result;
    }

   private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_));
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_letter() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

    Integer read_integer() {
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned read_exponent() {
        skip_space();
        Integer value = read_integer();
        if (value == 0) fail("exponent must be positive");
        if (value > max_degree_) {
            throw Error(ErrorKind::DegreeTooLarge, "exponent " + value.get_str() + " exceeds the limit " +
                                                       std::to_string(max_degree_));
        }
        return static_cast<unsigned>(value.get_ui());
    }

    bool read_factor(Monomial& mono) {
        skip_space();
        if (!at_letter()) return false;
        const char var = peek();
        if (var != 'x' && var != 'y') {
            throw Error(ErrorKind::UnknownVariable,
                        std::string("unknown variable '") + var + "' at offset " + std::to_string(pos_));
        }
        ++pos_;
        unsigned exponent = 1;
        skip_space();
        if (peek() == '^') {
            ++pos_;
            exponent = read_exponent();
        }
        (var == 'x' ? mono.degx : mono.degy) += exponent;
        if (mono.degree() > max_degree_) {
            throw Error(ErrorKind::DegreeTooLarge, "monomial degree exceeds the limit " + std::to_string(max_degree_));
        }
        return true;
    }

    void add_term(Polynomial& result, bool negative) {
        skip_space();
        Rational coefficient(1);
        bool has_coefficient = false;
        if (at_digit()) {
            has_coefficient = true;
            Integer numerator = read_integer();
            skip_space();
            Integer denominator(1);
            if (peek() == '/') {
                ++pos_;
                skip_space();
                denominator = read_integer();
                if (denominator == 0) fail("zero denominator");
            }
            coefficient = Rational(numerator, denominator);
            coefficient.canonicalize();
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (!at_letter()) fail("expected a variable after '*'");
            }
        }

        Monomial mono;
        bool has_monomial = false;
        while (read_factor(mono)) {
            has_monomial = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (!at_letter()) fail("expected a variable after '*'");
            }
        }
        if (!has_coefficient && !has_monomial) fail("empty term");
        if (negative) coefficient = -coefficient;
        result.add_term(mono, coefficient);
    }

    std::string_view text_;
    unsigned max_degree_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, unsigned max_degree) {
    return PolynomialReader(text, max_degree).read();
}

}  // namespace curvegerm
