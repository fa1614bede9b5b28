#include "curvegerm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "curvegerm/errors.hpp"

namespace curvegerm {

std::string to_string(const Rational& q) { return q.get_str(); }

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

Polynomial::Polynomial(const Monomial& mono, const Rational& coefficient) {
    if (coefficient != 0) terms_.emplace(mono, coefficient);
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

unsigned Polynomial::degree_in_x() const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degx);
    return d;
}

unsigned Polynomial::degree_in_y() const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degy);
    return d;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    Rational product;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            product = ca * cb;
            out.add_term(ma * mb, product);
        }
    }
    return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(Rational(1));
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1;
        if (exponent > 0) square *= square;
    }
    return result;
}

unsigned order(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "order of the zero polynomial is undefined");
    return f.terms().begin()->first.degree();
}

Polynomial initial_form(const Polynomial& f) {
    const unsigned m = order(f);
    Polynomial out;
    for (const auto& [mono, c] : f.terms()) {
        if (mono.degree() != m) break;
        out.add_term(mono, c);
    }
    return out;
}

Polynomial derivative_x(const Polynomial& f) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        if (m.degx == 0) continue;
        out.add_term({m.degx - 1, m.degy}, c * m.degx);
    }
    return out;
}

Polynomial derivative_y(const Polynomial& f) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        if (m.degy == 0) continue;
        out.add_term({m.degx, m.degy - 1}, c * m.degy);
    }
    return out;
}

std::pair<Polynomial, Polynomial> partials(const Polynomial& f) {
    return {derivative_x(f), derivative_y(f)};
}

Polynomial truncate(const Polynomial& f, unsigned max_degree) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() > max_degree) break;
        out.add_term(m, c);
    }
    return out;
}

Polynomial divide_by_x_power(const Polynomial& f, unsigned k) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        if (m.degx < k) throw std::invalid_argument("divide_by_x_power: polynomial is not divisible by x^k");
        out.add_term({m.degx - k, m.degy}, c);
    }
    return out;
}

Polynomial compose(const Polynomial& f, const Polynomial& p, const Polynomial& q) {
    // Powers of p and q are built once and reused across terms.
    std::vector<Polynomial> p_powers{Polynomial(Rational(1))};
    std::vector<Polynomial> q_powers{Polynomial(Rational(1))};
    const unsigned dx = f.degree_in_x(), dy = f.degree_in_y();
    for (unsigned i = 1; i <= dx; ++i) p_powers.push_back(p_powers.back() * p);
    for (unsigned j = 1; j <= dy; ++j) q_powers.push_back(q_powers.back() * q);

    Polynomial out;
    for (const auto& [m, c] : f.terms()) out += c * (p_powers[m.degx] * q_powers[m.degy]);
    return out;
}

Polynomial substitute_linear(const Polynomial& f, const AffineMap& map) {
    if (map.determinant() == 0) throw Error(ErrorKind::SingularMatrix, "substitution matrix is not invertible");
    Polynomial new_x = Polynomial(Monomial{1, 0}, map.a) + Polynomial(Monomial{0, 1}, map.b) + Polynomial(map.e);
    Polynomial new_y = Polynomial(Monomial{1, 0}, map.c) + Polynomial(Monomial{0, 1}, map.d) + Polynomial(map.g);
    return compose(f, new_x, new_y);
}

namespace {

void append_factor(std::string& out, char var, unsigned exponent) {
    if (exponent == 0) return;
    if (!out.empty() && out.back() != ' ') out += '*';
    out += var;
    if (exponent > 1) out += '^' + std::to_string(exponent);
}

}  // namespace

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const Rational magnitude = abs(c);
        const bool constant = m.degree() == 0;
        if (constant || magnitude != 1) {
            out += to_string(magnitude);
            if (!constant) out += ' ';
        }
        std::string mono;
        append_factor(mono, 'x', m.degx);
        append_factor(mono, 'y', m.degy);
        out += mono;
    }
    return out;
}

}  // namespace curvegerm
