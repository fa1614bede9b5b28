#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>

#include "curvegerm/errors.hpp"
#include "curvegerm/local_algebra.hpp"

namespace curvegerm {

namespace {

struct Term {
    Monomial mono;
    Integer coeff;
};

// Terms sorted by LocalOrder, largest (leading) first. Coefficients are
// coprime integers with a positive leading coefficient.
using SparsePoly = std::vector<Term>;

constexpr unsigned kNoBound = std::numeric_limits<unsigned>::max();

unsigned ecart(const SparsePoly& p) { return p.back().mono.degree() - p.front().mono.degree(); }

Monomial quotient(const Monomial& num, const Monomial& den) { return {num.degx - den.degx, num.degy - den.degy}; }

Monomial lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.degx, b.degx), std::max(a.degy, b.degy)};
}

void make_primitive(SparsePoly& p) {
    if (p.empty()) return;
    Integer content = 0;
    for (const auto& t : p) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_mpz_t());
        if (content == 1) break;
    }
    if (p.front().coeff < 0) content = -content;
    if (content != 1) {
        for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), content.get_mpz_t());
    }
}

SparsePoly from_polynomial(const Polynomial& f, unsigned bound) {
    Integer denominator_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    SparsePoly out;
    out.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() >= bound) continue;
        Integer scaled = c.get_num() * (denominator_lcm / c.get_den());
        out.push_back({m, std::move(scaled)});
    }
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return LocalOrder::greater(a.mono, b.mono); });
    make_primitive(out);
    return out;
}

Polynomial to_polynomial(const SparsePoly& p) {
    Polynomial out;
    for (const auto& t : p) out.add_term(t.mono, Rational(t.coeff));
    return out;
}

// alpha·u·f − beta·v·g, dropping terms of degree >= bound, made primitive.
SparsePoly combine(const Integer& alpha, const Monomial& u, const SparsePoly& f, const Integer& beta,
                   const Monomial& v, const SparsePoly& g, unsigned bound) {
    SparsePoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        Monomial mf, mg;
        if (i < f.size()) mf = u * f[i].mono;
        if (j < g.size()) mg = v * g[j].mono;
        Term t;
        if (j == g.size() || (i < f.size() && LocalOrder::greater(mf, mg))) {
            t = {mf, alpha * f[i].coeff};
            ++i;
        } else if (i == f.size() || LocalOrder::greater(mg, mf)) {
            t = {mg, -(beta * g[j].coeff)};
            ++j;
        } else {
            t = {mf, alpha * f[i].coeff - beta * g[j].coeff};
            ++i;
            ++j;
        }
        // Degrees only grow along the sequence, so once past the bound the
        // remaining terms can be skipped.
        if (t.mono.degree() >= bound) break;
        if (t.coeff != 0) out.push_back(std::move(t));
    }
    make_primitive(out);
    return out;
}

// Cancels the leading term of h against g, where LM(g) divides LM(h).
SparsePoly reduce_leading(const SparsePoly& h, const SparsePoly& g, unsigned bound) {
    Integer d;
    mpz_gcd(d.get_mpz_t(), h.front().coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
    const Integer alpha = g.front().coeff / d;
    const Integer beta = h.front().coeff / d;
    return combine(alpha, Monomial{}, h, beta, quotient(h.front().mono, g.front().mono), g, bound);
}

SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g, unsigned bound) {
    const Monomial l = lcm(f.front().mono, g.front().mono);
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
    const Integer alpha = g.front().coeff / d;
    const Integer beta = f.front().coeff / d;
    return combine(alpha, quotient(l, f.front().mono), f, beta, quotient(l, g.front().mono), g, bound);
}

struct Element {
    SparsePoly poly;
    unsigned ecart = 0;
    bool alive = true;
};

// Mora's normal form. Reducers are picked by smallest ecart, then smallest
// leading monomial, then insertion order. A reducer with larger ecart than
// the current remainder causes the remainder to join the reducer set, which
// is what makes the reduction terminate in the local ring.
SparsePoly mora_normal_form(SparsePoly h, const std::vector<Element>& basis, unsigned bound) {
    std::deque<Element> extra;
    auto consider = [&](const Element& e, const Monomial& lm, const Element*& best) {
        if (!e.alive || !e.poly.front().mono.divides(lm)) return;
        if (best == nullptr || e.ecart < best->ecart ||
            (e.ecart == best->ecart && LocalOrder::greater(best->poly.front().mono, e.poly.front().mono))) {
            best = &e;
        }
    };
    while (!h.empty()) {
        const Monomial lm = h.front().mono;
        const Element* best = nullptr;
        for (const auto& e : basis) consider(e, lm, best);
        for (const auto& e : extra) consider(e, lm, best);
        if (best == nullptr) return h;
        const unsigned h_ecart = ecart(h);
        if (best->ecart > h_ecart) {
            // deque keeps `best` valid across this push_back.
            extra.push_back({h, h_ecart, true});
        }
        h = reduce_leading(h, best->poly, bound);
    }
    return h;
}

std::vector<Monomial> sorted_unique(std::vector<Monomial> monos) {
    std::sort(monos.begin(), monos.end(), CanonicalOrder{});
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    return monos;
}

// Staircase of the monomial ideal generated by `leading`, or nullopt if infinite.
std::optional<std::vector<Monomial>> monomial_staircase(const std::vector<Monomial>& leading) {
    unsigned x_power = kNoBound, y_power = kNoBound;
    for (const auto& m : leading) {
        if (m.degy == 0) x_power = std::min(x_power, m.degx);
        if (m.degx == 0) y_power = std::min(y_power, m.degy);
    }
    if (x_power == kNoBound || y_power == kNoBound) return std::nullopt;
    std::vector<Monomial> out;
    for (unsigned i = 0; i < x_power; ++i) {
        for (unsigned j = 0; j < y_power; ++j) {
            const Monomial candidate{i, j};
            const bool covered = std::any_of(leading.begin(), leading.end(),
                                             [&](const Monomial& m) { return m.divides(candidate); });
            if (!covered) out.push_back(candidate);
        }
    }
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.lcm.degx != b.lcm.degx) return a.lcm.degx > b.lcm.degx;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

}  // namespace

Monomial local_leading_monomial(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading monomial");
    // Canonical order puts the lowest degree first with degx ascending, so
    // the leading monomial is the last one of the lowest-degree block.
    const auto& terms = f.terms();
    const unsigned low = terms.begin()->first.degree();
    auto it = terms.lower_bound(Monomial{0, low + 1});
    return std::prev(it)->first;
}

StandardBasis standard_basis(const std::vector<Polynomial>& generators) {
    std::vector<Element> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        SparsePoly p = from_polynomial(g, kNoBound);
        const unsigned e = ecart(p);
        basis.push_back({std::move(p), e, true});
    }
    if (basis.empty()) throw Error(ErrorKind::ZeroIdeal, "all generators are zero");

    unsigned bound = kNoBound;
    auto leading_of_alive = [&] {
        std::vector<Monomial> lead;
        for (const auto& e : basis) {
            if (e.alive) lead.push_back(e.poly.front().mono);
        }
        for (unsigned i = 0; bound != kNoBound && i <= bound; ++i) lead.push_back({i, bound - i});
        return lead;
    };

    // Once the leading ideal is cofinite, every monomial of degree above the
    // top of the staircase is a leading monomial, hence lies in the ideal.
    auto tighten_bound = [&] {
        auto stairs = monomial_staircase(leading_of_alive());
        if (!stairs) return;
        unsigned top = 0;
        for (const auto& m : *stairs) top = std::max(top, m.degree() + 1);
        if (stairs->empty()) top = 0;
        if (top >= bound) return;
        bound = top;
        for (auto& e : basis) {
            if (!e.alive) continue;
            if (e.poly.front().mono.degree() >= bound) {
                e.alive = false;
                continue;
            }
            std::erase_if(e.poly, [&](const Term& t) { return t.mono.degree() >= bound; });
            e.ecart = ecart(e.poly);
        }
    };

    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!basis[i].alive) continue;
            pairs.push_back({i, j, lcm(basis[i].poly.front().mono, basis[j].poly.front().mono)});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);
    tighten_bound();

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
        const Pair pair = *best;
        pairs.erase(best);
        if (!basis[pair.i].alive || !basis[pair.j].alive) continue;
        if (pair.lcm.degree() >= bound) continue;

        SparsePoly s = s_polynomial(basis[pair.i].poly, basis[pair.j].poly, bound);
        if (s.empty()) continue;
        SparsePoly h = mora_normal_form(std::move(s), basis, bound);
        if (h.empty()) continue;
        const unsigned e = ecart(h);
        basis.push_back({std::move(h), e, true});
        add_pairs_for(basis.size() - 1);
        tighten_bound();
    }

    // Keep a minimal basis: drop elements whose leading monomial is a
    // multiple of an earlier kept one.
    StandardBasis result;
    std::vector<Monomial> kept;
    std::vector<std::size_t> order_of_kept;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!basis[k].alive) continue;
        const Monomial lm = basis[k].poly.front().mono;
        const bool redundant = std::any_of(basis.begin(), basis.end(), [&](const Element& other) {
            if (&other == &basis[k] || !other.alive) return false;
            const Monomial olm = other.poly.front().mono;
            if (!olm.divides(lm)) return false;
            return !(olm == lm) || (&other < &basis[k]);
        });
        if (redundant) continue;
        result.generators.push_back(to_polynomial(basis[k].poly));
        kept.push_back(lm);
    }
    if (bound != kNoBound) {
        result.truncation_degree = bound;
        for (unsigned i = 0; i <= bound; ++i) {
            const Monomial corner{i, bound - i};
            const bool covered =
                std::any_of(kept.begin(), kept.end(), [&](const Monomial& m) { return m.divides(corner); });
            if (covered) continue;
            result.generators.emplace_back(corner, Rational(1));
            kept.push_back(corner);
        }
    }
    result.leading_exponents = sorted_unique(std::move(kept));
    return result;
}

std::optional<std::vector<Monomial>> staircase(const StandardBasis& basis) {
    return monomial_staircase(basis.leading_exponents);
}

std::optional<std::size_t> colength(const StandardBasis& basis) {
    auto stairs = staircase(basis);
    if (!stairs) return std::nullopt;
    return stairs->size();
}

std::vector<Polynomial> milnor_ideal(const Polynomial& f) {
    auto [fx, fy] = partials(f);
    return {fx, fy};
}

std::vector<Polynomial> tjurina_ideal(const Polynomial& f) {
    auto [fx, fy] = partials(f);
    return {f, fx, fy};
}

namespace {

void require_germ(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial does not define a curve germ");
    if (f.constant_term() != 0) {
        throw Error(ErrorKind::NotAGerm, "f(0,0) = " + to_string(f.constant_term()) + " is not zero");
    }
}

std::size_t finite_colength(const std::vector<Polynomial>& gens, const char* what) {
    auto value = colength(standard_basis(gens));
    if (!value) {
        throw Error(ErrorKind::NonIsolatedSingularity,
                    std::string(what) + " ideal has infinite colength (singularity is not isolated)");
    }
    return *value;
}

}  // namespace

std::size_t milnor_number(const Polynomial& f) {
    require_germ(f);
    return finite_colength(milnor_ideal(f), "Jacobian");
}

std::size_t tjurina_number(const Polynomial& f) {
    require_germ(f);
    return finite_colength(tjurina_ideal(f), "Tjurina");
}

}  // namespace curvegerm
