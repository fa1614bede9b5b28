#include <algorithm>
#include <optional>
#include <stdexcept>

#include "curvegerm/local_algebra.hpp"

namespace curvegerm {

namespace {

// Dense column index of a monomial of degree <= cap.
std::size_t column_of(const Monomial& m) {
    const std::size_t d = m.degree();
    return d * (d + 1) / 2 + m.degx;
}

struct Entry {
    std::size_t column;
    Integer value;
};

// Row entries sorted by column descending, so the pivot is the highest
// monomial (largest degree, then largest degx).
using Row = std::vector<Entry>;

void make_primitive(Row& row) {
    Integer content = 0;
    for (const auto& e : row) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.value.get_mpz_t());
        if (content == 1) break;
    }
    if (row.front().value < 0) content = -content;
    if (content == 1) return;
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), content.get_mpz_t());
}

// Eliminates the pivot of `row` using `pivot` (same leading column).
Row eliminate(const Row& row, const Row& pivot) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), row.front().value.get_mpz_t(), pivot.front().value.get_mpz_t());
    const Integer a = pivot.front().value / g;
    const Integer b = row.front().value / g;
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].column > pivot[j].column)) {
            out.push_back({row[i].column, a * row[i].value});
            ++i;
        } else if (i == row.size() || pivot[j].column > row[i].column) {
            out.push_back({pivot[j].column, -(b * pivot[j].value)});
            ++j;
        } else {
            Integer v = a * row[i].value - b * pivot[j].value;
            if (v != 0) out.push_back({row[i].column, std::move(v)});
            ++i;
            ++j;
        }
    }
    if (!out.empty()) make_primitive(out);
    return out;
}

Row shifted_row(const Polynomial& g, const Monomial& shift, unsigned cap, const Integer& scale) {
    Row row;
    for (const auto& [m, c] : g.terms()) {
        const Monomial shifted = m * shift;
        if (shifted.degree() > cap) break;
        row.push_back({column_of(shifted), Integer(c.get_num() * (scale / c.get_den()))});
    }
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.column > b.column; });
    return row;
}

}  // namespace

std::size_t truncated_codimension(const std::vector<Polynomial>& generators, unsigned cap) {
    const std::size_t columns = column_of(Monomial{cap, 0}) + 1;
    std::vector<std::optional<Row>> pivots(columns);
    std::size_t rank = 0;

    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        const unsigned low = order(g);
        if (low > cap) continue;
        Integer scale = 1;
        for (const auto& [m, c] : g.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());

        for (unsigned d = 0; d + low <= cap; ++d) {
            for (unsigned i = 0; i <= d; ++i) {
                Row row = shifted_row(g, Monomial{i, d - i}, cap, scale);
                if (row.empty()) continue;
                make_primitive(row);
                while (!row.empty() && pivots[row.front().column]) {
                    row = eliminate(row, *pivots[row.front().column]);
                }
                if (row.empty()) continue;
                const std::size_t col = row.front().column;
                pivots[col] = std::move(row);
                ++rank;
                if (rank == columns) return 0;
            }
        }
    }
    return columns - rank;
}

std::optional<std::size_t> colength_oracle(const std::vector<Polynomial>& generators, unsigned cap) {
    if (cap < 2) throw std::invalid_argument("colength_oracle: degree cap must be at least 2");
    const std::size_t below = truncated_codimension(generators, cap - 1);
    const std::size_t at = truncated_codimension(generators, cap);
    if (below != at) return std::nullopt;
    return at;
}

}  // namespace curvegerm
