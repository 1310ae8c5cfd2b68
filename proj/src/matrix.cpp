#include "oretel/matrix.hpp"

namespace oretel {

namespace {

// divide a row by the gcd of its entries (polynomial part and rational
// content); sign follows the first nonzero entry
void strip_row(std::vector<MPoly<Rat>>& row) {
    MPoly<Rat> cont;
    bool first = true;
    for (auto& e : row) {
        if (e.is_zero()) continue;
        if (first) {
            cont = e.normalized();
            first = false;
        } else {
            cont = poly_gcd(cont, e);
        }
        if (cont.is_constant()) break;
    }
    if (first) return; // zero row
    if (!cont.is_constant()) {
        for (auto& e : row)
            if (!e.is_zero()) e = e.exact_div(cont);
    }
    // rational content across the whole row: g/l with g = gcd of coefficient
    // numerators, l = lcm of denominators
    mpz_class g = 0, l = 1;
    for (auto& e : row)
        for (auto& t : e.terms()) {
            g = gcd_z(g, t.coef.num());
            l = lcm_z(l, t.coef.den());
        }
    if (g == 0) return;
    Rat scale(l, g);
    for (auto& e : row) {
        if (e.is_zero()) continue;
        if ((e.leading().coef * scale).sign() < 0) scale = -scale;
        break;
    }
    for (auto& e : row)
        if (!e.is_zero()) e = e.scale(scale);
}

bool row_is_zero(const std::vector<MPoly<Rat>>& row) {
    for (auto& e : row)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace

std::vector<std::vector<MPoly<Rat>>> nullspace_fraction_free(Matrix<MPoly<Rat>> m) {
    const size_t C = m.cols();
    assert(C > 0);
    VarsPtr vars;
    for (size_t i = 0; i < m.rows() && !vars; ++i)
        for (size_t j = 0; j < C && !vars; ++j)
            if (m.at(i, j).vars()) vars = m.at(i, j).vars();
    assert(vars);

    std::vector<std::vector<MPoly<Rat>>> rows;
    rows.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        std::vector<MPoly<Rat>> row(C);
        for (size_t j = 0; j < C; ++j)
            row[j] = m.at(i, j).vars() ? m.at(i, j) : MPoly<Rat>::zero(vars);
        if (!row_is_zero(row)) {
            strip_row(row);
            rows.push_back(std::move(row));
        }
    }

    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < C; ++col) {
        // pivot: smallest entry by term count, then by total degree
        size_t best = rows.size();
        for (size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            if (best == rows.size() ||
                rows[i][col].nterms() < rows[best][col].nterms() ||
                (rows[i][col].nterms() == rows[best][col].nterms() &&
                 rows[i][col].total_degree() < rows[best][col].total_degree()))
                best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        const std::vector<MPoly<Rat>>& prow = rows[rank];
        const MPoly<Rat> p = prow[col];
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            MPoly<Rat> q = rows[i][col];
            MPoly<Rat> g = poly_gcd(p, q);
            MPoly<Rat> a = g.is_constant() ? p : p.exact_div(g);
            MPoly<Rat> b = g.is_constant() ? q : q.exact_div(g);
            for (size_t k = 0; k < C; ++k)
                rows[i][k] = rows[i][k] * a - rows[rank][k] * b;
            assert(rows[i][col].is_zero());
            strip_row(rows[i]);
        }
        // drop rows that became zero
        for (size_t i = rows.size(); i-- > rank + 1;)
            if (row_is_zero(rows[i])) rows.erase(rows.begin() + static_cast<long>(i));
        pivots.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(C, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<MPoly<Rat>>> basis;
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<QRat> x(C, QRat::zero(vars));
        x[f] = QRat::one(vars);
        for (size_t r = rank; r-- > 0;) {
            size_t pc = pivots[r];
            QRat s = QRat::zero(vars);
            for (size_t c = pc + 1; c < C; ++c) {
                if (rows[r][c].is_zero() || x[c].is_zero()) continue;
                s += QRat::from_poly(rows[r][c]) * x[c];
            }
            if (!s.is_zero()) x[pc] = -s / QRat::from_poly(rows[r][pc]);
        }
        // clear denominators, normalize to content-1 polynomial entries
        MPoly<Rat> L = MPoly<Rat>::one(vars);
        for (auto& xi : x)
            if (!xi.is_zero()) L = poly_lcm(L, xi.den());
        std::vector<MPoly<Rat>> vec(C, MPoly<Rat>::zero(vars));
        for (size_t i = 0; i < C; ++i) {
            if (x[i].is_zero()) continue;
            vec[i] = x[i].num() * L.exact_div(x[i].den());
        }
        strip_row(vec);
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace oretel
