#include "vkdim/integer_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace vkdim {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

std::vector<Integer> IntMatrix::multiply(const std::vector<Integer>& x) const
{
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
        }
    }
    return out;
}

std::size_t rational_rank(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::vector<Integer>> w(m, std::vector<Integer>(n));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) w[r][c] = a.at(r, c);
    }
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && w[p][c].is_zero()) ++p;
        if (p == m) continue;
        std::swap(w[p], w[rank]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            for (std::size_t j = c + 1; j < n; ++j) {
                w[r][j] = (w[rank][c] * w[r][j] - w[r][c] * w[rank][j]) / prev;
            }
            w[r][c] = 0;
        }
        prev = w[rank][c];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Integer>> rational_kernel_basis(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::vector<Rational>> w(m, std::vector<Rational>(n));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) w[r][c] = Rational(a.at(r, c));
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        std::size_t p = row;
        while (p < m && w[p][c].is_zero()) ++p;
        if (p == m) continue;
        std::swap(w[p], w[row]);
        const Rational inv = 1 / w[row][c];
        for (std::size_t j = c; j < n; ++j) w[row][j] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || w[r][c].is_zero()) continue;
            const Rational f = w[r][c];
            for (std::size_t j = c; j < n; ++j) w[r][j] -= f * w[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(n);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -w[r][free];
        Integer lcm = 1;
        for (const auto& q : x) {
            const Integer d = boost::multiprecision::denominator(q);
            lcm = lcm / gcd(lcm, d) * d;
        }
        std::vector<Integer> xi(n);
        Integer g = 0;
        for (std::size_t i = 0; i < n; ++i) {
            xi[i] = boost::multiprecision::numerator(x[i]) * (lcm / boost::multiprecision::denominator(x[i]));
            g = gcd(g, abs(xi[i]));
        }
        if (g > 1) {
            for (auto& v : xi) v /= g;
        }
        basis.push_back(std::move(xi));
    }
    return basis;
}

namespace {

struct Diagonalization {
    std::vector<Integer> diagonal;  // d_0 .. d_{r-1}, all nonzero
    IntMatrix column_ops;           // V with U A V = D
    std::vector<Integer> rhs;       // U b
};

// Reduces A to diagonal form by unimodular row and column operations. Row
// operations are applied to `rhs`, column operations accumulated into V.
Diagonalization diagonalize(IntMatrix a, std::vector<Integer> rhs, bool track_columns)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix v;
    if (track_columns) {
        v = IntMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1;
    }
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        if (!rhs.empty()) std::swap(rhs[i], rhs[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
        if (track_columns) {
            for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
        }
    };

    std::vector<Integer> diagonal;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pr = m;
        std::size_t pc = n;
        for (std::size_t r = t; r < m; ++r) {
            for (std::size_t c = t; c < n; ++c) {
                if (!a.at(r, c).is_zero() && (pr == m || abs(a.at(r, c)) < abs(a.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == m) break;
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (a.at(r, t).is_zero()) continue;
                const Integer q = a.at(r, t) / a.at(t, t);
                for (std::size_t c = t; c < n; ++c) a.at(r, c) -= q * a.at(t, c);
                if (!rhs.empty()) rhs[r] -= q * rhs[t];
                if (!a.at(r, t).is_zero()) {
                    swap_rows(t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (a.at(t, c).is_zero()) continue;
                const Integer q = a.at(t, c) / a.at(t, t);
                for (std::size_t r = t; r < m; ++r) a.at(r, c) -= q * a.at(r, t);
                if (track_columns) {
                    for (std::size_t r = 0; r < n; ++r) v.at(r, c) -= q * v.at(r, t);
                }
                if (!a.at(t, c).is_zero()) {
                    swap_cols(t, c);
                    clean = false;
                }
            }
        }
        diagonal.push_back(a.at(t, t));
    }
    return {std::move(diagonal), std::move(v), std::move(rhs)};
}

}  // namespace

std::vector<Integer> smith_invariant_factors(const IntMatrix& a)
{
    auto d = diagonalize(a, {}, false).diagonal;
    for (auto& x : d) x = abs(x);
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const Integer g = gcd(d[i], d[j]);
            const Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    return d;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b)
{
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
    if (a.rows() == 0) return std::vector<Integer>(a.cols());
    auto diag = diagonalize(a, b, true);
    const std::size_t r = diag.diagonal.size();
    for (std::size_t i = r; i < a.rows(); ++i) {
        if (!diag.rhs[i].is_zero()) return std::nullopt;
    }
    std::vector<Integer> y(a.cols());
    for (std::size_t i = 0; i < r; ++i) {
        if (diag.rhs[i] % diag.diagonal[i] != 0) return std::nullopt;
        y[i] = diag.rhs[i] / diag.diagonal[i];
    }
    return diag.column_ops.multiply(y);
}

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> b)
{
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

}  // namespace vkdim
