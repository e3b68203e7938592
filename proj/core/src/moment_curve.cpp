#include "vkdim/moment_curve.hpp"

#include <stdexcept>
#include <vector>

#include "vkdim/integer_matrix.hpp"

namespace vkdim {

namespace {

std::vector<Rational> gamma(VertexRank r, int k)
{
    std::vector<Rational> p(static_cast<std::size_t>(2 * k));
    Rational t = r + 1;
    Rational power = t;
    for (auto& x : p) {
        x = power;
        power *= t;
    }
    return p;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

int moment_curve_intersection(const Simplex& sigma, const Simplex& tau, int k)
{
    if (k < 0 || sigma.dim() != k || tau.dim() != k || !sigma.disjoint_from(tau)) {
        throw std::invalid_argument("moment curve intersection needs two disjoint k-simplices");
    }
    // Two points in R^0 always coincide.
    if (k == 0) return 1;

    const auto n = static_cast<std::size_t>(2 * k + 2);
    const auto dim = static_cast<std::size_t>(2 * k);
    std::vector<std::vector<Rational>> pts;
    for (VertexRank r : sigma) pts.push_back(gamma(r, k));
    for (VertexRank r : tau) pts.push_back(gamma(r, k));

    // sum a_i gamma(v_i) - sum b_j gamma(w_j) = 0, sum a = 1, sum b = 1
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    const std::size_t half = sigma.size();
    for (std::size_t c = 0; c < n; ++c) {
        const bool first = c < half;
        for (std::size_t r = 0; r < dim; ++r) m[r][c] = first ? pts[c][r] : -pts[c][r];
        m[dim][c] = first ? 1 : 0;
        m[dim + 1][c] = first ? 0 : 1;
    }
    rhs[dim] = 1;
    rhs[dim + 1] = 1;
    auto x = solve_square(m, rhs);
    // Singular exactly when the unique affine dependence of the 2k+2 points
    // has zero weight on sigma; the hulls then cannot meet.
    if (!x) return 0;
    for (const Rational& c : *x) {
        if (c == 0) throw std::logic_error("moment curve configuration is not in general position");
        if (c < 0) return 0;
    }

    std::vector<std::vector<Rational>> frame(dim, std::vector<Rational>(dim));
    for (std::size_t i = 1; i < half; ++i) {
        for (std::size_t r = 0; r < dim; ++r) frame[r][i - 1] = pts[i][r] - pts[0][r];
    }
    for (std::size_t j = 1; j < half; ++j) {
        for (std::size_t r = 0; r < dim; ++r) frame[r][half - 2 + j] = pts[half + j][r] - pts[half][r];
    }
    const int s = sign_of(determinant(frame));
    if (s == 0) throw std::logic_error("moment curve simplices are not transverse");
    return s;
}

int moment_curve_calibration(int k)
{
    std::vector<VertexRank> even;
    std::vector<VertexRank> odd;
    for (int i = 0; i <= k; ++i) {
        even.push_back(static_cast<VertexRank>(2 * i));
        odd.push_back(static_cast<VertexRank>(2 * i + 1));
    }
    return moment_curve_intersection(Simplex(even), Simplex(odd), k);
}

std::map<ConfigCell, int> moment_curve_oracle(const SimplicialComplex& k_complex, int k)
{
    if (k_complex.dim() != k) throw std::invalid_argument("moment curve oracle needs dim K = k");
    const int calibration = moment_curve_calibration(k);
    std::map<ConfigCell, int> out;
    const auto& tops = k_complex.faces(k);
    for (const Simplex& a : tops) {
        for (const Simplex& b : tops) {
            if (a.front() >= b.front() || !a.disjoint_from(b)) continue;
            out.emplace(ConfigCell{a, b}, calibration * moment_curve_intersection(a, b, k));
        }
    }
    return out;
}

}  // namespace vkdim
