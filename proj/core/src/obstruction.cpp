#include "vkdim/obstruction.hpp"

#include <algorithm>
#include <set>

namespace vkdim {

MeshVerdict nu(const Simplex& sigma, const Simplex& tau, int k)
{
    if (sigma.dim() != k || tau.dim() != k) {
        throw std::invalid_argument("nu is defined on top-degree cells only");
    }
    auto interleaves = [](const Simplex& lead, const Simplex& follow) {
        for (std::size_t i = 0; i < lead.size(); ++i) {
            if (!(lead[i] < follow[i])) return false;
            if (i + 1 < lead.size() && !(follow[i] < lead[i + 1])) return false;
        }
        return true;
    };
    if (interleaves(sigma, tau)) return {1, MeshKind::strict};
    if (interleaves(tau, sigma)) return {(k % 2 == 0) ? 1 : -1, MeshKind::swapped};
    return {0, MeshKind::none};
}

MeshVerdict nu(const ConfigCell& cell, int k) { return nu(cell.first, cell.second, k); }

int nu2(const ConfigCell& cell, int k) { return nu(cell, k).value != 0 ? 1 : 0; }

int mu(const Simplex& sigma, const Simplex& b, int k)
{
    if (sigma.dim() != k || b.dim() != k) {
        throw std::invalid_argument("mu is defined on top-degree product cells only");
    }
    if (!OctaComplex::in_minus_copy(b)) {
        throw std::invalid_argument("second factor of mu must lie in the minus copy");
    }
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!(sigma[i] <= b[i])) return 0;
        if (i + 1 < sigma.size() && !(b[i] < sigma[i + 1])) return 0;
    }
    return 1;
}

ProductChain s_push(const ConfigChain& chain)
{
    ProductChain out;
    for (const auto& [cell, c] : chain) {
        accumulate(out, ProductCell{cell.first, OctaComplex::to_minus(cell.second)}, c);
        accumulate(out, ProductCell{cell.second, OctaComplex::to_minus(cell.first)},
                   swap_sign(cell.first.dim(), cell.second.dim()) * c);
    }
    return out;
}

long long evaluate_nu(const ConfigChain& chain, int k)
{
    long long acc = 0;
    for (const auto& [cell, c] : chain) acc += c * nu(cell, k).value;
    return acc;
}

int evaluate_nu2(const ConfigChain& chain, int k)
{
    int acc = 0;
    for (const auto& [cell, c] : chain) acc ^= static_cast<int>((c & 1) & nu2(cell, k));
    return acc;
}

long long evaluate_mu(const ProductChain& chain, int k)
{
    long long acc = 0;
    for (const auto& [cell, c] : chain) acc += c * mu(cell.first, cell.second, k);
    return acc;
}

ProductChain octa_delta_times_cycle(const Simplex& delta, const Gf2Cycle& m)
{
    ProductChain out;
    for (const Simplex& sigma : OctaComplex::lifts(delta)) {
        for (const Simplex& b : m.simplices) out.emplace(ProductCell{sigma, OctaComplex::minus_lift(b)}, 1);
    }
    return out;
}

namespace {

// Top simplices of D: lifts of simplices of M signed plus only over delta.
std::vector<Simplex> doubled_top_simplices(const Gf2Cycle& m, const Simplex& delta)
{
    std::set<Simplex> out;
    for (const Simplex& s : m.simplices) {
        for (const Simplex& lift : OctaComplex::lifts(s)) {
            bool ok = true;
            for (VertexRank r : lift) {
                if ((r & 1U) && !delta.contains(r / 2)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.insert(lift);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

ConfigChain build_omega(const Gf2Cycle& m, const Simplex& delta)
{
    ConfigChain omega;
    if (m.simplices.empty()) return omega;
    const auto tops = doubled_top_simplices(m, delta);
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const Simplex pa = OctaComplex::project(tops[i]);
        for (std::size_t j = 0; j < tops.size(); ++j) {
            const Simplex& a = tops[i];
            const Simplex& b = tops[j];
            if (a.front() >= b.front() || !a.disjoint_from(b)) continue;
            if (!delta.is_face_of(pa.united_with(OctaComplex::project(b)))) continue;
            omega.emplace(ConfigCell{a, b}, 1);
        }
    }
    return omega;
}

StarConditionReport check_star_condition(const Gf2Cycle& m, const Simplex& delta)
{
    const auto& s = m.simplices;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!delta.is_face_of(s[i].united_with(s[j]))) continue;
            if (!s[i].intersected_with(s[j]).is_face_of(delta)) {
                return {false, std::make_pair(s[i], s[j])};
            }
        }
    }
    return {};
}

namespace {

bool is_gf2_cycle(const Gf2Cycle& m)
{
    if (m.degree == 0) return m.simplices.size() % 2 == 0;
    std::map<Simplex, int> bd;
    for (const Simplex& s : m.simplices) {
        for (std::size_t i = 0; i < s.size(); ++i) bd[s.without(i)] ^= 1;
    }
    return std::all_of(bd.begin(), bd.end(), [](const auto& kv) { return kv.second == 0; });
}

CycleCertificate make_certificate(const SimplicialComplex& l, int k, const Gf2Cycle& m,
                                  const Simplex& delta, bool star)
{
    const OctaComplex ol = octahedralize(skeleton(l, k));
    CycleCertificate cert;
    cert.degree = k;
    cert.cycle = m;
    cert.delta = delta;
    cert.doubled = double_over(ol, m, delta);
    cert.omega = build_omega(m, delta);
    cert.star_condition = star;
    cert.evaluation = evaluate_nu2(cert.omega, k);
    return cert;
}

// Calls visit(indices) for every nonempty subset of {0..n-1} of size <= limit,
// by size then lexicographically, until visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, int limit, Visit visit)
{
    for (std::size_t size = 1; size <= std::min<std::size_t>(n, static_cast<std::size_t>(std::max(limit, 1)));
         ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (visit(idx)) return true;
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace

std::optional<CycleCertificate> certify_nonvanishing(const SimplicialComplex& l, int k,
                                                     const SearchOptions& options)
{
    if (k < 0 || k > l.dim()) return std::nullopt;
    const auto basis = gf2_cycle_basis(l, k);
    std::optional<CycleCertificate> found;
    std::size_t examined = 0;
    for_each_combination(basis.size(), options.max_combination, [&](const std::vector<std::size_t>& idx) {
        Gf2Cycle m{k, {}};
        for (auto i : idx) m = m + basis[i];
        for (const Simplex& delta : m.simplices) {
            if (++examined > options.max_candidates) return true;
            if (!check_star_condition(m, delta).holds) continue;
            CycleCertificate cert = make_certificate(l, k, m, delta, true);
            if (!reduce_mod2(boundary(cert.omega)).empty() || cert.evaluation != 1) {
                throw std::logic_error("star condition holds but Omega does not certify; implementation bug");
            }
            found = std::move(cert);
            return true;
        }
        return false;
    });
    return found;
}

std::optional<VanishingWitness> certify_vanishing(const SimplicialComplex& l, const VanishingOptions& options)
{
    const int k = l.dim();
    if (k < 0) return std::nullopt;
    if (k == 0) {
        if (l.num_vertices() != 1) return std::nullopt;
        return VanishingWitness{0, {}, {1}, options.integral ? std::optional<bool>(true) : std::nullopt};
    }
    const OctaComplex ol = octahedralize(l);
    const std::size_t estimate =
        estimate_config_cells(ol.complex(), 2 * k) + estimate_config_cells(ol.complex(), 2 * k - 1);
    if (estimate > options.max_cells) {
        throw BudgetExceeded("configuration space of OL needs up to " + std::to_string(estimate) +
                             " cells, budget is " + std::to_string(options.max_cells));
    }
    const ConfigurationSpace cs(ol.complex(), 2 * k - 1, 2 * k);
    const auto& top = cs.cells(2 * k);
    std::vector<long long> phi(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) phi[i] = nu2(top[i], k);
    auto x = solve_coboundary(phi, 2 * k, cs.cell_complex(), Coefficients::gf2);
    if (!x) return std::nullopt;
    VanishingWitness w{2 * k, cs.cells(2 * k - 1), std::move(*x), std::nullopt};
    if (options.integral) {
        std::vector<long long> phi_z(top.size());
        for (std::size_t i = 0; i < top.size(); ++i) phi_z[i] = nu(top[i], k).value;
        w.integral_vanishes = solve_coboundary(phi_z, 2 * k, cs.cell_complex(), Coefficients::integer).has_value();
    }
    return w;
}

VerificationResult verify_certificate(const SimplicialComplex& l, const CycleCertificate& cert)
{
    auto fail = [](std::string check, std::string detail) {
        return VerificationResult{false, std::move(check), std::move(detail)};
    };
    const int k = cert.degree;
    const Gf2Cycle& m = cert.cycle;
    if (k < 0 || k > l.dim()) return fail("precondition", "degree outside the dimension range of L");
    if (m.simplices.empty()) return fail("precondition", "cycle M is empty");
    if (!std::is_sorted(m.simplices.begin(), m.simplices.end()) ||
        std::adjacent_find(m.simplices.begin(), m.simplices.end()) != m.simplices.end()) {
        return fail("precondition", "cycle M must list distinct simplices in sorted order");
    }
    for (const Simplex& s : m.simplices) {
        if (s.dim() != k || !l.contains(s)) return fail("precondition", "M has a simplex not in L of degree k");
    }
    if (!m.contains(cert.delta)) return fail("precondition", "delta is not a simplex of M");
    if (!is_gf2_cycle(m)) return fail("precondition", "M is not a mod-2 cycle");

    const auto tops = doubled_top_simplices(m, cert.delta);
    for (const auto& [cell, c] : cert.omega) {
        if (c % 2 == 0) return fail("precondition", "Omega has an even coefficient");
        if (cell.first.dim() != k || cell.second.dim() != k || !cell.first.disjoint_from(cell.second) ||
            cell.first.front() >= cell.second.front()) {
            return fail("precondition", "Omega has a malformed cell");
        }
        if (!std::binary_search(tops.begin(), tops.end(), cell.first) ||
            !std::binary_search(tops.begin(), tops.end(), cell.second)) {
            return fail("precondition", "Omega has a cell outside C(D)");
        }
    }

    if (!reduce_mod2(boundary(cert.omega)).empty()) return fail("omega-is-cycle", "boundary of Omega is nonzero");
    if (evaluate_nu2(cert.omega, k) != 1 || cert.evaluation != 1) {
        return fail("evaluation", "nu2(Omega) is not 1");
    }
    for (const auto& [cell, c] : cert.omega) {
        const ConfigCell swapped{cell.second, cell.first};
        if (nu(cell, k).value != evaluate_mu(s_push({{cell, 1}}), k)) {
            return fail("pullback", "nu differs from mu o s on a cell of Omega");
        }
        // The swapped representative is (-1)^k times the canonical cell.
        ProductChain rev;
        accumulate(rev, ProductCell{swapped.first, OctaComplex::to_minus(swapped.second)}, 1);
        accumulate(rev, ProductCell{swapped.second, OctaComplex::to_minus(swapped.first)}, swap_sign(k, k));
        if (nu(swapped, k).value != evaluate_mu(rev, k)) {
            return fail("pullback", "nu differs from mu o s on a swapped cell of Omega");
        }
    }
    const ProductChain target = octa_delta_times_cycle(cert.delta, m);
    if (reduce_mod2(s_push(cert.omega)) != target) {
        return fail("pushforward", "s(Omega) differs from O(delta) x M");
    }
    if (evaluate_mu(target, k) % 2 == 0) return fail("mu-evaluation", "mu(O(delta) x M) is not 1");
    if (check_star_condition(m, cert.delta).holds != cert.star_condition) {
        return fail("star-condition", "recorded star condition does not match");
    }
    if (build_omega(m, cert.delta) != reduce_mod2(cert.omega)) {
        return fail("omega-definition", "Omega is not the chain determined by (M, delta)");
    }
    return {true, {}, {}};
}

std::optional<StarFailureExhibit> find_star_failure(const std::vector<SimplicialComplex>& candidates, int k)
{
    for (const SimplicialComplex& c : candidates) {
        for (const Gf2Cycle& m : gf2_cycle_basis(c, k)) {
            for (const Simplex& delta : m.simplices) {
                const auto star = check_star_condition(m, delta);
                if (star.holds) continue;
                const ConfigChain bd = reduce_mod2(boundary(build_omega(m, delta)));
                if (bd.empty()) continue;
                return StarFailureExhibit{c, m, delta, *star.violation, bd.begin()->first};
            }
        }
    }
    return std::nullopt;
}

}  // namespace vkdim
