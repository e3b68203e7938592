#include "lemma_suite.hpp"

#include <algorithm>

#include "vkdim/homology.hpp"
#include "vkdim/moment_curve.hpp"
#include "vkdim/obstruction.hpp"
#include "vkdim/octa.hpp"
#include "zoo.hpp"

namespace vkdim::tools {

ProductChain push_forward(const ConfigChain& chain, bool inject_sign_bug)
{
    if (!inject_sign_bug) return s_push(chain);
    ProductChain out;
    for (const auto& [cell, c] : chain) {
        accumulate(out, ProductCell{cell.first, OctaComplex::to_minus(cell.second)}, c);
        accumulate(out, ProductCell{cell.second, OctaComplex::to_minus(cell.first)},
                   -swap_sign(cell.first.dim(), cell.second.dim()) * c);
    }
    return out;
}

ProductChain push_ordered(const Simplex& a, const Simplex& b, bool inject_sign_bug)
{
    const int sign = swap_sign(a.dim(), b.dim());
    ProductChain out;
    accumulate(out, ProductCell{a, OctaComplex::to_minus(b)}, 1);
    accumulate(out, ProductCell{b, OctaComplex::to_minus(a)}, inject_sign_bug ? -sign : sign);
    return out;
}

namespace {

SimplicialComplex shuffled(const SimplicialComplex& k, std::mt19937_64& rng)
{
    std::vector<std::string> order = k.labels();
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[uniform_below(rng, i)]);
    }
    return reorder(k, order);
}

SimplicialComplex candidate(std::mt19937_64& rng, std::size_t max_vertices)
{
    const std::size_t cap = std::max<std::size_t>(max_vertices, 4);
    switch (uniform_below(rng, 4)) {
    case 0: {
        const std::size_t n = 4 + uniform_below(rng, cap - 3);
        const double p = 0.3 + 0.5 * uniform01(rng);
        return generate("random_flag(" + std::to_string(n) + ", " + std::to_string(p) + ", " +
                        std::to_string(rng()) + ")");
    }
    case 1: {
        if (cap < 6) break;
        const std::size_t m = 4 + uniform_below(rng, std::min<std::size_t>(cap - 5, 3));
        return generate("suspension(cycle(" + std::to_string(m) + "))");
    }
    case 2: {
        if (cap < 6) break;
        const SimplicialComplex oct = generate("octahedron_boundary(2)");
        Graph g{oct.labels(), {}};
        for (const Simplex& e : oct.faces(1)) g.edges.emplace_back(oct.label(e[0]), oct.label(e[1]));
        const std::size_t extra = uniform_below(rng, std::min<std::size_t>(cap - 6, 2) + 1);
        for (std::size_t i = 0; i < extra; ++i) {
            const std::string name = "x" + std::to_string(i);
            for (const auto& v : std::vector<std::string>(g.vertices)) {
                if (uniform01(rng) < 0.4) g.edges.emplace_back(name, v);
            }
            g.vertices.push_back(name);
        }
        return flag_completion(g);
    }
    default: break;
    }
    const std::size_t n = 4 + uniform_below(rng, cap - 3);
    return generate("cycle(" + std::to_string(n) + ")");
}

std::vector<Gf2Cycle> candidate_cycles(const SimplicialComplex& l, int k, int max_combination)
{
    const auto basis = gf2_cycle_basis(l, k);
    std::vector<Gf2Cycle> out(basis.begin(), basis.end());
    if (max_combination >= 2) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) out.push_back(basis[i] + basis[j]);
        }
    }
    return out;
}

std::string simplex_text(const SimplicialComplex& k, const Simplex& s)
{
    std::string t = "[";
    for (VertexRank r : s) t += (t.size() > 1 ? "," : "") + k.label(r);
    return t + "]";
}

std::string cell_text(const SimplicialComplex& ol, const ConfigCell& c)
{
    return "{" + simplex_text(ol, c.first) + " " + simplex_text(ol, c.second) + "}";
}

}  // namespace

SimplicialComplex random_lemma_complex(std::mt19937_64& rng, std::size_t max_vertices)
{
    while (true) {
        SimplicialComplex l = candidate(rng, max_vertices);
        if (l.num_vertices() > max_vertices || l.dim() < 1 || l.dim() > 2) continue;
        if (gf2_cycle_basis(l, l.dim()).empty()) continue;
        return shuffled(l, rng);
    }
}

std::optional<LemmaFailure> check_lemmas(const SimplicialComplex& l, const LemmaSuiteOptions& options,
                                         LemmaCounters* counters)
{
    LemmaCounters local;
    LemmaCounters& n = counters ? *counters : local;
    auto fail = [&](const char* lemma, std::string detail) {
        return std::optional<LemmaFailure>(LemmaFailure{lemma, 0, l, std::move(detail)});
    };
    const int k = l.dim();
    if (k < 0) return std::nullopt;
    const OctaComplex ol = octahedralize(l);
    const auto& tops = ol.complex().faces(k);

    for (const Simplex& a : tops) {
        for (const Simplex& b : tops) {
            if (a == b || !a.disjoint_from(b)) continue;
            const ProductChain pushed = push_ordered(a, b, options.inject_sign_bug);
            ++n.pullback_cells;
            if (nu(a, b, k).value != evaluate_mu(pushed, k)) {
                return fail("pullback", "nu != mu o s on " + cell_text(ol.complex(), ConfigCell{a, b}));
            }
            // [a, b] = sign * canonical, so s of the library must agree.
            const auto sc = canonical_cell(a, b);
            if (!options.inject_sign_bug && evaluate_mu(s_push({{sc.cell, sc.sign}}), k) != evaluate_mu(pushed, k)) {
                return fail("pullback", "s disagrees between representatives of " + cell_text(ol.complex(), sc.cell));
            }
        }
    }

    for (const Gf2Cycle& m : candidate_cycles(l, k, options.max_combination)) {
        if (m.simplices.empty()) continue;
        for (const Simplex& delta : m.simplices) {
            ++n.pairs;
            const ConfigChain omega = build_omega(m, delta);
            const ProductChain target = octa_delta_times_cycle(delta, m);
            if (reduce_mod2(push_forward(omega, options.inject_sign_bug)) != target) {
                return fail("pushforward", "s(Omega) != O(delta) x M for delta = " + simplex_text(l, delta));
            }
            if (evaluate_mu(target, k) % 2 == 0) {
                return fail("mu-evaluation", "mu(O(delta) x M) = 0 for delta = " + simplex_text(l, delta));
            }
            if (check_star_condition(m, delta).holds) {
                ++n.star_pairs;
                const ConfigChain bd = reduce_mod2(boundary(omega));
                if (!bd.empty()) {
                    return fail("cycle", "star condition holds but the boundary of Omega contains " +
                                             cell_text(ol.complex(), bd.begin()->first));
                }
            }
        }
    }

    for (const auto& [cell, value] : moment_curve_oracle(l, k)) {
        ++n.oracle_cells;
        if (value != nu(cell, k).value) return fail("moment-curve", "oracle differs from nu on a top cell");
    }
    return std::nullopt;
}

LemmaFailure minimize(LemmaFailure failure, const LemmaSuiteOptions& options)
{
    auto still_fails = [&](const SimplicialComplex& c) {
        auto f = check_lemmas(c, options);
        return f && f->lemma == failure.lemma ? f : std::nullopt;
    };
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        const SimplicialComplex cur = failure.complex;
        const auto maximal = cur.maximal_faces();
        for (std::size_t i = 0; i < maximal.size() && !shrunk; ++i) {
            std::vector<Simplex> rest;
            for (std::size_t j = 0; j < maximal.size(); ++j) {
                if (j != i) rest.push_back(maximal[j]);
            }
            SimplicialComplex smaller(cur.labels(), rest);
            if (smaller.face_count() >= cur.face_count()) continue;
            if (auto f = still_fails(smaller)) {
                failure.complex = std::move(smaller);
                failure.detail = f->detail;
                shrunk = true;
            }
        }
        for (VertexRank v = 0; v < cur.num_vertices() && !shrunk && cur.num_vertices() > 1; ++v) {
            std::vector<VertexRank> keep;
            for (VertexRank u = 0; u < cur.num_vertices(); ++u) {
                if (u != v) keep.push_back(u);
            }
            SimplicialComplex smaller = full_subcomplex(cur, keep);
            if (auto f = still_fails(smaller)) {
                failure.complex = std::move(smaller);
                failure.detail = f->detail;
                shrunk = true;
            }
        }
    }
    return failure;
}

LemmaSuiteResult run_lemma_suite(const LemmaSuiteOptions& options)
{
    LemmaSuiteResult result;
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.count; ++i) {
        const SimplicialComplex l = random_lemma_complex(rng, options.max_vertices);
        ++result.complexes;
        if (auto f = check_lemmas(l, options, &result.counters)) {
            f->sample = i;
            result.failure = minimize(std::move(*f), options);
            break;
        }
    }
    return result;
}

}  // namespace vkdim::tools
