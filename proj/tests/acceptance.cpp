// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lemma_suite.hpp"
#include "oracles.hpp"
#include "vkdim/bounds.hpp"
#include "vkdim/homology.hpp"
#include "vkdim/moment_curve.hpp"
#include "vkdim/obstruction.hpp"
#include "zoo.hpp"

using namespace vkdim;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict four_cycle()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = analyze(tools::generate("cycle(4)"));
    const double t = seconds_since(t0);
    v.require(r.actdim && *r.actdim == Interval{4, 4}, "actdim exactly 4");
    v.require(r.vkdim_ol == Interval{2, 2}, "vkdim(OL) = 2");
    v.require(r.gd == 2, "gd = 2");
    v.require(r.l2dim == 2, "l2dim = 2");
    v.require(r.conjecture == ConjectureStatus::verified, "conjecture verified");
    v.require(t < 1.0, "runtime under 1 s");
    v.detail << "actdim " << (r.actdim ? describe(*r.actdim) : "absent") << ", vkdim " << describe(r.vkdim_ol)
             << ", gd " << r.gd << ", l2dim " << r.l2dim.value_or(-1) << ", conjecture " << to_string(r.conjecture)
             << ", " << t << " s";
    return v;
}

Verdict octahedron()
{
    Verdict v;
    const auto l = tools::generate("join(points(2), points(2), points(2))");
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = analyze(l);
    const double t = seconds_since(t0);
    const std::size_t top_cells = ConfigurationSpace(octahedralize(l).complex(), 4, 4).cells(4).size();
    v.require(r.actdim && *r.actdim == Interval{6, 6}, "actdim exactly 6");
    v.require(r.gd == 3, "gd = 3");
    v.require(r.certificate && r.certificate->cycle.simplices == l.faces(2), "M is the whole 2-sphere");
    v.require(r.certificate && verify_certificate(l, *r.certificate).passed, "certificate re-verifies");
    v.require(t < 60.0, "runtime under 60 s");
    v.detail << "actdim " << (r.actdim ? describe(*r.actdim) : "absent") << " = 2 gd, M has "
             << (r.certificate ? r.certificate->cycle.simplices.size() : 0) << " of 8 triangles, C(OL) has "
             << top_cells << " top cells, " << t << " s";
    return v;
}

Verdict vanishing_half()
{
    Verdict v;
    for (const char* e : {"path(3)", "path(4)", "tree(6, 1)", "simplex(2)"}) {
        const auto l = tools::generate(e);
        const int k = l.dim();
        const bool vanishes = certify_vanishing(l).has_value();
        const auto r = analyze(l);
        const bool bound = r.actdim_with_caveats && r.actdim_with_caveats->upper <= 2 * k + 1;
        v.require(vanishes, std::string(e) + " vanishing");
        v.require(bound, std::string(e) + " actdim <= 2k+1");
        v.detail << e << ": nu2 coboundary " << (vanishes ? "yes" : "no") << ", actdim "
                 << describe(*r.actdim_with_caveats);
        if (!(*r.actdim == *r.actdim_with_caveats)) v.detail << " (certified " << describe(*r.actdim) << ")";
        if (k == 1) {
            const auto g = oracle::one_skeleton(octahedralize(l).complex());
            const bool rot = oracle::planar_by_rotations(g);
            const bool bm = oracle::planar_by_boyer_myrvold(g);
            v.require(rot && bm, std::string(e) + " OL planar");
            v.detail << ", OL planar (rotations " << rot << ", Boyer-Myrvold " << bm << ")";
        }
        v.detail << "; ";
    }
    return v;
}

Verdict lemma_suite()
{
    Verdict v;
    tools::LemmaSuiteOptions opt;
    opt.seed = 0;
    opt.count = 50;
    const auto r = tools::run_lemma_suite(opt);
    v.require(r.complexes >= 50, "at least 50 complexes");
    v.require(r.passed(), "zero failures");
    v.detail << r.complexes << " complexes, " << r.counters.pullback_cells << " pullback cells, "
             << r.counters.pairs << " (M, delta) pairs, " << r.counters.star_pairs << " under the star condition";
    if (r.failure) v.detail << ", first failure " << r.failure->lemma << ": " << r.failure->detail;
    return v;
}

Verdict moment_curve()
{
    Verdict v;
    std::size_t cells = 0;
    std::size_t agree = 0;
    auto check = [&](const SimplicialComplex& k) {
        for (const auto& [cell, value] : moment_curve_oracle(k, k.dim())) {
            ++cells;
            agree += value == nu(cell, k.dim()).value ? 1 : 0;
        }
    };
    // Every pair of disjoint k-simplices on at most 9 ordered points.
    for (int k = 0; k <= 2; ++k) check(skeleton(tools::generate("simplex(8)"), k));
    std::mt19937_64 rng(0);
    for (int i = 0; i < 50; ++i) check(tools::random_lemma_complex(rng, 9));
    v.require(cells > 0 && agree == cells, "agreement on every top cell");
    v.detail << agree << "/" << cells << " top cells agree after calibration (signs "
             << moment_curve_calibration(0) << "," << moment_curve_calibration(1) << ","
             << moment_curve_calibration(2) << ")";
    return v;
}

Verdict mutual_exclusion()
{
    Verdict v;
    std::size_t entries = 0;
    std::size_t certified = 0;
    for (const auto& entry : tools::zoo_catalog()) {
        const auto l = tools::generate(entry.expression);
        const int k = l.dim();
        bool vanishes = false;
        try {
            vanishes = certify_vanishing(l).has_value();
        } catch (const BudgetExceeded&) {
        }
        const bool cert = certify_nonvanishing(l, k).has_value();
        ++entries;
        certified += cert ? 1 : 0;
        v.require(!(vanishes && cert), entry.expression + " both succeed");
        if (entry.flag && mod2_betti(l).back() != 0) v.require(cert, entry.expression + " certificate found");
    }
    v.detail << entries << " zoo entries, " << certified << " with a top certificate, none also vanishing";
    return v;
}

Verdict star_failure()
{
    Verdict v;
    // Bounded search: every 2-complex on four vertices spanned by a set of triangles.
    const std::vector<std::vector<std::string>> triangles{{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}};
    std::vector<SimplicialComplex> candidates;
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<std::vector<std::string>> chosen;
        for (unsigned i = 0; i < 4; ++i) {
            if (mask >> i & 1U) chosen.push_back(triangles[i]);
        }
        candidates.push_back(SimplicialComplex::from_maximal_simplices(chosen, {"a", "b", "c", "d"}));
    }
    const auto ex = find_star_failure(candidates, 2);
    v.require(ex.has_value(), "exhibit found");
    if (ex) {
        const auto bd = reduce_mod2(boundary(build_omega(ex->cycle, ex->delta)));
        v.require(!check_star_condition(ex->cycle, ex->delta).holds, "star condition violated");
        v.require(bd.contains(ex->nonzero_boundary_cell), "reported cell is in the boundary");
        const auto& c = ex->complex;
        auto names = [&](const Simplex& s) {
            std::string out = "{";
            for (VertexRank r : s) out += c.label(r);
            return out + "}";
        };
        auto octa = [&](const Simplex& s) {
            std::string out = "{";
            for (VertexRank r : s) out += c.label(r / 2) + ((r & 1U) ? "+" : "-");
            return out + "}";
        };
        v.detail << "M = " << ex->cycle.simplices.size() << " triangles, delta " << names(ex->delta)
                 << ", violating pair " << names(ex->violation.first) << " " << names(ex->violation.second)
                 << ", boundary of Omega has " << bd.size() << " cells, e.g. ["
                 << octa(ex->nonzero_boundary_cell.first) << ", " << octa(ex->nonzero_boundary_cell.second) << "]";
    }
    return v;
}

Verdict join_lemma()
{
    Verdict v;
    AnalysisOptions opt;
    opt.vanishing.max_cells = 50'000;
    const std::vector<std::string> factors{"points(2)", "points(3)", "cycle(4)", "cycle(5)", "simplex(1)", "path(3)"};
    std::size_t tested = 0;
    std::size_t exact = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i; j < factors.size(); ++j) {
            const auto a = tools::generate(factors[i]);
            const auto b = tools::generate(factors[j]);
            bool ca = false;
            bool cb = false;
            for (int l = 0; l <= a.dim(); ++l) ca = ca || certify_nonvanishing(a, l).has_value();
            for (int l = 0; l <= b.dim(); ++l) cb = cb || certify_nonvanishing(b, l).has_value();
            if (!ca || !cb) continue;
            const std::string expr = "join(" + factors[i] + ", " + factors[j] + ")";
            const Interval ia = vkdim_interval(a, opt);
            const Interval ib = vkdim_interval(b, opt);
            const Interval ij = vkdim_interval(tools::generate(expr), opt);
            ++tested;
            v.require(ij.lower >= ia.lower + ib.lower + 2, expr + " lower bound");
            if (ia.exact() && ib.exact() && ij.exact()) {
                ++exact;
                v.require(ij.lower == ia.lower + ib.lower + 2, expr + " equality");
            }
        }
    }
    v.require(tested > 0, "some pair tested");
    v.detail << tested << " join pairs with certified factors, " << exact << " fully determined and equal";
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"C4 end-to-end", four_cycle},
        {"octahedron boundary", octahedron},
        {"vanishing half", vanishing_half},
        {"lemma suite", lemma_suite},
        {"moment-curve oracle", moment_curve},
        {"mutual exclusion", mutual_exclusion},
        {"star-condition failure exhibit", star_failure},
        {"join lemma consistency", join_lemma},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << "exception: " << e.what();
        }
        failures += v.pass ? 0 : 1;
        std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", index++, name.c_str(), v.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
