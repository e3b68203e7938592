#include "vkdim/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "vkdim/homology.hpp"

namespace vkdim {

namespace {

const char* const kNonvanishingCite =
    "a mod-2 k-cycle M with a simplex delta satisfying the star condition gives vk^{2k}(OL) != 0";
const char* const kVanishingCite = "nu2 is a coboundary on C(OL), so vk^{2k}(OL) = 0 mod 2";
const char* const kStarLinkCite = "vkdim(O St(v)) = vkdim(O Lk(v)) + 1 by the Join Lemma, and O St(v) lies in OL";

struct VkAnalysis {
    Interval interval;
    std::optional<CycleCertificate> top;
    std::vector<int> degrees;
    std::optional<bool> vanishing;
    std::optional<bool> integral_vanishing;
};

bool is_single_simplex(const SimplicialComplex& k) { return k.maximal_faces().size() == 1; }

void add(std::vector<BoundRecord>* records, BoundRecord r)
{
    if (records) records->push_back(std::move(r));
}

int certified_lower(const SimplicialComplex& k, const SearchOptions& search, int depth,
                    std::vector<BoundRecord>* records, std::optional<CycleCertificate>* top,
                    std::vector<int>* degrees)
{
    int lower = -1;
    for (int l = 0; l <= k.dim(); ++l) {
        auto cert = certify_nonvanishing(k, l, search);
        if (!cert) continue;
        lower = std::max(lower, 2 * l);
        if (degrees) degrees->push_back(l);
        add(records, {quantity::vkdim, BoundKind::lower, 2 * l, "nonvanishing-certificate (degree " +
                          std::to_string(l) + ")", kNonvanishingCite, {}});
        if (l == k.dim() && top) *top = std::move(cert);
    }
    if (depth > 0) {
        for (VertexRank v = 0; v < k.num_vertices(); ++v) {
            auto b = star_link_bound(k, v, depth, search);
            if (!b || *b <= lower) continue;
            lower = *b;
            add(records, {quantity::vkdim, BoundKind::lower, *b, "star-link at vertex " + k.label(v),
                          kStarLinkCite, {}});
        }
    }
    return lower;
}

VkAnalysis analyze_vkdim(const SimplicialComplex& k, const AnalysisOptions& options,
                         std::vector<BoundRecord>* records, std::vector<std::string>* warnings)
{
    VkAnalysis out;
    const int n = k.dim();
    add(records, {quantity::vkdim, BoundKind::lower, -1, "trivial",
                  "vkdim of a nonempty complex is at least -1 (vkdim S^0 = -1)", {}});
    add(records, {quantity::vkdim, BoundKind::upper, 2 * n, "cell-dimension",
                  "C(OL) has dimension 2 dim L, so vk^m(OL) = 0 for m > 2 dim L", {}});
    out.interval = {certified_lower(k, options.search, options.link_depth, records, &out.top, &out.degrees),
                    2 * n};
    // O(sigma) is the octahedral sphere S^{dim sigma}, and vkdim S^d = d - 1 is taken as given.
    if (n - 1 > out.interval.lower) {
        out.interval.lower = n - 1;
        add(records, {quantity::vkdim, BoundKind::lower, n - 1, "octahedral-sphere",
                      "O(sigma) = S^{dim sigma} lies in OL and vkdim S^d = d - 1", {}});
    }
    if (is_single_simplex(k)) {
        out.interval.upper = n - 1;
        add(records, {quantity::vkdim, BoundKind::upper, n - 1, "octahedral-sphere",
                      "OL = S^{dim L} when L is a simplex, and vkdim S^d = d - 1", {}});
    }
    try {
        auto w = certify_vanishing(k, options.vanishing);
        out.vanishing = w.has_value();
        if (w) {
            out.integral_vanishing = w->integral_vanishes;
            out.interval.upper = std::min(out.interval.upper, 2 * n - 1);
            add(records, {quantity::vkdim, BoundKind::upper, 2 * n - 1, "vanishing-coboundary", kVanishingCite, {}});
        }
    } catch (const BudgetExceeded& e) {
        if (warnings) warnings->push_back(std::string("vanishing solve skipped: ") + e.what());
    }
    if (out.interval.lower > out.interval.upper) {
        throw std::logic_error("inconsistent vkdim bounds: certificate and vanishing both hold");
    }
    return out;
}

}  // namespace

bool DimensionReport::determined() const
{
    return vkdim_ol.exact() && embdim_ol.exact() && (!actdim || actdim->exact());
}

int geometric_dimension(const SimplicialComplex& l) { return l.empty() ? 0 : l.dim() + 1; }

std::optional<int> l2_dimension(const SimplicialComplex& l)
{
    const auto b = rational_betti(l, true);
    for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
        if (b[static_cast<std::size_t>(i)] != 0) return i + 1;
    }
    return std::nullopt;
}

Interval join_lemma_bound(const Interval& a, const Interval& b)
{
    return {a.lower + b.lower + 2, a.upper + b.upper + 2};
}

std::optional<int> star_link_bound(const SimplicialComplex& l, VertexRank v, int depth, const SearchOptions& search)
{
    if (v >= l.num_vertices()) throw std::out_of_range("vertex rank out of range");
    if (depth <= 0) return std::nullopt;
    const SimplicialComplex lk = link(l, Simplex{v});
    if (lk.empty()) return std::nullopt;
    const int c = certified_lower(lk, search, depth - 1, nullptr, nullptr, nullptr);
    if (c < 0) return std::nullopt;
    return c + 1;
}

Interval vkdim_interval(const SimplicialComplex& k, const AnalysisOptions& options, std::vector<BoundRecord>* records)
{
    if (k.empty()) throw ComplexError("empty complex");
    return analyze_vkdim(k, options, records, nullptr).interval;
}

DimensionReport analyze(const SimplicialComplex& l, const AnalysisOptions& options)
{
    if (l.empty()) throw ComplexError("empty complex");
    DimensionReport r;
    r.vertices = l.num_vertices();
    r.dim = l.dim();
    r.flag = is_flag(l).is_flag();
    const int k = r.dim;

    // A_L only sees the 1-skeleton, so group invariants come from the flag completion.
    const SimplicialComplex group_complex = r.flag ? l : flag_completion(l);
    if (!r.flag) {
        r.warnings.push_back("input is not flag: actdim bounds omitted; gd and l2dim use the flag completion");
    }
    r.gd = geometric_dimension(group_complex);
    r.provenance.push_back({quantity::gd, BoundKind::exact, r.gd, "gd-formula",
                            "gd A_L = dim L + 1 for flag L (Salvetti complex)", {}});
    r.l2dim = l2_dimension(group_complex);
    r.mod2_betti = mod2_betti(l, true);
    r.rational_reduced_betti = rational_betti(l, true);
    if (r.l2dim) {
        r.provenance.push_back({quantity::l2dim, BoundKind::exact, *r.l2dim, "l2-betti-formula",
                                "l2dim A_L = 1 + max{i : reduced b_i(L) != 0}", {}});
    }

    VkAnalysis vk = analyze_vkdim(l, options, &r.provenance, &r.warnings);
    r.vkdim_ol = vk.interval;
    r.certificate = std::move(vk.top);
    r.certified_degrees = vk.degrees;
    r.vanishing = vk.vanishing;
    r.integral_vanishing = vk.integral_vanishing;
    if (!r.certificate && r.mod2_betti.size() > static_cast<std::size_t>(k) && k > 0 &&
        r.mod2_betti[static_cast<std::size_t>(k)] != 0) {
        r.warnings.push_back("top mod-2 homology is nonzero but no certificate was found; this does not show vkdim(OL) < 2k");
    }

    // embdim(OL)
    r.embdim_ol = {r.vkdim_ol.lower + 1, 2 * k + 1};
    r.provenance.push_back({quantity::embdim, BoundKind::lower, r.embdim_ol.lower, "vkdim-plus-one",
                            "vk^m(K) != 0 obstructs embedding K in S^m, so embdim >= vkdim + 1", {}});
    r.provenance.push_back({quantity::embdim, BoundKind::upper, 2 * k + 1, "general-position",
                            "every k-complex embeds in S^{2k+1}", {}});
    if (is_single_simplex(l)) {
        r.embdim_ol.upper = k;
        r.provenance.push_back({quantity::embdim, BoundKind::upper, k, "octahedral-sphere",
                                "OL = S^{dim L} when L is a simplex", {}});
    }
    r.embdim_ol_with_caveats = r.embdim_ol;

    std::vector<std::string> vanishing_caveats;
    const bool vanishing = r.vanishing.value_or(false);
    if (vanishing) {
        // Integral vanishing follows from H_k(L;Z/2) = 0 (k >= 1), or from the explicit integral solve.
        const bool hk_zero = k >= 1 && r.mod2_betti[static_cast<std::size_t>(k)] == 0;
        const bool integral = hk_zero || r.integral_vanishing.value_or(false) || k == 0;
        if (!integral) vanishing_caveats.push_back(caveat::mod2_only);
        if (k == 2) vanishing_caveats.push_back(caveat::vk_incomplete);
        const std::string cite = hk_zero
            ? "H_k(L;Z/2) = 0 gives vk^{2k}(OL) = 0, the complete obstruction to OL in S^{2k} for k != 2"
            : "vk^{2k}(OL) = 0 is the complete obstruction to embedding OL in S^{2k} for k != 2";
        r.provenance.push_back({quantity::embdim, BoundKind::upper, 2 * k, "vanishing-embedding", cite,
                                vanishing_caveats});
        if (vanishing_caveats.empty()) {
            r.embdim_ol.upper = std::min(r.embdim_ol.upper, 2 * k);
        }
        r.embdim_ol_with_caveats.upper = std::min(r.embdim_ol_with_caveats.upper, 2 * k);
    }

    if (r.flag) {
        Interval a{r.gd, 2 * r.gd};
        r.provenance.push_back({quantity::actdim, BoundKind::lower, r.gd, "free-action",
                                "a torsion-free group acts freely and properly on a manifold model of BG", {}});
        r.provenance.push_back({quantity::actdim, BoundKind::upper, 2 * r.gd, "double-gd",
                                "actdim G <= 2 gd G", {}});
        if (r.vkdim_ol.lower + 2 > a.lower) {
            a.lower = r.vkdim_ol.lower + 2;
            r.provenance.push_back({quantity::actdim, BoundKind::lower, a.lower, "obstructor",
                                    "actdim A_L >= vkdim(OL) + 2", {}});
        }
        if (is_single_simplex(l) && k + 1 < a.upper) {
            a.upper = k + 1;
            r.provenance.push_back({quantity::actdim, BoundKind::upper, k + 1, "flag-sphere",
                                    "OL is a full subcomplex of a flag triangulation of S^m (here OL = S^k itself), "
                                    "so actdim A_L <= m + 1",
                                    {}});
        }
        if (r.certificate) {
            r.provenance.push_back({quantity::actdim, BoundKind::exact, 2 * k + 2, "main-theorem-nonvanishing",
                                    "H_k(L;Z/2) != 0 with a certificate gives actdim A_L = 2k + 2 = 2 gd A_L", {}});
        }
        Interval with = a;
        if (vanishing) {
            auto caveats = vanishing_caveats;
            if (!(r.embdim_ol.lower > k + 2)) caveats.push_back(caveat::codimension);
            r.provenance.push_back({quantity::actdim, BoundKind::upper, 2 * k + 1, "vanishing-action",
                                    "embdim(OL) > dim L + 2 gives actdim A_L <= embdim(OL) + 1 <= 2k + 1",
                                    caveats});
            if (caveats.empty()) a.upper = std::min(a.upper, 2 * k + 1);
            with.upper = std::min(with.upper, 2 * k + 1);
        }
        if (a.lower > a.upper || with.lower > with.upper) {
            throw std::logic_error("inconsistent actdim bounds");
        }
        r.actdim = a;
        r.actdim_with_caveats = with;
    }

    if (!r.l2dim) {
        r.conjecture = ConjectureStatus::vacuous;
    } else if (r.actdim && r.actdim->lower >= 2 * *r.l2dim) {
        r.conjecture = ConjectureStatus::verified;
    } else {
        r.conjecture = ConjectureStatus::open_here;
    }
    return r;
}

std::string to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
    }
    return "?";
}

std::string to_string(ConjectureStatus status)
{
    switch (status) {
    case ConjectureStatus::verified: return "verified";
    case ConjectureStatus::open_here: return "open-here";
    case ConjectureStatus::vacuous: return "vacuous";
    }
    return "?";
}

std::string describe(const Interval& interval)
{
    if (interval.exact()) return "exact " + std::to_string(interval.lower);
    return "undetermined in [" + std::to_string(interval.lower) + "," + std::to_string(interval.upper) + "]";
}

}  // namespace vkdim
