#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkdim/complex.hpp"
#include "vkdim/obstruction.hpp"

namespace vkdim {

struct Interval {
    int lower = 0;
    int upper = 0;

    bool exact() const { return lower == upper; }
    bool contains(int v) const { return lower <= v && v <= upper; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class BoundKind { lower, upper, exact };

/// One inequality contributed to the report, with the rule that produced it.
/// A bound with caveats rests on a hypothesis the tool could not check.
struct BoundRecord {
    std::string quantity;
    BoundKind kind = BoundKind::lower;
    int value = 0;
    std::string rule;
    std::string citation;
    std::vector<std::string> caveats;

    bool certified() const { return caveats.empty(); }
};

enum class ConjectureStatus { verified, open_here, vacuous };

namespace quantity {
inline constexpr const char* gd = "gd(A_L)";
inline constexpr const char* l2dim = "l2dim(A_L)";
inline constexpr const char* vkdim = "vkdim(OL)";
inline constexpr const char* embdim = "embdim(OL)";
inline constexpr const char* actdim = "actdim(A_L)";
}  // namespace quantity

namespace caveat {
inline constexpr const char* mod2_only = "mod-2 vanishing only; integral obstruction not checked";
inline constexpr const char* vk_incomplete = "van Kampen obstruction is incomplete for dim 2";
inline constexpr const char* codimension = "codimension hypothesis embdim(OL) > dim L + 2 unverified";
}  // namespace caveat

struct AnalysisOptions {
    SearchOptions search;
    VanishingOptions vanishing;
    /// Depth of the star/link recursion.
    int link_depth = 3;
};

struct DimensionReport {
    std::size_t vertices = 0;
    int dim = -1;
    bool flag = true;

    int gd = 0;
    std::optional<int> l2dim;
    std::vector<std::size_t> mod2_betti;
    std::vector<std::size_t> rational_reduced_betti;

    Interval vkdim_ol;
    /// Certified bounds only.
    Interval embdim_ol;
    /// Also using bounds that carry caveats.
    Interval embdim_ol_with_caveats;
    /// Absent for non-flag input.
    std::optional<Interval> actdim;
    std::optional<Interval> actdim_with_caveats;

    ConjectureStatus conjecture = ConjectureStatus::open_here;
    std::vector<BoundRecord> provenance;
    std::vector<std::string> warnings;

    /// Certificate for the top degree, when found.
    std::optional<CycleCertificate> certificate;
    /// Degrees l with a certificate for vk^{2l}(OL) != 0.
    std::vector<int> certified_degrees;
    /// Whether nu2 is a coboundary in the top degree; nullopt when the solve was skipped.
    std::optional<bool> vanishing;
    std::optional<bool> integral_vanishing;

    /// True when every reported interval is a single value.
    bool determined() const;
};

/// dim L + 1 for nonempty L, 0 for the empty complex (A_L trivial).
int geometric_dimension(const SimplicialComplex& l);

/// 1 + max{i : reduced rational b_i(L) != 0}, or nullopt when all vanish.
std::optional<int> l2_dimension(const SimplicialComplex& l);

/// vkdim(K1 * K2) = vkdim(K1) + vkdim(K2) + 2 applied to intervals.
Interval join_lemma_bound(const Interval& a, const Interval& b);

/// Lower bound on vkdim(OL) read off the closed star of v: a certified lower
/// bound c on vkdim(O Lk(v)) gives vkdim(OL) >= c + 1. nullopt when the link
/// yields no certified bound. Throws std::out_of_range for an unknown vertex.
std::optional<int> star_link_bound(const SimplicialComplex& l, VertexRank v, int depth = 3,
                                   const SearchOptions& search = {});

/// Certified interval for vkdim(OK) from certificates in every degree, the
/// top-degree vanishing solve and the star/link rule. Appends the bounds used
/// to `records` when given.
Interval vkdim_interval(const SimplicialComplex& k, const AnalysisOptions& options = {},
                        std::vector<BoundRecord>* records = nullptr);

/// Full report. Throws ComplexError for the empty complex.
DimensionReport analyze(const SimplicialComplex& l, const AnalysisOptions& options = {});

std::string to_string(BoundKind kind);
std::string to_string(ConjectureStatus status);
/// "exact v" or "undetermined in [a,b]".
std::string describe(const Interval& interval);

}  // namespace vkdim
