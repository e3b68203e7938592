#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vkdim/config_space.hpp"
#include "vkdim/homology.hpp"
#include "vkdim/octa.hpp"

namespace vkdim {

/// Raised when a computation would exceed its configured cell budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MeshKind { strict, swapped, none };

struct MeshVerdict {
    int value = 0;  // +1, (-1)^k or 0
    MeshKind kind = MeshKind::none;
};

/// The van Kampen cocycle on the oriented top cell [sigma, tau].
///
/// With sigma = [v0..vk] and tau = [w0..wk] in increasing rank order:
/// +1 if v0 < w0 < ... < vk < wk, (-1)^k if w0 < v0 < ... < wk < vk, else 0.
/// Throws std::invalid_argument unless both simplices have dimension k.
MeshVerdict nu(const Simplex& sigma, const Simplex& tau, int k);
MeshVerdict nu(const ConfigCell& cell, int k);
/// Mod-2 reduction of nu; independent of the orientation of the cell.
int nu2(const ConfigCell& cell, int k);

/// Nonstrict meshing cocycle on OL x L, with L embedded as the minus copy.
///
/// sigma is a k-simplex of OL; b a k-simplex of OL with every vertex signed
/// minus (otherwise std::invalid_argument). Returns 1 when
/// v0 <= w0 < v1 <= w1 < ... < vk <= wk in the interleaved order of OL.
int mu(const Simplex& sigma, const Simplex& b, int k);

/// s[sigma, tau] = (sigma, p(tau)) + (-1)^(dim sigma dim tau) (tau, p(sigma)),
/// with p(.) realised in the minus copy so every cell stays in OL ranks.
ProductChain s_push(const ConfigChain& chain);

long long evaluate_nu(const ConfigChain& chain, int k);
int evaluate_nu2(const ConfigChain& chain, int k);
long long evaluate_mu(const ProductChain& chain, int k);

/// The product chain O(delta) x M over Z/2, second factor in the minus copy.
ProductChain octa_delta_times_cycle(const Simplex& delta, const Gf2Cycle& m);

/// Omega: the 2k-cells [sigma, tau] of C(D) whose projections jointly cover
/// the vertices of delta. sigma and tau range over the top simplices of D
/// lying over M (D may hold further simplices over L - M; those are not
/// used). Empty when M is empty.
ConfigChain build_omega(const Gf2Cycle& m, const Simplex& delta);

struct StarConditionReport {
    bool holds = true;
    /// (sigma, tau) in M with delta's vertices in sigma u tau but sigma n tau not in delta.
    std::optional<std::pair<Simplex, Simplex>> violation;
};

StarConditionReport check_star_condition(const Gf2Cycle& m, const Simplex& delta);

/// Witness that vk^{2k}_{Z/2}(OL) is nonzero: nu2 evaluates to 1 on the cycle Omega.
struct CycleCertificate {
    int degree = 0;  // k; the obstruction lives in degree 2k
    Gf2Cycle cycle;
    Simplex delta;
    DoubledComplex doubled;
    ConfigChain omega;
    bool star_condition = false;
    int evaluation = 0;
};

struct SearchOptions {
    /// Largest number of basis cycles summed into a candidate M.
    int max_combination = 2;
    /// Cap on the number of (M, delta) pairs examined.
    std::size_t max_candidates = 100000;
};

/// Searches Z_k(L^(k); Z/2) for (M, delta) satisfying the star condition and
/// returns the re-verified certificate, or nullopt when none is found. A miss
/// is not a proof of vanishing.
std::optional<CycleCertificate> certify_nonvanishing(const SimplicialComplex& l, int k,
                                                     const SearchOptions& options = {});

struct VanishingOptions {
    bool integral = false;
    std::size_t max_cells = 1'000'000;
};

/// Witness that nu2 is a coboundary on C(OL) in the top degree 2k.
struct VanishingWitness {
    int degree = 0;  // 2k
    /// Cells carrying the primitive (the (2k-1)-cells of C(OL)).
    std::vector<ConfigCell> domain;
    std::vector<long long> primitive;
    /// Set when the integral cocycle nu was also tested.
    std::optional<bool> integral_vanishes;
};

/// Solves coboundary(x) = nu2 on C(OL), k = dim L. Throws BudgetExceeded
/// when C(OL) would exceed `max_cells` cells in degrees 2k-1 and 2k.
///
/// In degree 0 the obstruction vanishes exactly when OL has two vertices
/// (two points embed in S^0); the primitive is then the augmentation value.
std::optional<VanishingWitness> certify_vanishing(const SimplicialComplex& l,
                                                  const VanishingOptions& options = {});

/// Outcome of re-checking a certificate from scratch.
struct VerificationResult {
    bool passed = false;
    /// Name of the first failing check, empty on success.
    std::string failed_check;
    std::string detail;
};

/// Re-checks a certificate against L: the cycle and delta preconditions, that
/// Omega is a cycle, that nu2(Omega) = 1, nu = mu o s on every cell of Omega,
/// s(Omega) = O(delta) x M, mu(O(delta) x M) = 1, the recorded star
/// condition, and that Omega is the chain determined by (M, delta).
VerificationResult verify_certificate(const SimplicialComplex& l, const CycleCertificate& cert);

/// A (M, delta) whose Omega is not a cycle, with one offending boundary cell.
struct StarFailureExhibit {
    SimplicialComplex complex;
    Gf2Cycle cycle;
    Simplex delta;
    std::pair<Simplex, Simplex> violation;
    ConfigCell nonzero_boundary_cell;
};

/// Scans every mod-2 cycle-basis element of `candidates` in degree `k`, and
/// every simplex delta of it, for a star-condition violation with a nonzero
/// boundary of Omega.
std::optional<StarFailureExhibit> find_star_failure(const std::vector<SimplicialComplex>& candidates, int k);

}  // namespace vkdim
