#pragma once

#include <optional>
#include <vector>

#include "tsirnorm/engine.hpp"
#include "tsirnorm/finvec.hpp"
#include "tsirnorm/space.hpp"
#include "tsirnorm/weights.hpp"

namespace tsir::checks {

/// Vectors with pairwise disjoint supports, all starting at or after
/// start_bound, with at most start_bound of them — so the supports form an
/// S_1-allowable family.
struct DisjointSample {
    std::vector<FinVec> vectors;
    int start_bound = 1;
};

/// Throws Error::input when the sample violates its invariants.
void validate_sample(const DisjointSample& sample);

struct L1LowerReport {
    Rational lhs;       // ‖Σ x_i‖ in the Σ-sum space
    Rational rhs;       // θ_1·ℓ·Σ ‖x_i‖
    Rational theta1;
    Rational ell;       // lower ratio bound of α
    bool holds = false; // lhs >= rhs; expected always true
};

/// The asymptotic-ℓ_1 lower bound for Σ-sums over mixed-law iterates:
/// ‖Σ x_i‖ ≥ θ_1·ℓ·Σ ‖x_i‖ on disjoint samples. The chain is valid
/// line-by-line with the lower ratio bound ℓ of α (not the upper one).
L1LowerReport check_asymptotic_l1_lower(const SpaceConfig& space, const DisjointSample& sample,
                                        const EngineOptions& opts = {});

struct TwoConvexTransferReport {
    Rational constant;     // sample constant C used for the lower inequality
    Rational sum_sq;       // Σ ‖y_i²‖  (= Σ ‖y_i‖²_{(2)})
    Rational combined_sq;  // ‖Σ y_i²‖ (= ‖Σ y_i‖²_{(2)})
    Rational best_constant;  // measured ratio combined/sum
    bool lower_holds = false;  // C·Σ‖y_i²‖ ≤ ‖Σ y_i²‖
    bool upper_holds = false;  // ‖Σ y_i²‖ ≤ Σ‖y_i²‖
};

/// The squared form of the 2-convexification transfer: if the inner space is
/// asymptotically ℓ_1 for disjoint supports with constant C, then on every
/// S_1-allowable sample C·Σ‖y_i²‖ ≤ ‖Σ y_i²‖ ≤ Σ‖y_i²‖. C is derived from
/// the law (θ_1 for mixed laws, θ_1·ℓ for Σ-sums over iterates, ℓ for
/// Σ(α_n|·|_n)) and the achieved ratio is reported alongside.
TwoConvexTransferReport check_two_convex_transfer(const SpaceConfig& inner,
                                                  const DisjointSample& sample,
                                                  const EngineOptions& opts = {});

struct L1Window {
    int p = 0;
    int q = 0;
    Rational mass;
};

/// Profile of a Σ-sum norm: the exact per-iterate masses α_m·‖v‖_{inner,m}.
struct MassProfile {
    std::vector<std::pair<int, Rational>> terms;  // m -> α_m·v_m, m = 1..m*
    Rational tail;                                // Σ_{m>m*} α_m · v_{m*}
    Rational total;                               // equals eval_sigma(v) exactly
};

MassProfile mass_profile(const FinVec& v, const SpaceConfig& space,
                         const EngineOptions& opts = {});

/// Least window [p,q] of iterate indices, p ≥ m_floor, whose profile mass
/// reaches the threshold — minimal q first, then maximal p. Returns nullopt
/// when no finite window suffices (every finite window stays strictly below
/// the remaining total). Requires v exactly normalized in the space.
std::optional<L1Window> find_l1_window(const FinVec& v, const SpaceConfig& space,
                                       const Rational& threshold = Rational(1, 2),
                                       int m_floor = 1, const EngineOptions& opts = {});

struct C0Witness {
    std::vector<FinVec> blocks;  // successive, each exactly normalized in ‖·‖_{V,m}
    Rational low_value;          // ‖Σ y_i‖_{V,m}, reported as measured
    Rational high_value;         // ‖Σ y_i‖_{V,m+1}, asserted ≥ θ_1·n
};

/// Successive blocks after position n, normalized at iterate m, whose sum
/// jumps between consecutive iterates: high_value ≥ θ_1·n·min_i ‖y_i‖_{V,m}
/// is asserted (it follows from S_1-allowability of the supports); the low
/// value is reported, not asserted. m = 0 uses unit vectors; m ≥ 1 uses flat
/// blocks on doubling windows.
C0Witness c0_block_witness(const WeightSeq& theta, int m, int n,
                           const EngineOptions& opts = {});

struct RepeatedAverage {
    FinVec vec;       // probability vector on a maximal S_n set starting at `start`
    Rational t_norm;  // exact T(δ,S_1) norm, for comparison with δ^n
};

/// The standard repeated-averages recursion: level 0 is a point mass; level
/// n+1 uniformly averages level-n averages over the maximal admissible
/// decomposition. Coefficients sum to 1 exactly.
RepeatedAverage repeated_average_squares(int n, int start, const Rational& delta,
                                         const EngineOptions& opts = {});

struct NonisoStep {
    int n = 0;
    Rational theta_n;
    Rational rhs_lower_sq;  // exact bracket of (C²(K√(δⁿ+ε)+ε))²
    Rational rhs_upper_sq;
    bool fails = false;     // θ_n > rhs², i.e. √θ_n ≤ C²(K(δⁿ+ε)^{1/2}+ε) fails
};

struct NonisoScanResult {
    std::optional<int> first_failing;
    std::vector<NonisoStep> steps;
};

/// Scans √θ_n ≤ C²(K(δⁿ+ε)^{1/2}+ε) in squared form with exact rational
/// interval bounds on the inner square root (refined below ε/100, with an
/// exact algebraic tie-break). Returns the least failing n, or none.
NonisoScanResult noniso_inequality_scan(const WeightSeq& theta, const Rational& delta,
                                        const Rational& C, const Rational& K,
                                        const Rational& eps, int n_max);

struct FastGrowingOptions {
    long long value_cap = 100'000'000;     // magnitude cap on every intermediate
    long long step_budget = 300'000'000;   // total applications of g_0
};

/// The fast-growing hierarchy g_0(n) = n+1, g_{i+1}(n) = g_i^n(n), computed
/// by honest iteration. Throws Error::overflow naming the first exceeding
/// intermediate (or the call that exhausts the step budget).
long long fast_growing(int i, long long n, const FastGrowingOptions& opts = {});

}  // namespace tsir::checks
