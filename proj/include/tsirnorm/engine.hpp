#pragma once

#include <cstdint>

#include "tsirnorm/certificate.hpp"
#include "tsirnorm/finvec.hpp"
#include "tsirnorm/space.hpp"

namespace tsir {

struct EngineOptions {
    /// Hard cap on |supp(x)|; enumeration fails loudly instead of truncating.
    int max_support = 20;
};

struct EvalStats {
    long long nodes = 0;      // distinct (mask, m) subproblems evaluated
    long long memo_hits = 0;  // repeated lookups answered from the table
    long long families = 0;   // rule-conforming families fully scored

    void absorb(const EvalStats& o) {
        nodes += o.nodes;
        memo_hits += o.memo_hits;
        families += o.families;
    }
};

/// An exact norm value with its dual certificate. For squared-valued laws
/// (Edgington, 2-convexifications) `value` is the exact squared norm and only
/// display code takes the floating square root.
struct NormResult {
    Rational value;
    bool squared = false;
    Certificate certificate;
    int iterate = 0;  // least m at which the iterates reach `value`
    EvalStats stats;
};

/// Exact ‖x‖_{law,m}: max of ‖x‖_∞ and θ_n Σ_i ‖E_i x‖_{law,m-1} over levels n
/// and rule(n)-conforming families of subsets of supp(x). The certificate
/// realizes the max; among maximizing families the lexicographically least
/// canonical one (lowest level first) is emitted.
NormResult eval_iterate(const FinVec& x, const MixedLaw& law, int m,
                        const EngineOptions& opts = {});

/// The stabilized norm ‖x‖_law = ‖x‖_{law,m*} with m* = |supp(x)|; asserts
/// the m* and m*+1 iterates agree and throws Error::stabilization otherwise
/// (that failure signals an engine bug, not a user error).
NormResult eval_norm(const FinVec& x, const MixedLaw& law, const EngineOptions& opts = {});

/// Exact Σ_m α_m ‖x‖_{inner,m}: finite terms below the stabilization index
/// m* = |supp(x)| plus the exact geometric tail (Σ_{m≥m*} α_m)·‖x‖_{inner,m*}.
NormResult eval_sigma(const FinVec& x, const SigmaLaw& law, const EngineOptions& opts = {});

/// Exact squared value Σ_n α_n ‖x‖²_{E,n} via stabilization of the squared
/// iterates plus the exact tail.
NormResult eval_edgington(const FinVec& x, const EdgingtonLaw& law,
                          const EngineOptions& opts = {});

/// Squared value ‖x‖²_{(2)} = value of the inner law on x², exactly.
NormResult eval_two_convex(const FinVec& x, const TwoConvexLaw& law,
                           const EngineOptions& opts = {});

NormResult eval_space(const FinVec& x, const SpaceLaw& law, const EngineOptions& opts = {});
NormResult eval_config(const FinVec& x, const SpaceConfig& config,
                       const EngineOptions& opts = {});

/// x / ‖x‖ by exact rational scaling. Linear-valued laws only.
FinVec normalize_in_space(const FinVec& x, const SpaceConfig& config,
                          const EngineOptions& opts = {});

}  // namespace tsir
