#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsirnorm/finvec.hpp"
#include "tsirnorm/space.hpp"

namespace tsir {

/// A norming-tree functional: a machine-checkable proof that the reported
/// norm value is attained. Node kinds by law:
///
///   Zero                      — the zero vector's certificate
///   Leaf{index, sign}         — ±e_j; evaluates to sign·x_j (x_j² in squared contexts)
///   Weighted{level, weight, children}
///                             — θ_level·(f_1 + … + f_r) with child supports
///                               pairwise disjoint, minima in canonical
///                               (increasing) order and forming an S_level
///                               set; successive when the law's rule at that
///                               level is admissible
///   SchreierSet{level, children}
///                             — Σ ±e_j over a set in S_level (the |·|_n witness)
///   SquareSplit{children}     — an S_1-admissible split in the Edgington
///                               recursion; evaluates to Σ children, squared context
///   Sigma{term_levels, term_weights, children}
///                             — Σ_i w_i·f_i(x); w_i = α_{m_i} for each finite
///                               term and the exact tail mass for the last
///   TwoConvex{children[0]}    — inner functional applied to x²
struct Certificate {
    enum class Kind { Zero, Leaf, Weighted, SchreierSet, SquareSplit, Sigma, TwoConvex };

    Kind kind = Kind::Zero;
    int index = 0;  // Leaf
    int sign = 1;   // Leaf: ±1
    int level = 0;  // Weighted: n of θ_n; SchreierSet: n of S_n
    Rational weight;
    std::vector<Certificate> children;
    std::vector<int> term_levels;        // Sigma: iterate index per child
    std::vector<Rational> term_weights;  // Sigma: coefficient per child

    static Certificate zero() { return {}; }
    static Certificate leaf(int index, int sign);
};

struct VerifyOptions {
    /// When set, the deepest Weighted/SquareSplit nesting must not exceed it
    /// (a depth-m tree certifies an iterate-m value). Sigma terms always
    /// enforce their own per-term depth.
    std::optional<int> max_depth;
};

/// Recursively evaluates the certificate against x, checking every structural
/// invariant along the way (disjointness, the rule at each level, exact
/// weights, canonical child order, depth). Throws Error::certificate naming
/// the violated invariant and the node path. Returns the exact value.
Rational verify_certificate(const Certificate& cert, const FinVec& x, const SpaceLaw& law,
                            const VerifyOptions& opts = {});

/// Canonical serialization: node kind tags, rationals as "p/q" in lowest
/// terms, children in canonical order. Deterministic given (x, law, m).
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace tsir
