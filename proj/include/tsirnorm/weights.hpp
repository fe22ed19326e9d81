#pragma once

#include <string>
#include <vector>

#include "tsirnorm/rational.hpp"

namespace tsir {

enum class WeightRole { Theta, Alpha };

/// An exactly evaluable weight sequence, indexed from n = 1.
///
/// Supported kinds are geometric, harmonic (θ_n = 1/(n+1)) and an explicit
/// finite prefix continued geometrically; these are exactly the shapes with
/// exact tail sums, which the Σ-sum norms need. For role Alpha the series
/// must sum to 1 exactly and consecutive ratios must stay inside (0,1).
class WeightSeq {
public:
    enum class Kind { Geometric, Harmonic, ExplicitGeometric };

    /// θ_n = 2^-n; a valid placeholder so laws stay aggregate-initializable.
    WeightSeq() : ratio_(1, 2), scale_(1) {}

    /// θ_n = scale·ratio^n. Requires 0 < ratio < 1 and 0 < scale·ratio < 1.
    static WeightSeq geometric_theta(const Rational& ratio, const Rational& scale = Rational(1));
    /// α_n = (1-ratio)·ratio^(n-1), so that Σ α_n = 1 exactly.
    static WeightSeq geometric_alpha(const Rational& ratio);
    /// θ_n = 1/(n+1); lim θ_n^{1/n} = 1.
    static WeightSeq harmonic_theta();
    /// v_1..v_k explicit, then v_n = v_k·tail_ratio^(n-k).
    static WeightSeq explicit_theta(std::vector<Rational> prefix, const Rational& tail_ratio);
    /// Same shape with the Alpha constraints (total 1, ratios in (0,1)) enforced.
    static WeightSeq explicit_alpha(std::vector<Rational> prefix, const Rational& tail_ratio);

    Rational at(int n) const;  // n >= 1

    /// Σ_{m > n} of the sequence, n >= 0. Exact (geometric closed form);
    /// rejects the harmonic kind, whose series diverges.
    Rational tail_sum_after(int n) const;

    /// Exact bounds ℓ, u with ℓ <= value(n+1)/value(n) <= u for all n.
    /// Only meaningful (and only validated) for role Alpha.
    Rational lower_ratio() const;
    Rational upper_ratio() const;

    /// Values are nonincreasing from this index on. 1 for geometric and
    /// harmonic; the prefix length for explicit kinds.
    int monotone_from() const;

    /// sup_n value(n), exact. Bounds every weighted family: the engine's
    /// block-shape pruning relies on value ≤ max(‖·‖_∞, max_value()·‖·‖_1).
    Rational max_value() const;

    WeightRole role() const { return role_; }
    Kind kind() const { return kind_; }
    const Rational& ratio() const { return ratio_; }
    const Rational& scale() const { return scale_; }
    const std::vector<Rational>& prefix() const { return prefix_; }

    bool operator==(const WeightSeq&) const = default;

private:
    void validate() const;

    WeightRole role_ = WeightRole::Theta;
    Kind kind_ = Kind::Geometric;
    Rational ratio_;                 // geometric ratio / tail ratio
    Rational scale_;                 // geometric scale
    std::vector<Rational> prefix_;   // ExplicitGeometric only
};

}  // namespace tsir
