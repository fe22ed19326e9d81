#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tsirnorm/weights.hpp"

namespace tsir {

enum class FamilyRule { Admissible, Allowable };

/// Which rule applies at which level. V uses allowable families at every
/// level; W switches to admissible above its split level s.
enum class RulePattern { AllAllowable, AllAdmissible, AllowableUpToSplit };

/// A mixed Tsirelson construction: ‖x‖_0 = ‖x‖_∞ and
/// ‖x‖_{m+1} = ‖x‖_∞ ∨ sup_n sup { θ_n Σ_i ‖E_i x‖_m : (E_i) rule(n)-conforming }.
struct MixedLaw {
    WeightSeq theta;
    RulePattern pattern = RulePattern::AllAllowable;
    int split = 0;      // s, for AllowableUpToSplit
    int level_cap = 0;  // 0: all levels; k > 0: only levels n <= k (T(δ,S_1) has cap 1)

    FamilyRule rule_at(int n) const {
        switch (pattern) {
            case RulePattern::AllAllowable: return FamilyRule::Allowable;
            case RulePattern::AllAdmissible: return FamilyRule::Admissible;
            case RulePattern::AllowableUpToSplit:
                return n <= split ? FamilyRule::Allowable : FamilyRule::Admissible;
        }
        return FamilyRule::Allowable;
    }

    bool operator==(const MixedLaw&) const = default;
};

/// Σ_m α_m ‖x‖_m over either the iterates of a mixed law (V', W') or the
/// Schreier norms |·|_m.
struct SigmaLaw {
    WeightSeq alpha;
    bool over_schreier = false;
    std::optional<MixedLaw> mixed;  // present iff !over_schreier

    bool operator==(const SigmaLaw&) const = default;
};

/// Edgington's squared recursion: ‖x‖²_{E,0} = ‖x‖²_∞,
/// ‖x‖²_{E,n+1} = sup { Σ_i ‖E_i x‖²_{E,n} : (E_i) S_1-admissible },
/// combined as ‖x‖²_α = Σ_n α_n ‖x‖²_{E,n}. Values carried exactly squared.
struct EdgingtonLaw {
    WeightSeq alpha;

    bool operator==(const EdgingtonLaw&) const = default;
};

/// 2-convexification ‖x‖_{(2)} = ‖x²‖^{1/2} of a linear-valued law; the
/// engine carries the exact squared value ‖x²‖.
struct TwoConvexLaw {
    std::variant<MixedLaw, SigmaLaw> inner;

    bool operator==(const TwoConvexLaw&) const = default;
};

using SpaceLaw = std::variant<MixedLaw, SigmaLaw, EdgingtonLaw, TwoConvexLaw>;

/// True when evaluation reports exact squared values (Edgington, TwoConvex).
bool squared_valued(const SpaceLaw& law);

struct SpaceConfig {
    std::string name;
    SpaceLaw law;
    std::string provenance;

    bool operator==(const SpaceConfig&) const = default;
};

SpaceConfig make_tsirelson(const Rational& delta);            // T(δ,S_1): admissible, level 1 only
SpaceConfig make_V(const WeightSeq& theta);                   // allowable at every level
SpaceConfig make_V_admissible(const WeightSeq& theta);        // admissible variant, for comparisons
SpaceConfig make_W(const WeightSeq& theta, int s);            // allowable up to s, admissible above
SpaceConfig make_Vprime(const WeightSeq& theta, const WeightSeq& alpha);
SpaceConfig make_Wprime(const WeightSeq& theta, const WeightSeq& alpha, int s);
SpaceConfig make_sigma_schreier(const WeightSeq& alpha);      // Σ(α_n |·|_n)
SpaceConfig make_edgington(const WeightSeq& alpha);
SpaceConfig two_convexify(const SpaceConfig& inner);          // rejects already-squared inners

/// Stable registry addressing: "T", "V", "Vadm", "W", "Vprime", "Wprime",
/// "SigmaSchreier", "Edgington", and "2x:<name>" for 2-convexifications.
/// Default parameters: θ_n = (3/4)^n, α_n = 2^-n, s = 1, δ = 1/2.
SpaceConfig default_space(const std::string& name);
std::vector<std::string> registry_names();

/// Config file format: {"kind": ..., "theta": {"kind","ratio",...},
/// "alpha": {...}, "s": ..., "delta": ...}; rationals as "p/q" strings;
/// unknown fields rejected. Round-trips losslessly.
nlohmann::json space_to_json(const SpaceConfig& config);
SpaceConfig space_from_json(const nlohmann::json& j);
SpaceConfig load_space_file(const std::string& path);

/// FNV-1a of the canonical serialized form; stable across runs and platforms.
std::uint64_t config_hash(const SpaceConfig& config);

}  // namespace tsir
