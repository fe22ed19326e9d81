#include "tsirnorm/space.hpp"

#include <fstream>
#include <set>

namespace tsir {

bool squared_valued(const SpaceLaw& law) {
    return std::holds_alternative<EdgingtonLaw>(law) || std::holds_alternative<TwoConvexLaw>(law);
}

SpaceConfig make_tsirelson(const Rational& delta) {
    if (!(delta > 0 && delta < 1)) throw Error::input("delta must lie in (0,1)");
    MixedLaw law{WeightSeq::geometric_theta(delta), RulePattern::AllAdmissible, 0, 1};
    return {"T", law, "Tsirelson norm T(delta,S_1): admissible families at level 1 only"};
}

SpaceConfig make_V(const WeightSeq& theta) {
    if (theta.role() != WeightRole::Theta) throw Error::input("V needs a theta-role sequence");
    MixedLaw law{theta, RulePattern::AllAllowable, 0, 0};
    return {"V", law, "modified mixed Tsirelson norm: allowable families at every level"};
}

SpaceConfig make_V_admissible(const WeightSeq& theta) {
    if (theta.role() != WeightRole::Theta) throw Error::input("Vadm needs a theta-role sequence");
    MixedLaw law{theta, RulePattern::AllAdmissible, 0, 0};
    return {"Vadm", law, "admissible-rule variant of V, for ratio comparisons"};
}

SpaceConfig make_W(const WeightSeq& theta, int s) {
    if (theta.role() != WeightRole::Theta) throw Error::input("W needs a theta-role sequence");
    if (s < 1) throw Error::input("W's split level s must be a positive integer");
    MixedLaw law{theta, RulePattern::AllowableUpToSplit, s, 0};
    return {"W", law, "mixed Tsirelson norm: allowable up to level s, admissible above"};
}

SpaceConfig make_Vprime(const WeightSeq& theta, const WeightSeq& alpha) {
    if (alpha.role() != WeightRole::Alpha) throw Error::input("V' needs an alpha-role sequence");
    SigmaLaw law{alpha, false, std::get<MixedLaw>(make_V(theta).law)};
    return {"Vprime", law, "Sigma-sum of the V iterates"};
}

SpaceConfig make_Wprime(const WeightSeq& theta, const WeightSeq& alpha, int s) {
    if (alpha.role() != WeightRole::Alpha) throw Error::input("W' needs an alpha-role sequence");
    SigmaLaw law{alpha, false, std::get<MixedLaw>(make_W(theta, s).law)};
    return {"Wprime", law, "Sigma-sum of the W iterates"};
}

SpaceConfig make_sigma_schreier(const WeightSeq& alpha) {
    if (alpha.role() != WeightRole::Alpha)
        throw Error::input("Sigma-Schreier needs an alpha-role sequence");
    SigmaLaw law{alpha, true, std::nullopt};
    return {"SigmaSchreier", law, "Sigma-sum of the Schreier norms"};
}

SpaceConfig make_edgington(const WeightSeq& alpha) {
    if (alpha.role() != WeightRole::Alpha)
        throw Error::input("Edgington norm needs an alpha-role sequence");
    return {"Edgington", EdgingtonLaw{alpha}, "Edgington's squared S_1-admissible recursion"};
}

SpaceConfig two_convexify(const SpaceConfig& inner) {
    if (std::holds_alternative<TwoConvexLaw>(inner.law))
        throw Error::input("cannot 2-convexify '" + inner.name + "' twice");
    if (std::holds_alternative<EdgingtonLaw>(inner.law))
        throw Error::input("cannot 2-convexify the squared-valued law '" + inner.name + "'");
    TwoConvexLaw law;
    if (const auto* m = std::get_if<MixedLaw>(&inner.law))
        law.inner = *m;
    else
        law.inner = std::get<SigmaLaw>(inner.law);
    return {"2x:" + inner.name, law, "2-convexification of " + inner.name};
}

std::vector<std::string> registry_names() {
    return {"T",      "V",          "Vadm",          "W",     "Vprime", "Wprime",
            "SigmaSchreier", "Edgington", "2x:T", "2x:V", "2x:W", "2x:Vprime",
            "2x:Wprime", "2x:SigmaSchreier"};
}

SpaceConfig default_space(const std::string& name) {
    const WeightSeq theta = WeightSeq::geometric_theta(Rational(3, 4));
    const WeightSeq alpha = WeightSeq::geometric_alpha(Rational(1, 2));
    if (name.rfind("2x:", 0) == 0) return two_convexify(default_space(name.substr(3)));
    if (name == "T") return make_tsirelson(Rational(1, 2));
    if (name == "V") return make_V(theta);
    if (name == "Vadm") return make_V_admissible(theta);
    if (name == "W") return make_W(theta, 1);
    if (name == "Vprime") return make_Vprime(theta, alpha);
    if (name == "Wprime") return make_Wprime(theta, alpha, 1);
    if (name == "SigmaSchreier") return make_sigma_schreier(alpha);
    if (name == "Edgington") return make_edgington(alpha);
    throw Error::input("unknown space '" + name + "'");
}

namespace {

using nlohmann::json;

json weights_to_json(const WeightSeq& w) {
    json j;
    switch (w.kind()) {
        case WeightSeq::Kind::Geometric:
            j["kind"] = "geometric";
            j["ratio"] = format_rational(w.ratio());
            if (w.role() == WeightRole::Theta && w.scale() != 1)
                j["scale"] = format_rational(w.scale());
            break;
        case WeightSeq::Kind::Harmonic:
            j["kind"] = "harmonic";
            break;
        case WeightSeq::Kind::ExplicitGeometric: {
            j["kind"] = "explicit";
            json values = json::array();
            for (const Rational& v : w.prefix()) values.push_back(format_rational(v));
            j["values"] = values;
            j["tail_ratio"] = format_rational(w.ratio());
            break;
        }
    }
    return j;
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw Error::input("unknown field '" + it.key() + "' in " + where);
}

WeightSeq weights_from_json(const json& j, WeightRole role, const std::string& where) {
    if (!j.is_object()) throw Error::input(where + " must be an object");
    std::string kind = j.value("kind", "");
    if (kind == "geometric") {
        reject_unknown(j, {"kind", "ratio", "scale"}, where);
        Rational ratio = parse_rational(j.at("ratio").get<std::string>());
        if (role == WeightRole::Alpha) {
            if (j.contains("scale"))
                throw Error::input("alpha weights fix their own scale (sum must be 1)");
            return WeightSeq::geometric_alpha(ratio);
        }
        Rational scale = j.contains("scale") ? parse_rational(j.at("scale").get<std::string>())
                                             : Rational(1);
        return WeightSeq::geometric_theta(ratio, scale);
    }
    if (kind == "harmonic") {
        reject_unknown(j, {"kind"}, where);
        if (role == WeightRole::Alpha)
            throw Error::input("harmonic weights cannot take the alpha role");
        return WeightSeq::harmonic_theta();
    }
    if (kind == "explicit") {
        reject_unknown(j, {"kind", "values", "tail_ratio"}, where);
        std::vector<Rational> values;
        for (const auto& v : j.at("values")) values.push_back(parse_rational(v.get<std::string>()));
        Rational tail = parse_rational(j.at("tail_ratio").get<std::string>());
        return role == WeightRole::Alpha ? WeightSeq::explicit_alpha(std::move(values), tail)
                                         : WeightSeq::explicit_theta(std::move(values), tail);
    }
    throw Error::input("unknown weight kind '" + kind + "' in " + where);
}

}  // namespace

nlohmann::json space_to_json(const SpaceConfig& config) {
    json j;
    j["kind"] = config.name;
    std::string base = config.name;
    const SpaceLaw* law = &config.law;
    SpaceLaw unwrapped;
    if (const auto* two = std::get_if<TwoConvexLaw>(&config.law)) {
        base = base.rfind("2x:", 0) == 0 ? base.substr(3) : base;
        if (const auto* m = std::get_if<MixedLaw>(&two->inner))
            unwrapped = *m;
        else
            unwrapped = std::get<SigmaLaw>(two->inner);
        law = &unwrapped;
    }
    if (const auto* m = std::get_if<MixedLaw>(law)) {
        if (base == "T")
            j["delta"] = format_rational(m->theta.at(1));
        else
            j["theta"] = weights_to_json(m->theta);
        if (m->pattern == RulePattern::AllowableUpToSplit) j["s"] = m->split;
    } else if (const auto* s = std::get_if<SigmaLaw>(law)) {
        j["alpha"] = weights_to_json(s->alpha);
        if (!s->over_schreier) {
            j["theta"] = weights_to_json(s->mixed->theta);
            if (s->mixed->pattern == RulePattern::AllowableUpToSplit) j["s"] = s->mixed->split;
        }
    } else if (const auto* e = std::get_if<EdgingtonLaw>(law)) {
        j["alpha"] = weights_to_json(e->alpha);
    }
    return j;
}

SpaceConfig space_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error::input("space config must be a JSON object");
    std::string kind = j.value("kind", "");
    if (kind.empty()) throw Error::input("space config needs a 'kind' field");
    if (kind.rfind("2x:", 0) == 0) {
        json inner = j;
        inner["kind"] = kind.substr(3);
        return two_convexify(space_from_json(inner));
    }
    if (kind == "2x") {
        reject_unknown(j, {"kind", "inner"}, "space config");
        return two_convexify(space_from_json(j.at("inner")));
    }
    auto theta = [&] { return weights_from_json(j.at("theta"), WeightRole::Theta, "theta"); };
    auto alpha = [&] { return weights_from_json(j.at("alpha"), WeightRole::Alpha, "alpha"); };
    if (kind == "T") {
        reject_unknown(j, {"kind", "delta"}, "space config");
        return make_tsirelson(parse_rational(j.at("delta").get<std::string>()));
    }
    if (kind == "V") {
        reject_unknown(j, {"kind", "theta"}, "space config");
        return make_V(theta());
    }
    if (kind == "Vadm") {
        reject_unknown(j, {"kind", "theta"}, "space config");
        return make_V_admissible(theta());
    }
    if (kind == "W") {
        reject_unknown(j, {"kind", "theta", "s"}, "space config");
        return make_W(theta(), j.at("s").get<int>());
    }
    if (kind == "Vprime") {
        reject_unknown(j, {"kind", "theta", "alpha"}, "space config");
        return make_Vprime(theta(), alpha());
    }
    if (kind == "Wprime") {
        reject_unknown(j, {"kind", "theta", "alpha", "s"}, "space config");
        return make_Wprime(theta(), alpha(), j.at("s").get<int>());
    }
    if (kind == "SigmaSchreier") {
        reject_unknown(j, {"kind", "alpha"}, "space config");
        return make_sigma_schreier(alpha());
    }
    if (kind == "Edgington") {
        reject_unknown(j, {"kind", "alpha"}, "space config");
        return make_edgington(alpha());
    }
    throw Error::input("unknown space kind '" + kind + "'");
}

SpaceConfig load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error::input("cannot open space config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error::input("space config '" + path + "': " + e.what());
    }
    return space_from_json(j);
}

std::uint64_t config_hash(const SpaceConfig& config) {
    return fnv1a(space_to_json(config).dump());
}

}  // namespace tsir
