#include "tsirnorm/certificate.hpp"

#include <algorithm>
#include <set>

#include "tsirnorm/schreier.hpp"

namespace tsir {

Certificate Certificate::leaf(int index, int sign) {
    Certificate c;
    c.kind = Kind::Leaf;
    c.index = index;
    c.sign = sign;
    return c;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw Error::certificate("invalid certificate at " + path + ": " + what);
}

struct NodeResult {
    Rational value;
    std::vector<int> support;  // sorted
    int depth = 0;             // Weighted/SquareSplit nesting
};

// Children of a family node: nonempty, pairwise disjoint supports, minima
// strictly increasing (canonical order), minima set in S_level, successive
// when the rule is admissible.
void check_family_shape(const std::vector<NodeResult>& kids, int level, FamilyRule rule,
                        const std::string& path) {
    std::vector<int> minima;
    for (size_t i = 0; i < kids.size(); ++i) {
        if (kids[i].support.empty())
            fail(path, "family block " + std::to_string(i) + " has empty support");
        minima.push_back(kids[i].support.front());
    }
    for (size_t i = 0; i + 1 < kids.size(); ++i) {
        if (minima[i] >= minima[i + 1])
            fail(path, "children not in canonical increasing-minima order");
        if (rule == FamilyRule::Admissible && kids[i].support.back() >= minima[i + 1])
            fail(path, "blocks not successive under an admissible rule");
    }
    std::set<int> seen;
    for (const auto& k : kids)
        for (int j : k.support)
            if (!seen.insert(j).second)
                fail(path, "child supports overlap at index " + std::to_string(j));
    if (!schreier::member(IndexSet(minima), level))
        fail(path, "block minima do not form an S_" + std::to_string(level) + " set");
}

NodeResult verify_leaf(const Certificate& c, const FinVec& x, bool squared,
                       const std::string& path) {
    if (c.sign != 1 && c.sign != -1) fail(path, "leaf sign must be +1 or -1");
    // squared contexts carry no signs; pin them to +1 so any flip is caught
    if (squared && c.sign != 1) fail(path, "squared-context leaves carry sign +1");
    if (c.index < 1) fail(path, "leaf index must be a positive coordinate");
    NodeResult r;
    Rational xj = x.at(c.index);
    r.value = squared ? Rational(xj * xj) : Rational(c.sign * xj);
    if (xj != 0) r.support = {c.index};
    return r;
}

NodeResult verify_mixed(const Certificate& c, const FinVec& x, const MixedLaw& law,
                        const std::string& path) {
    switch (c.kind) {
        case Certificate::Kind::Zero:
            return {};
        case Certificate::Kind::Leaf:
            return verify_leaf(c, x, false, path);
        case Certificate::Kind::Weighted: {
            if (c.level < 1) fail(path, "weighted level must be at least 1");
            if (law.level_cap > 0 && c.level > law.level_cap)
                fail(path, "level " + std::to_string(c.level) + " exceeds the law's cap " +
                               std::to_string(law.level_cap));
            if (c.weight != law.theta.at(c.level))
                fail(path, "weight " + format_rational(c.weight) + " is not θ_" +
                               std::to_string(c.level) + " = " +
                               format_rational(law.theta.at(c.level)));
            if (c.children.empty()) fail(path, "weighted node needs children");
            std::vector<NodeResult> kids;
            for (size_t i = 0; i < c.children.size(); ++i)
                kids.push_back(verify_mixed(c.children[i], x, law,
                                            path + ".children[" + std::to_string(i) + "]"));
            check_family_shape(kids, c.level, law.rule_at(c.level), path);
            NodeResult r;
            r.value = 0;
            for (auto& k : kids) {
                r.value += k.value;
                r.support.insert(r.support.end(), k.support.begin(), k.support.end());
                r.depth = std::max(r.depth, k.depth);
            }
            r.value *= c.weight;
            ++r.depth;
            std::sort(r.support.begin(), r.support.end());
            return r;
        }
        default:
            fail(path, "node kind not valid inside a mixed-law certificate");
    }
}

NodeResult verify_squared(const Certificate& c, const FinVec& x, const std::string& path) {
    switch (c.kind) {
        case Certificate::Kind::Zero:
            return {};
        case Certificate::Kind::Leaf:
            return verify_leaf(c, x, true, path);
        case Certificate::Kind::SquareSplit: {
            if (c.children.empty()) fail(path, "square split needs children");
            std::vector<NodeResult> kids;
            for (size_t i = 0; i < c.children.size(); ++i)
                kids.push_back(verify_squared(c.children[i], x,
                                              path + ".children[" + std::to_string(i) + "]"));
            check_family_shape(kids, 1, FamilyRule::Admissible, path);
            NodeResult r;
            r.value = 0;
            for (auto& k : kids) {
                r.value += k.value;
                r.support.insert(r.support.end(), k.support.begin(), k.support.end());
                r.depth = std::max(r.depth, k.depth);
            }
            ++r.depth;
            std::sort(r.support.begin(), r.support.end());
            return r;
        }
        default:
            fail(path, "node kind not valid inside a squared-recursion certificate");
    }
}

NodeResult verify_schreier_set(const Certificate& c, const FinVec& x, int expected_level,
                               const std::string& path) {
    if (c.kind == Certificate::Kind::Zero) return {};
    if (c.kind != Certificate::Kind::SchreierSet)
        fail(path, "expected a Schreier-set witness node");
    if (c.level != expected_level)
        fail(path, "witness level " + std::to_string(c.level) + " does not match term " +
                       std::to_string(expected_level));
    std::vector<int> set;
    NodeResult r;
    r.value = 0;
    for (size_t i = 0; i < c.children.size(); ++i) {
        const Certificate& kid = c.children[i];
        std::string kpath = path + ".children[" + std::to_string(i) + "]";
        if (kid.kind != Certificate::Kind::Leaf) fail(kpath, "Schreier witnesses hold leaves");
        NodeResult leaf = verify_leaf(kid, x, false, kpath);
        if (!set.empty() && kid.index <= set.back())
            fail(path, "witness indices must increase");
        set.push_back(kid.index);
        r.value += leaf.value;
        r.support.insert(r.support.end(), leaf.support.begin(), leaf.support.end());
    }
    if (!schreier::member(IndexSet(set), c.level))
        fail(path, "witness set is not in S_" + std::to_string(c.level));
    return r;
}

NodeResult verify_sigma(const Certificate& c, const WeightSeq& alpha,
                        const std::function<NodeResult(const Certificate&, int, const std::string&)>&
                            verify_term,
                        const std::string& path) {
    if (c.kind == Certificate::Kind::Zero) return {};
    if (c.kind != Certificate::Kind::Sigma) fail(path, "expected a sigma combination node");
    size_t terms = c.children.size();
    if (terms == 0 || c.term_levels.size() != terms || c.term_weights.size() != terms)
        fail(path, "sigma node has inconsistent term lists");
    NodeResult r;
    r.value = 0;
    for (size_t i = 0; i < terms; ++i) {
        int m = c.term_levels[i];
        if (m != static_cast<int>(i) + 1)
            fail(path, "sigma terms must cover m = 1.. densely");
        bool last = (i + 1 == terms);
        Rational expected = last ? alpha.tail_sum_after(m - 1) : alpha.at(m);
        if (c.term_weights[i] != expected)
            fail(path, "term " + std::to_string(m) + " weight " +
                           format_rational(c.term_weights[i]) + " should be " +
                           format_rational(expected));
        NodeResult term =
            verify_term(c.children[i], m, path + ".children[" + std::to_string(i) + "]");
        r.value += c.term_weights[i] * term.value;
        r.support.insert(r.support.end(), term.support.begin(), term.support.end());
    }
    std::sort(r.support.begin(), r.support.end());
    r.support.erase(std::unique(r.support.begin(), r.support.end()), r.support.end());
    return r;
}

}  // namespace

Rational verify_certificate(const Certificate& cert, const FinVec& x, const SpaceLaw& law,
                            const VerifyOptions& opts) {
    const std::string root = "root";
    NodeResult r;
    if (const auto* mixed = std::get_if<MixedLaw>(&law)) {
        r = verify_mixed(cert, x, *mixed, root);
        if (opts.max_depth && r.depth > *opts.max_depth)
            fail(root, "weighted nesting depth " + std::to_string(r.depth) +
                           " exceeds the certified iterate " + std::to_string(*opts.max_depth));
    } else if (const auto* sigma = std::get_if<SigmaLaw>(&law)) {
        auto term = [&](const Certificate& node, int m, const std::string& path) {
            if (sigma->over_schreier) return verify_schreier_set(node, x, m, path);
            NodeResult t = verify_mixed(node, x, *sigma->mixed, path);
            if (t.depth > m)
                fail(path, "depth " + std::to_string(t.depth) + " exceeds its iterate index " +
                               std::to_string(m));
            return t;
        };
        r = verify_sigma(cert, sigma->alpha, term, root);
    } else if (const auto* edg = std::get_if<EdgingtonLaw>(&law)) {
        auto term = [&](const Certificate& node, int m, const std::string& path) {
            NodeResult t = verify_squared(node, x, path);
            if (t.depth > m)
                fail(path, "depth " + std::to_string(t.depth) + " exceeds its iterate index " +
                               std::to_string(m));
            return t;
        };
        r = verify_sigma(cert, edg->alpha, term, root);
    } else {
        const auto& two = std::get<TwoConvexLaw>(law);
        if (cert.kind == Certificate::Kind::Zero) return 0;
        if (cert.kind != Certificate::Kind::TwoConvex || cert.children.size() != 1)
            fail(root, "expected a two-convex wrapper with one inner certificate");
        SpaceLaw inner_law = std::holds_alternative<MixedLaw>(two.inner)
                                 ? SpaceLaw(std::get<MixedLaw>(two.inner))
                                 : SpaceLaw(std::get<SigmaLaw>(two.inner));
        return verify_certificate(cert.children[0], x.squared(), inner_law, opts);
    }
    return r.value;
}

namespace {

using nlohmann::json;

const char* kind_tag(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::Zero: return "zero";
        case Certificate::Kind::Leaf: return "leaf";
        case Certificate::Kind::Weighted: return "weighted";
        case Certificate::Kind::SchreierSet: return "schreier-set";
        case Certificate::Kind::SquareSplit: return "square-split";
        case Certificate::Kind::Sigma: return "sigma";
        case Certificate::Kind::TwoConvex: return "two-convex";
    }
    return "zero";
}

}  // namespace

nlohmann::json certificate_to_json(const Certificate& cert) {
    json j;
    j["kind"] = kind_tag(cert.kind);
    switch (cert.kind) {
        case Certificate::Kind::Zero:
            break;
        case Certificate::Kind::Leaf:
            j["index"] = cert.index;
            j["sign"] = cert.sign;
            break;
        case Certificate::Kind::Weighted: {
            j["level"] = cert.level;
            j["weight"] = format_rational(cert.weight);
            json kids = json::array();
            for (const auto& c : cert.children) kids.push_back(certificate_to_json(c));
            j["children"] = kids;
            break;
        }
        case Certificate::Kind::SchreierSet: {
            j["level"] = cert.level;
            json kids = json::array();
            for (const auto& c : cert.children) kids.push_back(certificate_to_json(c));
            j["children"] = kids;
            break;
        }
        case Certificate::Kind::SquareSplit: {
            json kids = json::array();
            for (const auto& c : cert.children) kids.push_back(certificate_to_json(c));
            j["children"] = kids;
            break;
        }
        case Certificate::Kind::Sigma: {
            json terms = json::array();
            for (size_t i = 0; i < cert.children.size(); ++i) {
                json t;
                t["m"] = cert.term_levels[i];
                t["weight"] = format_rational(cert.term_weights[i]);
                t["certificate"] = certificate_to_json(cert.children[i]);
                terms.push_back(t);
            }
            j["terms"] = terms;
            break;
        }
        case Certificate::Kind::TwoConvex:
            j["inner"] = certificate_to_json(cert.children.at(0));
            break;
    }
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error::input("certificate nodes are JSON objects");
    std::string kind = j.value("kind", "");
    Certificate c;
    auto children_of = [](const json& node) {
        std::vector<Certificate> out;
        for (const auto& k : node.at("children")) out.push_back(certificate_from_json(k));
        return out;
    };
    if (kind == "zero") {
        c.kind = Certificate::Kind::Zero;
    } else if (kind == "leaf") {
        c.kind = Certificate::Kind::Leaf;
        c.index = j.at("index").get<int>();
        c.sign = j.at("sign").get<int>();
    } else if (kind == "weighted") {
        c.kind = Certificate::Kind::Weighted;
        c.level = j.at("level").get<int>();
        c.weight = parse_rational(j.at("weight").get<std::string>());
        c.children = children_of(j);
    } else if (kind == "schreier-set") {
        c.kind = Certificate::Kind::SchreierSet;
        c.level = j.at("level").get<int>();
        c.children = children_of(j);
    } else if (kind == "square-split") {
        c.kind = Certificate::Kind::SquareSplit;
        c.children = children_of(j);
    } else if (kind == "sigma") {
        c.kind = Certificate::Kind::Sigma;
        for (const auto& t : j.at("terms")) {
            c.term_levels.push_back(t.at("m").get<int>());
            c.term_weights.push_back(parse_rational(t.at("weight").get<std::string>()));
            c.children.push_back(certificate_from_json(t.at("certificate")));
        }
    } else if (kind == "two-convex") {
        c.kind = Certificate::Kind::TwoConvex;
        c.children.push_back(certificate_from_json(j.at("inner")));
    } else {
        throw Error::input("unknown certificate node kind '" + kind + "'");
    }
    return c;
}

}  // namespace tsir
