// Acceptance gate: one exact, tolerance-pinned check per criterion, one
// pass/fail line each. Exit status 0 iff every criterion passes.

#include <algorithm>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "tsirnorm/certificate.hpp"
#include "tsirnorm/checks.hpp"
#include "tsirnorm/engine.hpp"
#include "tsirnorm/oracle.hpp"
#include "tsirnorm/suite.hpp"

using namespace tsir;

namespace {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    int upto(int n) { return static_cast<int>(g() % static_cast<std::uint64_t>(n)); }
    bool flip() { return (g() & 1) != 0; }
};

Rational coefficient(Rng& rng) {
    static const Rational pool[] = {Rational(1), Rational(1, 2), Rational(1, 3)};
    Rational c = pool[rng.upto(3)];
    return rng.flip() ? Rational(-c) : c;
}

// support size ≤ 6, entries in {±1, ±1/2, ±1/3}
FinVec random_vector(Rng& rng, int lo = 1, int hi = 18, int max_support = 6) {
    int size = 1 + rng.upto(max_support);
    std::vector<int> picks;
    while (static_cast<int>(picks.size()) < size) {
        int j = lo + rng.upto(hi - lo + 1);
        if (std::find(picks.begin(), picks.end(), j) == picks.end()) picks.push_back(j);
    }
    std::sort(picks.begin(), picks.end());
    std::vector<std::pair<int, Rational>> entries;
    for (int j : picks) entries.emplace_back(j, coefficient(rng));
    return FinVec(std::move(entries));
}

checks::DisjointSample random_sample(Rng& rng) {
    int k = 1 + rng.upto(3);
    int start = k + rng.upto(3);
    int total = std::min(7, k + rng.upto(7 - k + 1));
    std::vector<int> picks;
    while (static_cast<int>(picks.size()) < total) {
        int j = start + rng.upto(12);
        if (std::find(picks.begin(), picks.end(), j) == picks.end()) picks.push_back(j);
    }
    std::sort(picks.begin(), picks.end());
    checks::DisjointSample sample;
    sample.start_bound = start;
    size_t at = 0;
    for (int i = 0; i < k; ++i) {
        size_t room = picks.size() - at - static_cast<size_t>(k - i - 1);
        size_t take = 1 + static_cast<size_t>(rng.upto(static_cast<int>(room)));
        std::vector<std::pair<int, Rational>> entries;
        for (size_t t = 0; t < take; ++t) entries.emplace_back(picks[at++], coefficient(rng));
        sample.vectors.push_back(FinVec(std::move(entries)));
    }
    return sample;
}

// map a checker over [0, n) on all cores, collecting failure notes
std::vector<std::string> parallel_scan(int n, const std::function<std::string(int)>& one) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<std::vector<std::string>>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::vector<std::string> notes;
            for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) {
                std::string note = one(i);
                if (!note.empty()) notes.push_back(note);
            }
            return notes;
        }));
    }
    std::vector<std::string> all;
    for (auto& f : futures)
        for (auto& note : f.get()) all.push_back(note);
    return all;
}

struct Criterion {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
};

std::vector<SpaceConfig> corpus_laws() {
    return {default_space("V"), default_space("W"), default_space("T")};
}

std::vector<FinVec> corpus(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<FinVec> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(random_vector(rng));
    return out;
}

// 1. eval_iterate == oracle_norm exactly for V, W(1), T(1/2) at m ∈ {1,2,3}
Criterion criterion_oracle_equivalence(const std::vector<FinVec>& xs) {
    Criterion c;
    auto laws = corpus_laws();
    auto notes = parallel_scan(static_cast<int>(xs.size()), [&](int i) -> std::string {
        for (const SpaceConfig& cfg : laws) {
            const auto& law = std::get<MixedLaw>(cfg.law);
            for (int m = 1; m <= 3; ++m) {
                Rational engine = eval_iterate(xs[static_cast<size_t>(i)], law, m).value;
                Rational kset = oracle_norm(xs[static_cast<size_t>(i)], law, m);
                if (engine != kset)
                    return cfg.name + " m=" + std::to_string(m) + " on " +
                           xs[static_cast<size_t>(i)].to_string() + ": " +
                           format_rational(engine) + " vs " + format_rational(kset);
            }
        }
        return {};
    });
    for (const auto& n : notes) c.fail(n);
    c.detail = c.pass ? std::to_string(xs.size()) + " vectors x 3 laws x m in {1,2,3}, all exact"
                      : c.detail;
    return c;
}

// 2. iterates nondecreasing in m and constant from m* = |supp x| on
Criterion criterion_stabilization(const std::vector<FinVec>& xs) {
    Criterion c;
    auto laws = corpus_laws();
    auto notes = parallel_scan(static_cast<int>(xs.size()), [&](int i) -> std::string {
        const FinVec& x = xs[static_cast<size_t>(i)];
        for (const SpaceConfig& cfg : laws) {
            const auto& law = std::get<MixedLaw>(cfg.law);
            int m_star = x.support_size();
            Rational prev(-1);
            for (int m = 0; m <= m_star + 1; ++m) {
                Rational v = eval_iterate(x, law, m).value;
                if (v < prev) return cfg.name + " decreases at m=" + std::to_string(m);
                prev = v;
            }
            if (eval_iterate(x, law, m_star).value != prev)
                return cfg.name + " not constant past |supp| on " + x.to_string();
        }
        return {};
    });
    for (const auto& n : notes) c.fail(n);
    if (c.pass) c.detail = "monotone and stabilized at m* for the whole corpus";
    return c;
}

// 3. certificates re-verify exactly; every single-weight/sign tamper detected
Criterion criterion_certificates(const std::vector<FinVec>& xs) {
    Criterion c;
    std::vector<SpaceConfig> spaces = corpus_laws();
    spaces.push_back(default_space("Vprime"));
    spaces.push_back(default_space("SigmaSchreier"));
    spaces.push_back(default_space("Edgington"));
    spaces.push_back(default_space("2x:V"));
    long long verified = 0;
    auto notes = parallel_scan(static_cast<int>(xs.size()), [&](int i) -> std::string {
        const FinVec& x = xs[static_cast<size_t>(i)];
        for (const SpaceConfig& cfg : spaces) {
            NormResult r = eval_config(x, cfg);
            if (verify_certificate(r.certificate, x, cfg.law) != r.value)
                return cfg.name + " certificate drifts on " + x.to_string();
        }
        return {};
    });
    verified += static_cast<long long>(xs.size()) * static_cast<long long>(spaces.size());
    for (const auto& n : notes) c.fail(n);

    // tamper every weight and sign in the first 40 corpus certificates
    int tampered = 0;
    for (int i = 0; i < 40 && i < static_cast<int>(xs.size()); ++i) {
        const FinVec& x = xs[static_cast<size_t>(i)];
        for (const SpaceConfig& cfg : spaces) {
            NormResult r = eval_config(x, cfg);
            std::function<void(Certificate&, Certificate&)> visit = [&](Certificate& root,
                                                                        Certificate& node) {
                auto detect = [&]() {
                    try {
                        return verify_certificate(root, x, cfg.law) != r.value;
                    } catch (const Error&) {
                        return true;
                    }
                };
                if (node.kind == Certificate::Kind::Leaf) {
                    node.sign = -node.sign;
                    ++tampered;
                    if (!detect()) c.fail(cfg.name + " missed a sign flip on " + x.to_string());
                    node.sign = -node.sign;
                }
                if (node.kind == Certificate::Kind::Weighted) {
                    Rational keep = node.weight;
                    node.weight = keep * Rational(9, 10);
                    ++tampered;
                    if (!detect()) c.fail(cfg.name + " missed a weight change on " + x.to_string());
                    node.weight = keep;
                }
                for (Certificate& kid : node.children) visit(root, kid);
            };
            Certificate copy = r.certificate;
            visit(copy, copy);
        }
    }
    if (c.pass)
        c.detail = std::to_string(verified) + " certificates re-verified, " +
                   std::to_string(tampered) + " tampers detected";
    return c;
}

// 4. sandwich, homogeneity, triangle (500 pairs), unconditionality, solidity
Criterion criterion_norm_axioms(const std::vector<FinVec>& xs, std::uint64_t seed) {
    Criterion c;
    auto laws = corpus_laws();
    auto notes = parallel_scan(static_cast<int>(xs.size()), [&](int i) -> std::string {
        Rng rng(seed + static_cast<std::uint64_t>(i) * 7919);
        const FinVec& x = xs[static_cast<size_t>(i)];
        FinVec y = random_vector(rng, 1, 8, 4);  // shares a window with small supports
        FinVec x8 = random_vector(rng, 1, 8, 4);
        for (const SpaceConfig& cfg : laws) {
            const auto& law = std::get<MixedLaw>(cfg.law);
            Rational vx = eval_norm(x, law).value;
            if (!(x.linf() <= vx && vx <= x.l1()))
                return cfg.name + " sandwich fails on " + x.to_string();
            Rational scale(-5, 3);
            if (eval_norm(x.scaled(scale), law).value != abs_r(scale) * vx)
                return cfg.name + " homogeneity fails on " + x.to_string();
            Rational vxy = eval_norm(x8.plus(y), law).value;
            if (vxy > eval_norm(x8, law).value + eval_norm(y, law).value)
                return cfg.name + " triangle fails";
            std::vector<std::pair<int, Rational>> flip, shrink;
            for (const auto& [j, v] : x.entries()) {
                flip.emplace_back(j, rng.flip() ? Rational(-v) : v);
                shrink.emplace_back(j, rng.flip() ? Rational(v / 3) : v);
            }
            if (eval_norm(FinVec(std::move(flip)), law).value != vx)
                return cfg.name + " sign-unconditionality fails on " + x.to_string();
            if (eval_norm(FinVec(std::move(shrink)), law).value > vx)
                return cfg.name + " solidity fails on " + x.to_string();
        }
        return {};
    });
    for (const auto& n : notes) c.fail(n);
    if (c.pass) c.detail = "sandwich, homogeneity, triangle, unconditionality, solidity all exact";
    return c;
}

// 5. ‖Σx_i‖ ≥ θ_1·ℓ·Σ‖x_i‖ on 200 disjoint samples
Criterion criterion_l1_lower(std::uint64_t seed) {
    Criterion c;
    SpaceConfig vp = default_space("Vprime");
    auto notes = parallel_scan(200, [&](int i) -> std::string {
        Rng rng(seed + static_cast<std::uint64_t>(i));
        auto sample = random_sample(rng);
        auto r = checks::check_asymptotic_l1_lower(vp, sample);
        if (!r.holds)
            return "lhs " + format_rational(r.lhs) + " < rhs " + format_rational(r.rhs);
        return {};
    });
    for (const auto& n : notes) c.fail(n);
    if (c.pass) c.detail = "200 disjoint samples, lhs >= (3/4)(1/2)Σ every time";
    return c;
}

// 6. C·Σ‖y_i²‖ ≤ ‖Σy_i²‖ ≤ Σ‖y_i²‖ on 200 S_1-allowable samples
Criterion criterion_transfer(std::uint64_t seed) {
    Criterion c;
    SpaceConfig v = default_space("V");
    auto notes = parallel_scan(200, [&](int i) -> std::string {
        Rng rng(seed + static_cast<std::uint64_t>(i) * 31);
        auto sample = random_sample(rng);
        auto r = checks::check_two_convex_transfer(v, sample);
        if (!r.lower_holds || !r.upper_holds)
            return "transfer fails: C=" + format_rational(r.constant) + " sum=" +
                   format_rational(r.sum_sq) + " combined=" + format_rational(r.combined_sq);
        return {};
    });
    for (const auto& n : notes) c.fail(n);
    if (c.pass) c.detail = "200 samples, both squared inequalities exact";
    return c;
}

// 7. squared Edgington == squared two-convexified Schreier sigma, exactly
Criterion criterion_edgington_identity(std::uint64_t seed) {
    Criterion c;
    SpaceConfig edg = default_space("Edgington");
    SpaceConfig two = default_space("2x:SigmaSchreier");
    auto notes = parallel_scan(100, [&](int i) -> std::string {
        Rng rng(seed + static_cast<std::uint64_t>(i) * 101);
        FinVec x = random_vector(rng, 1, 14, 5);
        Rational lhs = eval_config(x, edg).value;
        Rational rhs = eval_config(x, two).value;
        if (lhs != rhs)
            return "mismatch on " + x.to_string() + ": " + format_rational(lhs) + " vs " +
                   format_rational(rhs);
        return {};
    });
    for (const auto& n : notes) c.fail(n);
    if (c.pass) c.detail = "100 vectors, squared values identical";
    return c;
}

// 8. repeated averages have T-norm ≤ δⁿ + 1/10 for n ∈ {0,1,2}, δ = 1/2
Criterion criterion_repeated_averages() {
    Criterion c;
    Rational delta(1, 2), slack(1, 10);
    Rational power(1);
    std::ostringstream got;
    for (int n = 0; n <= 2; ++n) {
        auto r = checks::repeated_average_squares(n, 2, delta);
        if (r.t_norm > power + slack)
            c.fail("n=" + std::to_string(n) + ": " + format_rational(r.t_norm) + " > " +
                   format_rational(Rational(power + slack)));
        got << (n ? ", " : "") << "n=" << n << ": " << format_rational(r.t_norm);
        power *= delta;
    }
    if (c.pass) c.detail = got.str() + " (bounds 11/10, 3/5, 7/20)";
    return c;
}

// 9. harmonic θ fails by n ≤ 10; geometric θ = (1/2)ⁿ never fails up to 30
Criterion criterion_noniso_scan() {
    Criterion c;
    auto harmonic = checks::noniso_inequality_scan(WeightSeq::harmonic_theta(), Rational(1, 2),
                                                   Rational(1), Rational(1), Rational(1, 100), 10);
    if (!harmonic.first_failing)
        c.fail("harmonic scan found no failing n up to 10");
    else if (*harmonic.first_failing > 10)
        c.fail("first failing n too late: " + std::to_string(*harmonic.first_failing));
    auto geometric =
        checks::noniso_inequality_scan(WeightSeq::geometric_theta(Rational(1, 2)), Rational(1, 2),
                                       Rational(1), Rational(1), Rational(1, 100), 30);
    if (geometric.first_failing)
        c.fail("geometric scan failed at n=" + std::to_string(*geometric.first_failing));
    if (c.pass)
        c.detail = "harmonic fails first at n=" + std::to_string(*harmonic.first_failing) +
                   "; geometric holds through n=30";
    return c;
}

// 10. fast-growing hierarchy values and the overflow guard
Criterion criterion_fast_growing() {
    Criterion c;
    for (long long n = 1; n <= 100; ++n)
        if (checks::fast_growing(0, n) != n + 1) c.fail("g_0 wrong at " + std::to_string(n));
    if (checks::fast_growing(1, 3) != 6) c.fail("g_1(3) != 6");
    if (checks::fast_growing(2, 2) != 8) c.fail("g_2(2) != 8");
    bool guarded = false;
    try {
        checks::fast_growing(3, 3);
    } catch (const Error& e) {
        guarded = e.kind() == ErrorKind::Overflow;
    }
    if (!guarded) c.fail("g_3(3) did not trip the overflow guard");
    if (c.pass) c.detail = "g_0 on 1..100, g_1(3)=6, g_2(2)=8, g_3(3) guarded";
    return c;
}

// 11. the suite report is byte-identical across reruns, modulo timing
Criterion criterion_determinism() {
    Criterion c;
    suite::SuiteOptions opts;
    opts.seed = 2718;
    opts.count = 8;
    auto strip = [](const suite::SuiteReport& r) {
        nlohmann::json j = suite::render_json(r);
        j.erase("timing_ms");
        return j.dump();
    };
    suite::SuiteReport first = suite::run_suite(opts);
    suite::SuiteReport second = suite::run_suite(opts);
    if (strip(first) != strip(second)) c.fail("seeded suite reports differ");
    if (suite::render_csv(first) != suite::render_csv(second)) c.fail("CSV reports differ");
    if (!first.all_pass) c.fail("the seeded suite itself reported failures");
    if (c.pass) c.detail = "two seeded runs byte-identical modulo timing; battery green";
    return c;
}

}  // namespace

int main() {
    const std::uint64_t seed = 20240917ull;
    std::vector<FinVec> xs = corpus(500, seed);

    std::vector<std::pair<std::string, Criterion>> results;
    results.emplace_back("1. oracle-equivalence", criterion_oracle_equivalence(xs));
    results.emplace_back("2. stabilization", criterion_stabilization(xs));
    results.emplace_back("3. certificate-soundness", criterion_certificates(xs));
    results.emplace_back("4. norm-axioms", criterion_norm_axioms(xs, seed));
    results.emplace_back("5. sigma-l1-lower-bound", criterion_l1_lower(seed));
    results.emplace_back("6. two-convex-transfer", criterion_transfer(seed));
    results.emplace_back("7. edgington-identification", criterion_edgington_identity(seed));
    results.emplace_back("8. repeated-averages", criterion_repeated_averages());
    results.emplace_back("9. non-isomorphism-scan", criterion_noniso_scan());
    results.emplace_back("10. fast-growing-hierarchy", criterion_fast_growing());
    results.emplace_back("11. report-determinism", criterion_determinism());

    bool all = true;
    for (const auto& [name, r] : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name
                  << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present")
              << "\n";
    return all ? 0 : 1;
}
