#include "tsirnorm/checks.hpp"

#include <algorithm>
#include <functional>

#include "tsirnorm/schreier.hpp"

namespace tsir::checks {

namespace {

const SigmaLaw& sigma_law_of(const SpaceConfig& space) {
    const auto* law = std::get_if<SigmaLaw>(&space.law);
    if (!law) throw Error::input("'" + space.name + "' is not a Sigma-sum space");
    return *law;
}

FinVec sum_of(const std::vector<FinVec>& vectors) {
    FinVec sum;
    for (const FinVec& v : vectors) sum = sum.plus(v);
    return sum;
}

}  // namespace

void validate_sample(const DisjointSample& sample) {
    if (sample.vectors.empty()) throw Error::input("disjoint sample needs at least one vector");
    std::vector<IndexSet> supports;
    for (const FinVec& v : sample.vectors) {
        if (v.empty()) throw Error::input("disjoint sample vectors must be nonzero");
        supports.push_back(v.support());
    }
    if (!SetFamily(supports).pairwise_disjoint())
        throw Error::input("sample supports are not pairwise disjoint");
    if (static_cast<int>(sample.vectors.size()) > sample.start_bound)
        throw Error::input("sample has more vectors than its start bound allows");
    for (const IndexSet& s : supports)
        if (s.min() < sample.start_bound)
            throw Error::input("sample supports must start at or after the start bound");
}

L1LowerReport check_asymptotic_l1_lower(const SpaceConfig& space, const DisjointSample& sample,
                                        const EngineOptions& opts) {
    validate_sample(sample);
    const SigmaLaw& law = sigma_law_of(space);
    if (law.over_schreier)
        throw Error::input("the lower bound targets Sigma-sums over mixed-law iterates");
    L1LowerReport report;
    report.theta1 = law.mixed->theta.at(1);
    report.ell = law.alpha.lower_ratio();
    report.lhs = eval_sigma(sum_of(sample.vectors), law, opts).value;
    Rational sum(0);
    for (const FinVec& v : sample.vectors) sum += eval_sigma(v, law, opts).value;
    report.rhs = report.theta1 * report.ell * sum;
    report.holds = report.lhs >= report.rhs;
    return report;
}

TwoConvexTransferReport check_two_convex_transfer(const SpaceConfig& inner,
                                                  const DisjointSample& sample,
                                                  const EngineOptions& opts) {
    validate_sample(sample);
    TwoConvexTransferReport report;
    if (const auto* mixed = std::get_if<MixedLaw>(&inner.law)) {
        report.constant = mixed->theta.at(1);
    } else if (const auto* sig = std::get_if<SigmaLaw>(&inner.law)) {
        report.constant = sig->over_schreier
                              ? sig->alpha.lower_ratio()
                              : Rational(sig->mixed->theta.at(1) * sig->alpha.lower_ratio());
    } else {
        throw Error::input("the transfer check needs a linear-valued inner law");
    }
    report.sum_sq = 0;
    for (const FinVec& y : sample.vectors)
        report.sum_sq += eval_space(y.squared(), inner.law, opts).value;
    report.combined_sq = eval_space(sum_of(sample.vectors).squared(), inner.law, opts).value;
    report.best_constant = report.combined_sq / report.sum_sq;
    report.lower_holds = report.constant * report.sum_sq <= report.combined_sq;
    report.upper_holds = report.combined_sq <= report.sum_sq;
    return report;
}

MassProfile mass_profile(const FinVec& v, const SpaceConfig& space, const EngineOptions& opts) {
    const SigmaLaw& law = sigma_law_of(space);
    if (v.empty()) throw Error::input("mass profiles need a nonzero vector");
    int m_star = std::max(1, v.support_size());
    MassProfile profile;
    profile.total = 0;
    Rational v_star;
    for (int m = 1; m <= m_star; ++m) {
        Rational value = law.over_schreier
                             ? schreier::norm(v, m, opts.max_support).value
                             : eval_iterate(v, *law.mixed, m, opts).value;
        if (m == m_star) v_star = value;
        Rational mass = law.alpha.at(m) * value;
        profile.total += mass;
        profile.terms.emplace_back(m, std::move(mass));
    }
    profile.tail = law.alpha.tail_sum_after(m_star) * v_star;
    profile.total += profile.tail;
    return profile;
}

std::optional<L1Window> find_l1_window(const FinVec& v, const SpaceConfig& space,
                                       const Rational& threshold, int m_floor,
                                       const EngineOptions& opts) {
    if (m_floor < 1) throw Error::input("the window floor is an iterate index, at least 1");
    const SigmaLaw& law = sigma_law_of(space);
    NormResult norm = eval_sigma(v, law, opts);
    if (norm.value != 1)
        throw Error::input("find_l1_window needs v exactly normalized (‖v‖ = " +
                           format_rational(norm.value) + "); scale it by the exact reciprocal");
    int m_star = std::max(1, v.support_size());
    auto iterate_value = [&](int m) {
        int mm = std::min(m, m_star);  // iterates are stabilized beyond m*
        return law.over_schreier ? schreier::norm(v, mm, opts.max_support).value
                                 : eval_iterate(v, *law.mixed, mm, opts).value;
    };
    // Total mass from the floor on; no finite window can reach a threshold
    // at or above it (tail terms are strictly positive).
    Rational total_from_floor(0);
    for (int m = m_floor; m <= m_star; ++m)
        total_from_floor += law.alpha.at(m) * iterate_value(m);
    if (m_floor > m_star)
        total_from_floor = law.alpha.tail_sum_after(m_floor - 1) * iterate_value(m_star);
    else
        total_from_floor += law.alpha.tail_sum_after(m_star) * iterate_value(m_star);
    if (total_from_floor <= threshold && threshold > 0) return std::nullopt;

    // minimal q with mass([m_floor, q]) >= threshold, then maximal p
    Rational running(0);
    int q = m_floor - 1;
    while (true) {
        ++q;
        running += law.alpha.at(q) * iterate_value(q);
        if (running >= threshold) break;
    }
    int p = m_floor;
    Rational window_mass = running;
    while (p < q) {
        Rational without_first = window_mass - law.alpha.at(p) * iterate_value(p);
        if (without_first < threshold) break;
        window_mass = std::move(without_first);
        ++p;
    }
    return L1Window{p, q, window_mass};
}

C0Witness c0_block_witness(const WeightSeq& theta, int m, int n, const EngineOptions& opts) {
    if (m < 0 || n < 1) throw Error::input("c0 witness needs m >= 0 and n >= 1");
    MixedLaw law = std::get<MixedLaw>(make_V(theta).law);
    std::vector<FinVec> blocks;
    if (m == 0) {
        for (int i = 1; i <= n; ++i) blocks.push_back(FinVec::unit(n + i));
    } else {
        // flat blocks on doubling windows; the spread keeps low iterates small
        int at = n + 1;
        int width = 2;
        int total = 0;
        for (int i = 1; i <= n; ++i, width *= 2) total += width;
        if (total > opts.max_support)
            throw Error::construction("c0 witness: blocks of total support " +
                                      std::to_string(total) + " exceed the guard " +
                                      std::to_string(opts.max_support));
        width = 2;
        for (int i = 1; i <= n; ++i, width *= 2) {
            std::vector<std::pair<int, Rational>> entries;
            for (int j = 0; j < width; ++j) entries.emplace_back(at + j, Rational(1));
            FinVec flat(std::move(entries));
            Rational norm = eval_iterate(flat, law, m, opts).value;
            blocks.push_back(flat.scaled(Rational(1) / norm));
            at += width;
        }
    }
    FinVec sum = sum_of(blocks);
    C0Witness witness;
    witness.blocks = blocks;
    witness.low_value = eval_iterate(sum, law, m, opts).value;
    witness.high_value = eval_iterate(sum, law, m + 1, opts).value;
    Rational required = theta.at(1) * n;  // blocks are exactly normalized at iterate m
    if (witness.high_value < required)
        throw Error::construction("c0 witness: ‖Σy‖_{m+1} = " +
                                  format_rational(witness.high_value) + " fell below θ_1·n = " +
                                  format_rational(required));
    return witness;
}

RepeatedAverage repeated_average_squares(int n, int start, const Rational& delta,
                                         const EngineOptions& opts) {
    if (n < 0 || start < 1) throw Error::input("repeated averages need n >= 0 and start >= 1");
    // builds the uniform average over the maximal S_level set starting at
    // `from`; returns the vector and the first index past its support
    std::function<std::pair<FinVec, int>(int, int)> build =
        [&](int level, int from) -> std::pair<FinVec, int> {
        if (level == 0) return {FinVec::unit(from), from + 1};
        FinVec sum;
        int at = from;
        for (int part = 0; part < from; ++part) {  // maximal: min(F) many parts
            auto [piece, next] = build(level - 1, at);
            sum = sum.plus(piece);
            at = next;
            if (at - start > opts.max_support)
                throw Error::guard("repeated average at level " + std::to_string(n) +
                                   " from " + std::to_string(start) +
                                   " needs support beyond the guard " +
                                   std::to_string(opts.max_support));
        }
        return {sum.scaled(Rational(1, from)), at};
    };
    auto [vec, past] = build(n, start);
    (void)past;
    RepeatedAverage result;
    result.vec = vec;
    result.t_norm = eval_norm(vec, std::get<MixedLaw>(make_tsirelson(delta).law), opts).value;
    return result;
}

NonisoScanResult noniso_inequality_scan(const WeightSeq& theta, const Rational& delta,
                                        const Rational& C, const Rational& K,
                                        const Rational& eps, int n_max) {
    if (!(delta > 0 && delta < 1)) throw Error::input("delta must lie in (0,1)");
    if (eps < 0) throw Error::input("eps must be nonnegative");
    NonisoScanResult result;
    Rational delta_pow(1);
    for (int n = 1; n <= n_max; ++n) {
        delta_pow *= delta;
        Rational s = delta_pow + eps;  // the inner radicand
        NonisoStep step;
        step.n = n;
        step.theta_n = theta.at(n);
        Rational c2 = C * C;
        if (eps == 0) {
            // rhs² = C⁴K²s exactly
            step.rhs_lower_sq = step.rhs_upper_sq = c2 * c2 * K * K * s;
            step.fails = step.theta_n > step.rhs_lower_sq;
        } else {
            Rational lo, hi;
            Rational width = eps / 100;
            bool decided = false;
            sqrt_interval(s, width, lo, hi);
            for (int refine = 0; refine < 256 && !decided; ++refine) {
                Rational rlo = c2 * (K * lo + eps);
                Rational rhi = c2 * (K * hi + eps);
                step.rhs_lower_sq = rlo * rlo;
                step.rhs_upper_sq = rhi * rhi;
                if (step.theta_n > step.rhs_upper_sq) {
                    step.fails = true;
                    decided = true;
                } else if (step.theta_n <= step.rhs_lower_sq) {
                    step.fails = false;
                    decided = true;
                } else {
                    width /= 16;
                    sqrt_interval(s, width, lo, hi);
                }
            }
            if (!decided) {
                // θ_n = (C²(K√s+ε))² algebraically: compare the leftover
                // linear term in √s exactly
                Rational c4 = c2 * c2;
                Rational t = step.theta_n - c4 * (K * K * s + eps * eps);
                if (t <= 0)
                    step.fails = false;
                else
                    step.fails = t * t > (2 * c4 * K * eps) * (2 * c4 * K * eps) * s;
            }
        }
        bool fails = step.fails;
        result.steps.push_back(std::move(step));
        if (fails && !result.first_failing) {
            result.first_failing = n;
            break;
        }
    }
    return result;
}

namespace {

struct FgState {
    const FastGrowingOptions& opts;
    long long steps = 0;
    int root_i;
    long long root_n;

    [[noreturn]] void overflow(const std::string& what) {
        throw Error::overflow("fast-growing guard while computing g_" + std::to_string(root_i) +
                              "(" + std::to_string(root_n) + "): " + what);
    }

    long long eval(int i, long long n) {
        if (i == 0) {
            if (++steps > opts.step_budget)
                overflow("step budget " + std::to_string(opts.step_budget) + " exhausted at g_0(" +
                         std::to_string(n) + ")");
            long long v = n + 1;
            if (v > opts.value_cap)
                overflow("intermediate g_0(" + std::to_string(n) + ") = " + std::to_string(v) +
                         " exceeds the magnitude cap " + std::to_string(opts.value_cap));
            return v;
        }
        long long v = n;
        for (long long t = 0; t < n; ++t) v = eval(i - 1, v);
        return v;
    }
};

}  // namespace

long long fast_growing(int i, long long n, const FastGrowingOptions& opts) {
    if (i < 0 || n < 1) throw Error::input("fast-growing hierarchy needs i >= 0 and n >= 1");
    FgState state{opts, 0, i, n};
    return state.eval(i, n);
}

}  // namespace tsir::checks
