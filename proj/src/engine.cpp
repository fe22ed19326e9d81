#include "tsirnorm/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "tsirnorm/schreier.hpp"

namespace tsir {

namespace {

using Mask = std::uint32_t;

uint64_t memo_key(Mask mask, int m) {
    return static_cast<uint64_t>(mask) | (static_cast<uint64_t>(m) << 32);
}

// How a memo entry's value was attained; enough to rebuild the certificate.
struct Choice {
    enum class Kind { Zero, Leaf, Family, Carry };
    Kind kind = Kind::Zero;
    int leaf_pos = -1;         // Leaf: position into the session's index list
    int level = 0;             // Family: n of θ_n (1 for Edgington splits)
    std::vector<Mask> blocks;  // Family: canonical (increasing-minima) order
};

struct Entry {
    Rational value;
    Choice choice;
};

// Enumerates rule-conforming families over `mask` in canonical
// (lexicographically least) order and keeps the first strict maximum of
// scale·Σ child(block). For every family of subsets there is one of at least
// the same score whose blocks cover a whole tail of the mask — solidity lets
// a stray point join the block whose minimum precedes it — so only
// tail-covering families are generated. A partial family is abandoned when
// even the full mass of the unassigned points cannot push it strictly past
// the incumbent, or when its minima leave S_n (hereditariness: no completion
// can return).
struct FamilySearch {
    std::function<const Rational&(Mask)> child;       // value of a block one iterate down
    std::function<const Rational&(Mask)> total_mass;  // upper bound for unassigned points
    std::function<Rational(Mask)> child_upper;        // cheap upper bound for a block's child
    std::function<bool(Mask, int)> minima_ok;         // minima-mask ∈ S_n
    long long* families = nullptr;

    int level = 1;
    FamilyRule rule = FamilyRule::Allowable;
    Rational scale;
    Rational* best = nullptr;
    Choice* choice = nullptr;

    std::vector<Mask> blocks;
    Mask minima_mask = 0;

    void run(Mask mask) {
        blocks.clear();
        minima_mask = 0;
        for (Mask rest = mask; rest;) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            Mask cover = mask & ~((Mask(1) << p) - 1);
            extend(cover, Rational(0));
        }
    }

    void extend(Mask remaining, const Rational& partial) {
        if (!remaining) {
            ++*families;
            Rational v = scale * partial;
            if (v > *best) {
                *best = std::move(v);
                choice->kind = Choice::Kind::Family;
                choice->level = level;
                choice->blocks = blocks;
            }
            return;
        }
        if (scale * (partial + total_mass(remaining)) <= *best) return;
        int p = std::countr_zero(remaining);
        Mask pbit = Mask(1) << p;
        minima_mask |= pbit;
        if (minima_ok(minima_mask, level)) grow_block(pbit, remaining & ~pbit, partial);
        minima_mask &= ~pbit;
    }

    void grow_block(Mask block, Mask rest, const Rational& partial) {
        // close the block first: shorter blocks are lexicographically smaller,
        // so the first strict maximum found is the canonical certificate
        blocks.push_back(block);
        extend(rest, partial + child(block));
        blocks.pop_back();
        if (rule == FamilyRule::Admissible) {
            // successive blocks are runs; only the immediately next point extends
            if (rest) {
                int e = std::countr_zero(rest);
                Mask ebit = Mask(1) << e;
                if (worth_growing(block | ebit, rest & ~ebit, partial))
                    grow_block(block | ebit, rest & ~ebit, partial);
            }
        } else {
            for (Mask cand = rest; cand;) {
                int e = std::countr_zero(cand);
                cand &= cand - 1;
                Mask ebit = Mask(1) << e;
                if (worth_growing(block | ebit, rest & ~ebit, partial))
                    grow_block(block | ebit, rest & ~ebit, partial);
            }
        }
    }

    // The ℓ1 bound cannot separate block shapes (moving a point between
    // blocks is ℓ1-neutral), so extensions get a sharper cut: any completion
    // whose current block contains `block` scores at most
    // scale·(partial + child_upper(block) + mass(rest)), and that bound only
    // shrinks as the block grows further.
    bool worth_growing(Mask block, Mask rest, const Rational& partial) {
        return scale * (partial + child_upper(block) + total_mass(rest)) > *best;
    }
};

// Shared per-evaluation state: the support frozen into a bitmask universe,
// a (mask, iterate) memo, and caches for Schreier checks and mask masses.
// A session owns its tables; evaluation is logically pure, so distinct
// sessions may run concurrently without sharing.
class SessionBase {
public:
    SessionBase(const FinVec& x, int max_support, const char* what) {
        for (const auto& [j, v] : x.entries()) {
            indices_.push_back(j);
            signs_.push_back(v < 0 ? -1 : 1);
        }
        if (static_cast<int>(indices_.size()) > max_support)
            throw Error::guard(std::string(what) + ": support of size " +
                               std::to_string(indices_.size()) + " exceeds the guard " +
                               std::to_string(max_support));
        full_ = indices_.empty() ? 0 : ((Mask(1) << indices_.size()) - 1);
    }

    Mask full() const { return full_; }
    int support_size() const { return static_cast<int>(indices_.size()); }

    EvalStats stats;

protected:
    bool minima_in_schreier(Mask minima_mask, int n) {
        uint64_t key = memo_key(minima_mask, n);
        if (auto it = member_cache_.find(key); it != member_cache_.end()) return it->second;
        std::vector<int> vals;
        for (Mask rest = minima_mask; rest;) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            vals.push_back(indices_[static_cast<size_t>(p)]);
        }
        bool ok = schreier::member(IndexSet(std::move(vals)), n);
        member_cache_.emplace(key, ok);
        return ok;
    }

    const Rational& mask_mass(Mask mask, const std::vector<Rational>& weights,
                              std::unordered_map<Mask, Rational>& cache) {
        auto it = cache.find(mask);
        if (it != cache.end()) return it->second;
        Rational sum(0);
        for (Mask rest = mask; rest;) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            sum += weights[static_cast<size_t>(p)];
        }
        return cache.emplace(mask, std::move(sum)).first->second;
    }

    std::vector<int> indices_;  // support, increasing
    std::vector<int> signs_;
    Mask full_ = 0;
    std::unordered_map<uint64_t, Entry> memo_;
    std::unordered_map<uint64_t, bool> member_cache_;
    std::unordered_map<Mask, Rational> mass_cache_;
};

class MixedSession : public SessionBase {
public:
    MixedSession(const FinVec& x, const MixedLaw& law, const EngineOptions& opts)
        : SessionBase(x, opts.max_support, "norm evaluation"),
          law_(law),
          theta_max_(law.theta.max_value()) {
        for (const auto& [j, v] : x.entries()) abs_values_.push_back(abs_r(v));
    }

    const Rational& eval(Mask mask, int m) {
        uint64_t key = memo_key(mask, m);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats.memo_hits;
            return it->second.value;
        }
        ++stats.nodes;
        Entry e = compute(mask, m);
        return memo_.emplace(key, std::move(e)).first->second.value;
    }

    Certificate reconstruct(Mask mask, int m) const {
        const Entry& e = memo_.at(memo_key(mask, m));
        switch (e.choice.kind) {
            case Choice::Kind::Zero:
                return Certificate::zero();
            case Choice::Kind::Leaf: {
                size_t p = static_cast<size_t>(e.choice.leaf_pos);
                return Certificate::leaf(indices_[p], signs_[p]);
            }
            case Choice::Kind::Family: {
                Certificate c;
                c.kind = Certificate::Kind::Weighted;
                c.level = e.choice.level;
                c.weight = law_.theta.at(e.choice.level);
                for (Mask b : e.choice.blocks) c.children.push_back(reconstruct(b, m - 1));
                return c;
            }
            case Choice::Kind::Carry:
                return reconstruct(mask, m - 1);
        }
        return Certificate::zero();
    }

private:
    Entry compute(Mask mask, int m) {
        Entry e;
        if (!mask) return e;
        // iterates are stabilized past |supp|+1; alias instead of re-searching
        // (the +1 keeps the eval_norm stabilization assertion a genuine check)
        int pop = std::popcount(mask);
        if (m > pop + 1) {
            e.value = eval(mask, pop + 1);
            e.choice = {Choice::Kind::Carry, -1, 0, {}};
            return e;
        }
        for (Mask rest = mask; rest;) {  // sup-norm leaf, smallest position attaining it
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            const Rational& a = abs_values_[static_cast<size_t>(p)];
            if (a > e.value) e = {a, {Choice::Kind::Leaf, p, 0, {}}};
        }
        if (m == 0) return e;
        // Levels above max(|mask|, monotone start of θ) add no families
        // (S_n ∩ P(window) is constant once n ≥ |window|) and carry smaller
        // weights, so the sup over all levels is attained by this range.
        int n_stop = std::max(pop, law_.theta.monotone_from());
        if (law_.level_cap > 0) n_stop = std::min(n_stop, law_.level_cap);
        FamilySearch search;
        search.child = [this, m](Mask b) -> const Rational& { return eval(b, m - 1); };
        search.total_mass = [this](Mask w) -> const Rational& {
            return mask_mass(w, abs_values_, mass_cache_);
        };
        search.child_upper = [this](Mask b) {
            return std::max(mask_linf(b), Rational(theta_max_ * mask_mass(b, abs_values_,
                                                                          mass_cache_)));
        };
        search.minima_ok = [this](Mask mm, int n) { return minima_in_schreier(mm, n); };
        search.families = &stats.families;
        search.best = &e.value;
        search.choice = &e.choice;
        for (int n = 1; n <= n_stop; ++n) {
            Rational theta_n = law_.theta.at(n);
            if (theta_n * mask_mass(mask, abs_values_, mass_cache_) <= e.value)
                continue;  // θ_n·‖·‖_1 bounds every level-n family; cannot strictly improve
            search.level = n;
            search.rule = law_.rule_at(n);
            search.scale = theta_n;
            search.run(mask);
        }
        return e;
    }

    const Rational& mask_linf(Mask mask) {
        auto it = linf_cache_.find(mask);
        if (it != linf_cache_.end()) return it->second;
        Rational best(0);
        for (Mask rest = mask; rest;) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            const Rational& a = abs_values_[static_cast<size_t>(p)];
            if (a > best) best = a;
        }
        return linf_cache_.emplace(mask, std::move(best)).first->second;
    }

    MixedLaw law_;
    Rational theta_max_;
    std::vector<Rational> abs_values_;
    std::unordered_map<Mask, Rational> linf_cache_;
};

class EdgingtonSession : public SessionBase {
public:
    EdgingtonSession(const FinVec& x, const EngineOptions& opts)
        : SessionBase(x, opts.max_support, "Edgington evaluation") {
        for (const auto& [j, v] : x.entries()) sq_values_.push_back(v * v);
    }

    const Rational& eval_sq(Mask mask, int n) {
        uint64_t key = memo_key(mask, n);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats.memo_hits;
            return it->second.value;
        }
        ++stats.nodes;
        Entry e = compute(mask, n);
        return memo_.emplace(key, std::move(e)).first->second.value;
    }

    Certificate reconstruct(Mask mask, int n) const {
        const Entry& e = memo_.at(memo_key(mask, n));
        switch (e.choice.kind) {
            case Choice::Kind::Zero:
                return Certificate::zero();
            case Choice::Kind::Leaf: {
                size_t p = static_cast<size_t>(e.choice.leaf_pos);
                return Certificate::leaf(indices_[p], 1);
            }
            case Choice::Kind::Carry:
                return reconstruct(mask, n - 1);
            case Choice::Kind::Family: {
                Certificate c;
                c.kind = Certificate::Kind::SquareSplit;
                for (Mask b : e.choice.blocks) c.children.push_back(reconstruct(b, n - 1));
                return c;
            }
        }
        return Certificate::zero();
    }

private:
    Entry compute(Mask mask, int n) {
        Entry e;
        if (!mask) return e;
        if (n == 0) {
            for (Mask rest = mask; rest;) {
                int p = std::countr_zero(rest);
                rest &= rest - 1;
                const Rational& a = sq_values_[static_cast<size_t>(p)];
                if (a > e.value) e = {a, {Choice::Kind::Leaf, p, 0, {}}};
            }
            return e;
        }
        // the one-block family reproduces the previous iterate; record it as
        // a carry so certificates stay minimal
        e.value = eval_sq(mask, n - 1);
        e.choice = {Choice::Kind::Carry, -1, 0, {}};
        if (n > std::popcount(mask) + 1) return e;  // stabilized; carry down
        FamilySearch search;
        search.child = [this, n](Mask b) -> const Rational& { return eval_sq(b, n - 1); };
        search.total_mass = [this](Mask w) -> const Rational& {
            return mask_mass(w, sq_values_, mass_cache_);
        };
        search.child_upper = [this](Mask b) {
            return mask_mass(b, sq_values_, mass_cache_);  // squared iterates sit below Σx_j²
        };
        search.minima_ok = [this](Mask mm, int lvl) { return minima_in_schreier(mm, lvl); };
        search.families = &stats.families;
        search.best = &e.value;
        search.choice = &e.choice;
        search.level = 1;
        search.rule = FamilyRule::Admissible;
        search.scale = Rational(1);
        search.run(mask);
        return e;
    }

    std::vector<Rational> sq_values_;
};

int stabilization_index(const FinVec& x) { return std::max(1, x.support_size()); }

NormResult zero_result() {
    NormResult r;
    r.value = 0;
    r.certificate = Certificate::zero();
    return r;
}

}  // namespace

NormResult eval_iterate(const FinVec& x, const MixedLaw& law, int m, const EngineOptions& opts) {
    if (m < 0) throw Error::input("iterate index must be nonnegative");
    if (x.empty()) return zero_result();
    MixedSession session(x, law, opts);
    NormResult r;
    r.value = session.eval(session.full(), m);
    r.certificate = session.reconstruct(session.full(), m);
    r.iterate = m;
    for (int mm = 0; mm <= m; ++mm)
        if (session.eval(session.full(), mm) == r.value) {
            r.iterate = mm;
            break;
        }
    r.stats = session.stats;
    return r;
}

NormResult eval_norm(const FinVec& x, const MixedLaw& law, const EngineOptions& opts) {
    if (x.empty()) return zero_result();
    MixedSession session(x, law, opts);
    int m_star = stabilization_index(x);
    const Rational v = session.eval(session.full(), m_star);
    if (session.eval(session.full(), m_star + 1) != v)
        throw Error::stabilization("iterates not stabilized at m = " + std::to_string(m_star) +
                                   "; this signals an engine bug, not a user error");
    NormResult r;
    r.value = v;
    r.certificate = session.reconstruct(session.full(), m_star);
    r.iterate = m_star;
    for (int mm = 0; mm <= m_star; ++mm)
        if (session.eval(session.full(), mm) == v) {
            r.iterate = mm;
            break;
        }
    r.stats = session.stats;
    return r;
}

NormResult eval_sigma(const FinVec& x, const SigmaLaw& law, const EngineOptions& opts) {
    if (x.empty()) return zero_result();
    int m_star = stabilization_index(x);
    std::vector<Rational> iterate_values;
    std::vector<Certificate> iterate_certs;
    EvalStats stats;
    if (law.over_schreier) {
        for (int m = 1; m <= m_star + 1; ++m) {
            auto r = schreier::norm(x, m, opts.max_support);
            if (m <= m_star) {
                Certificate c;
                c.kind = Certificate::Kind::SchreierSet;
                c.level = m;
                for (int j : r.witness)
                    c.children.push_back(Certificate::leaf(j, x.at(j) < 0 ? -1 : 1));
                iterate_certs.push_back(std::move(c));
            }
            iterate_values.push_back(r.value);
        }
    } else {
        MixedSession session(x, *law.mixed, opts);
        for (int m = 1; m <= m_star + 1; ++m) {
            iterate_values.push_back(session.eval(session.full(), m));
            if (m <= m_star) iterate_certs.push_back(session.reconstruct(session.full(), m));
        }
        stats = session.stats;
    }
    if (iterate_values[static_cast<size_t>(m_star - 1)] !=
        iterate_values[static_cast<size_t>(m_star)])
        throw Error::stabilization("inner iterates not stabilized at m = " +
                                   std::to_string(m_star));
    NormResult r;
    r.stats = stats;
    r.iterate = m_star;
    r.certificate.kind = Certificate::Kind::Sigma;
    Rational total(0);
    for (int m = 1; m < m_star; ++m) {
        Rational w = law.alpha.at(m);
        total += w * iterate_values[static_cast<size_t>(m - 1)];
        r.certificate.term_levels.push_back(m);
        r.certificate.term_weights.push_back(std::move(w));
        r.certificate.children.push_back(iterate_certs[static_cast<size_t>(m - 1)]);
    }
    Rational tail = law.alpha.tail_sum_after(m_star - 1);
    total += tail * iterate_values[static_cast<size_t>(m_star - 1)];
    r.certificate.term_levels.push_back(m_star);
    r.certificate.term_weights.push_back(std::move(tail));
    r.certificate.children.push_back(iterate_certs[static_cast<size_t>(m_star - 1)]);
    r.value = std::move(total);
    return r;
}

NormResult eval_edgington(const FinVec& x, const EdgingtonLaw& law, const EngineOptions& opts) {
    NormResult r;
    r.squared = true;
    if (x.empty()) {
        r.certificate = Certificate::zero();
        return r;
    }
    EdgingtonSession session(x, opts);
    int n_star = stabilization_index(x);
    if (session.eval_sq(session.full(), n_star) != session.eval_sq(session.full(), n_star + 1))
        throw Error::stabilization("squared iterates not stabilized at n = " +
                                   std::to_string(n_star));
    r.iterate = n_star;
    r.certificate.kind = Certificate::Kind::Sigma;
    Rational total(0);
    for (int n = 1; n < n_star; ++n) {
        Rational w = law.alpha.at(n);
        total += w * session.eval_sq(session.full(), n);
        r.certificate.term_levels.push_back(n);
        r.certificate.term_weights.push_back(std::move(w));
        r.certificate.children.push_back(session.reconstruct(session.full(), n));
    }
    Rational tail = law.alpha.tail_sum_after(n_star - 1);
    total += tail * session.eval_sq(session.full(), n_star);
    r.certificate.term_levels.push_back(n_star);
    r.certificate.term_weights.push_back(std::move(tail));
    r.certificate.children.push_back(session.reconstruct(session.full(), n_star));
    r.value = std::move(total);
    r.stats = session.stats;
    return r;
}

NormResult eval_two_convex(const FinVec& x, const TwoConvexLaw& law, const EngineOptions& opts) {
    FinVec xsq = x.squared();
    NormResult inner = std::holds_alternative<MixedLaw>(law.inner)
                           ? eval_norm(xsq, std::get<MixedLaw>(law.inner), opts)
                           : eval_sigma(xsq, std::get<SigmaLaw>(law.inner), opts);
    NormResult r;
    r.value = std::move(inner.value);
    r.squared = true;
    r.iterate = inner.iterate;
    r.stats = inner.stats;
    r.certificate.kind = Certificate::Kind::TwoConvex;
    r.certificate.children.push_back(std::move(inner.certificate));
    return r;
}

NormResult eval_space(const FinVec& x, const SpaceLaw& law, const EngineOptions& opts) {
    if (const auto* m = std::get_if<MixedLaw>(&law)) return eval_norm(x, *m, opts);
    if (const auto* s = std::get_if<SigmaLaw>(&law)) return eval_sigma(x, *s, opts);
    if (const auto* e = std::get_if<EdgingtonLaw>(&law)) return eval_edgington(x, *e, opts);
    return eval_two_convex(x, std::get<TwoConvexLaw>(law), opts);
}

NormResult eval_config(const FinVec& x, const SpaceConfig& config, const EngineOptions& opts) {
    return eval_space(x, config.law, opts);
}

FinVec normalize_in_space(const FinVec& x, const SpaceConfig& config, const EngineOptions& opts) {
    if (squared_valued(config.law))
        throw Error::input("exact normalization needs a linear-valued law");
    if (x.empty()) throw Error::input("cannot normalize the zero vector");
    NormResult r = eval_config(x, config, opts);
    return x.scaled(Rational(1) / r.value);
}

}  // namespace tsir
