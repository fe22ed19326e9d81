#include "tsirnorm/weights.hpp"

#include <algorithm>

namespace tsir {

namespace {

// scale·ratio^n, n >= 1
Rational geometric_at(const Rational& scale, const Rational& ratio, int n) {
    Rational v = scale;
    for (int i = 0; i < n; ++i) v *= ratio;
    return v;
}

}  // namespace

void WeightSeq::validate() const {
    auto in_unit = [](const Rational& r) { return r > 0 && r < 1; };
    switch (kind_) {
        case Kind::Geometric:
            if (!in_unit(ratio_)) throw Error::input("geometric ratio must lie in (0,1)");
            if (scale_ <= 0 || !in_unit(scale_ * ratio_))
                throw Error::input("geometric weights must lie in (0,1)");
            break;
        case Kind::Harmonic:
            if (role_ == WeightRole::Alpha)
                throw Error::input("harmonic weights have no finite sum; role alpha needs exact tails");
            break;
        case Kind::ExplicitGeometric: {
            if (prefix_.empty()) throw Error::input("explicit weight prefix must be nonempty");
            if (!in_unit(ratio_)) throw Error::input("tail ratio must lie in (0,1)");
            for (const Rational& v : prefix_)
                if (!in_unit(v)) throw Error::input("explicit weights must lie in (0,1)");
            break;
        }
    }
    if (role_ == WeightRole::Alpha) {
        if (tail_sum_after(0) != 1) throw Error::input("alpha weights must sum to 1 exactly");
        Rational l = lower_ratio(), u = upper_ratio();
        if (!(l > 0 && u < 1))
            throw Error::input("alpha consecutive ratios must stay inside (0,1)");
    }
}

WeightSeq WeightSeq::geometric_theta(const Rational& ratio, const Rational& scale) {
    WeightSeq w;
    w.role_ = WeightRole::Theta;
    w.kind_ = Kind::Geometric;
    w.ratio_ = ratio;
    w.scale_ = scale;
    w.validate();
    return w;
}

WeightSeq WeightSeq::geometric_alpha(const Rational& ratio) {
    WeightSeq w;
    w.role_ = WeightRole::Alpha;
    w.kind_ = Kind::Geometric;
    w.ratio_ = ratio;
    if (!(ratio > 0 && ratio < 1)) throw Error::input("geometric ratio must lie in (0,1)");
    w.scale_ = (1 - ratio) / ratio;  // makes Σ_{n≥1} scale·ratio^n = 1
    w.validate();
    return w;
}

WeightSeq WeightSeq::harmonic_theta() {
    WeightSeq w;
    w.role_ = WeightRole::Theta;
    w.kind_ = Kind::Harmonic;
    w.validate();
    return w;
}

WeightSeq WeightSeq::explicit_theta(std::vector<Rational> prefix, const Rational& tail_ratio) {
    WeightSeq w;
    w.role_ = WeightRole::Theta;
    w.kind_ = Kind::ExplicitGeometric;
    w.prefix_ = std::move(prefix);
    w.ratio_ = tail_ratio;
    w.validate();
    return w;
}

WeightSeq WeightSeq::explicit_alpha(std::vector<Rational> prefix, const Rational& tail_ratio) {
    WeightSeq w;
    w.role_ = WeightRole::Alpha;
    w.kind_ = Kind::ExplicitGeometric;
    w.prefix_ = std::move(prefix);
    w.ratio_ = tail_ratio;
    w.validate();
    return w;
}

Rational WeightSeq::at(int n) const {
    if (n < 1) throw Error::input("weight sequences are indexed from 1");
    switch (kind_) {
        case Kind::Geometric:
            return geometric_at(scale_, ratio_, n);
        case Kind::Harmonic:
            return Rational(1, n + 1);
        case Kind::ExplicitGeometric: {
            int k = static_cast<int>(prefix_.size());
            if (n <= k) return prefix_[static_cast<size_t>(n - 1)];
            return geometric_at(prefix_.back(), ratio_, n - k);
        }
    }
    throw Error::input("unreachable weight kind");
}

Rational WeightSeq::tail_sum_after(int n) const {
    if (n < 0) throw Error::input("tail sums start after a nonnegative index");
    switch (kind_) {
        case Kind::Geometric:
            // Σ_{m>n} scale·ratio^m = scale·ratio^{n+1}/(1-ratio)
            return geometric_at(scale_, ratio_, n + 1) / (1 - ratio_);
        case Kind::Harmonic:
            throw Error::input("harmonic weights have no finite tail sum");
        case Kind::ExplicitGeometric: {
            int k = static_cast<int>(prefix_.size());
            Rational sum(0);
            for (int m = n + 1; m <= k; ++m) sum += prefix_[static_cast<size_t>(m - 1)];
            int from = std::max(n, k);  // tail part: m > max(n, k)
            sum += geometric_at(prefix_.back(), ratio_, from - k + 1) / (1 - ratio_);
            return sum;
        }
    }
    throw Error::input("unreachable weight kind");
}

Rational WeightSeq::lower_ratio() const {
    switch (kind_) {
        case Kind::Geometric:
            return ratio_;
        case Kind::Harmonic:
            throw Error::input("ratio bounds are defined for role alpha only");
        case Kind::ExplicitGeometric: {
            Rational best = ratio_;
            for (size_t i = 0; i + 1 < prefix_.size(); ++i) {
                Rational r = prefix_[i + 1] / prefix_[i];
                if (r < best) best = r;
            }
            return best;
        }
    }
    throw Error::input("unreachable weight kind");
}

Rational WeightSeq::upper_ratio() const {
    switch (kind_) {
        case Kind::Geometric:
            return ratio_;
        case Kind::Harmonic:
            throw Error::input("ratio bounds are defined for role alpha only");
        case Kind::ExplicitGeometric: {
            Rational best = ratio_;
            for (size_t i = 0; i + 1 < prefix_.size(); ++i) {
                Rational r = prefix_[i + 1] / prefix_[i];
                if (r > best) best = r;
            }
            return best;
        }
    }
    throw Error::input("unreachable weight kind");
}

int WeightSeq::monotone_from() const {
    return kind_ == Kind::ExplicitGeometric ? static_cast<int>(prefix_.size()) : 1;
}

Rational WeightSeq::max_value() const {
    if (kind_ != Kind::ExplicitGeometric) return at(1);  // nonincreasing from the start
    Rational best = prefix_.front();
    for (const Rational& v : prefix_)
        if (v > best) best = v;
    return best;  // the tail decreases from prefix_.back()
}

}  // namespace tsir
