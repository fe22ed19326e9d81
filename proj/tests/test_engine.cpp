#include <doctest.h>

#include "tsirnorm/engine.hpp"
#include "tsirnorm/oracle.hpp"

using namespace tsir;

namespace {

const MixedLaw& law_of(const SpaceConfig& cfg) { return std::get<MixedLaw>(cfg.law); }

}  // namespace

TEST_CASE("iterates of the allowable-rule law, cross-checked against the norming set") {
    SpaceConfig V = default_space("V");  // θ_n = (3/4)^n
    FinVec x = FinVec::parse("2:1,3:1,4:1");
    CHECK(eval_iterate(x, law_of(V), 1).value == Rational(27, 16));
    CHECK(eval_iterate(x, law_of(V), 2).value == Rational(15, 8));
    CHECK(eval_iterate(x, law_of(V), 3).value == Rational(15, 8));
    CHECK(eval_norm(x, law_of(V)).value == Rational(15, 8));
    CHECK(eval_norm(x, law_of(V)).iterate == 2);
    for (int m = 0; m <= 3; ++m)
        CHECK(eval_iterate(x, law_of(V), m).value == oracle_norm(x, law_of(V), m));
}

TEST_CASE("singletons and degenerate inputs") {
    SpaceConfig V = default_space("V");
    for (int m : {0, 1, 4}) {
        NormResult r = eval_iterate(FinVec::unit(9), law_of(V), m);
        CHECK(r.value == 1);
        CHECK(r.certificate.kind == Certificate::Kind::Leaf);
    }
    NormResult zero = eval_norm(FinVec::zero(), law_of(V));
    CHECK(zero.value == 0);
    CHECK(zero.certificate.kind == Certificate::Kind::Zero);
    // homogeneity on a singleton: a·e_k has norm |a|
    CHECK(eval_norm(FinVec::unit(4).scaled(Rational(-3, 7)), law_of(V)).value == Rational(3, 7));
}

TEST_CASE("a flat pair under θ_1 = 1/2 stays at the sup norm") {
    SpaceConfig half = make_V(WeightSeq::geometric_theta(Rational(1, 2)));
    FinVec x = FinVec::parse("2:1,3:1");
    for (int m = 1; m <= 4; ++m) CHECK(eval_iterate(x, law_of(half), m).value == 1);
}

TEST_CASE("the admissible level-1 law") {
    SpaceConfig T = default_space("T");  // δ = 1/2
    CHECK(eval_norm(FinVec::parse("3:1,4:1,5:1"), law_of(T)).value == Rational(3, 2));
    CHECK(eval_norm(FinVec::parse("2:1,3:1"), law_of(T)).value == 1);
    FinVec x = FinVec::parse("2:1,3:-1/2,5:1/3,6:1");
    for (int m = 0; m <= 4; ++m)
        CHECK(eval_iterate(x, law_of(T), m).value == oracle_norm(x, law_of(T), m));
}

TEST_CASE("a non-monotone explicit prefix still takes the best level") {
    // θ_1 = 1/4 < θ_2 = 1/2, then a geometric tail
    SpaceConfig bump = make_V(
        WeightSeq::explicit_theta({Rational(1, 4), Rational(1, 2)}, Rational(1, 2)));
    FinVec x = FinVec::parse("2:1,3:1,4:1");
    const auto& law = std::get<MixedLaw>(bump.law);
    CHECK(eval_norm(x, law).value == Rational(3, 2));  // level 2, three singleton blocks
    for (int m = 0; m <= 3; ++m)
        CHECK(eval_iterate(x, law, m).value == oracle_norm(x, law, m));
}

TEST_CASE("the split law agrees with V where the split is inactive") {
    SpaceConfig V = default_space("V");
    SpaceConfig W = default_space("W");  // s = 1
    FinVec x = FinVec::parse("2:1,3:1,4:1");
    CHECK(eval_norm(x, law_of(W)).value == Rational(15, 8));
    CHECK(eval_norm(x, law_of(W)).value == eval_norm(x, law_of(V)).value);
    CHECK(eval_norm(FinVec::unit(3), law_of(W)).value == 1);
}

TEST_CASE("sigma sums with exact geometric tails") {
    SpaceConfig Vp = default_space("Vprime");
    const auto& law = std::get<SigmaLaw>(Vp.law);
    CHECK(eval_sigma(FinVec::unit(5), law).value == 1);
    CHECK(eval_sigma(FinVec::parse("2:1,3:1,4:1"), law).value == Rational(57, 32));
    CHECK(eval_sigma(FinVec::zero(), law).value == 0);
    CHECK(eval_sigma(FinVec::zero(), law).certificate.kind == Certificate::Kind::Zero);
}

TEST_CASE("squared recursion values") {
    SpaceConfig E = default_space("Edgington");  // α_n = 2^-n
    const auto& law = std::get<EdgingtonLaw>(E.law);
    CHECK(eval_edgington(FinVec::unit(3), law).value == 1);
    // iterate squares are 1 at n = 0 and 2 from n = 1 on; Σ α_n·2 = 2
    NormResult pair = eval_edgington(FinVec::parse("2:1,3:1"), law);
    CHECK(pair.value == 2);
    CHECK(pair.squared);
    // no admissible split separates {1,2}, so every iterate stays at the sup
    CHECK(eval_edgington(FinVec::parse("1:1,2:1"), law).value == 1);
    // dominated by Σ x_j² with equality on singletons
    FinVec y = FinVec::parse("2:1/2,3:1/3,7:1");
    CHECK(eval_edgington(y, law).value <= y.l2_squared());
}

TEST_CASE("two-convexification evaluates the inner law on the square") {
    SpaceConfig half2x = two_convexify(make_V(WeightSeq::geometric_theta(Rational(1, 2))));
    const auto& law = std::get<TwoConvexLaw>(half2x.law);
    CHECK(eval_two_convex(FinVec::unit(6), law).value == 1);
    CHECK(eval_two_convex(FinVec::parse("2:1,3:1"), law).value == 1);
    CHECK(eval_two_convex(FinVec::parse("2:1/2,3:1/2"), law).value == Rational(1, 4));
    CHECK(eval_two_convex(FinVec::parse("2:1,3:1"), law).squared);
}

TEST_CASE("monotone iterates and stabilization at the support size") {
    std::vector<FinVec> samples = {
        FinVec::parse("2:1,3:-1/2,4:1/3"),
        FinVec::parse("1:1,2:1,5:1/2,9:1"),
        FinVec::parse("3:1/3,4:1/2,5:1,6:1,7:1/2"),
    };
    for (const std::string name : {"V", "W", "T"}) {
        const MixedLaw& law = law_of(default_space(name));
        for (const FinVec& x : samples) {
            Rational prev(0);
            int m_star = x.support_size();
            for (int m = 0; m <= m_star + 1; ++m) {
                Rational v = eval_iterate(x, law, m).value;
                CHECK(v >= prev);
                CHECK(v >= x.linf());
                CHECK(v <= x.l1());
                prev = v;
            }
            CHECK(eval_iterate(x, law, m_star).value == prev);
        }
    }
}

TEST_CASE("the norming-set oracle is monotone in m and exact on singletons") {
    const MixedLaw& law = law_of(default_space("V"));
    CHECK(oracle_norm(FinVec::unit(11), law, 0) == 1);
    CHECK(oracle_norm(FinVec::unit(11), law, 3) == 1);
    FinVec x = FinVec::parse("2:1,4:-1/2,5:1,7:1/3");
    Rational prev(0);
    for (int m = 0; m <= 4; ++m) {
        Rational v = oracle_norm(x, law, m);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("guards fail loudly") {
    std::vector<std::pair<int, Rational>> wide;
    for (int j = 1; j <= 21; ++j) wide.emplace_back(j, Rational(1));
    FinVec x(std::move(wide));
    CHECK_THROWS_AS(eval_norm(x, law_of(default_space("V"))), Error);
    FinVec y = FinVec::parse("1:1,2:1,3:1,4:1,5:1,6:1,7:1,8:1,9:1");
    CHECK_THROWS_AS(oracle_norm(y, law_of(default_space("V")), 1), Error);  // oracle guard 8
    CHECK_THROWS_AS(eval_iterate(y, law_of(default_space("V")), -1), Error);
}

TEST_CASE("exact normalization by rational scaling") {
    SpaceConfig Vp = default_space("Vprime");
    FinVec v = normalize_in_space(FinVec::parse("4:1,5:1,6:1"), Vp);
    CHECK(eval_config(v, Vp).value == 1);
    CHECK_THROWS_AS(normalize_in_space(FinVec::zero(), Vp), Error);
    CHECK_THROWS_AS(normalize_in_space(FinVec::unit(2), default_space("Edgington")), Error);
}
