#include <doctest.h>

#include "tsirnorm/engine.hpp"
#include "tsirnorm/space.hpp"

using namespace tsir;

TEST_CASE("constructors validate their ranges") {
    CHECK_THROWS_AS(make_tsirelson(Rational(0)), Error);
    CHECK_THROWS_AS(make_tsirelson(Rational(1)), Error);
    CHECK_THROWS_AS(make_tsirelson(Rational(3, 2)), Error);
    CHECK_THROWS_AS(make_W(WeightSeq::geometric_theta(Rational(3, 4)), 0), Error);
    CHECK_THROWS_AS(make_V(WeightSeq::geometric_alpha(Rational(1, 2))), Error);
    CHECK_THROWS_AS(make_edgington(WeightSeq::geometric_theta(Rational(1, 2))), Error);
    CHECK_THROWS_AS(two_convexify(default_space("2x:V")), Error);
    CHECK_THROWS_AS(two_convexify(default_space("Edgington")), Error);
}

TEST_CASE("registry spaces normalize every unit vector") {
    for (const std::string& name : registry_names()) {
        SpaceConfig cfg = default_space(name);
        for (int k : {1, 2, 7, 19}) {
            CAPTURE(name);
            CHECK(eval_config(FinVec::unit(k), cfg).value == 1);
        }
    }
    CHECK_THROWS_AS(default_space("nope"), Error);
}

TEST_CASE("a tiny delta deactivates the level-1 families") {
    SpaceConfig T = make_tsirelson(Rational(1, 4));
    CHECK(eval_config(FinVec::parse("3:1,4:1,5:1"), T).value == 1);  // 3·δ ≤ 1
    SpaceConfig Thalf = make_tsirelson(Rational(1, 2));
    CHECK(eval_config(FinVec::parse("3:1,4:1,5:1"), Thalf).value == Rational(3, 2));
}

TEST_CASE("config round-trips losslessly for every registry space") {
    for (const std::string& name : registry_names()) {
        SpaceConfig cfg = default_space(name);
        SpaceConfig back = space_from_json(space_to_json(cfg));
        CAPTURE(name);
        CHECK(back.law == cfg.law);
        CHECK(back.name == cfg.name);
        CHECK(config_hash(back) == config_hash(cfg));
    }
}

TEST_CASE("explicit weights survive the config format") {
    SpaceConfig cfg = make_Vprime(
        WeightSeq::explicit_theta({Rational(1, 4), Rational(1, 2)}, Rational(1, 2)),
        WeightSeq::geometric_alpha(Rational(1, 3)));
    SpaceConfig back = space_from_json(space_to_json(cfg));
    CHECK(back.law == cfg.law);
}

TEST_CASE("unknown fields and kinds are rejected") {
    nlohmann::json good = space_to_json(default_space("V"));
    nlohmann::json bad = good;
    bad["bogus"] = 1;
    CHECK_THROWS_AS(space_from_json(bad), Error);
    nlohmann::json badkind = {{"kind", "Q"}};
    CHECK_THROWS_AS(space_from_json(badkind), Error);
    nlohmann::json badtheta = good;
    badtheta["theta"]["kind"] = "mystery";
    CHECK_THROWS_AS(space_from_json(badtheta), Error);
    nlohmann::json baddelta = {{"kind", "T"}, {"delta", "3/0"}};
    CHECK_THROWS_AS(space_from_json(baddelta), Error);
    CHECK_THROWS_AS(load_space_file("/nonexistent/space.json"), Error);
}

TEST_CASE("hashes separate different configurations") {
    CHECK(config_hash(default_space("V")) != config_hash(default_space("W")));
    CHECK(config_hash(default_space("V")) !=
          config_hash(make_V(WeightSeq::geometric_theta(Rational(1, 2)))));
    CHECK(config_hash(default_space("V")) == config_hash(default_space("V")));
}

TEST_CASE("nested two-convex config form parses") {
    nlohmann::json j = {{"kind", "2x"}, {"inner", space_to_json(default_space("V"))}};
    SpaceConfig cfg = space_from_json(j);
    CHECK(cfg.law == default_space("2x:V").law);
}
