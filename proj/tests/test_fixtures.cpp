#include <doctest.h>

#include <qsi/fixtures.hpp>

using namespace qsi;

TEST_CASE("builders produce valid quivers and module points") {
    for (auto f : {build_ex1(), build_ex2(), build_ex3(2), build_ex3(5)}) {
        CHECK(validate_quiver(f.quiver, f.relations).empty());
        auto m = f.module(Rational(2));
        CHECK(is_point_of(m, f.relations));
        if (f.system) CHECK_NOTHROW(validate_system(*f.system));
    }
    Fixture d4 = build_ex2_tilde_d4();
    CHECK(validate_quiver(d4.quiver, d4.relations).empty());
    CHECK(d4.dim["5"] == 2);
}

TEST_CASE("module matrices match the stated families") {
    auto m1 = build_ex1().module(Rational(3));
    CHECK(m1.mats["x"](0, 1) == 1);
    CHECK(m1.mats["y"](0, 1) == 3);
    CHECK(m1.mats["x"](0, 0) == 0);

    auto m2 = build_ex2().module(Rational(2));
    CHECK(m2.mats["x4"](0, 0) == 2);
    CHECK(m2.mats["x6"](0, 0) == -3);

    // n=2, lambda=1: y-values (1, 1, -2, -3)
    auto m3 = build_ex3(2).module(Rational(1));
    CHECK(m3.mats["y1"](0, 0) == 1);
    CHECK(m3.mats["y2"](0, 0) == 1);
    CHECK(m3.mats["y3"](0, 0) == -2);
    CHECK(m3.mats["y4"](0, 0) == -3);
}

TEST_CASE("excluded parameters are rejected") {
    CHECK_THROWS_AS(build_ex1().module(Rational(0)), BadParams);
    CHECK_THROWS_AS(build_ex2().module(Rational(0)), BadParams);
    CHECK_THROWS_AS(build_ex2().module(Rational(-1)), BadParams);
    Fixture q3 = build_ex3(3);
    CHECK_THROWS_AS(q3.module(Rational(0)), BadParams);
    CHECK_THROWS_AS(q3.module(Rational(-1)), BadParams);       // 1 + 1*l = 0
    CHECK_THROWS_AS(q3.module(Rational(-1, 2)), BadParams);    // 1 + 2*l = 0
    CHECK_THROWS_AS(q3.module(Rational(-1, 3)), BadParams);    // 1 + 3*l = 0
    CHECK_NOTHROW(q3.module(Rational(-1, 4)));
    CHECK_THROWS_AS(build_ex3(1), BadParams);
    CHECK_THROWS_AS(build_fixture("nope"), BadParams);
    CHECK(build_fixture("ex3", 4).n == 4);
}

TEST_CASE("Q_n relation differences match the stated trinomials") {
    for (long long n : {2LL, 4LL}) {
        Fixture f = build_ex3(n);
        const GeneratorSystem& sys = *f.system;
        for (long long k = 1; k < n; ++k) {
            Poly diff = sys.relations[k] - sys.relations[0];
            std::string k3 = std::to_string(k + 3);
            Poly expect = Poly::parse(std::to_string(k) + "*x2*y2 - x3*y3 + x" +
                                      k3 + "*y" + k3);
            CHECK(diff.str() == expect.str());
        }
    }
}

TEST_CASE("verify_example passes every claim") {
    for (const auto& rep :
         {verify_ex1(7), verify_ex2(7), verify_ex3(2, 7), verify_ex3(4, 7)}) {
        CHECK(rep.all_pass());
        for (const auto& c : rep.claims) {
            INFO(rep.fixture, " n=", rep.n, " claim ", c.id, ": ", c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("verify_example is deterministic given the seed") {
    auto a = to_json(verify_example("ex2", 0, 42));
    auto b = to_json(verify_example("ex2", 0, 42));
    CHECK(a.dump() == b.dump());
    auto c = to_json(verify_example("ex3", 3, 9));
    auto d = to_json(verify_example("ex3", 3, 9));
    CHECK(c.dump() == d.dump());
    CHECK_THROWS_AS(verify_example("nope", 0, 1), BadParams);
}

TEST_CASE("example report JSON shape") {
    auto j = to_json(verify_ex2(1));
    CHECK(j["fixture"] == "ex2");
    CHECK(j["all_pass"].is_boolean());
    REQUIRE(j["claims"].is_array());
    for (const auto& c : j["claims"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("description"));
    }
}
