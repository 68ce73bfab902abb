#include <doctest.h>

#include <qsi/fixtures.hpp>
#include <qsi/quiver.hpp>

using namespace qsi;

namespace {

Quiver kronecker() {
    return {{"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}};
}

Quiver a2() {
    return {{"1", "2"}, {{"a", "1", "2"}}};
}

DimensionVector dv(std::map<std::string, long long> e) { return DimensionVector(e); }

} // namespace

TEST_CASE("validate_quiver accepts the hypersurface fixture") {
    Fixture f = build_ex2();
    CHECK(validate_quiver(f.quiver, f.relations).empty());
}

TEST_CASE("validate_quiver flags dangling arrows") {
    Quiver q{{"1"}, {{"a", "1", "9"}}};
    auto issues = validate_quiver(q, {});
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == "DanglingArrow");
}

TEST_CASE("validate_quiver flags non-uniform relations") {
    Fixture f = build_ex2();
    UniformElement u;
    u.terms.emplace_back(Rational(1), Path{{"x1", "x2"}, ""}); // 1 -> 5
    u.terms.emplace_back(Rational(1), Path{{"x3"}, ""});       // 1 -> 3
    RelationSet r{{u}};
    bool found = false;
    for (const auto& i : validate_quiver(f.quiver, r))
        found = found || i.code == "NonUniformRelation";
    CHECK(found);
}

TEST_CASE("validate_quiver flags broken paths") {
    Fixture f = build_ex2();
    UniformElement u;
    u.terms.emplace_back(Rational(1), Path{{"x2", "x1"}, ""}); // does not compose
    bool found = false;
    for (const auto& i : validate_quiver(f.quiver, RelationSet{{u}}))
        found = found || i.code == "BrokenPath";
    CHECK(found);
}

TEST_CASE("euler form on pinned cases") {
    CHECK(euler_form(kronecker(), dv({}), dv({{"1", 1}, {"2", 1}})) == 0);
    CHECK(euler_form(kronecker(), dv({{"1", 1}, {"2", 1}}), dv({{"1", 1}, {"2", 1}})) == 0);
    CHECK(euler_form(a2(), dv({{"1", 1}, {"2", 1}}), dv({{"1", 1}, {"2", 1}})) == 1);
    CHECK_THROWS_AS(euler_form(a2(), dv({{"zz", 1}}), dv({})), std::invalid_argument);
}

TEST_CASE("euler form is bilinear") {
    Sampler rng(3);
    Quiver q = kronecker();
    for (int t = 0; t < 25; ++t) {
        auto rand_dv = [&] {
            return dv({{"1", rng.draw(-4, 4)}, {"2", rng.draw(-4, 4)}});
        };
        auto a = rand_dv(), a2v = rand_dv(), b = rand_dv();
        CHECK(euler_form(q, a + a2v, b) == euler_form(q, a, b) + euler_form(q, a2v, b));
        CHECK(euler_form(q, b, a + a2v) == euler_form(q, b, a) + euler_form(q, b, a2v));
    }
}

TEST_CASE("generator weights") {
    Fixture f = build_ex2();
    CHECK(generator_weight(f.quiver, Path{{}, "3"}).is_zero());

    Weight w = generator_weight(f.quiver, Path{{"x1", "x2"}, ""});
    Weight expect;
    expect.set("1", 1);
    expect.set("5", -1);
    CHECK(w == expect);

    // additive under composition
    Weight w1 = generator_weight(f.quiver, Path{{"x1"}, ""});
    Weight w2 = generator_weight(f.quiver, Path{{"x2"}, ""});
    CHECK(w == w1 + w2);
}

TEST_CASE("Q_n paths x_k y_k all share one weight") {
    Fixture f = build_ex3(3);
    Weight expect;
    expect.set("0", 1);
    expect.set("6", -1);
    for (int k = 1; k <= 5; ++k) {
        std::string ks = std::to_string(k);
        CHECK(generator_weight(f.quiver, Path{{"x" + ks, "y" + ks}, ""}) == expect);
    }
}

TEST_CASE("character evaluation on diagonal 1x1 blocks") {
    // for an arrow a and diagonal g with entries t_x, the coordinate of a
    // transforms by t_{ta} * t_{ha}^{-1} under g.f(x) = f(g^{-1} x)
    Quiver q = a2();
    DimensionVector ones = dv({{"1", 1}, {"2", 1}});
    RepPoint<Rational> v{q, ones, {}};
    Matrix<Rational> m(1, 1);
    m(0, 0) = 5;
    v.mats["a"] = m;
    std::map<std::string, Matrix<Rational>> g;
    Matrix<Rational> g1(1, 1), g2(1, 1);
    g1(0, 0) = Rational(3);
    g2(0, 0) = Rational(7);
    g["1"] = g1;
    g["2"] = g2;
    // coordinate of the acted point: f(g^{-1} x) means the coordinate of a
    // picks up t_{ha} / t_{ta} on points, i.e. f transforms by t_ta/t_ha
    auto w = act(g, v);
    CHECK(w.mats["a"](0, 0) == Rational(5) * g2(0, 0) / g1(0, 0));
    Weight wt = generator_weight(q, Path{{"a"}, ""});
    CHECK(wt["1"] == 1);
    CHECK(wt["2"] == -1);
}

TEST_CASE("quiver JSON round trip") {
    Fixture f = build_ex2();
    auto j = to_json(f.quiver, f.relations);
    auto [q2, r2] = quiver_from_json(j);
    CHECK(to_json(q2, r2) == j);
    CHECK(validate_quiver(q2, r2).empty());
    // rational coefficients survive as strings
    UniformElement u;
    u.terms.emplace_back(Rational(3, 2), Path{{"x1", "x2"}, ""});
    u.terms.emplace_back(Rational(-1), Path{{"x3", "x4"}, ""});
    RelationSet r{{u}};
    auto j2 = to_json(f.quiver, r);
    auto [q3, r3] = quiver_from_json(j2);
    CHECK(r3.elements[0].terms[0].first == Rational(3, 2));
}

TEST_CASE("acyclicity detection") {
    CHECK(is_acyclic(a2()));
    CHECK_FALSE(is_acyclic(build_ex1().quiver));
}
