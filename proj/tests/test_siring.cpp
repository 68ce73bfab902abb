#include <doctest.h>

#include <qsi/fixtures.hpp>
#include <qsi/siring.hpp>

using namespace qsi;

namespace {

Weight wt(std::map<std::string, long long> e) { return Weight(e); }

WeightedMonomial mono(const GeneratorSystem& sys,
                      std::initializer_list<std::pair<std::string, long long>> e) {
    WeightedMonomial m(sys.generators.size(), 0);
    for (const auto& [name, exp] : e) m[sys.index_of(name)] = exp;
    return m;
}

// two generators with linearly independent weights: every monomial has a
// distinct weight, so the ring is free
GeneratorSystem independent_system() {
    GeneratorSystem sys;
    sys.generators.push_back({"f", wt({{"a", 1}, {"b", -1}}), std::nullopt});
    sys.generators.push_back({"g", wt({{"a", 1}, {"c", -1}}), std::nullopt});
    return sys;
}

} // namespace

TEST_CASE("validate_system") {
    Fixture ex2 = build_ex2();
    CHECK_NOTHROW(validate_system(*ex2.system));
    CHECK_NOTHROW(validate_system(*build_ex3(3).system));

    // declared weight disagreeing with the realization is rejected
    GeneratorSystem bad = *ex2.system;
    bad.relations.clear();
    bad.generators[0].weight = wt({{"1", 1}});
    CHECK_THROWS_AS(validate_system(bad), ValidationError);

    // non-homogeneous relation is rejected
    GeneratorSystem mixed = *ex2.system;
    mixed.relations.push_back(Poly::parse("x1*x2 + x3"));
    CHECK_THROWS_AS(validate_system(mixed), std::invalid_argument);
}

TEST_CASE("monomials_of_weight") {
    Fixture ex2 = build_ex2();
    const GeneratorSystem& sys = *ex2.system;
    Weight chi = wt({{"1", 1}, {"5", -1}});
    auto ms = monomials_of_weight(sys, chi, 6);
    REQUIRE(ms.size() == 3);
    std::vector<WeightedMonomial> expect{mono(sys, {{"x1", 1}, {"x2", 1}}),
                                         mono(sys, {{"x3", 1}, {"x4", 1}}),
                                         mono(sys, {{"x5", 1}, {"x6", 1}})};
    for (const auto& e : expect)
        CHECK(std::find(ms.begin(), ms.end(), e) != ms.end());

    auto zero = monomials_of_weight(sys, Weight(), 6);
    REQUIRE(zero.size() == 1);
    CHECK(total_degree(zero[0]) == 0);

    Fixture q3 = build_ex3(3);
    auto ms3 = monomials_of_weight(*q3.system, wt({{"0", 1}, {"6", -1}}), 6);
    REQUIRE(ms3.size() == 5);
    for (int k = 1; k <= 5; ++k) {
        std::string ks = std::to_string(k);
        CHECK(std::find(ms3.begin(), ms3.end(),
                        mono(*q3.system, {{"x" + ks, 1}, {"y" + ks, 1}})) != ms3.end());
    }
}

TEST_CASE("minimal_double_weight") {
    Fixture ex2 = build_ex2();
    auto rep = minimal_double_weight(*ex2.system, 6);
    CHECK(rep.chi == wt({{"1", 1}, {"5", -1}}));
    CHECK(rep.count == 3);
    CHECK(rep.codim == 1);
    CHECK(rep.unique_in_box);

    for (long long n = 2; n <= 5; ++n) {
        Fixture f = build_ex3(n);
        auto r = minimal_double_weight(*f.system, 6);
        CHECK(r.chi == wt({{"0", 1}, {std::to_string(n + 3), -1}}));
        CHECK(r.count == static_cast<std::size_t>(n + 2));
        CHECK(r.codim == static_cast<std::size_t>(n));
        CHECK(r.count == r.codim + 2);
    }

    CHECK_THROWS_AS(minimal_double_weight(independent_system(), 5), NotFoundInBox);
}

TEST_CASE("chi monomials are pairwise coprime") {
    for (auto f : {build_ex2(), build_ex3(2), build_ex3(4)}) {
        auto rep = minimal_double_weight(*f.system, 6);
        for (std::size_t i = 0; i < rep.monomials.size(); ++i)
            for (std::size_t j = i + 1; j < rep.monomials.size(); ++j)
                CHECK(coprime_supports(rep.monomials[i], rep.monomials[j]));
    }
}

TEST_CASE("weight_space_dim_symbolic oracle values") {
    Fixture ex2 = build_ex2();
    Weight chi = wt({{"1", 1}, {"5", -1}});
    CHECK(weight_space_dim_symbolic(*ex2.system, chi, 6) == 2);
    CHECK(weight_space_dim_symbolic(*ex2.system, 2 * chi, 6) == 3);

    Fixture q2 = build_ex3(2);
    CHECK(weight_space_dim_symbolic(*q2.system, wt({{"0", 1}, {"5", -1}}), 6) == 2);
}

TEST_CASE("weight_remainder") {
    Fixture ex2 = build_ex2();
    const GeneratorSystem& sys = *ex2.system;
    auto rep = minimal_double_weight(sys, 6);

    auto wr = weight_remainder(rep.chi, rep, sys, 6);
    CHECK(wr.n == 1);
    CHECK(wr.rem.is_zero());
    CHECK(wr.predicted_dim == 2);
    CHECK(wr.rem_unique);

    wr = weight_remainder(2 * rep.chi, rep, sys, 6);
    CHECK(wr.n == 2);
    CHECK(wr.rem.is_zero());
    CHECK(wr.predicted_dim == 3);

    // weight of a single arrow: no chi can be peeled off
    Weight sx1 = sys.generators[sys.index_of("x1")].weight;
    wr = weight_remainder(sx1, rep, sys, 6);
    CHECK(wr.n == 0);
    CHECK(wr.rem == sx1);
    CHECK(wr.predicted_dim == 1);
    CHECK(wr.rem_unique);

    CHECK_THROWS_AS(weight_remainder(wt({{"5", 1}, {"1", -1}}), rep, sys, 6),
                    NoMonomial);
}

TEST_CASE("predicted dim matches the symbolic dim for chi, 2chi, 3chi") {
    for (auto f : {build_ex2(), build_ex3(2), build_ex3(3)}) {
        const GeneratorSystem& sys = *f.system;
        auto rep = minimal_double_weight(sys, 6);
        for (long long k = 1; k <= 3; ++k) {
            auto wr = weight_remainder(k * rep.chi, rep, sys, 6);
            CHECK(wr.rem_unique);
            CHECK(wr.predicted_dim ==
                  weight_space_dim_symbolic(sys, k * rep.chi, 6));
        }
    }
}

TEST_CASE("jacobian_rank") {
    CHECK(jacobian_rank(*build_ex2().system, 3) == 1);
    for (long long n = 2; n <= 6; ++n) {
        Fixture f = build_ex3(n);
        CHECK(jacobian_rank(*f.system, 3) == f.system->relations.size());
        CHECK(f.system->relations.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("Q_n trinomial differences have pairwise coprime monomials") {
    // subtracting the first defining relation from the others leaves
    // trinomials k*x2y2 - x3y3 + x_{k+3}y_{k+3}
    for (long long n : {3LL, 5LL}) {
        Fixture f = build_ex3(n);
        const GeneratorSystem& sys = *f.system;
        for (std::size_t k = 1; k < sys.relations.size(); ++k) {
            Poly diff = sys.relations[k] - sys.relations[0];
            std::vector<WeightedMonomial> ms;
            for (const auto& [m, c] : diff.terms())
                ms.push_back(monomial_from_poly_term(sys, m));
            REQUIRE(ms.size() == 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j)
                    CHECK(coprime_supports(ms[i], ms[j]));
            relation_weight(sys, diff); // still weight-homogeneous
        }
    }
}

TEST_CASE("phi_value") {
    Fixture ex2 = build_ex2();
    const GeneratorSystem& sys = *ex2.system;
    auto p = mono(sys, {{"x1", 1}, {"x2", 1}});
    auto q = mono(sys, {{"x3", 1}, {"x4", 1}});
    for (auto l : {Rational(2), Rational(-3), Rational(7, 2)}) {
        auto v = ex2.module(l);
        CHECK(phi_value(p, q, sys, v) == l);
        // h_alpha = alpha*p - q vanishes at v by construction
        Rational alpha = phi_value(p, q, sys, v);
        CHECK(alpha * monomial_value(sys, p, v) - monomial_value(sys, q, v) == 0);
    }
    CHECK(phi_value(p, p, sys, ex2.module(Rational(5))) == 1);

    Fixture q2 = build_ex3(2);
    auto p2 = mono(*q2.system, {{"x1", 1}, {"y1", 1}});
    auto q2m = mono(*q2.system, {{"x2", 1}, {"y2", 1}});
    CHECK(phi_value(p2, q2m, *q2.system, q2.module(Rational(4))) == 4);

    // p vanishing is a data error
    auto bad = ex2.module(Rational(2));
    bad.mats["x1"] = Matrix<Rational>(1, 1);
    CHECK_THROWS_AS(phi_value(p, q, sys, bad), PZero);
}

TEST_CASE("phi is constant along orbits") {
    Fixture ex2 = build_ex2();
    const GeneratorSystem& sys = *ex2.system;
    auto p = mono(sys, {{"x1", 1}, {"x2", 1}});
    auto q = mono(sys, {{"x3", 1}, {"x4", 1}});
    auto v = ex2.module(Rational(3));
    Sampler rng(17);
    for (int t = 0; t < 8; ++t) {
        auto g = random_glbeta(ex2.quiver, ex2.dim, rng, Rational());
        CHECK(phi_value(p, q, sys, act(g, v)) == phi_value(p, q, sys, v));
    }
}

TEST_CASE("multiplicity_free_in_box") {
    Fixture ex2 = build_ex2();
    auto mf = multiplicity_free_in_box(*ex2.system, 4);
    CHECK_FALSE(mf.multiplicity_free);
    REQUIRE(mf.witness.has_value());
    CHECK(*mf.witness == wt({{"1", 1}, {"5", -1}}));

    for (long long n : {2LL, 4LL}) {
        auto r = multiplicity_free_in_box(*build_ex3(n).system, 4);
        CHECK_FALSE(r.multiplicity_free);
        CHECK(*r.witness == wt({{"0", 1}, {std::to_string(n + 3), -1}}));
    }

    GeneratorSystem single;
    single.generators.push_back({"f", wt({{"a", 1}, {"b", -1}}), std::nullopt});
    CHECK(multiplicity_free_in_box(single, 5).multiplicity_free);
    CHECK(multiplicity_free_in_box(independent_system(), 5).multiplicity_free);

    // monotone in the box: once false, false for all larger boxes
    for (long long box = 2; box <= 5; ++box)
        CHECK_FALSE(multiplicity_free_in_box(*ex2.system, box).multiplicity_free);
}

TEST_CASE("generator system JSON round trip") {
    Fixture ex2 = build_ex2();
    auto j = to_json(*ex2.system);
    auto sys = system_from_json(j);
    CHECK(sys.generators.size() == ex2.system->generators.size());
    CHECK(sys.relations.size() == 1);
    CHECK(to_json(sys) == j);
    for (std::size_t i = 0; i < sys.generators.size(); ++i)
        CHECK(sys.generators[i].weight == ex2.system->generators[i].weight);
}
