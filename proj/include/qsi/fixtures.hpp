#ifndef QSI_FIXTURES_HPP
#define QSI_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <qsi/roots.hpp>
#include <qsi/siring.hpp>

namespace qsi {

struct BadParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Fixture {
    std::string id; // ex1 | ex2 | ex2-d4tilde | ex3
    long long n = 0; // ex3 family parameter
    Quiver quiver;
    RelationSet relations;
    DimensionVector dim;
    std::optional<GeneratorSystem> system;

    bool admissible_lambda(const Rational& lambda) const {
        if (id == "ex1") return lambda != 0;
        if (id == "ex2") return lambda != 0 && lambda != -1;
        if (id == "ex3") {
            if (lambda == 0) return false;
            for (long long k = 1; k <= n; ++k)
                if (Rational(1) + k * lambda == 0) return false;
            return true;
        }
        return false;
    }

    RepPoint<Rational> module(const Rational& lambda) const;
};

namespace detail {

inline Matrix<Rational> scalar1x1(const Rational& x) {
    Matrix<Rational> m(1, 1);
    m(0, 0) = x;
    return m;
}

} // namespace detail

inline Fixture build_ex1() {
    Fixture f;
    f.id = "ex1";
    f.quiver.vertices = {"1"};
    f.quiver.arrows = {{"x", "1", "1"}, {"y", "1", "1"}};
    const std::vector<std::vector<std::string>> rel_paths = {
        {"x", "x"}, {"y", "y"}, {"x", "y"}, {"y", "x"}};
    for (const auto& pp : rel_paths) {
        UniformElement u;
        u.terms.emplace_back(Rational(1), Path{pp, ""});
        f.relations.elements.push_back(u);
    }
    f.dim.set("1", 2);
    return f;
}

inline Fixture build_ex2() {
    Fixture f;
    f.id = "ex2";
    f.quiver.vertices = {"1", "2", "3", "4", "5"};
    f.quiver.arrows = {{"x1", "1", "2"}, {"x2", "2", "5"}, {"x3", "1", "3"},
                       {"x4", "3", "5"}, {"x5", "1", "4"}, {"x6", "4", "5"}};
    UniformElement u;
    u.terms.emplace_back(Rational(1), Path{{"x1", "x2"}, ""});
    u.terms.emplace_back(Rational(1), Path{{"x3", "x4"}, ""});
    u.terms.emplace_back(Rational(1), Path{{"x5", "x6"}, ""});
    f.relations.elements.push_back(u);
    for (const auto& v : f.quiver.vertices) f.dim.set(v, 1);

    GeneratorSystem sys;
    for (const auto& a : f.quiver.arrows) {
        Generator g;
        g.name = a.id;
        g.weight = generator_weight(f.quiver, Path{{a.id}, ""});
        g.realization = Poly::var(a.id);
        sys.generators.push_back(g);
    }
    sys.relations.push_back(Poly::parse("x1*x2 + x3*x4 + x5*x6"));
    sys.ambient_quiver = f.quiver;
    sys.ambient_dim = f.dim;
    f.system = sys;
    return f;
}

// The D4-tilde companion of the hypersurface example: four one-dimensional
// arms around a two-dimensional center.
inline Fixture build_ex2_tilde_d4() {
    Fixture f;
    f.id = "ex2-d4tilde";
    f.quiver.vertices = {"1", "2", "3", "4", "5"};
    f.quiver.arrows = {{"a1", "1", "5"}, {"a2", "2", "5"}, {"a3", "5", "3"},
                       {"a4", "5", "4"}};
    for (const auto& v : f.quiver.vertices) f.dim.set(v, 1);
    f.dim.set("5", 2);
    return f;
}

inline Fixture build_ex3(long long n) {
    if (n < 2) throw BadParams("ex3 needs n >= 2");
    Fixture f;
    f.id = "ex3";
    f.n = n;
    f.quiver.vertices.push_back("0");
    for (long long k = 1; k <= n + 2; ++k)
        f.quiver.vertices.push_back(std::to_string(k));
    f.quiver.vertices.push_back(std::to_string(n + 3));
    std::string sink = std::to_string(n + 3);
    for (long long k = 1; k <= n + 2; ++k) {
        std::string ks = std::to_string(k);
        f.quiver.arrows.push_back({"x" + ks, "0", ks});
        f.quiver.arrows.push_back({"y" + ks, ks, sink});
    }
    for (long long k = 1; k <= n; ++k) {
        UniformElement u;
        u.terms.emplace_back(Rational(1), Path{{"x1", "y1"}, ""});
        u.terms.emplace_back(Rational(k), Path{{"x2", "y2"}, ""});
        std::string k2 = std::to_string(k + 2);
        u.terms.emplace_back(Rational(1), Path{{"x" + k2, "y" + k2}, ""});
        f.relations.elements.push_back(u);
    }
    for (const auto& v : f.quiver.vertices) f.dim.set(v, 1);

    GeneratorSystem sys;
    for (const auto& a : f.quiver.arrows) {
        Generator g;
        g.name = a.id;
        g.weight = generator_weight(f.quiver, Path{{a.id}, ""});
        g.realization = Poly::var(a.id);
        sys.generators.push_back(g);
    }
    for (long long k = 1; k <= n; ++k) {
        std::string k2 = std::to_string(k + 2);
        sys.relations.push_back(Poly::parse("x1*y1 + " + std::to_string(k) +
                                            "*x2*y2 + x" + k2 + "*y" + k2));
    }
    sys.ambient_quiver = f.quiver;
    sys.ambient_dim = f.dim;
    f.system = sys;
    return f;
}

inline Fixture build_fixture(const std::string& id, long long n = 0) {
    if (id == "ex1") return build_ex1();
    if (id == "ex2") return build_ex2();
    if (id == "ex2-d4tilde") return build_ex2_tilde_d4();
    if (id == "ex3") return build_ex3(n);
    throw BadParams("unknown fixture '" + id + "'");
}

inline RepPoint<Rational> Fixture::module(const Rational& lambda) const {
    if (!admissible_lambda(lambda))
        throw BadParams("lambda = " + to_string(lambda) + " is excluded for " + id);
    RepPoint<Rational> v{quiver, dim, {}};
    if (id == "ex1") {
        Matrix<Rational> x(2, 2), y(2, 2);
        x(0, 1) = 1;
        y(0, 1) = lambda;
        v.mats["x"] = x;
        v.mats["y"] = y;
        return v;
    }
    if (id == "ex2") {
        v.mats["x1"] = detail::scalar1x1(1);
        v.mats["x2"] = detail::scalar1x1(1);
        v.mats["x3"] = detail::scalar1x1(1);
        v.mats["x4"] = detail::scalar1x1(lambda);
        v.mats["x5"] = detail::scalar1x1(1);
        v.mats["x6"] = detail::scalar1x1(Rational(-1) - lambda);
        return v;
    }
    if (id == "ex3") {
        for (long long k = 1; k <= n + 2; ++k)
            v.mats["x" + std::to_string(k)] = detail::scalar1x1(1);
        v.mats["y1"] = detail::scalar1x1(1);
        v.mats["y2"] = detail::scalar1x1(lambda);
        for (long long k = 1; k <= n; ++k)
            v.mats["y" + std::to_string(k + 2)] =
                detail::scalar1x1(Rational(-1) - k * lambda);
        return v;
    }
    throw BadParams("fixture " + id + " has no parameterized module family");
}

// --- end-to-end claim verification ---

struct Claim {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    std::string fixture;
    long long n = 0;
    std::vector<Claim> claims;

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::vector<Rational> sample_lambdas(const Fixture& f, std::size_t count,
                                            Sampler& rng) {
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational cand(rng.draw(-60, 60));
        if (!f.admissible_lambda(cand)) continue;
        if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
        out.push_back(cand);
    }
    return out;
}

} // namespace detail

inline ExampleReport verify_ex1(std::uint64_t seed) {
    Fixture f = build_ex1();
    ExampleReport rep;
    rep.fixture = "ex1";
    Sampler rng(seed);
    auto lambdas = detail::sample_lambdas(f, 6, rng);

    bool rel_ok = true;
    for (const auto& l : lambdas)
        rel_ok = rel_ok && is_point_of(f.module(l), f.relations);
    rep.claims.push_back({"relations", "band modules satisfy all four relations",
                          rel_ok, ""});

    auto m0 = f.module(lambdas[0]);
    std::size_t ed = end_dim(m0);
    long long gl = 4, orbit = gl - static_cast<long long>(ed);
    rep.claims.push_back({"end-dim", "end_dim = 2 and orbit dim = dim GL - 2",
                          ed == 2 && orbit == 2,
                          "end_dim=" + std::to_string(ed) +
                              " orbit_dim=" + std::to_string(orbit)});

    bool noniso = true;
    for (std::size_t i = 0; i + 1 < lambdas.size() && i < 5; ++i) {
        auto r = is_isomorphic(f.module(lambdas[i]), f.module(lambdas[i + 1]), 8,
                               seed ^ i);
        noniso = noniso && r.answer == IsoAnswer::No;
    }
    rep.claims.push_back({"non-isomorphic",
                          "M_lambda pairwise non-isomorphic for 5 sampled pairs",
                          noniso, ""});

    // single-vertex King screening: theta . beta = 0 forces theta = 0,
    // so no nontrivial stability parameter exists and SI is trivial
    long long beta1 = f.dim["1"];
    bool king = true;
    for (long long theta = -10; theta <= 10; ++theta)
        if (theta != 0 && theta * beta1 == 0) king = false;
    rep.claims.push_back({"si-trivial",
                          "King screening: SI(Q,C) is trivial", king, ""});
    return rep;
}

inline ExampleReport verify_ex2(std::uint64_t seed) {
    Fixture f = build_ex2();
    const GeneratorSystem& sys = *f.system;
    ExampleReport rep;
    rep.fixture = "ex2";
    Sampler rng(seed);
    auto lambdas = detail::sample_lambdas(f, 20, rng);

    bool brick_ok = true;
    for (const auto& l : lambdas) {
        auto m = f.module(l);
        brick_ok = brick_ok && is_point_of(m, f.relations) && is_brick(m);
    }
    rep.claims.push_back({"bricks",
                          "M_lambda satisfies the relation and is a brick for 20 sampled lambda",
                          brick_ok, ""});

    std::size_t jrank = jacobian_rank(sys, seed);
    auto m0 = f.module(lambdas[0]);
    std::size_t ed = end_dim(m0);
    long long gl = 5;
    long long orbit = gl - static_cast<long long>(ed);
    long long comp_dim = 6 - static_cast<long long>(jrank);
    long long codim = comp_dim - orbit;
    rep.claims.push_back(
        {"orbit", "dim GL = 5, end_dim = 1, orbit dim = 4, component dim = 5, codim 1",
         jrank == 1 && ed == 1 && orbit == 4 && comp_dim == 5 && codim == 1,
         "jacobian_rank=" + std::to_string(jrank) + " end_dim=" + std::to_string(ed) +
             " orbit_dim=" + std::to_string(orbit) +
             " component_dim=" + std::to_string(comp_dim)});

    auto mw = minimal_double_weight(sys, 6);
    rep.claims.push_back({"chi", "minimal weight has 3 monomials, codim 1",
                          mw.count == 3 && mw.codim == 1,
                          "chi=" + mw.chi.str() + " count=" + std::to_string(mw.count)});

    std::size_t d1 = weight_space_dim_symbolic(sys, mw.chi, 6);
    std::size_t d2 = weight_space_dim_symbolic(sys, 2 * mw.chi, 6);
    rep.claims.push_back({"weight-dims", "dim SI_chi = 2 and dim SI_2chi = 3",
                          d1 == 2 && d2 == 3,
                          "dim(chi)=" + std::to_string(d1) +
                              " dim(2chi)=" + std::to_string(d2)});

    auto mf = multiplicity_free_in_box(sys, 4);
    rep.claims.push_back({"multiplicity",
                          "not multiplicity free, witness chi",
                          !mf.multiplicity_free && mf.witness && *mf.witness == mw.chi,
                          mf.witness ? "witness=" + mf.witness->str() : "no witness"});
    return rep;
}

inline ExampleReport verify_ex3(long long n, std::uint64_t seed) {
    Fixture f = build_ex3(n);
    const GeneratorSystem& sys = *f.system;
    ExampleReport rep;
    rep.fixture = "ex3";
    rep.n = n;
    Sampler rng(seed);
    auto lambdas = detail::sample_lambdas(f, 10, rng);

    bool rel_ok = true;
    for (const auto& l : lambdas)
        rel_ok = rel_ok && is_point_of(f.module(l), f.relations);
    rep.claims.push_back({"relations",
                          "M_lambda satisfies all n relations for 10 sampled lambda",
                          rel_ok, ""});

    auto mw = minimal_double_weight(sys, 6);
    rep.claims.push_back(
        {"chi", "minimal weight has n+2 monomials, codim n",
         mw.count == static_cast<std::size_t>(n + 2) &&
             mw.codim == static_cast<std::size_t>(n),
         "chi=" + mw.chi.str() + " count=" + std::to_string(mw.count) +
             " codim=" + std::to_string(mw.codim)});

    std::size_t jrank = jacobian_rank(sys, seed);
    rep.claims.push_back({"jacobian", "Jacobian rank = n",
                          jrank == static_cast<std::size_t>(n),
                          "rank=" + std::to_string(jrank)});

    std::size_t d1 = weight_space_dim_symbolic(sys, mw.chi, 6);
    rep.claims.push_back({"weight-dim", "dim SI_chi = 2", d1 == 2,
                          "dim(chi)=" + std::to_string(d1)});

    // phi(x1y1, x2y2)(M_lambda) = lambda
    WeightedMonomial p(sys.generators.size(), 0), q(sys.generators.size(), 0);
    p[sys.index_of("x1")] = 1;
    p[sys.index_of("y1")] = 1;
    q[sys.index_of("x2")] = 1;
    q[sys.index_of("y2")] = 1;
    bool phi_ok = true;
    for (const auto& l : lambdas)
        phi_ok = phi_ok && phi_value(p, q, sys, f.module(l)) == l;
    rep.claims.push_back({"phi", "phi(x1y1, x2y2)(M_lambda) = lambda for 10 lambda",
                          phi_ok, ""});
    return rep;
}

inline ExampleReport verify_example(const std::string& id, long long n,
                                    std::uint64_t seed) {
    if (id == "ex1") return verify_ex1(seed);
    if (id == "ex2") return verify_ex2(seed);
    if (id == "ex3") return verify_ex3(n, seed);
    throw BadParams("verify_example: unknown fixture '" + id + "'");
}

inline nlohmann::json to_json(const ExampleReport& rep) {
    nlohmann::json j;
    j["fixture"] = rep.fixture;
    if (rep.fixture == "ex3") j["n"] = rep.n;
    j["all_pass"] = rep.all_pass();
    j["claims"] = nlohmann::json::array();
    for (const auto& c : rep.claims)
        j["claims"].push_back({{"id", c.id},
                               {"description", c.description},
                               {"pass", c.pass},
                               {"detail", c.detail}});
    return j;
}

} // namespace qsi

#endif
