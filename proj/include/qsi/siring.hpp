#ifndef QSI_SIRING_HPP
#define QSI_SIRING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>
#include <qsi/lattice.hpp>
#include <qsi/matrix.hpp>
#include <qsi/poly.hpp>
#include <qsi/quiver.hpp>
#include <qsi/rep.hpp>

namespace qsi {

struct Generator {
    std::string name;
    Weight weight;
    std::optional<Poly> realization; // polynomial in ambient coordinates
};

// Abstract semi-invariant generator system: named generators with weights,
// weight-homogeneous relations expressed as polynomials in the generator
// names, and an optional ambient (Q, beta) for realizations.
struct GeneratorSystem {
    std::vector<Generator> generators;
    std::vector<Poly> relations;
    std::optional<Quiver> ambient_quiver;
    std::optional<DimensionVector> ambient_dim;

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name) return i;
        throw std::invalid_argument("unknown generator " + name);
    }
};

// Exponent vector over the generators of a system.
using WeightedMonomial = std::vector<long long>;

inline Weight weight_of(const GeneratorSystem& sys, const WeightedMonomial& m) {
    Weight w;
    for (std::size_t i = 0; i < m.size(); ++i)
        w = w + m[i] * sys.generators[i].weight;
    return w;
}

inline long long total_degree(const WeightedMonomial& m) {
    long long d = 0;
    for (auto e : m) d += e;
    return d;
}

inline bool divides(const WeightedMonomial& a, const WeightedMonomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool coprime_supports(const WeightedMonomial& a, const WeightedMonomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline std::string monomial_str(const GeneratorSystem& sys, const WeightedMonomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += sys.generators[i].name;
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline WeightedMonomial monomial_from_poly_term(const GeneratorSystem& sys,
                                                const Poly::Monomial& m) {
    WeightedMonomial e(sys.generators.size(), 0);
    for (const auto& [name, exp] : m) e[sys.index_of(name)] = exp;
    return e;
}

// Weight of a (required weight-homogeneous) relation.
inline Weight relation_weight(const GeneratorSystem& sys, const Poly& rel) {
    std::optional<Weight> w;
    for (const auto& [m, c] : rel.terms()) {
        Weight tw = weight_of(sys, monomial_from_poly_term(sys, m));
        if (w && *w != tw)
            throw std::invalid_argument("relation is not weight-homogeneous: " + rel.str());
        w = tw;
    }
    if (!w) throw std::invalid_argument("empty relation");
    return *w;
}

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Checks the GeneratorSystem invariants: homogeneous relations, and
// realization weights matching declared weights (for all-ones ambient).
inline void validate_system(const GeneratorSystem& sys) {
    for (const auto& rel : sys.relations) relation_weight(sys, rel);
    if (!sys.ambient_quiver) return;
    const Quiver& q = *sys.ambient_quiver;
    for (const auto& g : sys.generators) {
        if (!g.realization) continue;
        // realization must be weight-homogeneous of the declared weight;
        // for coordinate realizations each variable is an arrow
        for (const auto& [m, c] : g.realization->terms()) {
            Weight w;
            for (const auto& [var, exp] : m) {
                const Arrow* a = q.arrow(var);
                if (!a)
                    throw ValidationError("realization of " + g.name +
                                          " uses unknown coordinate " + var);
                Path p{{var}, ""};
                w = w + exp * generator_weight(q, p);
            }
            if (w != g.weight)
                throw ValidationError("realization weight of " + g.name +
                                      " does not match its declared weight");
        }
    }
}

// All exponent vectors a >= 0 with sum a_i weight_i = sigma and entries
// <= bound, via the lattice solver; ascending lexicographic order.
inline std::vector<WeightedMonomial> monomials_of_weight(const GeneratorSystem& sys,
                                                         const Weight& sigma,
                                                         long long bound) {
    std::set<std::string> verts;
    for (const auto& g : sys.generators)
        for (const auto& [v, x] : g.weight.entries()) verts.insert(v);
    for (const auto& [v, x] : sigma.entries()) verts.insert(v);

    IntMatrix a;
    IntVector b;
    for (const auto& v : verts) {
        IntVector row;
        for (const auto& g : sys.generators) row.push_back(g.weight[v]);
        a.push_back(row);
        b.push_back(sigma[v]);
    }
    if (a.empty()) { // no constraints at all
        a.push_back(IntVector(sys.generators.size(), 0));
        b.push_back(0);
    }
    return nonneg_lattice_solutions(a, b, bound);
}

struct PencilElement {
    Rational alpha;
    WeightedMonomial p, q; // distinct, same weight; h_alpha = alpha*p - q
};

struct MinimalWeightReport {
    Weight chi;
    std::vector<WeightedMonomial> monomials;
    std::size_t count = 0;
    std::size_t codim = 0; // count - 2
    bool unique_in_box = true;
};

struct NotFoundInBox : std::runtime_error {
    NotFoundInBox()
        : std::runtime_error("no weight with >= 2 monomials within the search box") {}
};

namespace detail {

inline void enumerate_degree(std::size_t n, long long degree, WeightedMonomial& cur,
                             std::vector<WeightedMonomial>& out) {
    if (cur.size() + 1 == n) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long long e = 0; e <= degree; ++e) {
        cur.push_back(e);
        enumerate_degree(n, degree - e, cur, out);
        cur.pop_back();
    }
}

// all exponent vectors of the given total degree, ascending lex
inline std::vector<WeightedMonomial> monomials_of_degree(std::size_t n,
                                                         long long degree) {
    std::vector<WeightedMonomial> out;
    if (n == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    WeightedMonomial cur;
    enumerate_degree(n, degree, cur, out);
    return out;
}

} // namespace detail

// Scans weights realized by monomials of total degree 0..box in increasing
// degree order and returns the first weight carrying at least two
// monomials; ties at the same degree break lexicographically on the weight
// vector. The reported count uses the full per-entry box.
inline MinimalWeightReport minimal_double_weight(const GeneratorSystem& sys,
                                                 long long box) {
    if (box < 1) throw std::invalid_argument("box must be >= 1");
    std::size_t n = sys.generators.size();
    std::map<Weight, std::vector<WeightedMonomial>> seen;
    for (long long d = 0; d <= box; ++d) {
        for (const auto& m : detail::monomials_of_degree(n, d))
            seen[weight_of(sys, m)].push_back(m);
        std::vector<Weight> doubled;
        for (const auto& [w, ms] : seen)
            if (ms.size() >= 2) doubled.push_back(w);
        if (doubled.empty()) continue;
        std::sort(doubled.begin(), doubled.end());
        MinimalWeightReport rep;
        rep.chi = doubled.front();
        rep.monomials = monomials_of_weight(sys, rep.chi, box);
        rep.count = rep.monomials.size();
        rep.codim = rep.count >= 2 ? rep.count - 2 : 0;
        // another minimal weight counts against uniqueness only if its
        // monomials are not just chi-monomial multiples
        for (std::size_t i = 1; i < doubled.size(); ++i) {
            const auto& ms = seen[doubled[i]];
            std::size_t fresh = 0;
            for (const auto& m : ms) {
                bool multiple = false;
                for (const auto& cm : rep.monomials)
                    if (total_degree(cm) > 0 && divides(cm, m)) { multiple = true; break; }
                if (!multiple) ++fresh;
            }
            if (fresh >= 2) rep.unique_in_box = false;
        }
        return rep;
    }
    throw NotFoundInBox();
}

// dim of span of weight-sigma monomials modulo the weight-sigma graded
// piece of the relation ideal, as (monomial count) - rank of the
// coefficient matrix of the products m*H.
inline std::size_t weight_space_dim_symbolic(const GeneratorSystem& sys,
                                             const Weight& sigma, long long bound) {
    auto base = monomials_of_weight(sys, sigma, bound);
    // rows of the graded ideal piece: m * H for every relation H and every
    // monomial m of weight sigma - weight(H)
    std::vector<std::map<WeightedMonomial, Rational>> products;
    for (const auto& rel : sys.relations) {
        Weight wh = relation_weight(sys, rel);
        std::vector<std::pair<WeightedMonomial, Rational>> relvec;
        for (const auto& [m, c] : rel.terms())
            relvec.emplace_back(monomial_from_poly_term(sys, m), c);
        for (const auto& m : monomials_of_weight(sys, sigma - wh, bound)) {
            std::map<WeightedMonomial, Rational> prod;
            for (const auto& [rm, c] : relvec) {
                WeightedMonomial t = rm;
                for (std::size_t i = 0; i < t.size(); ++i) t[i] += m[i];
                prod[t] += c;
            }
            products.push_back(std::move(prod));
        }
    }
    std::set<WeightedMonomial> all(base.begin(), base.end());
    for (const auto& p : products)
        for (const auto& [m, c] : p) all.insert(m);
    std::map<WeightedMonomial, std::size_t> col;
    std::size_t nc = 0;
    for (const auto& m : all) col[m] = nc++;
    Matrix<Rational> mat(products.size(), nc);
    for (std::size_t r = 0; r < products.size(); ++r)
        for (const auto& [m, c] : products[r]) mat(r, col[m]) = c;
    return all.size() - rank(mat);
}

struct NoMonomial : std::runtime_error {
    NoMonomial() : std::runtime_error("the weight is not realizable by any monomial") {}
};

struct WeightRemainder {
    long long n = 0;      // max k with sigma - k*chi realizable
    Weight rem;           // sigma - n*chi
    std::size_t predicted_dim = 0; // n+1 when rem has exactly one monomial
    bool rem_unique = true;        // false flags the prediction
};

inline WeightRemainder weight_remainder(const Weight& sigma,
                                        const MinimalWeightReport& report,
                                        const GeneratorSystem& sys, long long bound) {
    if (monomials_of_weight(sys, sigma, bound).empty()) throw NoMonomial();
    long long n = 0;
    while (n < bound &&
           !monomials_of_weight(sys, sigma - (n + 1) * report.chi, bound).empty())
        ++n;
    WeightRemainder wr;
    wr.n = n;
    wr.rem = sigma - n * report.chi;
    auto rem_monos = monomials_of_weight(sys, wr.rem, bound);
    wr.rem_unique = rem_monos.size() == 1;
    wr.predicted_dim = static_cast<std::size_t>(n + 1);
    return wr;
}

// Rank of (dH_i / df_j) at random rational points with nonzero
// coordinates; three points, max rank reported.
inline std::size_t jacobian_rank(const GeneratorSystem& sys, std::uint64_t seed) {
    if (sys.relations.empty()) return 0;
    std::size_t best = 0;
    Sampler rng(seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::map<std::string, Rational> point;
        for (const auto& g : sys.generators)
            point[g.name] = Rational(rng.draw(1, 1000000));
        Matrix<Rational> jac(sys.relations.size(), sys.generators.size());
        for (std::size_t i = 0; i < sys.relations.size(); ++i)
            for (std::size_t j = 0; j < sys.generators.size(); ++j)
                jac(i, j) = sys.relations[i]
                                .derivative(sys.generators[j].name)
                                .evaluate(point);
        best = std::max(best, rank(jac));
    }
    return best;
}

struct PZero : std::runtime_error {
    PZero() : std::runtime_error("p vanishes at the given point") {}
};

// Value of a generator's realization at a representation point; the
// fixtures use all-ones dimension vectors so coordinates are 1x1 entries.
inline Rational generator_value(const GeneratorSystem& sys, const Generator& g,
                                const RepPoint<Rational>& v) {
    if (!g.realization)
        throw std::invalid_argument("generator " + g.name + " has no realization");
    std::map<std::string, Rational> point;
    for (const auto& [arrow, m] : v.mats) {
        if (m.rows() != 1 || m.cols() != 1)
            throw std::invalid_argument("realization evaluation needs 1x1 coordinates");
        point[arrow] = m(0, 0);
    }
    return g.realization->evaluate(point);
}

inline Rational monomial_value(const GeneratorSystem& sys, const WeightedMonomial& m,
                               const RepPoint<Rational>& v) {
    Rational r(1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        Rational g = generator_value(sys, sys.generators[i], v);
        for (long long e = 0; e < m[i]; ++e) r *= g;
    }
    return r;
}

// phi(M) = q(M)/p(M); by construction h_alpha = alpha*p - q vanishes at M.
inline Rational phi_value(const WeightedMonomial& p, const WeightedMonomial& q,
                          const GeneratorSystem& sys, const RepPoint<Rational>& v) {
    Rational pv = monomial_value(sys, p, v);
    if (pv == 0) throw PZero();
    return monomial_value(sys, q, v) / pv;
}

struct MultiplicityReport {
    bool multiplicity_free = true;
    std::optional<Weight> witness; // first weight with dim >= 2 in scan order
};

// false iff some weight realized within degree <= box has symbolic weight
// space dimension >= 2.
inline MultiplicityReport multiplicity_free_in_box(const GeneratorSystem& sys,
                                                   long long box) {
    std::size_t n = sys.generators.size();
    std::map<Weight, std::size_t> counts;
    for (long long d = 0; d <= box; ++d) {
        std::vector<Weight> fresh;
        for (const auto& m : detail::monomials_of_degree(n, d)) {
            Weight w = weight_of(sys, m);
            if (++counts[w] == 2) fresh.push_back(w);
        }
        std::sort(fresh.begin(), fresh.end());
        for (const auto& w : fresh)
            if (weight_space_dim_symbolic(sys, w, box) >= 2)
                return {false, w};
    }
    return {true, std::nullopt};
}

// --- JSON (the generator-system file format used by the CLI) ---

inline nlohmann::json to_json(const GeneratorSystem& sys) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : sys.generators) {
        nlohmann::json jg{{"name", g.name}, {"weight", to_json(g.weight)}};
        if (g.realization) jg["realization"] = g.realization->str();
        j["generators"].push_back(jg);
    }
    j["relations"] = nlohmann::json::array();
    for (const auto& r : sys.relations) j["relations"].push_back(r.str());
    return j;
}

inline GeneratorSystem system_from_json(const nlohmann::json& j) {
    GeneratorSystem sys;
    for (const auto& jg : j.at("generators")) {
        Generator g;
        g.name = jg.at("name");
        g.weight = intvec_from_json(jg.at("weight"));
        if (jg.contains("realization"))
            g.realization = Poly::parse(jg["realization"].get<std::string>());
        sys.generators.push_back(std::move(g));
    }
    if (j.contains("relations"))
        for (const auto& r : j["relations"])
            sys.relations.push_back(Poly::parse(r.get<std::string>()));
    return sys;
}

} // namespace qsi

#endif
