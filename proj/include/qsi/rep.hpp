#ifndef QSI_REP_HPP
#define QSI_REP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <qsi/matrix.hpp>
#include <qsi/quiver.hpp>

namespace qsi {

// Deterministic bounded draws; all randomness in the library flows through
// this, seeded explicitly by the caller.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    long long draw(long long lo, long long hi) {
        return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

template <class F>
F from_rational(const Rational& x, const F& proto);

template <>
inline Rational from_rational<Rational>(const Rational& x, const Rational&) { return x; }

template <>
inline Fp from_rational<Fp>(const Rational& x, const Fp& proto) {
    std::uint64_t p = proto.modulus();
    Integer num = numerator(x) % p;
    Integer den = denominator(x) % p;
    Fp n(static_cast<long long>(num), p);
    Fp d(static_cast<long long>(den), p);
    return n / d;
}

template <class F>
F from_int(long long v, const F& proto);

template <>
inline Rational from_int<Rational>(long long v, const Rational&) { return Rational(v); }
template <>
inline Fp from_int<Fp>(long long v, const Fp& proto) { return Fp(v, proto.modulus()); }

// A point of rep_beta(Q, R): one matrix per arrow, of shape
// beta(head) x beta(tail).
template <class F = Rational>
struct RepPoint {
    Quiver quiver;
    DimensionVector dim;
    std::map<std::string, Matrix<F>> mats;

    const Matrix<F>& at(const std::string& arrow_id) const { return mats.at(arrow_id); }
    F proto() const {
        for (const auto& [id, m] : mats) return m.zero();
        return F();
    }
    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& v : quiver.vertices) n += static_cast<std::size_t>(dim[v]);
        return n;
    }
};

template <class F>
Matrix<F> evaluate_path(const RepPoint<F>& v, const Path& p) {
    if (p.trivial()) {
        auto n = static_cast<std::size_t>(v.dim[p.anchor]);
        return Matrix<F>::identity(n, v.proto());
    }
    Matrix<F> m = v.at(p.arrows.front());
    for (std::size_t i = 1; i < p.arrows.size(); ++i)
        m = v.at(p.arrows[i]) * m;
    return m;
}

// V(u) = sum lambda_i V(p_i)
template <class F>
Matrix<F> evaluate_uniform(const RepPoint<F>& v, const UniformElement& u) {
    std::optional<Matrix<F>> acc;
    for (const auto& [coeff, p] : u.terms) {
        Matrix<F> term = evaluate_path(v, p).scaled(from_rational<F>(coeff, v.proto()));
        acc = acc ? *acc + term : term;
    }
    return *acc;
}

template <class F>
bool is_point_of(const RepPoint<F>& v, const RelationSet& r) {
    for (const auto& u : r.elements)
        if (!evaluate_uniform(v, u).is_zero_matrix()) return false;
    return true;
}

template <class F = Rational>
struct HomSpace {
    std::size_t dim = 0;
    // each basis element: one matrix per vertex, shape w.dim x v.dim
    std::vector<std::map<std::string, Matrix<F>>> basis;
};

// Solution space of the intertwiner equations g_{ha} V(a) = W(a) g_{ta},
// computed exactly as a kernel.
template <class F>
HomSpace<F> hom_space(const RepPoint<F>& v, const RepPoint<F>& w) {
    F proto = v.proto();
    // unknown layout: for each vertex x, the entries of g_x (row major)
    std::map<std::string, std::size_t> offset;
    std::size_t nunk = 0;
    for (const auto& x : v.quiver.vertices) {
        offset[x] = nunk;
        nunk += static_cast<std::size_t>(w.dim[x] * v.dim[x]);
    }
    std::size_t neq = 0;
    for (const auto& a : v.quiver.arrows)
        neq += static_cast<std::size_t>(w.dim[a.head] * v.dim[a.tail]);

    Matrix<F> sys(neq, nunk, proto);
    std::size_t row = 0;
    for (const auto& a : v.quiver.arrows) {
        const Matrix<F>& va = v.at(a.id);
        const Matrix<F>& wa = w.at(a.id);
        auto wh = static_cast<std::size_t>(w.dim[a.head]);
        auto vt = static_cast<std::size_t>(v.dim[a.tail]);
        auto vh = static_cast<std::size_t>(v.dim[a.head]);
        auto wt = static_cast<std::size_t>(w.dim[a.tail]);
        for (std::size_t i = 0; i < wh; ++i)
            for (std::size_t j = 0; j < vt; ++j) {
                // (g_h V(a))_{ij} = sum_k g_h[i,k] V(a)[k,j]
                for (std::size_t k = 0; k < vh; ++k)
                    sys(row, offset[a.head] + i * vh + k) += va(k, j);
                // -(W(a) g_t)_{ij} = -sum_k W(a)[i,k] g_t[k,j]
                for (std::size_t k = 0; k < wt; ++k)
                    sys(row, offset[a.tail] + k * vt + j) -= wa(i, k);
                ++row;
            }
    }

    HomSpace<F> hs;
    auto rk = rank_kernel(sys);
    hs.dim = rk.kernel_basis.size();
    for (const auto& vec : rk.kernel_basis) {
        std::map<std::string, Matrix<F>> g;
        for (const auto& x : v.quiver.vertices) {
            auto r = static_cast<std::size_t>(w.dim[x]);
            auto c = static_cast<std::size_t>(v.dim[x]);
            Matrix<F> gx(r, c, proto);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    gx(i, j) = vec[offset[x] + i * c + j];
            g[x] = gx;
        }
        hs.basis.push_back(std::move(g));
    }
    return hs;
}

template <class F>
std::size_t end_dim(const RepPoint<F>& v) {
    return hom_space(v, v).dim;
}

template <class F>
bool is_brick(const RepPoint<F>& v, std::size_t* end_out = nullptr) {
    std::size_t e = end_dim(v);
    if (end_out) *end_out = e;
    return e == 1;
}

// --- sampling ---

template <class F = Rational>
RepPoint<F> sample_generic(const Quiver& q, const DimensionVector& dim,
                           Sampler& rng, const F& proto = F()) {
    RepPoint<F> v{q, dim, {}};
    for (const auto& a : q.arrows) {
        auto r = static_cast<std::size_t>(dim[a.head]);
        auto c = static_cast<std::size_t>(dim[a.tail]);
        Matrix<F> m(r, c, proto);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = from_int<F>(rng.draw(-100, 100), proto);
        v.mats[a.id] = m;
    }
    return v;
}

template <class F>
std::map<std::string, Matrix<F>> random_glbeta(const Quiver& q,
                                               const DimensionVector& dim,
                                               Sampler& rng, const F& proto = F()) {
    std::map<std::string, Matrix<F>> g;
    for (const auto& x : q.vertices) {
        auto n = static_cast<std::size_t>(dim[x]);
        Matrix<F> m(n, n, proto);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = from_int<F>(rng.draw(-100, 100), proto);
        } while (!is_invertible(m));
        g[x] = m;
    }
    return g;
}

template <class F>
RepPoint<F> act(const std::map<std::string, Matrix<F>>& g, const RepPoint<F>& v) {
    RepPoint<F> w = v;
    for (const auto& a : v.quiver.arrows)
        w.mats[a.id] = g.at(a.head) * v.at(a.id) * inverse(g.at(a.tail));
    return w;
}

// --- isomorphism testing ---

enum class IsoAnswer { Yes, No, Inconclusive };

template <class F = Rational>
struct IsoResult {
    IsoAnswer answer = IsoAnswer::Inconclusive;
    std::optional<std::map<std::string, Matrix<F>>> certificate;
    std::string reason;
};

template <class F>
bool intertwiner_valid(const RepPoint<F>& v, const RepPoint<F>& w,
                       const std::map<std::string, Matrix<F>>& g) {
    for (const auto& a : v.quiver.arrows)
        if (!(g.at(a.head) * v.at(a.id) == w.at(a.id) * g.at(a.tail))) return false;
    return true;
}

template <class F>
IsoResult<F> is_isomorphic(const RepPoint<F>& v, const RepPoint<F>& w,
                           std::size_t trials, std::uint64_t seed) {
    IsoResult<F> res;
    if (v.dim != w.dim) {
        res.answer = IsoAnswer::No;
        res.reason = "dimension vectors differ";
        return res;
    }
    auto hvw = hom_space(v, w);
    auto hwv = hom_space(w, v);
    std::size_t ev = end_dim(v), ew = end_dim(w);
    if (hvw.dim != hwv.dim || hvw.dim < ev || hvw.dim < ew) {
        res.answer = IsoAnswer::No;
        res.reason = "hom dimensions rule out an isomorphism";
        return res;
    }
    if (hvw.dim == 0) {
        res.answer = IsoAnswer::No;
        res.reason = "no nonzero homomorphism";
        return res;
    }
    Sampler rng(seed);
    F proto = v.proto();
    for (std::size_t t = 0; t < trials; ++t) {
        std::map<std::string, Matrix<F>> g;
        for (const auto& x : v.quiver.vertices) {
            auto n = static_cast<std::size_t>(v.dim[x]);
            g[x] = Matrix<F>(n, n, proto);
        }
        for (const auto& b : hvw.basis) {
            F c = from_int<F>(rng.draw(-100, 100), proto);
            for (auto& [x, gx] : g) gx = gx + b.at(x).scaled(c);
        }
        bool invertible = true;
        for (const auto& [x, gx] : g)
            if (!is_invertible(gx)) { invertible = false; break; }
        if (invertible && intertwiner_valid(v, w, g)) {
            res.answer = IsoAnswer::Yes;
            res.certificate = g;
            return res;
        }
    }
    res.answer = IsoAnswer::Inconclusive;
    res.reason = "no invertible intertwiner found in given trials";
    return res;
}

// --- generic hom/ext (hereditary) ---

struct HomExt {
    std::size_t hom = 0;
    std::size_t ext = 0;
};

// hom is taken as the minimum over independent sample pairs; by upper
// semicontinuity this equals the generic value with high probability.
// ext = hom - <a,b>.
template <class F = Rational>
HomExt generic_hom_ext(const Quiver& q, const DimensionVector& a,
                       const DimensionVector& b, std::size_t samples,
                       std::uint64_t seed, const F& proto = F()) {
    require_acyclic(q);
    std::size_t best = SIZE_MAX;
    for (std::size_t s = 0; s < samples; ++s) {
        Sampler rng(seed ^ s);
        auto va = sample_generic<F>(q, a, rng, proto);
        auto vb = sample_generic<F>(q, b, rng, proto);
        best = std::min(best, hom_space(va, vb).dim);
    }
    HomExt he;
    he.hom = best;
    long long e = static_cast<long long>(best) - euler_form(q, a, b);
    he.ext = e < 0 ? 0 : static_cast<std::size_t>(e);
    return he;
}

struct OrbitReport {
    std::size_t end_dim = 0;
    long long gl_dim = 0;
    long long orbit_dim = 0;
    long long codim = 0; // = end_dim - <beta,beta> for hereditary
};

template <class F>
OrbitReport orbit_codim_hereditary(const RepPoint<F>& v) {
    require_acyclic(v.quiver);
    OrbitReport r;
    r.end_dim = end_dim(v);
    for (const auto& x : v.quiver.vertices) r.gl_dim += v.dim[x] * v.dim[x];
    r.orbit_dim = r.gl_dim - static_cast<long long>(r.end_dim);
    r.codim = static_cast<long long>(r.end_dim) - euler_form(v.quiver, v.dim, v.dim);
    return r;
}

// --- Fitting splitting ---

template <class F>
struct SplitResult {
    std::vector<DimensionVector> parts; // sorted, parts sum to the input dim
    bool monte_carlo = false;           // true when some summand was declared
                                        // indecomposable only after exhausting trials
};

namespace detail {

// --- minimal polynomial and eigenvalue machinery for Fitting splitting ---

// monic minimal polynomial (ascending coefficients) of the block-diagonal
// endomorphism phi, via a Krylov sequence of flattened powers
template <class F>
std::vector<F> minimal_polynomial(const Quiver& q, const DimensionVector& dim,
                                  const std::map<std::string, Matrix<F>>& phi,
                                  const F& proto) {
    std::size_t flat = 0, total = 0;
    for (const auto& x : q.vertices) {
        auto n = static_cast<std::size_t>(dim[x]);
        flat += n * n;
        total += n;
    }
    F zero = proto - proto;
    F one = Matrix<F>::identity(1, proto)(0, 0);
    std::map<std::string, Matrix<F>> power;
    for (const auto& x : q.vertices) {
        auto n = static_cast<std::size_t>(dim[x]);
        power[x] = Matrix<F>::identity(n, proto);
    }
    std::vector<std::vector<F>> rows;
    for (std::size_t k = 0; k <= total; ++k) {
        std::vector<F> row;
        row.reserve(flat);
        for (const auto& x : q.vertices) {
            const auto& m = power.at(x);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
        Matrix<F> stack(rows.size(), flat, proto);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < flat; ++c) stack(r, c) = rows[r][c];
        if (rank(stack) < rows.size()) {
            // solve: highest power = combination of the lower ones
            Matrix<F> sys(flat, k, proto);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t r = 0; r < flat; ++r) sys(r, c) = rows[c][r];
            // least-squares-free exact solve via augmented kernel
            Matrix<F> aug(flat, k + 1, proto);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t r = 0; r < flat; ++r) aug(r, c) = rows[c][r];
            for (std::size_t r = 0; r < flat; ++r) aug(r, k) = rows[k][r];
            auto rk = rank_kernel(aug);
            for (const auto& v : rk.kernel_basis) {
                if (is_zero(v[k])) continue;
                std::vector<F> coeffs(k + 1, zero);
                for (std::size_t i = 0; i < k; ++i) coeffs[i] = v[i] / v[k];
                coeffs[k] = one;
                return coeffs;
            }
        }
        for (auto& [x, m] : power) m = phi.at(x) * m;
    }
    return {one}; // zero-dimensional space
}

inline Rational poly_eval(const std::vector<Rational>& c, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

inline std::vector<Rational> poly_derivative(const std::vector<Rational>& c) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rational(i));
    return d;
}

inline std::vector<Rational> poly_mod(std::vector<Rational> a,
                                      const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !b.empty()) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline bool poly_squarefree(const std::vector<Rational>& m) {
    std::vector<Rational> a = m, b = poly_derivative(m);
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a.size() == 1; // gcd is a constant
}

// rational roots of a rational polynomial: root scan modulo several small
// primes, CRT, rational reconstruction, exact verification
inline std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    static const std::uint64_t primes[] = {32003, 32009, 32027, 32029, 32051};
    // clear denominators
    Integer lcm = 1;
    for (const auto& c : coeffs) {
        Integer d = denominator(c);
        lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Integer> ic;
    for (const auto& c : coeffs)
        ic.push_back(numerator(c * Rational(lcm)));
    while (!ic.empty() && ic.back() == 0) ic.pop_back();
    if (ic.size() <= 1) return {};

    std::vector<std::uint64_t> used;
    std::vector<std::vector<std::uint64_t>> rootsets;
    for (std::uint64_t p : primes) {
        if (used.size() == 4) break;
        if (ic.back() % p == 0) continue; // degree drop mod p
        std::vector<std::uint64_t> cp;
        for (const auto& c : ic) {
            Integer r = c % static_cast<long long>(p);
            if (r < 0) r += static_cast<long long>(p);
            cp.push_back(static_cast<std::uint64_t>(r));
        }
        std::vector<std::uint64_t> roots;
        for (std::uint64_t x = 0; x < p; ++x) {
            std::uint64_t acc = 0;
            for (std::size_t i = cp.size(); i-- > 0;) acc = (acc * x + cp[i]) % p;
            if (acc == 0) roots.push_back(x);
        }
        if (roots.empty()) return {};
        used.push_back(p);
        rootsets.push_back(std::move(roots));
    }
    if (used.empty()) return {};

    // CRT over all tuples, then rational reconstruction
    std::vector<Rational> out;
    std::vector<std::size_t> idx(used.size(), 0);
    auto crt_pair = [](Integer a1, Integer m1, std::uint64_t a2u, std::uint64_t m2u) {
        Integer m2 = m2u, a2 = a2u;
        // solve x = a1 mod m1, x = a2 mod m2 (m1, m2 coprime)
        Integer diff = (a2 - a1) % m2;
        if (diff < 0) diff += m2;
        // inverse of m1 mod m2 by extended euclid on small numbers
        long long m1s = static_cast<long long>(m1 % m2), m2s = static_cast<long long>(m2);
        long long t = 0, newt = 1, r = m2s, newr = m1s;
        while (newr != 0) {
            long long qq = r / newr;
            std::swap(t -= qq * newt, newt);
            std::swap(r -= qq * newr, newr);
        }
        long long inv = t < 0 ? t + m2s : t;
        Integer k = diff * inv % m2;
        return std::make_pair(Integer(a1 + m1 * k), Integer(m1 * m2));
    };
    for (;;) {
        Integer x = rootsets[0][idx[0]], modulus = used[0];
        for (std::size_t i = 1; i < used.size(); ++i) {
            auto [nx, nm] = crt_pair(x, modulus, rootsets[i][idx[i]], used[i]);
            x = nx;
            modulus = nm;
        }
        // rational reconstruction: find num/den with |num|, den <= sqrt(M/2)
        Integer bound = sqrt(Integer(modulus / 2));
        Integer r0 = modulus, r1 = x % modulus, t0 = 0, t1 = 1;
        while (r1 > bound) {
            Integer qq = r0 / r1;
            Integer r2 = r0 - qq * r1, t2 = t0 - qq * t1;
            r0 = r1; r1 = r2; t0 = t1; t1 = t2;
        }
        if (t1 != 0 && abs(t1) <= bound) {
            if (t1 < 0) { t1 = -t1; r1 = -r1; }
            Rational cand(r1, t1);
            if (poly_eval(coeffs, cand) == 0 &&
                std::find(out.begin(), out.end(), cand) == out.end())
                out.push_back(cand);
        }
        // advance tuple
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == rootsets[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// field-specific eigenvalue candidates for a monic minimal polynomial
inline std::vector<Rational> roots_in_field(const std::vector<Rational>& m,
                                            const Rational&) {
    return rational_roots(m);
}

inline std::vector<Fp> roots_in_field(const std::vector<Fp>& m, const Fp& proto) {
    std::uint64_t p = proto.modulus();
    std::vector<Fp> out;
    if (p == 0 || p > (1u << 21)) return out; // scan guard
    for (std::uint64_t x = 0; x < p; ++x) {
        Fp acc(0, p), xv(static_cast<long long>(x), p);
        for (std::size_t i = m.size(); i-- > 0;) acc = acc * xv + m[i];
        if (acc.value() == 0) out.push_back(xv);
    }
    return out;
}

// spanning set -> basis vectors of the column space
template <class F>
std::vector<std::vector<F>> column_space_basis(const Matrix<F>& m) {
    Matrix<F> t(m.cols(), m.rows(), m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    auto [ech, pivots] = bareiss_echelon(t);
    std::vector<std::vector<F>> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<F> v(m.rows(), m.zero());
        for (std::size_t j = 0; j < m.rows(); ++j) v[j] = ech(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// random element of End(v) with integer coordinates in the hom basis
template <class F>
std::map<std::string, Matrix<F>> random_endo(const RepPoint<F>& v,
                                             const HomSpace<F>& hs, Sampler& rng) {
    F proto = v.proto();
    std::map<std::string, Matrix<F>> phi;
    for (const auto& x : v.quiver.vertices) {
        auto n = static_cast<std::size_t>(v.dim[x]);
        phi[x] = Matrix<F>(n, n, proto);
    }
    for (const auto& b : hs.basis) {
        F c = from_int<F>(rng.draw(-50, 50), proto);
        for (auto& [x, px] : phi) px = px + b.at(x).scaled(c);
    }
    return phi;
}

// Fitting split V = ker(psi^N) + im(psi^N) for an endomorphism psi;
// false when one side is trivial
template <class F>
bool split_along(const RepPoint<F>& v, const std::map<std::string, Matrix<F>>& psi,
                 RepPoint<F>& v1, RepPoint<F>& v2) {
    F proto = v.proto();
    std::size_t total = v.total_dim();
    std::map<std::string, std::vector<std::vector<F>>> kerb, imb;
    bool trivial_ker = true, trivial_im = true;
    for (const auto& x : v.quiver.vertices) {
        auto n = static_cast<std::size_t>(v.dim[x]);
        Matrix<F> pn = n ? psi.at(x).pow(total) : Matrix<F>(0, 0, proto);
        auto rk = rank_kernel(pn);
        kerb[x] = rk.kernel_basis;
        imb[x] = column_space_basis(pn);
        if (!kerb[x].empty()) trivial_ker = false;
        if (!imb[x].empty()) trivial_im = false;
    }
    if (trivial_ker || trivial_im) return false; // nilpotent or invertible psi

    // base change B_x = [ker basis | im basis]; both halves are
    // subrepresentations, so the conjugated matrices are block diagonal
    std::map<std::string, Matrix<F>> bchg, binv;
    for (const auto& x : v.quiver.vertices) {
        auto n = static_cast<std::size_t>(v.dim[x]);
        std::size_t k = kerb[x].size();
        if (k + imb[x].size() != n) return false;
        Matrix<F> bx(n, n, proto);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) bx(i, j) = kerb[x][j][i];
        for (std::size_t j = 0; j < imb[x].size(); ++j)
            for (std::size_t i = 0; i < n; ++i) bx(i, k + j) = imb[x][j][i];
        if (n && !is_invertible(bx)) return false;
        bchg[x] = bx;
        binv[x] = n ? inverse(bx) : bx;
        v1.dim.set(x, static_cast<long long>(k));
        v2.dim.set(x, static_cast<long long>(n - k));
    }
    for (const auto& a : v.quiver.arrows) {
        Matrix<F> conj = binv[a.head] * v.at(a.id) * bchg[a.tail];
        auto kh = kerb[a.head].size();
        auto kt = kerb[a.tail].size();
        Matrix<F> m1(kh, kt, proto);
        Matrix<F> m2(conj.rows() - kh, conj.cols() - kt, proto);
        for (std::size_t i = 0; i < conj.rows(); ++i)
            for (std::size_t j = 0; j < conj.cols(); ++j) {
                if (i < kh && j < kt) m1(i, j) = conj(i, j);
                else if (i >= kh && j >= kt) m2(i - kh, j - kt) = conj(i, j);
                else if (!is_zero(conj(i, j))) return false;
            }
        v1.mats[a.id] = m1;
        v2.mats[a.id] = m2;
    }
    return true;
}

// over the rationals an endomorphism with squarefree minimal polynomial of
// degree e > 1 and no rational eigenvalue pins down e conjugate summands
// that only become visible after a field extension
template <class F>
bool conjugate_copies(const RepPoint<F>&, const std::vector<F>&, SplitResult<F>&) {
    return false;
}

inline bool conjugate_copies(const RepPoint<Rational>& v,
                             const std::vector<Rational>& m,
                             SplitResult<Rational>& out) {
    if (m.size() < 3) return false;
    auto e = static_cast<long long>(m.size() - 1);
    if (!poly_squarefree(m) || !rational_roots(m).empty()) return false;
    DimensionVector part;
    for (const auto& x : v.quiver.vertices) {
        long long d = v.dim[x];
        if (d % e) return false;
        part.set(x, d / e);
    }
    for (long long i = 0; i < e; ++i) out.parts.push_back(part);
    out.monte_carlo = true;
    return true;
}

template <class F>
void fitting_split(const RepPoint<F>& v, std::size_t trials, Sampler& rng,
                   SplitResult<F>& out) {
    auto hs = hom_space(v, v);
    if (hs.dim <= 1) { // deterministic brick certificate
        out.parts.push_back(v.dim);
        return;
    }
    F proto = v.proto();
    std::vector<F> minpoly;
    for (std::size_t t = 0; t < trials; ++t) {
        auto phi = random_endo(v, hs, rng);
        minpoly = minimal_polynomial(v.quiver, v.dim, phi, proto);
        // try the generalized eigenspace of each eigenvalue in the base field
        for (const F& c : roots_in_field(minpoly, proto)) {
            auto psi = phi;
            for (const auto& x : v.quiver.vertices) {
                auto n = static_cast<std::size_t>(v.dim[x]);
                psi[x] = psi[x] - Matrix<F>::identity(n, proto).scaled(c);
            }
            RepPoint<F> v1{v.quiver, {}, {}}, v2{v.quiver, {}, {}};
            if (!split_along(v, psi, v1, v2)) continue;
            fitting_split(v1, trials, rng, out);
            fitting_split(v2, trials, rng, out);
            return;
        }
    }
    // no sampled endomorphism split over the base field
    if (!minpoly.empty() && conjugate_copies(v, minpoly, out)) return;
    out.parts.push_back(v.dim);
    out.monte_carlo = true;
}

} // namespace detail

// Dimension vectors of a direct-sum decomposition of v, by repeated Fitting
// splitting along random endomorphisms. Indecomposability of a summand is
// certified deterministically only when end_dim = 1; otherwise the
// monte_carlo flag is set.
template <class F>
SplitResult<F> split_indecomposables(const RepPoint<F>& v, std::size_t trials,
                                     std::uint64_t seed) {
    SplitResult<F> out;
    Sampler rng(seed);
    detail::fitting_split(v, trials, rng, out);
    std::sort(out.parts.begin(), out.parts.end());
    return out;
}

} // namespace qsi

#endif
