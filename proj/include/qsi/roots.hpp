#ifndef QSI_ROOTS_HPP
#define QSI_ROOTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <qsi/rep.hpp>

namespace qsi {

enum class RootClass { Real, Isotropic, Imaginary, NotSchur };

inline std::string to_string(RootClass c) {
    switch (c) {
        case RootClass::Real: return "Real";
        case RootClass::Isotropic: return "Isotropic";
        case RootClass::Imaginary: return "Imaginary";
        default: return "NotSchur";
    }
}

struct ZeroVector : std::invalid_argument {
    ZeroVector() : std::invalid_argument("dimension vector is zero") {}
};

inline constexpr std::size_t kDefaultSamples = 5;

// beta is Schur iff a generic representation is a brick; the class follows
// the sign of <beta,beta>.
template <class F = Rational>
RootClass classify_root(const Quiver& q, const DimensionVector& b,
                        std::uint64_t seed, std::size_t samples = kDefaultSamples,
                        const F& proto = F()) {
    require_acyclic(q);
    if (b.is_zero()) throw ZeroVector();
    std::size_t best = SIZE_MAX;
    for (std::size_t s = 0; s < samples; ++s) {
        Sampler rng(seed ^ s);
        auto v = sample_generic<F>(q, b, rng, proto);
        best = std::min(best, end_dim(v));
    }
    if (best != 1) return RootClass::NotSchur;
    long long e = euler_form(q, b, b);
    if (e == 1) return RootClass::Real;
    if (e == 0) return RootClass::Isotropic;
    if (e < 0) return RootClass::Imaginary;
    return RootClass::NotSchur; // Schur with <b,b> > 1 cannot occur
}

struct CanonicalDecomposition {
    std::vector<DimensionVector> parts; // sorted multiset, sums to beta
    // certificate data
    std::vector<RootClass> part_classes;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pairwise_ext;
    bool certified = false;
    bool monte_carlo_caveat = false;
};

struct VerifyOutcome {
    bool pass = false;
    std::string reason;
};

// Certificate: parts sum to b, every part is Schur, and the
// generic ext vanishes for every ordered pair of distinct parts.
template <class F = Rational>
VerifyOutcome verify_canonical(const Quiver& q,
                               const std::vector<DimensionVector>& parts,
                               const DimensionVector& b, std::uint64_t seed,
                               std::size_t samples = kDefaultSamples,
                               const F& proto = F()) {
    require_acyclic(q);
    DimensionVector sum;
    for (const auto& p : parts) sum = sum + p;
    if (sum != b) return {false, "parts do not sum to the dimension vector"};
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (classify_root<F>(q, parts[i], seed ^ (0x9e37 + i), samples, proto) ==
            RootClass::NotSchur)
            return {false, "part " + parts[i].str() + " is not a Schur root"};
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (i == j) continue;
            auto he = generic_hom_ext<F>(q, parts[i], parts[j], samples,
                                         seed ^ (0xabcd + 31 * i + j), proto);
            if (he.ext != 0)
                return {false, "ext(" + parts[i].str() + ", " + parts[j].str() +
                                   ") = " + std::to_string(he.ext)};
        }
    return {true, ""};
}

struct CertificationFailed : std::runtime_error {
    explicit CertificationFailed(const std::string& why)
        : std::runtime_error("canonical decomposition certification failed: " + why) {}
};

// Generic sampling + Fitting splitting, certified by verify_canonical.
// Candidate splits are computed over a large prime field, where every
// eigenvalue of an endomorphism can be found by a complete scan; the
// certificate below is still checked over the caller's field.
// Majority multiset over `samples` draws; a tie is broken toward the draw
// with smaller end dimension (semicontinuity: generic = minimal).
template <class F = Rational>
CanonicalDecomposition canonical_decomposition(const Quiver& q,
                                               const DimensionVector& b,
                                               std::uint64_t seed,
                                               std::size_t samples = kDefaultSamples,
                                               std::size_t trials = 20,
                                               const F& proto = F()) {
    require_acyclic(q);
    CanonicalDecomposition out;
    for (std::size_t attempt = 0; attempt < 6; ++attempt) {
        std::uint64_t aseed = seed ^ (attempt * 0x100000001b3ULL);
        std::map<std::vector<DimensionVector>, std::size_t> votes;
        std::map<std::vector<DimensionVector>, std::size_t> end_of;
        bool caveat = false;
        Fp split_proto(0, 32003);
        for (std::size_t s = 0; s < samples; ++s) {
            Sampler rng(aseed ^ s);
            auto v = sample_generic<Fp>(q, b, rng, split_proto);
            auto split = split_indecomposables(v, trials, aseed ^ (s + 101));
            caveat = caveat || split.monte_carlo;
            ++votes[split.parts];
            std::size_t e = end_dim(v);
            auto it = end_of.find(split.parts);
            if (it == end_of.end() || e < it->second) end_of[split.parts] = e;
        }
        std::vector<DimensionVector> winner;
        std::size_t best_votes = 0, best_end = SIZE_MAX;
        for (const auto& [parts, n] : votes) {
            std::size_t e = end_of[parts];
            if (n > best_votes || (n == best_votes && e < best_end)) {
                winner = parts;
                best_votes = n;
                best_end = e;
            }
        }
        auto vc = verify_canonical<F>(q, winner, b, aseed ^ 0x51, samples, proto);
        out.parts = winner;
        out.monte_carlo_caveat = caveat;
        if (vc.pass) {
            out.certified = true;
            out.part_classes.clear();
            out.pairwise_ext.clear();
            for (std::size_t i = 0; i < winner.size(); ++i)
                out.part_classes.push_back(
                    classify_root<F>(q, winner[i], aseed ^ (0x77 + i), samples, proto));
            for (std::size_t i = 0; i < winner.size(); ++i)
                for (std::size_t j = 0; j < winner.size(); ++j)
                    if (i != j)
                        out.pairwise_ext[{i, j}] =
                            generic_hom_ext<F>(q, winner[i], winner[j], samples,
                                               aseed ^ (0x99 + 7 * i + j), proto)
                                .ext;
            return out;
        }
        if (attempt == 5) throw CertificationFailed(vc.reason);
    }
    out.monte_carlo_caveat = true; // unreachable; kept for clarity of contract
    return out;
}

enum class RingConclusion { PolynomialRing, CompleteIntersection, Unknown };

inline std::string to_string(RingConclusion c) {
    switch (c) {
        case RingConclusion::PolynomialRing: return "PolynomialRing";
        case RingConclusion::CompleteIntersection: return "CompleteIntersection";
        default: return "Unknown";
    }
}

struct PrehomogeneityReport {
    bool prehomogeneous = false;
    bool almost_prehomogeneous = false;
    std::optional<DimensionVector> isotropic_part;
    RingConclusion conclusion = RingConclusion::Unknown;
    CanonicalDecomposition decomposition;
};

// prehomogeneous: all canonical parts real. almost prehomogeneous: exactly
// one isotropic part, the rest real.
template <class F = Rational>
PrehomogeneityReport prehomogeneity_report(const Quiver& q,
                                           const DimensionVector& b,
                                           std::uint64_t seed,
                                           std::size_t samples = kDefaultSamples,
                                           const F& proto = F()) {
    PrehomogeneityReport rep;
    rep.decomposition = canonical_decomposition<F>(q, b, seed, samples, 20, proto);
    std::size_t real = 0, isotropic = 0, other = 0;
    for (std::size_t i = 0; i < rep.decomposition.parts.size(); ++i) {
        switch (rep.decomposition.part_classes[i]) {
            case RootClass::Real: ++real; break;
            case RootClass::Isotropic:
                ++isotropic;
                rep.isotropic_part = rep.decomposition.parts[i];
                break;
            default: ++other;
        }
    }
    if (other == 0 && isotropic == 0) {
        rep.prehomogeneous = true;
        rep.conclusion = RingConclusion::PolynomialRing;
    } else if (other == 0 && isotropic == 1) {
        rep.almost_prehomogeneous = true;
        rep.conclusion = RingConclusion::CompleteIntersection;
    } else {
        rep.isotropic_part.reset();
        rep.conclusion = RingConclusion::Unknown;
    }
    return rep;
}

// --- JSON report serialization ---

inline nlohmann::json to_json(const CanonicalDecomposition& cd) {
    nlohmann::json j;
    j["parts"] = nlohmann::json::array();
    for (const auto& p : cd.parts) j["parts"].push_back(to_json(p));
    j["classes"] = nlohmann::json::array();
    for (auto c : cd.part_classes) j["classes"].push_back(to_string(c));
    j["pairwise_ext"] = nlohmann::json::array();
    for (const auto& [ij, e] : cd.pairwise_ext)
        j["pairwise_ext"].push_back(
            {{"i", ij.first}, {"j", ij.second}, {"ext", e}});
    j["certified"] = cd.certified;
    j["monte_carlo_caveat"] = cd.monte_carlo_caveat;
    return j;
}

inline nlohmann::json to_json(const PrehomogeneityReport& r) {
    nlohmann::json j;
    j["prehomogeneous"] = r.prehomogeneous;
    j["almost_prehomogeneous"] = r.almost_prehomogeneous;
    j["conclusion"] = to_string(r.conclusion);
    if (r.isotropic_part) j["isotropic_part"] = to_json(*r.isotropic_part);
    j["decomposition"] = to_json(r.decomposition);
    return j;
}

} // namespace qsi

#endif
