#ifndef QSI_QUIVER_HPP
#define QSI_QUIVER_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>
#include <qsi/rational.hpp>

namespace qsi {

// Integer vector indexed by vertex id; used for both dimension vectors and
// weights (characters sigma). Zero entries are dropped so equality and
// ordering are canonical.
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::map<std::string, long long> e) : e_(std::move(e)) { trim(); }

    long long operator[](const std::string& v) const {
        auto it = e_.find(v);
        return it == e_.end() ? 0 : it->second;
    }
    void set(const std::string& v, long long x) {
        if (x == 0) e_.erase(v);
        else e_[v] = x;
    }
    const std::map<std::string, long long>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    friend IntVec operator+(const IntVec& a, const IntVec& b) {
        IntVec r = a;
        for (auto& [v, x] : b.e_) r.set(v, r[v] + x);
        return r;
    }
    friend IntVec operator-(const IntVec& a, const IntVec& b) {
        IntVec r = a;
        for (auto& [v, x] : b.e_) r.set(v, r[v] - x);
        return r;
    }
    friend IntVec operator*(long long s, const IntVec& a) {
        IntVec r;
        if (s != 0)
            for (auto& [v, x] : a.e_) r.set(v, s * x);
        return r;
    }
    friend bool operator==(const IntVec& a, const IntVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const IntVec& a, const IntVec& b) { return !(a == b); }
    friend bool operator<(const IntVec& a, const IntVec& b) { return a.e_ < b.e_; }

    long long dot(const IntVec& b) const {
        long long s = 0;
        for (auto& [v, x] : e_) s += x * b[v];
        return s;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (auto& [v, x] : e_) {
            if (!first) s += ", ";
            first = false;
            s += v + ": " + std::to_string(x);
        }
        return s + "}";
    }

private:
    void trim() {
        for (auto it = e_.begin(); it != e_.end();)
            it = it->second == 0 ? e_.erase(it) : std::next(it);
    }
    std::map<std::string, long long> e_;
};

using DimensionVector = IntVec;
using Weight = IntVec;

struct Arrow {
    std::string id, tail, head;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    bool has_vertex(const std::string& v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }
    const Arrow* arrow(const std::string& id) const {
        for (const auto& a : arrows)
            if (a.id == id) return &a;
        return nullptr;
    }
};

// A path is an ordered list of arrow ids, first-applied first. The empty
// path carries its anchor vertex.
struct Path {
    std::vector<std::string> arrows;
    std::string anchor; // used only when arrows is empty

    bool trivial() const { return arrows.empty(); }
};

struct UniformElement {
    std::vector<std::pair<Rational, Path>> terms;
};

struct RelationSet {
    std::vector<UniformElement> elements;
};

// Checks composability and returns (tail, head); nullopt when broken.
inline std::optional<std::pair<std::string, std::string>>
path_ends(const Quiver& q, const Path& p) {
    if (p.trivial()) {
        if (!q.has_vertex(p.anchor)) return std::nullopt;
        return std::make_pair(p.anchor, p.anchor);
    }
    const Arrow* prev = nullptr;
    for (const auto& id : p.arrows) {
        const Arrow* a = q.arrow(id);
        if (!a) return std::nullopt;
        if (prev && prev->head != a->tail) return std::nullopt;
        prev = a;
    }
    return std::make_pair(q.arrow(p.arrows.front())->tail, prev->head);
}

struct ValidationIssue {
    std::string code;   // DanglingArrow | NonUniformRelation | BrokenPath | ...
    std::string detail;
};

// Full structural validation of (Q, R): unique ids, arrow endpoints exist,
// every relation term composable, all terms of a relation parallel, and
// relation paths of length >= 2.
inline std::vector<ValidationIssue> validate_quiver(const Quiver& q,
                                                    const RelationSet& r) {
    std::vector<ValidationIssue> issues;
    std::set<std::string> vs(q.vertices.begin(), q.vertices.end());
    if (vs.size() != q.vertices.size())
        issues.push_back({"DuplicateVertex", "vertex ids are not unique"});
    std::set<std::string> as;
    for (const auto& a : q.arrows) {
        if (!as.insert(a.id).second)
            issues.push_back({"DuplicateArrow", "arrow id " + a.id});
        if (!vs.count(a.tail) || !vs.count(a.head))
            issues.push_back({"DanglingArrow", "arrow " + a.id});
    }
    for (std::size_t i = 0; i < r.elements.size(); ++i) {
        const auto& u = r.elements[i];
        std::string where = "relation #" + std::to_string(i);
        if (u.terms.empty()) {
            issues.push_back({"EmptyRelation", where});
            continue;
        }
        std::optional<std::pair<std::string, std::string>> ends;
        for (const auto& [coeff, p] : u.terms) {
            if (coeff == 0) issues.push_back({"ZeroCoefficient", where});
            auto e = path_ends(q, p);
            if (!e) {
                issues.push_back({"BrokenPath", where});
                continue;
            }
            if (p.arrows.size() < 2)
                issues.push_back({"ShortRelationPath", where});
            if (ends && *ends != *e)
                issues.push_back({"NonUniformRelation", where});
            if (!ends) ends = e;
        }
    }
    return issues;
}

// <a,b> = sum_x a(x)b(x) - sum_arrows a(ta)b(ha)
inline long long euler_form(const Quiver& q, const DimensionVector& a,
                            const DimensionVector& b) {
    for (auto& [v, x] : a.entries())
        if (!q.has_vertex(v)) throw std::invalid_argument("euler_form: unknown vertex " + v);
    for (auto& [v, x] : b.entries())
        if (!q.has_vertex(v)) throw std::invalid_argument("euler_form: unknown vertex " + v);
    long long s = 0;
    for (const auto& v : q.vertices) s += a[v] * b[v];
    for (const auto& ar : q.arrows) s -= a[ar.tail] * b[ar.head];
    return s;
}

// Weight of the coordinate semi-invariant of a path, for beta = all ones.
// Convention: +1 at the tail, -1 at the head (from g.f(x) = f(g^{-1}x));
// additive under composition. The opposite sign also occurs in the
// literature; every assertion downstream compares weights within this
// convention only.
inline Weight generator_weight(const Quiver& q, const Path& p) {
    auto e = path_ends(q, p);
    if (!e) throw std::invalid_argument("generator_weight: invalid path");
    Weight w;
    w.set(e->first, w[e->first] + 1);
    w.set(e->second, w[e->second] - 1);
    return w;
}

inline bool is_acyclic(const Quiver& q) {
    std::map<std::string, int> state; // 0 unseen, 1 active, 2 done
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
        state[v] = 1;
        for (const auto& a : q.arrows) {
            if (a.tail != v) continue;
            if (state[a.head] == 1) return false;
            if (state[a.head] == 0 && !dfs(a.head)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (const auto& v : q.vertices)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

struct CyclicQuiver : std::runtime_error {
    CyclicQuiver() : std::runtime_error("quiver has an oriented cycle") {}
};

inline void require_acyclic(const Quiver& q) {
    if (!is_acyclic(q)) throw CyclicQuiver();
}

// --- JSON (the quiver file format used by the CLI) ---

inline nlohmann::json to_json(const IntVec& v) {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [k, x] : v.entries()) j[k] = x;
    return j;
}

inline IntVec intvec_from_json(const nlohmann::json& j) {
    std::map<std::string, long long> e;
    for (auto it = j.begin(); it != j.end(); ++it)
        e[it.key()] = it.value().get<long long>();
    return IntVec(e);
}

inline nlohmann::json to_json(const Quiver& q, const RelationSet& r) {
    nlohmann::json j;
    j["vertices"] = q.vertices;
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : q.arrows)
        j["arrows"].push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
    j["relations"] = nlohmann::json::array();
    for (const auto& u : r.elements) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [coeff, p] : u.terms)
            terms.push_back({{"coeff", to_string(coeff)}, {"path", p.arrows}});
        j["relations"].push_back({{"terms", terms}});
    }
    return j;
}

inline std::pair<Quiver, RelationSet> quiver_from_json(const nlohmann::json& j) {
    Quiver q;
    RelationSet r;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("id"), a.at("tail"), a.at("head")});
    if (j.contains("relations"))
        for (const auto& rel : j["relations"]) {
            UniformElement u;
            for (const auto& t : rel.at("terms")) {
                Path p;
                for (const auto& s : t.at("path")) p.arrows.push_back(s.get<std::string>());
                if (t.contains("anchor")) p.anchor = t["anchor"];
                u.terms.emplace_back(parse_rational(t.at("coeff").get<std::string>()), p);
            }
            r.elements.push_back(std::move(u));
        }
    return {q, r};
}

} // namespace qsi

#endif
