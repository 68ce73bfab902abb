#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <qsi/fixtures.hpp>

using namespace qsi;

namespace {

constexpr const char* kSchemaVersion = "qsi/1";

struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;
};

FieldSpec parse_field(const std::string& s) {
    if (s == "rational") return {};
    if (s.rfind("p:", 0) == 0) {
        FieldSpec f;
        f.rational = false;
        f.p = std::stoull(s.substr(2));
        if (f.p < 2) throw CLI::ValidationError("--field", "prime must be >= 2");
        return f;
    }
    throw CLI::ValidationError("--field", "expected 'rational' or 'p:PRIME'");
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

// CSV entries map onto the given vertex order
DimensionVector vec_from_csv(const std::string& csv,
                             const std::vector<std::string>& order) {
    std::vector<long long> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoll(tok));
    if (vals.size() != order.size())
        throw std::runtime_error("expected " + std::to_string(order.size()) +
                                 " comma-separated entries, got " +
                                 std::to_string(vals.size()));
    DimensionVector d;
    for (std::size_t i = 0; i < order.size(); ++i) d.set(order[i], vals[i]);
    return d;
}

void emit(const nlohmann::json& j, bool json_mode, const std::string& text) {
    if (json_mode) {
        nlohmann::json out = j;
        out["schema"] = kSchemaVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::string class_text(RootClass c) {
    if (c == RootClass::NotSchur) return "NotSchur";
    return to_string(c) + " Schur root";
}

int run_classify(const Quiver& q, const DimensionVector& b, std::uint64_t seed,
                 std::size_t samples, const FieldSpec& f, bool json_mode) {
    RootClass c = f.rational
                      ? classify_root<Rational>(q, b, seed, samples)
                      : classify_root<Fp>(q, b, seed, samples, Fp(0, f.p));
    emit({{"verb", "classify"}, {"dim", to_json(b)}, {"class", to_string(c)}},
         json_mode, class_text(c));
    return 0;
}

int run_decompose(const Quiver& q, const DimensionVector& b, std::uint64_t seed,
                  std::size_t samples, const FieldSpec& f, bool json_mode) {
    CanonicalDecomposition cd =
        f.rational ? canonical_decomposition<Rational>(q, b, seed, samples)
                   : canonical_decomposition<Fp>(q, b, seed, samples, 20, Fp(0, f.p));
    std::string text;
    for (std::size_t i = 0; i < cd.parts.size(); ++i)
        text += "part " + cd.parts[i].str() + "  " +
                to_string(cd.part_classes[i]) + "\n";
    text += std::string("certified: ") + (cd.certified ? "true" : "false");
    nlohmann::json j = to_json(cd);
    j["verb"] = "decompose";
    j["dim"] = to_json(b);
    emit(j, json_mode, text);
    return 0;
}

int run_report(const Quiver& q, const DimensionVector& b, std::uint64_t seed,
               std::size_t samples, const FieldSpec& f, bool json_mode) {
    PrehomogeneityReport r =
        f.rational ? prehomogeneity_report<Rational>(q, b, seed, samples)
                   : prehomogeneity_report<Fp>(q, b, seed, samples, Fp(0, f.p));
    std::string text = std::string("prehomogeneous: ") +
                       (r.prehomogeneous ? "true" : "false") +
                       "\nalmost_prehomogeneous: " +
                       (r.almost_prehomogeneous ? "true" : "false") +
                       "\nconclusion: " + to_string(r.conclusion);
    if (r.isotropic_part) text += "\nisotropic_part: " + r.isotropic_part->str();
    nlohmann::json j = to_json(r);
    j["verb"] = "report";
    j["dim"] = to_json(b);
    emit(j, json_mode, text);
    return 0;
}

template <class F>
OrbitReport orbit_of(const Quiver& q, const DimensionVector& b, std::uint64_t seed,
                     std::size_t samples, const F& proto) {
    OrbitReport best;
    for (std::size_t s = 0; s < samples; ++s) {
        Sampler rng(seed ^ s);
        auto v = sample_generic<F>(q, b, rng, proto);
        auto r = orbit_codim_hereditary(v);
        if (s == 0 || r.codim < best.codim) best = r;
    }
    return best;
}

int run_orbit(const Quiver& q, const DimensionVector& b, std::uint64_t seed,
              std::size_t samples, const FieldSpec& f, bool json_mode) {
    OrbitReport r = f.rational ? orbit_of<Rational>(q, b, seed, samples, Rational())
                               : orbit_of<Fp>(q, b, seed, samples, Fp(0, f.p));
    emit({{"verb", "orbit"},
          {"dim", to_json(b)},
          {"end_dim", r.end_dim},
          {"gl_dim", r.gl_dim},
          {"orbit_dim", r.orbit_dim},
          {"codim", r.codim}},
         json_mode,
         "end_dim = " + std::to_string(r.end_dim) +
             ", gl_dim = " + std::to_string(r.gl_dim) +
             ", orbit_dim = " + std::to_string(r.orbit_dim) +
             ", codim = " + std::to_string(r.codim));
    return 0;
}

// vertex order used for --weight CSV on system files: the sorted set of
// vertices named in the generator weights
std::vector<std::string> system_vertices(const GeneratorSystem& sys) {
    std::set<std::string> verts;
    for (const auto& g : sys.generators)
        for (const auto& [v, x] : g.weight.entries()) verts.insert(v);
    return {verts.begin(), verts.end()};
}

int run_si_weights(const GeneratorSystem& sys, long long box,
                   const std::string& weight_csv, bool json_mode) {
    validate_system(sys);
    auto rep = minimal_double_weight(sys, box);
    std::size_t d1 = weight_space_dim_symbolic(sys, rep.chi, box);
    std::size_t d2 = weight_space_dim_symbolic(sys, 2 * rep.chi, box);
    auto mf = multiplicity_free_in_box(sys, std::min(box, 4LL));
    nlohmann::json j{{"verb", "si-weights"},
                     {"chi", to_json(rep.chi)},
                     {"count", rep.count},
                     {"codim", rep.codim},
                     {"unique_in_box", rep.unique_in_box},
                     {"dim_chi", d1},
                     {"dim_2chi", d2},
                     {"multiplicity_free", mf.multiplicity_free}};
    j["monomials"] = nlohmann::json::array();
    for (const auto& m : rep.monomials)
        j["monomials"].push_back(monomial_str(sys, m));
    std::string text = "chi = " + rep.chi.str() + ", count " +
                       std::to_string(rep.count) + ", codim " +
                       std::to_string(rep.codim) + ", dim(chi) = " +
                       std::to_string(d1) + ", dim(2chi) = " + std::to_string(d2);
    if (!weight_csv.empty()) {
        Weight sigma = vec_from_csv(weight_csv, system_vertices(sys));
        auto wr = weight_remainder(sigma, rep, sys, box);
        std::size_t ds = weight_space_dim_symbolic(sys, sigma, box);
        j["sigma"] = to_json(sigma);
        j["dim_sigma"] = ds;
        j["remainder"] = {{"n", wr.n},
                          {"rem", to_json(wr.rem)},
                          {"predicted_dim", wr.predicted_dim},
                          {"rem_unique", wr.rem_unique}};
        text += "\nsigma = " + sigma.str() + ", dim(sigma) = " +
                std::to_string(ds) + ", remainder n = " + std::to_string(wr.n) +
                ", predicted dim " + std::to_string(wr.predicted_dim);
    }
    emit(j, json_mode, text);
    return 0;
}

int run_verify_example(const std::string& id, long long n, std::uint64_t seed,
                       bool json_mode) {
    auto rep = verify_example(id, n, seed);
    nlohmann::json j = to_json(rep);
    j["verb"] = "verify-example";
    std::string text;
    for (const auto& c : rep.claims) {
        text += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.id + ": " +
                c.description;
        if (!c.detail.empty()) text += " [" + c.detail + "]";
        text += "\n";
    }
    text += rep.all_pass() ? "all claims pass" : "some claims FAILED";
    emit(j, json_mode, text);
    return rep.all_pass() ? 0 : 1;
}

int run_fixture(const std::string& id, long long n, const std::string& what) {
    Fixture f = build_fixture(id, n);
    if (what == "system") {
        if (!f.system) throw std::runtime_error(id + " has no generator system");
        std::cout << to_json(*f.system).dump(2) << "\n";
        return 0;
    }
    nlohmann::json j = to_json(f.quiver, f.relations);
    j["dim"] = to_json(f.dim);
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of quiver representations and their "
                 "semi-invariant rings"};
    app.require_subcommand(1);

    std::string quiver_file, system_file, dim_csv, dim2_csv, weight_csv;
    std::string field_str = "rational";
    std::string example_id, fixture_what = "quiver";
    std::uint64_t seed = 0;
    std::size_t samples = 5;
    long long box = 6, nparam = 0;
    bool json_mode = false;

    auto add_common = [&](CLI::App* c, bool with_field = true) {
        c->add_option("--seed", seed, "random seed (default 0)");
        c->add_option("--samples", samples, "sample count (default 5)");
        if (with_field)
            c->add_option("--field", field_str,
                          "scalar field: rational or p:PRIME (default rational)");
        c->add_flag("--json", json_mode, "emit JSON");
    };
    auto add_quiver_dim = [&](CLI::App* c) {
        c->add_option("--quiver", quiver_file, "quiver JSON file")->required();
        c->add_option("--dim", dim_csv,
                      "dimension vector, CSV in the file's vertex order")
            ->required();
    };

    auto* euler = app.add_subcommand("euler", "Euler form of two dimension vectors");
    add_quiver_dim(euler);
    euler->add_option("--dim2", dim2_csv, "second dimension vector, CSV")->required();
    euler->add_flag("--json", json_mode, "emit JSON");

    auto* classify = app.add_subcommand("classify", "Schur root classification");
    add_quiver_dim(classify);
    add_common(classify);

    auto* decompose = app.add_subcommand("decompose", "canonical decomposition");
    add_quiver_dim(decompose);
    add_common(decompose);

    auto* report = app.add_subcommand("report", "prehomogeneity report");
    add_quiver_dim(report);
    add_common(report);

    auto* orbit = app.add_subcommand("orbit", "generic orbit dimension data");
    add_quiver_dim(orbit);
    add_common(orbit);

    auto* si = app.add_subcommand("si-weights",
                                  "minimal weight and weight space dimensions");
    si->add_option("--system", system_file, "generator system JSON file")->required();
    si->add_option("--box", box, "search box (default 6)");
    si->add_option("--weight", weight_csv,
                   "extra weight to measure, CSV over the sorted vertex names");
    si->add_flag("--json", json_mode, "emit JSON");

    auto* verify = app.add_subcommand("verify-example",
                                      "end-to-end fixture verification");
    verify->add_option("id", example_id, "fixture id: ex1 | ex2 | ex3")->required();
    verify->add_option("--n", nparam, "family parameter for ex3");
    add_common(verify, false);

    auto* fixture = app.add_subcommand("fixture", "print a builtin fixture as JSON");
    fixture->add_option("id", example_id, "ex1 | ex2 | ex2-d4tilde | ex3")
        ->required();
    fixture->add_option("--n", nparam, "family parameter for ex3");
    fixture->add_option("--what", fixture_what, "quiver (default) or system");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        FieldSpec f = parse_field(field_str);
        if (euler->parsed()) {
            auto [q, r] = quiver_from_json(load_json(quiver_file));
            auto a = vec_from_csv(dim_csv, q.vertices);
            auto b = vec_from_csv(dim2_csv, q.vertices);
            long long e = euler_form(q, a, b);
            emit({{"verb", "euler"},
                  {"a", to_json(a)},
                  {"b", to_json(b)},
                  {"euler", e}},
                 json_mode, "euler = " + std::to_string(e));
            return 0;
        }
        if (si->parsed())
            return run_si_weights(system_from_json(load_json(system_file)), box,
                                  weight_csv, json_mode);
        if (verify->parsed())
            return run_verify_example(example_id, nparam, seed, json_mode);
        if (fixture->parsed()) return run_fixture(example_id, nparam, fixture_what);

        auto [q, r] = quiver_from_json(load_json(quiver_file));
        auto issues = validate_quiver(q, r);
        if (!issues.empty())
            throw std::runtime_error("invalid quiver: " + issues[0].code + " " +
                                     issues[0].detail);
        auto b = vec_from_csv(dim_csv, q.vertices);
        if (classify->parsed())
            return run_classify(q, b, seed, samples, f, json_mode);
        if (decompose->parsed())
            return run_decompose(q, b, seed, samples, f, json_mode);
        if (report->parsed()) return run_report(q, b, seed, samples, f, json_mode);
        if (orbit->parsed()) return run_orbit(q, b, seed, samples, f, json_mode);
        return 2;
    } catch (const CertificationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
