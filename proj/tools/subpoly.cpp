#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subpoly/certify.hpp"
#include "subpoly/json_io.hpp"
#include "subpoly/lattice.hpp"
#include "subpoly/limits.hpp"
#include "subpoly/lp.hpp"
#include "subpoly/spine.hpp"
#include "subpoly/statpoly.hpp"
#include "subpoly/zonotope.hpp"

namespace {

using namespace subpoly;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list: " + s);
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + path);
    f << content;
}

int print_report(const CheckReport& r, const std::string& json_path) {
    std::cout << r.claim << "\n";
    int failed = 0;
    for (const CheckInstance& c : r.instances) {
        std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.label;
        if (!c.detail.empty()) std::cout << " : " << c.detail;
        std::cout << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << " ("
              << r.instances.size() - failed << "/" << r.instances.size()
              << " instances)\n";
    if (!json_path.empty()) write_output(json_path, report_json(r));
    return failed == 0 ? 0 : 1;
}

struct Manifest {
    std::string path;
    std::string command;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;

    void write() const {
        if (!path.empty()) write_output(path, manifest_json(command, params, seed));
    }
};

int cmd_polytope(const GraphVector& fs, int n, const std::string& kind,
                 const std::string& out, bool with_facets) {
    PolyKind k = kind == "lattice" ? PolyKind::lattice : PolyKind::density;
    SubgraphPolytope P = build_polytope(fs, n, k);
    std::cout << "polytope: " << P.hull.vertices.size() << " vertices ("
              << P.point_count_dedup << " distinct statistics vectors from "
              << P.point_count_raw << " labeled graphs)\n";
    write_output(out, polytope_json(P, with_facets));
    if (out != "-" && P.hull.dim == 3) {
        HullFacets hf = hull_facets(P.hull);
        if (!hf.degenerate) {
            std::string off_path = out + ".off";
            write_output(off_path, export_off(P));
            std::cout << "OFF mesh: " << off_path << " (" << hf.facets.size()
                      << " facets)\n";
        }
    }
    return 0;
}

int cmd_certify(const std::string& poly, const GraphVector& fs, int n, int grid,
                const std::string& json_path) {
    SparsePolynomial q = SparsePolynomial::parse(poly);
    SubgraphPolytope P = build_polytope(fs, n, PolyKind::density);
    CertifyResult res = certify_nonneg(q, P, grid);

    const char* status = res.status == CertStatus::certified     ? "certified"
                         : res.status == CertStatus::refuted     ? "refuted"
                                                                 : "inconclusive";
    std::cout << "polynomial: " << q.str() << "\n";
    std::cout << "polytope: density, patterns ";
    for (int i = 0; i < fs.size(); ++i)
        std::cout << (i ? "," : "") << fs.names()[i];
    std::cout << ", n=" << n << "\n";
    std::cout << "status: " << status << "\n";
    std::cout << "min inner value: " << rat_str(res.min_value) << "\n";
    for (int i : res.tight) {
        std::cout << "  tight vertex " << vec_str(P.hull.vertices[i]) << "  witness";
        for (const std::string& g6 : P.hull.witnesses[i]) std::cout << " " << g6;
        std::cout << "\n";
    }
    if (!res.message.empty()) std::cout << res.message << "\n";

    if (!json_path.empty()) {
        CheckReport r;
        r.claim = "certificate for " + q.str();
        r.add(std::string("status ") + status, res.status == CertStatus::certified,
              res.message);
        write_output(json_path, report_json(r));
    }
    return res.status == CertStatus::certified ? 0 : 1;
}

int cmd_spine_volume(const SpineSpec& spec, long subdivision) {
    Rat product = pfaffian_product(spec);
    Rat gale = gale_volume_sum(spec, subdivision);
    QuadratureResult quad = spine_volume_quadrature(spec);
    std::cout << "product formula:   " << rat_str(product) << " ("
              << rat_double(product) << ")\n";
    std::cout << "subdivision sum:   " << rat_str(gale) << " (" << rat_double(gale)
              << ", resolution " << subdivision << ")\n";
    std::cout << "quadrature:        " << quad.value << " +- " << quad.error_estimate
              << "\n";
    return print_report(check_volume_oracles(spec, subdivision), "");
}

int cmd_zonotope(const GraphVector& fs, int n, int steps, int count,
                 std::uint64_t seed, bool volume, bool witness,
                 const std::string& json_path) {
    int rc = print_report(check_zonotope_in_polytope(fs, n, steps, count, seed),
                          json_path);
    if (witness) {
        FullDimWitness w = full_dim_witness(fs, steps, count, seed);
        if (w.found) {
            std::cout << "full-dimensional witness simplex, volume "
                      << rat_str(w.volume) << ":\n";
            for (const Vec& v : w.simplex) std::cout << "  " << vec_str(v) << "\n";
        } else {
            std::cout << "no full-dimensional simplex among the samples\n";
            rc = 1;
        }
    }
    if (volume) {
        ZonotopeVolume zv = zonotope_hull_volume(fs, steps, count, seed);
        if (zv.exact)
            std::cout << "sample hull volume (exact): " << rat_str(zv.volume) << "\n";
        else
            std::cout << "sample hull volume estimate: " << zv.mc.estimate << " +- "
                      << zv.mc.std_error << "\n";
    }
    return rc;
}

int cmd_limits_lab(const TailSpec& spec, int host_n, int k_max, int samples,
                   std::uint64_t seed) {
    GapResult g = conjecture_gap(spec, host_n, k_max, samples, seed);
    int rc = print_report(g.inclusion, "");
    if (g.volumes_exact) {
        std::cout << "inner hull volume:  " << rat_str(g.inner_volume) << "\n";
        std::cout << "outer level volume: " << rat_str(g.outer_volume) << "\n";
        std::cout << "volume gap:         " << rat_str(g.outer_volume - g.inner_volume)
                  << "\n";
    }
    if (g.samples_inside + g.samples_outside > 0) {
        std::cout << "kernel samples inside inner hull: " << g.samples_inside
                  << ", outside: " << g.samples_outside << "\n";
        for (const Vec& c : g.candidates)
            std::cout << "  candidate counterexample (requires asymptotic analysis): "
                      << vec_str(c) << "\n";
    }
    std::cout << "finite-level trend: " << g.trend << "\n";
    for (const auto& [delta, removed] : g.chop)
        std::cout << "chop depth " << rat_str(delta) << " removes area "
                  << rat_str(removed) << "\n";
    return rc;
}

int cmd_export(const GraphVector& fs, int n, const std::string& kind,
               const std::string& format, const std::string& out) {
    PolyKind k = kind == "lattice" ? PolyKind::lattice : PolyKind::density;
    SubgraphPolytope P = build_polytope(fs, n, k);
    if (format == "off")
        write_output(out, export_off(P));
    else
        write_output(out, polytope_json(P, true));
    return 0;
}

int run_check(const std::string& name, const std::string& patterns,
              const std::string& spec_list, int n, int n2, int grid,
              long subdivision, int steps, int count, int k_max,
              std::uint64_t seed, const std::string& json_path) {
    auto need_patterns = [&]() -> GraphVector {
        if (patterns.empty())
            throw std::invalid_argument("check " + name + " needs --patterns");
        return GraphVector::parse(patterns);
    };
    auto need_spec = [&]() -> std::vector<int> {
        if (spec_list.empty())
            throw std::invalid_argument("check " + name + " needs --spec");
        return parse_int_list(spec_list);
    };

    if (name == "inclusion") {
        GraphVector fs = need_patterns();
        int small = n > 0 ? n : fs.max_order();
        int big = n2 > 0 ? n2 : small + 1;
        return print_report(check_inclusion(fs, small, big), json_path);
    }
    if (name == "ehrhart") {
        GraphVector fs = need_patterns();
        if (n2 <= 0) throw std::invalid_argument("check ehrhart needs --n2");
        int base = fs.max_order();
        int n1 = n > 0 ? n : base;
        return print_report(check_ehrhart_scaling(fs, base, n1, n2), json_path);
    }
    if (name == "nonneg-facets") {
        GraphVector fs = need_patterns();
        if (n <= 0) throw std::invalid_argument("check nonneg-facets needs --n");
        return print_report(check_nonneg_facets(fs, n), json_path);
    }
    if (name == "spine") {
        GraphVector fs = need_patterns();
        if (n <= 0) throw std::invalid_argument("check spine needs --n");
        return print_report(check_spine_containment(fs, n, grid), json_path);
    }
    if (name == "zonotope") {
        GraphVector fs = need_patterns();
        if (n <= 0) throw std::invalid_argument("check zonotope needs --n");
        return print_report(check_zonotope_in_polytope(fs, n, steps, count, seed),
                            json_path);
    }
    if (name == "limits") {
        TailSpec spec(need_spec());
        int n_max = n > 0 ? n : 6;
        return print_report(check_limit_inclusions(spec, n_max), json_path);
    }
    if (name == "tail-cyclic") {
        TailSpec spec(need_spec());
        std::vector<Rat> xs;
        for (int k = 1; k <= k_max; ++k) xs.push_back(Rat(1) / k);
        return print_report(check_tail_cyclic(spec, xs), json_path);
    }
    if (name == "volume-oracles") {
        SpineSpec spec(need_spec());
        return print_report(check_volume_oracles(spec, subdivision), json_path);
    }
    throw std::invalid_argument(
        "unknown check name '" + name +
        "' (known: inclusion, ehrhart, nonneg-facets, spine, zonotope, limits, "
        "tail-cyclic, volume-oracles)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for polytopes of subgraph statistics"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 12345;
    int threads = 1;
    std::string manifest_path;
    app.add_option("--seed", seed, "master seed for all sampling");
    app.add_option("--threads", threads, "data-parallel width cap (results identical)")
        ->check(CLI::Range(1, 256));
    app.add_option("--manifest", manifest_path, "write a run manifest to this path");

    std::string patterns, spec_list, kind = "density", out = "-", format = "json";
    std::string poly, json_path, check_name;
    int n = 0, n2 = 0, grid = 100, steps = 3, count = 50, k_max = 7;
    int host_n = 6, samples = 30, cert_grid = 128;
    long subdivision = 2000;
    bool with_facets = false, want_volume = false, want_witness = false;

    CLI::App* c_poly = app.add_subcommand("polytope", "build a statistics polytope");
    c_poly->add_option("-F,--patterns", patterns, "pattern list, e.g. K3,C4,K4-e")
        ->required();
    c_poly->add_option("-n", n, "host order")->required();
    c_poly->add_option("--kind", kind, "density|lattice")
        ->check(CLI::IsMember({"density", "lattice"}));
    c_poly->add_option("-o,--out", out, "output path ('-' for stdout)");
    c_poly->add_flag("--facets", with_facets, "include the facet description");

    CLI::App* c_check = app.add_subcommand("check", "run a named verification");
    c_check->add_option("name", check_name, "check name")->required();
    c_check->add_option("-F,--patterns", patterns, "pattern list");
    c_check->add_option("--spec", spec_list, "integer list (exponents/orders)");
    c_check->add_option("-n,--n", n, "host order / first level");
    c_check->add_option("--n2", n2, "second level");
    c_check->add_option("--grid", grid, "grid resolution")->check(CLI::Range(1, 100000));
    c_check->add_option("--subdivision", subdivision, "subdivision resolution");
    c_check->add_option("--steps", steps, "kernel step count");
    c_check->add_option("--count", count, "sample count");
    c_check->add_option("--k-max", k_max, "largest k for 1/k parameters");
    c_check->add_option("--json", json_path, "write the report JSON here");

    CLI::App* c_cert = app.add_subcommand("certify", "nonnegativity certificate");
    c_cert->add_option("-q,--poly", poly, "polynomial, e.g. '1 - 16/3 x^3 + ...'")
        ->required();
    c_cert->add_option("-F,--patterns", patterns, "pattern list")->required();
    c_cert->add_option("-n", n, "host order")->required();
    c_cert->add_option("--grid", cert_grid, "refutation grid")->check(CLI::Range(2, 1000000));
    c_cert->add_option("--json", json_path, "write the report JSON here");

    CLI::App* c_spine = app.add_subcommand("spine-volume", "three volume oracles");
    c_spine->add_option("--spec", spec_list, "exponent list, e.g. 5,4,3")->required();
    c_spine->add_option("--subdivision", subdivision, "subdivision resolution");

    CLI::App* c_zono = app.add_subcommand("zonotope", "kernel sampling experiments");
    c_zono->add_option("-F,--patterns", patterns, "pattern list")->required();
    c_zono->add_option("-n", n, "host order for the membership check")->required();
    c_zono->add_option("--steps", steps, "kernel step count");
    c_zono->add_option("--count", count, "sample count");
    c_zono->add_flag("--volume", want_volume, "estimate the sample hull volume");
    c_zono->add_flag("--witness", want_witness, "emit a full-dimensional simplex");
    c_zono->add_option("--json", json_path, "write the report JSON here");

    CLI::App* c_lim = app.add_subcommand("limits", "limit-object gap harness");
    c_lim->add_option("--spec", spec_list, "clique orders, e.g. 2,3")->required();
    c_lim->add_option("--host-n", host_n, "largest finite level");
    c_lim->add_option("--k-max", k_max, "tail generators 1/k, k <= k-max");
    c_lim->add_option("--samples", samples, "kernel samples (0 = none)");

    CLI::App* c_exp = app.add_subcommand("export", "write polytope JSON or OFF");
    c_exp->add_option("-F,--patterns", patterns, "pattern list")->required();
    c_exp->add_option("-n", n, "host order")->required();
    c_exp->add_option("--kind", kind, "density|lattice")
        ->check(CLI::IsMember({"density", "lattice"}));
    c_exp->add_option("--format", format, "json|off")
        ->check(CLI::IsMember({"json", "off"}));
    c_exp->add_option("-o,--out", out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Manifest mf;
        mf.path = manifest_path;
        mf.seed = seed;
        auto note = [&mf](const std::string& k, const std::string& v) {
            if (!v.empty()) mf.params[k] = v;
        };
        note("patterns", patterns);
        note("spec", spec_list);
        if (n) note("n", std::to_string(n));
        if (n2) note("n2", std::to_string(n2));
        note("threads", std::to_string(threads));

        int rc = 0;
        if (*c_poly) {
            mf.command = "polytope";
            note("kind", kind);
            rc = cmd_polytope(GraphVector::parse(patterns), n, kind, out, with_facets);
        } else if (*c_check) {
            mf.command = "check " + check_name;
            rc = run_check(check_name, patterns, spec_list, n, n2, grid, subdivision,
                           steps, count, k_max, seed, json_path);
        } else if (*c_cert) {
            mf.command = "certify";
            note("poly", poly);
            rc = cmd_certify(poly, GraphVector::parse(patterns), n, cert_grid,
                             json_path);
        } else if (*c_spine) {
            mf.command = "spine-volume";
            note("subdivision", std::to_string(subdivision));
            rc = cmd_spine_volume(SpineSpec(parse_int_list(spec_list)), subdivision);
        } else if (*c_zono) {
            mf.command = "zonotope";
            note("steps", std::to_string(steps));
            note("count", std::to_string(count));
            rc = cmd_zonotope(GraphVector::parse(patterns), n, steps, count, seed,
                              want_volume, want_witness, json_path);
        } else if (*c_lim) {
            mf.command = "limits";
            note("host_n", std::to_string(host_n));
            note("k_max", std::to_string(k_max));
            note("samples", std::to_string(samples));
            rc = cmd_limits_lab(TailSpec(parse_int_list(spec_list)), host_n, k_max,
                                samples, seed);
        } else if (*c_exp) {
            mf.command = "export";
            note("kind", kind);
            note("format", format);
            rc = cmd_export(GraphVector::parse(patterns), n, kind, format, out);
        }
        mf.write();
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
