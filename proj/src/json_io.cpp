#include "subpoly/json_io.hpp"

#include <stdexcept>

#include "json.hpp"
#include "subpoly/linalg.hpp"

namespace subpoly {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& c : v) a.push_back(rat_str(c));
    return a;
}

}  // namespace

std::string polytope_json(const SubgraphPolytope& P, bool with_facets) {
    ordered_json j;
    j["schema"] = "subpoly/polytope-v1";
    j["kind"] = P.kind == PolyKind::density ? "density" : "lattice";
    j["patterns"] = P.Fs.names();
    j["n"] = P.n;
    j["dim"] = P.hull.dim;
    j["points_raw"] = P.point_count_raw;
    j["points_distinct"] = P.point_count_dedup;
    ordered_json verts = ordered_json::array();
    for (const Vec& v : P.hull.vertices) verts.push_back(vec_json(v));
    j["vertices"] = verts;
    if (!P.hull.witnesses.empty()) {
        ordered_json w = ordered_json::array();
        for (const auto& g6 : P.hull.witnesses) w.push_back(g6);
        j["witnesses"] = w;
    }
    if (with_facets) {
        HullFacets hf = hull_facets(P.hull);
        if (hf.degenerate) {
            j["facets"] = nullptr;
            j["affine_dim"] = hf.affine_dim;
        } else {
            ordered_json fa = ordered_json::array();
            for (const Facet& f : hf.facets) {
                ordered_json fj;
                fj["normal"] = vec_json(f.normal);
                fj["offset"] = rat_str(f.offset);
                fj["incident"] = f.incident;
                fa.push_back(fj);
            }
            j["facets"] = fa;
        }
    }
    return j.dump(2) + "\n";
}

std::string report_json(const CheckReport& r) {
    ordered_json j;
    j["claim"] = r.claim;
    j["status"] = r.pass() ? "pass" : "fail";
    ordered_json is = ordered_json::array();
    for (const CheckInstance& c : r.instances) {
        ordered_json cj;
        cj["label"] = c.label;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        is.push_back(cj);
    }
    j["instances"] = is;
    return j.dump(2) + "\n";
}

std::string kernel_json(const StepKernel& k) {
    ordered_json j;
    j["schema"] = "subpoly/kernel-v1";
    j["steps"] = k.steps;
    ordered_json rows = ordered_json::array();
    for (const auto& row : k.entries) {
        ordered_json r = ordered_json::array();
        for (const Rat& e : row) r.push_back(rat_str(e));
        rows.push_back(r);
    }
    j["entries"] = rows;
    return j.dump(2) + "\n";
}

StepKernel kernel_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int steps = j.at("steps").get<int>();
    std::vector<std::vector<Rat>> m;
    for (const auto& row : j.at("entries")) {
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(parse_rat(e.get<std::string>()));
        m.push_back(std::move(r));
    }
    return StepKernel(steps, std::move(m));
}

std::string export_off(const SubgraphPolytope& P) {
    if (P.hull.dim != 3)
        throw std::invalid_argument("export_off: ambient dimension must be 3");
    HullFacets hf = hull_facets(P.hull);
    if (hf.degenerate)
        throw std::invalid_argument("export_off: polytope is not full-dimensional");

    std::string out = "OFF\n";
    out += std::to_string(P.hull.vertices.size()) + " " +
           std::to_string(hf.facets.size()) + " 0\n";
    char buf[96];
    for (const Vec& v : P.hull.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", rat_double(v[0]),
                      rat_double(v[1]), rat_double(v[2]));
        out += buf;
    }
    for (const Facet& f : hf.facets) {
        out += std::to_string(f.incident.size());
        for (int i : f.incident) out += " " + std::to_string(i);
        out += "\n";
    }
    return out;
}

std::string manifest_json(const std::string& command,
                          const std::map<std::string, std::string>& params,
                          std::uint64_t seed) {
    ordered_json j;
    j["schema"] = "subpoly/manifest-v1";
    j["tool_version"] = tool_version;
    j["command"] = command;
    ordered_json p;
    for (const auto& [k, v] : params) p[k] = v;
    j["parameters"] = p;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

}  // namespace subpoly
