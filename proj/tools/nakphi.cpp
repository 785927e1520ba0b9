// nakphi: command-line front end for the cyclic Nakayama algebra toolkit.
//
// Subcommands: info, resolve, phi, verify, census.
// Exit codes: 0 success, 1 a theorem check failed, 2 input error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nakayama/census.hpp"
#include "nakayama/text.hpp"

using nlohmann::json;
using namespace nakayama;

namespace {

struct AlgebraSource {
    std::string kupisch;
    std::string relations;
    int vertices = 0;
};

void add_source_flags(CLI::App* cmd, AlgebraSource& src) {
    auto* k = cmd->add_option("--kupisch", src.kupisch, "Kupisch series, e.g. 3,5,4,5,4");
    auto* r = cmd->add_option("--relations", src.relations,
                              "relation list start:arrows;... e.g. 1:3;3:4");
    cmd->add_option("--vertices", src.vertices, "vertex count (with --relations)");
    k->excludes(r);
}

Algebra load_algebra(const AlgebraSource& src) {
    if (!src.kupisch.empty()) {
        auto series = parse_kupisch(src.kupisch);
        return Algebra::from_kupisch(static_cast<int>(series.size()), series);
    }
    if (!src.relations.empty()) {
        if (src.vertices < 3)
            throw ParseError("--relations requires --vertices");
        return Algebra::from_relations(src.vertices, parse_relations(src.relations));
    }
    throw ParseError("need --kupisch or --relations");
}

std::string mod_str(const UniserialModule& m) {
    return "(" + std::to_string(m.top) + "," + std::to_string(m.len) + ")";
}

std::string mod_flag(const UniserialModule& m) {
    return std::to_string(m.top) + ":" + std::to_string(m.len);
}

int cmd_info(const AlgebraSource& src) {
    Algebra a = load_algebra(src);
    std::cout << "N = " << a.n_vertices() << "\n";
    std::cout << "kupisch = " << kupisch_str(a) << "\n";
    auto rels = a.relations();
    std::cout << "relations (start:arrows->end) =";
    for (const Relation& rel : rels)
        std::cout << " " << rel.start << ":" << rel.arrow_count << "->" << rel.end;
    std::cout << "\nr = " << rels.size() << "\n";
    std::cout << "self_injective = " << (a.is_self_injective() ? "true" : "false") << "\n";
    for (const ProjectiveClass& cl : a.projective_classes()) {
        std::cout << "class " << cl.class_index << ": socle S" << cl.socle_vertex
                  << ", members P";
        for (std::size_t i = 0; i < cl.member_vertices.size(); ++i)
            std::cout << (i ? ",P" : "") << cl.member_vertices[i];
        std::cout << "\n";
    }
    auto [s, sp] = a.socle_marks();
    std::cout << "S = {";
    for (std::size_t i = 0; i < s.size(); ++i)
        std::cout << (i ? "," : "") << "S" << s[i];
    std::cout << "}  S' = {";
    for (std::size_t i = 0; i < sp.size(); ++i)
        std::cout << (i ? "," : "") << "S" << sp[i];
    std::cout << "}\n";
    auto sys = delta_system(a);
    for (std::size_t j = 0; j < sys.deltas.size(); ++j) {
        const UniserialModule& d = sys.deltas[j];
        std::cout << "Delta_" << j + 1 << " = [";
        for (int i = 0; i < d.len; ++i)
            std::cout << (i ? ";S" : "S") << wrap(d.top + i, a.n_vertices());
        std::cout << "]\n";
    }
    std::cout << "delta_kupisch =";
    for (int d : sys.delta_kupisch)
        std::cout << " " << d;
    std::cout << "\n";
    return 0;
}

int cmd_resolve(const AlgebraSource& src, const std::string& module_flag, int steps) {
    Algebra a = load_algebra(src);
    auto [top, len] = parse_module_spec(module_flag);
    UniserialModule m = module(a, top, len);
    auto deltas = delta_modules(a);
    ResolutionTrail trail = resolve(a, m);

    std::cout << mod_str(m);
    int shown = 0;
    for (const ResolutionStep& step : trail.steps) {
        if (steps > 0 && shown >= steps)
            break;
        std::cout << " ->O ";
        if (!step.syz) {
            std::cout << "0";
            break;
        }
        std::cout << mod_str(*step.syz);
        if (auto dec = delta_decompose_with(a, deltas, *step.syz)) {
            std::cout << "=D";
            for (std::size_t i = 0; i < dec->size(); ++i)
                std::cout << (i ? "." : "") << (*dec)[i];
        }
        ++shown;
    }
    std::cout << "\n";
    if (std::holds_alternative<FiniteAt>(trail.outcome)) {
        std::cout << "pdim " << std::get<FiniteAt>(trail.outcome).k << "\n";
    } else {
        std::cout << "periodic entry, rho = "
                  << std::get<PeriodicEntryAt>(trail.outcome).t << "\n";
    }
    return 0;
}

int cmd_phi(const AlgebraSource& src, const std::string& modules_flag, bool all,
            bool as_json) {
    Algebra a = load_algebra(src);
    std::vector<MaybeModule> ms;
    if (all) {
        for (const UniserialModule& m : all_indecomposables(a))
            ms.push_back(m);
    } else {
        if (modules_flag.empty())
            throw ParseError("need --module t:l[,t:l...] or --all");
        for (const std::string& tok : detail::split(modules_flag, ',')) {
            auto [top, len] = parse_module_spec(tok);
            ms.push_back(module(a, top, len));
        }
    }

    int value = phi(a, ms);
    auto trace = detail::class_trace(a, ms);
    auto per = omega_periodic(a);

    if (as_json) {
        json doc;
        doc["phi"] = value;
        doc["alpha_trace"] = json::array();
        for (const IsoClassSet& set : trace.sets)
            doc["alpha_trace"].push_back(set.size());
        doc["omega_per"] = json::array();
        for (const UniserialModule& m : per.members)
            doc["omega_per"].push_back(mod_flag(m));
        doc["rho"] = json::object();
        for (const MaybeModule& m : ms) {
            if (!m)
                continue;
            auto r = rho(a, *m);
            doc["rho"][mod_flag(*m)] = r ? json(*r) : json(nullptr);
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "phi = " << value << "\n";
    if (all)
        std::cout << "phi_dim = " << value << "\n";
    std::cout << "alpha_trace =";
    for (const IsoClassSet& set : trace.sets)
        std::cout << " " << set.size();
    std::cout << "\nomega_per = {";
    for (std::size_t i = 0; i < per.members.size(); ++i)
        std::cout << (i ? "," : "") << mod_str(per.members[i]);
    std::cout << "}\n";
    return 0;
}

int cmd_verify(const AlgebraSource& src, bool as_json) {
    Algebra a = load_algebra(src);
    auto results = verify_all(a);
    PhiReport rep = phi_report(a);
    if (as_json) {
        json doc;
        doc["kupisch"] = kupisch_str(a);
        doc["phi_dim"] = rep.phi_dim;
        doc["gldim"] = rep.gldim.is_finite() ? json(rep.gldim.value()) : json("inf");
        doc["findim"] = rep.findim;
        doc["checks"] = json::array();
        for (const CheckResult& c : results)
            doc["checks"].push_back(
                {{"name", c.name}, {"status", status_str(c.status)},
                 {"evidence", c.evidence}});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "kupisch " << kupisch_str(a) << ": phi_dim = " << rep.phi_dim
                  << ", gldim = " << rep.gldim.str() << ", findim = " << rep.findim
                  << "\n";
        for (const CheckResult& c : results)
            std::cout << "  " << status_str(c.status) << "  " << c.name << "  "
                      << c.evidence << "\n";
    }
    return all_passed(results) ? 0 : 1;
}

int cmd_census(const std::string& vertices, int max_len, const std::string& out_path,
               int workers) {
    CensusParams params;
    auto dots = vertices.find("..");
    auto dash = vertices.find('-');
    if (dots != std::string::npos) {
        params.n_min = detail::parse_int(vertices.substr(0, dots));
        params.n_max = detail::parse_int(vertices.substr(dots + 2));
    } else if (dash != std::string::npos) {
        params.n_min = detail::parse_int(vertices.substr(0, dash));
        params.n_max = detail::parse_int(vertices.substr(dash + 1));
    } else {
        params.n_min = params.n_max = detail::parse_int(vertices);
    }
    params.max_proj_len = max_len;
    params.output_path = out_path;
    params.workers = workers;
    if (const char* env = std::getenv("NAKPHI_WORKERS"))
        params.workers = detail::parse_int(env);
    if (params.workers < 1)
        params.workers = 1;

    CensusResult result = run_census(params);
    const CensusSummary& s = result.summary;
    std::cout << "algebras = " << s.total << "\n";
    std::cout << "finite_gldim = " << s.finite_gldim << "\n";
    std::cout << "infinite_gldim = " << s.infinite_gldim << "\n";
    std::cout << "phi_dim histogram:";
    for (const auto& [k, v] : s.phi_dim_histogram)
        std::cout << " " << k << ":" << v;
    std::cout << "\nmax phi_dim/2r = " << s.max_phi_over_2r << "\n";
    std::cout << "all_checks_passed = " << (s.all_checks_passed ? "true" : "false")
              << "\n";
    return s.all_checks_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of cyclic Nakayama algebras"};
    app.require_subcommand(1);

    AlgebraSource src;
    std::string module_flag, modules_flag, vertices_range = "3", census_out;
    int steps = 0, max_len = 4, workers = 1;
    bool all = false, as_json = false;

    auto* info = app.add_subcommand("info", "presentation, classes, Delta system");
    add_source_flags(info, src);

    auto* resolve_cmd = app.add_subcommand("resolve", "print a syzygy trail");
    add_source_flags(resolve_cmd, src);
    resolve_cmd->add_option("--module", module_flag, "module as top:length")->required();
    resolve_cmd->add_option("--steps", steps, "max steps to print (0 = all)");

    auto* phi_cmd = app.add_subcommand("phi", "Igusa-Todorov phi");
    add_source_flags(phi_cmd, src);
    phi_cmd->add_option("--module", modules_flag, "modules t:l[,t:l...]");
    phi_cmd->add_flag("--all", all, "use every indecomposable (phi-dimension)");
    phi_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* verify_cmd = app.add_subcommand("verify", "run every theorem check");
    add_source_flags(verify_cmd, src);
    verify_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* census_cmd = app.add_subcommand("census", "exhaustive sweep with CSV output");
    census_cmd->add_option("--vertices", vertices_range, "N or range, e.g. 3..5");
    census_cmd->add_option("--max-proj-len", max_len, "upper bound on the c_i");
    census_cmd->add_option("--out", census_out, "CSV output path");
    census_cmd->add_option("--workers", workers, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed())
            return cmd_info(src);
        if (resolve_cmd->parsed())
            return cmd_resolve(src, module_flag, steps);
        if (phi_cmd->parsed())
            return cmd_phi(src, modules_flag, all, as_json);
        if (verify_cmd->parsed())
            return cmd_verify(src, as_json);
        if (census_cmd->parsed())
            return cmd_census(vertices_range, max_len, census_out, workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
