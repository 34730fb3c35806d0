#include "frolic/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace frolic {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt_double(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

std::vector<double> parse_csv_reals(const std::string& csv) {
    std::vector<double> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        const double x = std::stod(item, &used);
        out.push_back(x);
    }
    return out;
}

struct CliError {
    int code;
    std::string message;
};

GroupSpec spec_from_json(const json& doc) {
    GroupSpec spec;
    if (doc.contains("group"))
        spec.kind = doc.at("group").get<std::string>();
    else if (doc.contains("kind"))
        spec.kind = doc.at("kind").get<std::string>();
    else
        throw InvalidParameter("spec needs a \"group\" or \"kind\" key");
    spec.params = doc.contains("params") ? doc.at("params") : doc;
    return spec;
}

std::vector<std::vector<int>> parse_supports(const json& params) {
    std::vector<std::vector<int>> supports;
    if (params.contains("supports"))
        supports = params.at("supports").get<std::vector<std::vector<int>>>();
    return supports;
}

Report saturation_report(const SpaceDescriptor& space, const RunConfig& cfg) {
    const ProbeReport probe = saturation_check(space);
    Report report{"saturation", space.name, static_cast<int>(space.gen_functions.size() * space.gen_curves.size()),
                  probe.worst_abs_dev, probe.pass, cfg.seed};
    return report;
}

Report product_iso_report(const FrolicherGroupDescriptor& g, const RunConfig& cfg) {
    Report report{"product-iso", g.name, cfg.trials, 0.0, true, cfg.seed};
    const auto prod_space = product(g.space, g.space);
    const auto probes = probe_functions(*prod_space, 20, mix_seed(cfg.seed, 0xf00d));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto rng = make_rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
        const TangentVector vx = random_tangent(g, rng);
        const TangentVector vy = random_tangent(g, rng);
        const TangentVector joined = product_join(vx, vy);
        const auto [lx, ly] = product_split(joined);
        double dev = 0.0;
        for (const auto& f : probe_functions(*g.space, 10, mix_seed(cfg.seed, 77))) {
            dev = std::max(dev, std::abs(pairing(lx, f) - pairing(vx, f)));
            dev = std::max(dev, std::abs(pairing(ly, f) - pairing(vy, f)));
        }
        const TangentVector rejoined = product_join(lx, ly);
        for (const auto& f : probes)
            dev = std::max(dev, std::abs(pairing(rejoined, f) - pairing(joined, f)));
        report.absorb(dev, cfg.tol);
    }
    return report;
}

Report functorial_report(GroupPtr g, const RunConfig& cfg) {
    if (g->name == "heisenberg3") {
        const GroupPtr h = additive_group(2);
        const SmoothMap alpha = heisenberg_center_quotient(g->space, h->space);
        return pushforward_bracket_check(*g, *h, alpha, cfg.trials, cfg.tol,
                                         cfg.seed);
    }
    auto rng = make_rng(mix_seed(cfg.seed, 0xadde));
    const SmoothMap alpha = conjugation_map(*g, random_element(*g, rng));
    return pushforward_bracket_check(*g, *g, alpha, cfg.trials, cfg.tol,
                                     cfg.seed);
}

void print_report(const Report& report, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        out << report.to_json().dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "suite,group,trials,worst_abs_dev,pass,seed\n"
            << report.suite << "," << report.group << "," << report.trials
            << "," << fmt_double(report.worst_abs_dev) << ","
            << (report.pass ? "true" : "false") << "," << report.seed << "\n";
    } else {
        out << "suite " << report.suite << " on " << report.group << ": "
            << (report.pass ? "pass" : "FAIL") << " (trials " << report.trials
            << ", worst |dev| " << fmt_double(report.worst_abs_dev) << ", seed "
            << report.seed << ")\n";
    }
}

int cmd_bracket(const GroupSpec& spec, const std::string& v_csv,
                const std::string& w_csv, const RunConfig& cfg,
                std::ostream& out) {
    const GroupPtr g = make_group(spec);
    const std::vector<double> v = parse_csv_reals(v_csv);
    const std::vector<double> w = parse_csv_reals(w_csv);
    if (static_cast<int>(v.size()) != g->lie_dim ||
        static_cast<int>(w.size()) != g->lie_dim)
        throw InvalidParameter("coordinate length must equal lie_dim = " +
                               std::to_string(g->lie_dim));
    const LieVector result = bracket(*g, chart_line(*g, v), chart_line(*g, w));
    if (cfg.format == "json") {
        ordered_json doc{{"group", g->name}, {"bracket", result}};
        out << doc.dump() << "\n";
    } else if (cfg.format == "csv") {
        for (size_t i = 0; i < result.size(); ++i)
            out << (i ? "," : "") << fmt_double(result[i]);
        out << "\n";
    } else {
        out << "[v, w] = (";
        for (size_t i = 0; i < result.size(); ++i)
            out << (i ? ", " : "") << fmt_double(result[i]);
        out << ")\n";
    }
    return 0;
}

int cmd_constants(const GroupSpec& spec, const RunConfig& cfg,
                  std::ostream& out, std::ostream& err) {
    const GroupPtr g = make_group(spec);
    const StructureTable table = structure_constants(*g);

    // Antisymmetry gate before anything is printed.
    double worst = 0.0;
    for (int i = 0; i < table.dim; ++i)
        for (int j = 0; j < table.dim; ++j)
            for (int k = 0; k < table.dim; ++k) {
                const double cij = table.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
                const double cji = table.c[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)];
                worst = std::max(worst, std::abs(cij + cji));
                if (i == j) worst = std::max(worst, std::abs(cij));
            }
    if (worst > 1e-10) {
        err << "structure table violates antisymmetry: worst |dev| "
            << fmt_double(worst) << "\n";
        return 1;
    }

    const double zero_cut = 1e-12;
    if (cfg.format == "json") {
        ordered_json entries = ordered_json::array();
        for (int i = 0; i < table.dim; ++i)
            for (int j = 0; j < table.dim; ++j)
                for (int k = 0; k < table.dim; ++k) {
                    const double c = table.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
                    if (std::abs(c) <= zero_cut) continue;
                    entries.push_back(ordered_json{{"i", i}, {"j", j}, {"k", k}, {"c", c}});
                }
        ordered_json doc{{"group", g->name}, {"dim", table.dim}, {"entries", entries}};
        out << doc.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "i,j,k,c\n";
        for (int i = 0; i < table.dim; ++i)
            for (int j = 0; j < table.dim; ++j)
                for (int k = 0; k < table.dim; ++k) {
                    const double c = table.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
                    if (std::abs(c) <= zero_cut) continue;
                    out << i << "," << j << "," << k << "," << fmt_double(c) << "\n";
                }
    } else {
        out << "structure constants of " << g->name << " (dim " << table.dim
            << ", zero rows omitted)\n";
        for (int i = 0; i < table.dim; ++i)
            for (int j = 0; j < table.dim; ++j) {
                const auto& row = table.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
                double magnitude = 0.0;
                for (double x : row) magnitude = std::max(magnitude, std::abs(x));
                if (magnitude <= zero_cut) continue;
                out << "[e" << i << ", e" << j << "] = (";
                for (size_t k = 0; k < row.size(); ++k)
                    out << (k ? ", " : "") << fmt_double(row[k]);
                out << ")\n";
            }
    }
    return 0;
}

int cmd_verify(const GroupSpec& spec, const std::string& suite,
               const RunConfig& cfg, std::ostream& out) {
    Report report;
    if (suite == "saturation") {
        report = saturation_report(*make_space(spec), cfg);
    } else {
        const GroupPtr g = make_group(spec);
        if (suite == "axioms")
            report = verify_lie_axioms(*g, cfg.trials, cfg.tol, cfg.seed);
        else if (suite == "comm")
            report = verify_comm_identity(*g, cfg.trials, cfg.tol, cfg.seed);
        else if (suite == "mixed")
            report = verify_mixed_partial_identity(*g, cfg.trials, cfg.tol, cfg.seed);
        else if (suite == "trivialization")
            report = verify_trivialization(*g, cfg.trials, cfg.tol, cfg.seed);
        else if (suite == "product-iso")
            report = product_iso_report(*g, cfg);
        else if (suite == "functorial")
            report = functorial_report(g, cfg);
        else if (suite == "rj")
            report = rj_isomorphism_check(*g, cfg.trials, cfg.tol, cfg.seed);
        else
            throw InvalidParameter("unknown suite: " + suite);
    }
    print_report(report, cfg, out);
    return report.pass ? 0 : 1;
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
    const auto groups = builtin_group_listing();
    if (cfg.format == "json") {
        ordered_json doc = ordered_json::array();
        for (const auto& b : groups)
            doc.push_back(ordered_json{
                {"kind", b.kind}, {"params", b.params}, {"lie_dim", b.lie_dim}});
        ordered_json spaces = ordered_json::array();
        for (const char* s : {"euclidean", "circle", "coordinate_cross", "r_power"})
            spaces.push_back(s);
        out << ordered_json{{"groups", doc}, {"spaces", spaces}}.dump() << "\n";
    } else {
        out << "builtin groups:\n";
        for (const auto& b : groups) {
            out << "  " << b.kind;
            if (!b.params.empty()) out << " (" << b.params << ")";
            out << ", lie_dim = " << b.lie_dim << "\n";
        }
        out << "builtin spaces:\n  euclidean, circle, coordinate_cross, r_power\n";
    }
    return 0;
}

} // namespace

GroupSpec parse_group_spec(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream file(arg.substr(1));
        if (!file) throw InvalidParameter("cannot open spec file " + arg.substr(1));
        std::stringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("bad spec JSON: ") + e.what());
    }
    try {
        return spec_from_json(doc);
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("bad spec shape: ") + e.what());
    }
}

GroupPtr make_group(const GroupSpec& spec) {
    try {
        const json& p = spec.params;
        if (spec.kind == "additive") return additive_group(p.value("n", 1));
        if (spec.kind == "gl") return gl_group(p.value("n", 2));
        if (spec.kind == "so3") return so3_group();
        if (spec.kind == "sl2") return sl2_group();
        if (spec.kind == "heisenberg3") return heisenberg_group();
        if (spec.kind == "torus2") return torus2_group();
        if (spec.kind == "r_power")
            return r_power_group(p.value("J_size", 100), parse_supports(p));
        if (spec.kind == "loop")
            return loop_group(p.value("modes", 2), p.value("target", std::string("so3")));
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("bad params for ") + spec.kind + ": " +
                               e.what());
    }
    throw InvalidParameter("unknown group kind: " + spec.kind);
}

SpacePtr make_space(const GroupSpec& spec) {
    try {
        const json& p = spec.params;
        if (spec.kind == "euclidean") return euclidean_space(p.value("n", 1));
        if (spec.kind == "circle") return circle_space();
        if (spec.kind == "coordinate_cross") return coordinate_cross_space();
        if (spec.kind == "r_power" && !p.contains("group"))
            return r_power_space(p.value("J_size", 100), parse_supports(p));
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("bad params for ") + spec.kind + ": " +
                               e.what());
    }
    return make_group(spec)->space;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"frolic: Lie brackets on Frolicher groups via second-order jets"};
    app.require_subcommand(1);

    std::string group_arg, v_csv, w_csv, suite;
    RunConfig cfg;

    auto add_common = [&](CLI::App* cmd, bool with_config) {
        cmd->add_option("--group", group_arg, "group spec as JSON or @file");
        cmd->add_option("--format", cfg.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        if (with_config) {
            cmd->add_option("--trials", cfg.trials, "number of seeded trials");
            cmd->add_option("--tol", cfg.tol, "tolerance for deviations");
            cmd->add_option("--seed", cfg.seed, "base RNG seed");
        }
    };

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "compute [v, w]");
    add_common(bracket_cmd, false);
    bracket_cmd->add_option("--v", v_csv, "first vector, comma-separated chart coords")
        ->required();
    bracket_cmd->add_option("--w", w_csv, "second vector")->required();

    CLI::App* constants_cmd =
        app.add_subcommand("constants", "structure-constant table");
    add_common(constants_cmd, false);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verify_cmd, true);
    verify_cmd
        ->add_option("--suite", suite,
                     "axioms | comm | mixed | trivialization | product-iso | "
                     "functorial | rj | saturation")
        ->required();

    CLI::App* list_cmd = app.add_subcommand("list", "list builtin groups and spaces");
    list_cmd->add_option("--format", cfg.format, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (const char* env_seed = std::getenv("FROLIC_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            err << "FROLIC_SEED is not an integer\n";
            return 2;
        }
    }

    return run_guarded(
        [&]() -> int {
            if (list_cmd->parsed()) return cmd_list(cfg, out);
            if (group_arg.empty()) {
                err << "--group is required\n";
                return 2;
            }
            const GroupSpec spec = parse_group_spec(group_arg);
            if (bracket_cmd->parsed())
                return cmd_bracket(spec, v_csv, w_csv, cfg, out);
            if (constants_cmd->parsed()) return cmd_constants(spec, cfg, out, err);
            return cmd_verify(spec, suite, cfg, out);
        },
        err);
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const InvalidParameter& e) {
        err << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const NotAHomomorphism& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "numeric domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "spec error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace frolic
