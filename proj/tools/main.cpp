#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gstruct/report.hpp"

namespace fs = std::filesystem;
using namespace gstruct;

namespace {

struct Globals {
    bool json = false;
    bool quiet = false;
};

void emit(const Report& r, const Globals& g) {
    if (g.json) {
        std::cout << dump(r.json);
    } else if (!g.quiet) {
        std::cout << r.text;
    }
}

void add_curvature_options(CLI::App* cmd, CurvatureOptions& opts, std::string& mode) {
    cmd->add_option("--module", opts.module, "Module name")->capture_default_str();
    cmd->add_option("--mode", mode, "prolongation, weight or manual")
        ->check(CLI::IsMember({"prolongation", "weight", "manual"}))
        ->capture_default_str();
    cmd->add_flag("--unprojected", opts.unprojected, "Use the unprojected Atiyah tensor");
}

int write_examples(const std::string& dir, const std::vector<std::size_t>& foliation,
                   const std::vector<std::size_t>& split, const std::vector<std::size_t>& sl, const Globals& g) {
    std::vector<std::pair<std::string, Json>> files;
    auto single = [&](GStructureSpec s) {
        LoadedSpec l;
        l.name = s.name;
        l.spec = std::move(s);
        files.emplace_back(l.name + ".json", spec_to_json(l));
    };
    if (!foliation.empty()) single(make_foliation_spec(foliation[0], foliation[1]));
    if (!split.empty()) single(make_split_spec(split[0], split[1]));
    if (!sl.empty()) single(make_sl_foliation_spec(sl[0], sl[1]));
    if (files.empty()) files = catalogue();

    fs::create_directories(dir);
    for (const auto& [name, doc] : files) {
        const fs::path path = fs::path(dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ParseError("cannot write " + path.string());
        out << dump(doc);
        if (!g.quiet && !g.json) std::cout << "wrote " << path.string() << "\n";
    }
    if (g.json) {
        Json list = Json::array();
        for (const auto& f : files) list.push_back(f.first);
        std::cout << dump(Json{{"schema", kReportSchema}, {"command", "examples"}, {"files", list}});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prolongations, characteristic forms and Chern class relations of G-structures"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--quiet", g.quiet, "Suppress text output");

    std::string spec_path;
    CurvatureOptions opts;
    std::string mode = "prolongation";
    std::size_t up_to = 0;
    int degree = 0;
    std::string invariant;

    auto* check = app.add_subcommand("check", "Validate a spec file");
    check->add_option("spec", spec_path)->required();

    auto* prolong = app.add_subcommand("prolong", "Prolongation and Spencer dimensions");
    prolong->add_option("spec", spec_path)->required();

    auto* chern = app.add_subcommand("chern", "Curvature, Chern, Chern character and Todd forms");
    chern->add_option("spec", spec_path)->required();
    add_curvature_options(chern, opts, mode);
    chern->add_option("--up-to", up_to, "Highest Chern form to compute");

    auto* relations = app.add_subcommand("relations", "Relations among Chern forms of one degree");
    relations->add_option("spec", spec_path)->required();
    add_curvature_options(relations, opts, mode);
    relations->add_option("--degree", degree, "Weighted degree")->required();

    auto* vanish = app.add_subcommand("vanish", "Sigma support and vanishing of Chern forms and powers");
    vanish->add_option("spec", spec_path)->required();
    add_curvature_options(vanish, opts, mode);

    auto* cs = app.add_subcommand("cs", "Chern-Simons form of an invariant polynomial");
    cs->add_option("spec", spec_path)->required();
    cs->add_option("--module", opts.module, "Module name")->capture_default_str();
    cs->add_option("--invariant", invariant, "Chern polynomial or trace pattern")->required();

    std::string out_dir;
    std::vector<std::size_t> foliation, split, sl;
    auto* examples = app.add_subcommand("examples", "Write the bundled spec catalogue");
    examples->add_option("dir", out_dir)->required();
    auto* fol_opt = examples->add_option("--foliation", foliation, "Only foliation(p, q)")->expected(2);
    auto* split_opt = examples->add_option("--split", split, "Only split(p, q)")->expected(2);
    auto* sl_opt = examples->add_option("--sl-foliation", sl, "Only sl_foliation(p, q)")->expected(2);
    fol_opt->excludes(split_opt)->excludes(sl_opt);
    split_opt->excludes(sl_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        opts.mode = parse_curvature_mode(mode);
        if (*chern && up_to > 0) opts.up_to = up_to;
        if (*examples) return write_examples(out_dir, foliation, split, sl, g);

        LoadedSpec loaded = load_spec(spec_path);
        if (*check) emit(check_report(loaded), g);
        if (*prolong) emit(prolong_report(loaded), g);
        if (*chern) emit(chern_report(loaded, opts), g);
        if (*relations) emit(relations_report(loaded, opts, degree), g);
        if (*vanish) emit(vanish_report(loaded, opts), g);
        if (*cs) emit(cs_report(loaded, opts.module, invariant), g);
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
