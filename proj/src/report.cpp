#include "gstruct/report.hpp"

#include <algorithm>
#include <sstream>

#include "gstruct/chern_simons.hpp"
#include "gstruct/prolongation.hpp"
#include "gstruct/relations.hpp"

namespace gstruct {
namespace {

Json header(const std::string& command, const LoadedSpec& loaded) {
    return Json{{"schema", kReportSchema}, {"command", command}, {"spec", loaded.name}};
}

const GStructureSpec& need_spec(const LoadedSpec& loaded) {
    if (!loaded.spec) {
        throw PreconditionError("spec \"" + loaded.name + "\" has no Lie algebra; only --mode manual is available");
    }
    return *loaded.spec;
}

std::string render_g_vector(const LieAlgebra& g, const RatVector& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (sgn(v[a]) == 0) continue;
        Rational mag = abs(v[a]);
        if (first) {
            if (sgn(v[a]) < 0) os << '-';
        } else {
            os << (sgn(v[a]) < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << to_string(mag) << '*';
        os << g.basis_name(a);
    }
    return first ? "0" : os.str();
}

Json render_matrix(const FormMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

Json render_forms(const std::vector<GradedPoly>& forms) {
    Json out = Json::array();
    for (const auto& f : forms) out.push_back(f.to_string());
    return out;
}

Json generator_names(const GeneratorSetPtr& gens) {
    Json out = Json::array();
    for (const auto& g : *gens) out.push_back(g.name);
    return out;
}

struct Resolved {
    std::optional<FormContext> ctx;
    CurvatureMatrix omega;
    ChernForms forms;
};

Resolved resolve(const LoadedSpec& loaded, const CurvatureOptions& opts, std::optional<std::size_t> up_to) {
    if (opts.unprojected && opts.mode != CurvatureMode::prolongation) {
        throw PreconditionError("--unprojected applies to prolongation mode only");
    }
    Resolved r;
    switch (opts.mode) {
        case CurvatureMode::prolongation: {
            r.ctx.emplace(LieAlgebra(need_spec(loaded)));
            r.omega = curvature_matrix(*r.ctx, atiyah_tensor(*r.ctx, opts.module, !opts.unprojected));
            break;
        }
        case CurvatureMode::weight: {
            WeightForms wf = weight_chern_forms(LieAlgebra(need_spec(loaded)), opts.module);
            r.omega = std::move(wf.omega);
            r.omega.mode = CurvatureMode::weight;
            break;
        }
        case CurvatureMode::manual: {
            auto it = loaded.manual.find(opts.module);
            if (it == loaded.manual.end()) {
                throw PreconditionError("spec \"" + loaded.name + "\" has no manual curvature \"" + opts.module + "\"");
            }
            r.omega = it->second;
            break;
        }
    }
    const std::size_t top = std::min(up_to.value_or(r.omega.dim_w()), r.omega.dim_w());
    if (up_to && *up_to > r.omega.dim_w()) {
        throw PreconditionError("--up-to " + std::to_string(*up_to) + " exceeds the module dimension " +
                                std::to_string(r.omega.dim_w()));
    }
    r.forms = chern_forms(r.omega, top);
    return r;
}

Json curvature_header(const LoadedSpec& loaded, const CurvatureOptions& opts, const std::string& command) {
    Json j = header(command, loaded);
    j["module"] = opts.module;
    j["mode"] = to_string(opts.mode);
    j["projected"] = !opts.unprojected;
    return j;
}

std::string curvature_title(const LoadedSpec& loaded, const CurvatureOptions& opts) {
    std::string s = "spec " + loaded.name + ", module " + opts.module + ", mode " + to_string(opts.mode);
    if (opts.mode == CurvatureMode::prolongation) s += opts.unprojected ? " (unprojected)" : " (projected)";
    return s + "\n";
}

}  // namespace

CurvatureMode parse_curvature_mode(const std::string& s) {
    if (s == "prolongation") return CurvatureMode::prolongation;
    if (s == "weight") return CurvatureMode::weight;
    if (s == "manual") return CurvatureMode::manual;
    throw std::invalid_argument("unknown mode \"" + s + "\"");
}

Report check_report(const LoadedSpec& loaded) {
    Report r{header("check", loaded), ""};
    std::ostringstream os;
    os << "spec " << loaded.name << ": valid\n";
    if (loaded.spec) {
        LieAlgebra g(*loaded.spec);
        r.json["dim_v"] = g.dim_v();
        r.json["dim_g"] = g.dim();
        r.json["dim_g0"] = g.dim_g0();
        Json mods = Json::array();
        for (const auto& w : loaded.spec->modules) mods.push_back(w.name);
        r.json["modules"] = mods;
        os << "dim V = " << g.dim_v() << "\ndim g = " << g.dim() << "\ndim g0 = " << g.dim_g0() << "\n";
        for (const auto& w : loaded.spec->modules) os << "module " << w.name << " (dim " << w.dim_w << ")\n";
    }
    Json manual = Json::array();
    for (const auto& [name, c] : loaded.manual) {
        manual.push_back(name);
        os << "manual curvature " << name << " (dim " << c.dim_w() << ")\n";
    }
    r.json["manual_curvatures"] = manual;
    r.text = os.str();
    return r;
}

Report prolong_report(const LoadedSpec& loaded) {
    LieAlgebra g(need_spec(loaded));
    SpencerReport sr = spencer_report(g);
    ProlongationBasis basis = prolongation_basis(g);
    const std::size_t n = g.dim_v();

    Report r{header("prolong", loaded), ""};
    r.json["dim_v"] = n;
    r.json["dim_g"] = g.dim();
    r.json["dim_g0"] = g.dim_g0();
    r.json["dim_gplus"] = g.gplus_indices().size();
    r.json["dim_g1"] = sr.dim_prolongation;
    r.json["dim_v1"] = n + g.dim();
    r.json["delta"] = {{"domain", sr.dim_domain}, {"target", sr.dim_target}, {"rank", sr.rank_delta}};
    r.json["dim_spencer"] = sr.dim_spencer;

    Json elems = Json::array();
    for (const auto& q : basis.elements) {
        Json values = Json::array();
        for (std::size_t i = 0; i < n; ++i) values.push_back(render_g_vector(g, q.values[i]));
        elems.push_back(values);
    }
    r.json["g1_basis"] = elems;

    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pair_list;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
    }
    Json coker = Json::array();
    for (std::size_t idx : sr.coker_reps) {
        auto [i, j] = pair_list[idx % pairs];
        coker.push_back("y" + std::to_string(idx / pairs + 1) + "*eta" + std::to_string(i + 1) + "^eta" +
                        std::to_string(j + 1));
    }
    r.json["spencer_representatives"] = coker;

    std::ostringstream os;
    os << "spec " << loaded.name << "\n";
    os << "dim V = " << n << "\n";
    os << "dim g = " << g.dim() << "\n";
    os << "dim g0 = " << g.dim_g0() << "\n";
    os << "rank delta = " << sr.rank_delta << " (" << sr.dim_domain << " -> " << sr.dim_target << ")\n";
    os << "dim g1 = " << sr.dim_prolongation << "\n";
    os << "dim spencer = " << sr.dim_spencer << "\n";
    os << "dim V1 = " << n + g.dim() << "\n";
    for (std::size_t a = 0; a < basis.dim(); ++a) {
        os << "Q" << a + 1 << ":";
        for (std::size_t i = 0; i < n; ++i) {
            os << (i ? ", " : " ") << "y" << i + 1 << " -> " << render_g_vector(g, basis.elements[a].values[i]);
        }
        os << "\n";
    }
    r.text = os.str();
    return r;
}

Report chern_report(const LoadedSpec& loaded, const CurvatureOptions& opts) {
    Resolved res = resolve(loaded, opts, opts.up_to);
    Report r{curvature_header(loaded, opts, "chern"), ""};
    r.json["normalization"] = kChernNormalization;
    r.json["generators"] = generator_names(res.omega.omega.gens());
    r.json["curvature"] = render_matrix(res.omega.omega);
    r.json["c"] = render_forms(res.forms.c);
    r.json["ch"] = render_forms(res.forms.ch);
    r.json["todd"] = render_forms(res.forms.todd);

    std::ostringstream os;
    os << curvature_title(loaded, opts);
    os << "normalization: " << kChernNormalization << "\n";
    for (std::size_t i = 0; i < res.omega.dim_w(); ++i) {
        for (std::size_t j = 0; j < res.omega.dim_w(); ++j) {
            os << "Omega[" << i + 1 << "," << j + 1 << "] = " << res.omega.omega(i, j).to_string() << "\n";
        }
    }
    for (std::size_t k = 1; k < res.forms.c.size(); ++k) os << "chat_" << k << " = " << res.forms.c[k].to_string() << "\n";
    for (std::size_t k = 1; k < res.forms.ch.size(); ++k) os << "ch_" << k << " = " << res.forms.ch[k].to_string() << "\n";
    for (std::size_t k = 1; k < res.forms.todd.size(); ++k) {
        os << "td_" << k << " = " << res.forms.todd[k].to_string() << "\n";
    }
    r.text = os.str();
    return r;
}

Report relations_report(const LoadedSpec& loaded, const CurvatureOptions& opts, int degree) {
    if (degree < 1) throw PreconditionError("--degree must be at least 1");
    CurvatureOptions o = opts;
    Resolved res = resolve(loaded, o, static_cast<std::size_t>(degree));
    RelationSet rs = relation_basis(res.forms, degree);

    Report r{curvature_header(loaded, opts, "relations"), ""};
    r.json["degree"] = degree;
    r.json["monomials"] = rs.monomial_count;
    r.json["rank"] = rs.rank;
    r.json["kernel_dim"] = rs.kernel_dim;
    Json basis = Json::array();
    for (const auto& p : rs.basis) basis.push_back({{"normalized", p.to_string()}, {"monic", monic_rendering(p)}});
    r.json["relations"] = basis;

    std::ostringstream os;
    os << curvature_title(loaded, opts);
    os << "degree " << degree << ": " << rs.monomial_count << " monomials, rank " << rs.rank << ", "
       << rs.kernel_dim << (rs.kernel_dim == 1 ? " relation" : " relations") << "\n";
    for (const auto& p : rs.basis) os << "0 = " << p.to_string() << "    (" << monic_rendering(p) << ")\n";
    r.text = os.str();
    return r;
}

Report vanish_report(const LoadedSpec& loaded, const CurvatureOptions& opts) {
    Resolved res = resolve(loaded, opts, std::nullopt);
    VanishingReport v = vanishing_report(res.omega);

    Report r{curvature_header(loaded, opts, "vanish"), ""};
    r.json["sigma_support"] = v.support_names;
    r.json["support_bound"] = v.support_bound;
    Json zero = Json::array();
    for (std::size_t k = 1; k < v.chern_zero.size(); ++k) zero.push_back(static_cast<bool>(v.chern_zero[k]));
    r.json["chern_zero"] = zero;

    std::ostringstream os;
    os << curvature_title(loaded, opts);
    os << "sigma support: {";
    for (std::size_t i = 0; i < v.support_names.size(); ++i) os << (i ? ", " : "") << v.support_names[i];
    os << "} (size " << v.support_bound << ")\n";
    os << "Chern monomials of weight > " << v.support_bound << " vanish\n";
    for (std::size_t k = 1; k < v.chern_zero.size(); ++k) {
        os << "chat_" << k << (v.chern_zero[k] ? " = 0" : " ≠ 0") << "\n";
    }
    Json powers = Json::array();
    for (std::size_t k = 1; k <= v.support_bound + 1; ++k) {
        const bool z = wedge_power_vanishing(res.omega, k);
        powers.push_back(z);
        const std::string name = k == 1 ? "Ω" : k == 2 ? "Ω∧Ω" : "Ω^" + std::to_string(k);
        os << name << (z ? " = 0" : " ≠ 0") << "\n";
    }
    r.json["wedge_power_zero"] = powers;
    r.text = os.str();
    return r;
}

Report cs_report(const LoadedSpec& loaded, const std::string& module, const std::string& invariant) {
    const bool is_pattern = invariant.find("tr(") != std::string::npos;
    TracePattern f = is_pattern ? TracePattern::parse(invariant)
                                : chern_polynomial_pattern(ChernPolynomial::parse(invariant));
    if (f.degree() == 0) throw PreconditionError("invariant has degree 0");
    FormContext ctx{LieAlgebra(need_spec(loaded))};
    GradedPoly cs = cs_form(ctx, module, f);
    CSCoefficients coeffs = cs_coefficients(f.degree());
    CSVanishing bound = cs_vanishing_degree(ctx, module);

    Report r{header("cs", loaded), ""};
    r.json["module"] = module;
    r.json["invariant"] = invariant;
    r.json["pattern"] = f.to_string();
    r.json["degree"] = f.degree();
    Json a = Json::array();
    for (const auto& x : coeffs.a) a.push_back(to_string(x));
    r.json["coefficients"] = a;
    r.json["coefficient_note"] = "Chern-Simons 1974 use A_j = a_j/2^j";
    r.json["cs"] = cs.to_string();
    r.json["vanishing"] = {{"bound", bound.bound},
                           {"patterns_checked", bound.patterns_checked},
                           {"nonzero", bound.nonzero},
                           {"leading_nonzero", bound.leading_nonzero}};

    std::ostringstream os;
    os << "spec " << loaded.name << ", module " << module << "\n";
    os << "pattern: " << f.to_string() << " (degree " << f.degree() << ")\n";
    os << "a_j:";
    for (const auto& x : coeffs.a) os << " " << to_string(x);
    os << "    (Chern-Simons 1974 use A_j = a_j/2^j)\n";
    os << "CS = " << cs.to_string() << "\n";
    os << "vanishing bound: degree " << bound.bound << "; " << bound.patterns_checked << " power-sum patterns checked, "
       << bound.nonzero.size() << " with nonzero CS, " << bound.leading_nonzero.size()
       << " with nonzero f(Gamma, Omega, ..., Omega)\n";
    r.text = os.str();
    return r;
}

}  // namespace gstruct
