#include "gstruct/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gstruct {
namespace {

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
    return obj.at(key);
}

std::string as_string(const Json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": expected a string");
    return v.get<std::string>();
}

std::size_t as_size(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(where + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

Rational as_rational(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw ParseError(where + ": expected a rational string or integer");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::vector<std::string> as_names(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected a list of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

ModuleAction parse_module(const std::string& name, const Json& m, const GStructureSpec& s) {
    const std::string where = "modules." + name;
    const std::string kind = as_string(require(m, "kind", where), where + ".kind");
    ModuleAction w;
    w.name = name;
    if (kind == "defining") {
        w.kind = ModuleKind::defining;
        w.dim_w = s.dim_v;
        return w;
    }
    if (kind != "explicit") throw ParseError(where + ".kind: expected \"defining\" or \"explicit\"");
    w.kind = ModuleKind::explicit_action;
    w.dim_w = as_size(require(m, "dim", where), where + ".dim");
    const Json& rho = require(m, "rho", where);
    if (!rho.is_object()) throw ParseError(where + ".rho: expected an object");
    for (const auto& [key, value] : rho.items()) {
        if (std::find(s.g0.begin(), s.g0.end(), key) == s.g0.end()) {
            throw ValidationError(where + ".rho: \"" + key + "\" is not a g0 element");
        }
    }
    for (const auto& g0_name : s.g0) {
        if (rho.contains(g0_name)) {
            w.rho.push_back(matrix_from_json(rho.at(g0_name), w.dim_w, w.dim_w, where + ".rho." + g0_name));
        } else {
            w.rho.emplace_back(w.dim_w, w.dim_w);
        }
    }
    return w;
}

CurvatureMatrix parse_manual(const std::string& name, const Json& m) {
    const std::string where = "manual_curvatures." + name;
    auto gens = std::make_shared<GeneratorSet>();
    const Json& list = require(m, "generators", where);
    if (!list.is_array()) throw ParseError(where + ".generators: expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = where + ".generators[" + std::to_string(i) + "]";
        Generator g;
        g.name = as_string(require(list[i], "name", at), at + ".name");
        try {
            g.tag = parse_gen_class(as_string(require(list[i], "class", at), at + ".class"));
            g.degree = g.tag == GenClass::weight ? 2 : 1;
            gens->add(g);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(at + ": " + e.what());
        }
    }
    const std::size_t dim = as_size(require(m, "dim", where), where + ".dim");
    const Json& entries = require(m, "entries", where);
    if (!entries.is_array() || entries.size() != dim) {
        throw ParseError(where + ".entries: expected " + std::to_string(dim) + " rows");
    }
    GeneratorSetPtr shared = gens;
    CurvatureMatrix out{FormMatrix(shared, dim), CurvatureMode::manual};
    for (std::size_t i = 0; i < dim; ++i) {
        if (!entries[i].is_array() || entries[i].size() != dim) {
            throw ParseError(where + ".entries[" + std::to_string(i) + "]: expected " + std::to_string(dim) +
                             " entries");
        }
        for (std::size_t j = 0; j < dim; ++j) {
            const std::string at = where + ".entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            const Json& terms = entries[i][j];
            if (!terms.is_array()) throw ParseError(at + ": expected a list of terms");
            GradedPoly entry(shared);
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string tat = at + "[" + std::to_string(t) + "]";
                const Json& term = terms[t];
                if (!term.is_array() || term.size() < 2) {
                    throw ParseError(tat + ": expected [coeff, generator, ...]");
                }
                GradedPoly value = GradedPoly::constant(shared, as_rational(term[0], tat));
                for (std::size_t k = 1; k < term.size(); ++k) {
                    const std::string gname = as_string(term[k], tat);
                    if (!gens->find(gname)) throw ValidationError(tat + ": unknown generator \"" + gname + "\"");
                    value = value * GradedPoly::generator(shared, gname);
                }
                if (!value.is_zero() && value.degree() != 2) {
                    throw ValidationError(tat + ": curvature entries must have degree 2");
                }
                entry += value;
            }
            out.omega(i, j) = std::move(entry);
        }
    }
    return out;
}

Json manual_to_json(const CurvatureMatrix& c) {
    const auto& gens = *c.omega.gens();
    Json doc;
    doc["dim"] = c.dim_w();
    Json list = Json::array();
    for (const auto& g : gens) list.push_back({{"name", g.name}, {"class", to_string(g.tag)}});
    doc["generators"] = list;
    Json rows = Json::array();
    for (std::size_t i = 0; i < c.dim_w(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < c.dim_w(); ++j) {
            Json terms = Json::array();
            for (const auto& [m, coeff] : c.omega(i, j).terms()) {
                Json term = Json::array({to_string(coeff)});
                for (std::size_t idx : m.factors()) term.push_back(gens[idx].name);
                terms.push_back(term);
            }
            row.push_back(terms);
        }
        rows.push_back(row);
    }
    doc["entries"] = rows;
    return doc;
}

}  // namespace

RatMatrix matrix_from_json(const Json& rows, std::size_t expect_rows, std::size_t expect_cols,
                           const std::string& where) {
    if (!rows.is_array() || rows.size() != expect_rows) {
        throw ParseError(where + ": expected " + std::to_string(expect_rows) + " rows");
    }
    RatMatrix m(expect_rows, expect_cols);
    for (std::size_t i = 0; i < expect_rows; ++i) {
        if (!rows[i].is_array() || rows[i].size() != expect_cols) {
            throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(expect_cols) +
                             " entries");
        }
        for (std::size_t j = 0; j < expect_cols; ++j) {
            m(i, j) = as_rational(rows[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }
    return m;
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

LoadedSpec parse_spec(const Json& doc) {
    if (!doc.is_object()) throw ParseError("spec: expected a JSON object");
    LoadedSpec out;
    out.name = as_string(require(doc, "name", "spec"), "name");

    if (doc.contains("g_basis")) {
        GStructureSpec s;
        s.name = out.name;
        s.dim_v = as_size(require(doc, "dim_v", "spec"), "dim_v");
        const Json& basis = doc.at("g_basis");
        if (!basis.is_array()) throw ParseError("g_basis: expected a list");
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const std::string at = "g_basis[" + std::to_string(i) + "]";
            NamedMatrix nm;
            nm.name = as_string(require(basis[i], "name", at), at + ".name");
            nm.matrix = matrix_from_json(require(basis[i], "matrix", at), s.dim_v, s.dim_v, at + ".matrix");
            s.g_basis.push_back(std::move(nm));
        }
        s.g0 = as_names(require(doc, "g0", "spec"), "g0");
        s.gplus = as_names(require(doc, "gplus", "spec"), "gplus");
        if (doc.contains("cartan")) s.cartan = as_names(doc.at("cartan"), "cartan");
        if (doc.contains("weight_vars")) s.weight_vars = as_names(doc.at("weight_vars"), "weight_vars");
        if (doc.contains("modules")) {
            const Json& mods = doc.at("modules");
            if (!mods.is_object()) throw ParseError("modules: expected an object");
            for (const auto& [name, m] : mods.items()) s.modules.push_back(parse_module(name, m, s));
        }
        try {
            LieAlgebra checked(s);
        } catch (const ValidationError& e) {
            throw ValidationError("spec \"" + out.name + "\": " + e.what());
        }
        out.spec = std::move(s);
    }
    if (doc.contains("manual_curvatures")) {
        const Json& manual = doc.at("manual_curvatures");
        if (!manual.is_object()) throw ParseError("manual_curvatures: expected an object");
        for (const auto& [name, m] : manual.items()) out.manual.emplace(name, parse_manual(name, m));
    }
    if (!out.spec && out.manual.empty()) throw ParseError("spec: needs g_basis or manual_curvatures");
    return out;
}

LoadedSpec parse_spec_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("JSON ") + e.what());
    }
    return parse_spec(doc);
}

LoadedSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_spec_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json spec_to_json(const LoadedSpec& loaded) {
    Json doc;
    doc["name"] = loaded.name;
    if (loaded.spec) {
        const GStructureSpec& s = *loaded.spec;
        doc["dim_v"] = s.dim_v;
        Json basis = Json::array();
        for (const auto& b : s.g_basis) basis.push_back({{"name", b.name}, {"matrix", matrix_to_json(b.matrix)}});
        doc["g_basis"] = basis;
        doc["g0"] = s.g0;
        doc["gplus"] = s.gplus;
        if (!s.cartan.empty()) doc["cartan"] = s.cartan;
        if (!s.weight_vars.empty()) doc["weight_vars"] = s.weight_vars;
        Json mods = Json::object();
        for (const auto& w : s.modules) {
            if (w.kind == ModuleKind::defining) {
                mods[w.name] = {{"kind", "defining"}};
                continue;
            }
            Json rho = Json::object();
            for (std::size_t k = 0; k < w.rho.size() && k < s.g0.size(); ++k) {
                if (!w.rho[k].is_zero()) rho[s.g0[k]] = matrix_to_json(w.rho[k]);
            }
            mods[w.name] = {{"kind", "explicit"}, {"dim", w.dim_w}, {"rho", rho}};
        }
        doc["modules"] = mods;
    }
    if (!loaded.manual.empty()) {
        Json manual = Json::object();
        for (const auto& [name, c] : loaded.manual) manual[name] = manual_to_json(c);
        doc["manual_curvatures"] = manual;
    }
    return doc;
}

CurvatureMatrix projective_normal_curvature(std::size_t q) {
    auto gens = std::make_shared<GeneratorSet>();
    for (std::size_t k = 0; k < q; ++k) gens->add({"p" + std::to_string(k + 1), 1, GenClass::pi});
    for (std::size_t k = 0; k < q; ++k) gens->add({"s" + std::to_string(k + 1), 1, GenClass::sigma});
    GeneratorSetPtr shared = gens;
    auto ws = [&](std::size_t a, std::size_t b) {
        return GradedPoly::generator(shared, a) * GradedPoly::generator(shared, q + b);
    };
    CurvatureMatrix out{FormMatrix(shared, q), CurvatureMode::manual};
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            GradedPoly e = -ws(j, i);
            if (i == j) {
                for (std::size_t k = 0; k < q; ++k) e -= ws(k, k);
            }
            out.omega(i, j) = std::move(e);
        }
    }
    return out;
}

std::vector<std::pair<std::string, Json>> catalogue() {
    std::vector<std::pair<std::string, Json>> out;
    auto add = [&](GStructureSpec s) {
        LoadedSpec l;
        l.name = s.name;
        l.spec = std::move(s);
        out.emplace_back(l.name + ".json", spec_to_json(l));
    };
    add(make_engel_spec());
    add(make_foliation_spec(1, 1));
    add(make_foliation_spec(1, 2));
    add(make_sl_foliation_spec(1, 1));
    add(make_conservation_spec());
    add(make_split_spec(1, 1));
    LoadedSpec projective;
    projective.name = "projective_q2";
    projective.manual.emplace("N", projective_normal_curvature(2));
    out.emplace_back("projective_q2.json", spec_to_json(projective));
    return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace gstruct
