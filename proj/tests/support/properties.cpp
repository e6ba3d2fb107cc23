#include "properties.hpp"

#include <filesystem>
#include <random>

#include "gstruct/chern_simons.hpp"
#include "gstruct/relations.hpp"
#include "gstruct/spec_io.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace gstruct::props {
namespace {

std::vector<std::string> catalogue_files(const std::string& dir) {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".json") out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

RatMatrix random_matrix(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 7);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    const std::size_t rows = static_cast<std::size_t>(dim(rng));
    const std::size_t cols = static_cast<std::size_t>(dim(rng));
    const std::size_t target_rank = std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols))(rng);
    // Sum of target_rank random rank-one matrices, so low ranks actually occur.
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < target_rank; ++r) {
        RatVector u(rows), v(cols);
        for (auto& x : u) x = Rational(num(rng), den(rng));
        for (auto& x : v) x = Rational(num(rng), den(rng));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m(i, j) += u[i] * v[j];
        }
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j).canonicalize();
    }
    return m;
}

GradedPoly random_poly(const GeneratorSetPtr& gens, std::size_t odd, std::size_t even, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> odd_pick(0, 5);
    std::uniform_int_distribution<std::size_t> even_pick(6, 8);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> terms(1, 3);
    GradedPoly f(gens);
    for (int t = terms(rng); t > 0; --t) {
        GradedPoly term = GradedPoly::constant(gens, Rational(coeff(rng)));
        for (std::size_t i = 0; i < odd; ++i) term = term * GradedPoly::generator(gens, odd_pick(rng));
        for (std::size_t i = 0; i < even; ++i) term = term * GradedPoly::generator(gens, even_pick(rng));
        f += term;
    }
    return f;
}

ChernForms product_forms(const ChernForms& a, const ChernForms& b) {
    ChernForms out;
    out.gens = a.gens;
    out.dim_w = a.dim_w + b.dim_w;
    out.c.assign(out.dim_w + 1, GradedPoly(a.gens));
    for (std::size_t i = 0; i <= a.dim_w; ++i) {
        for (std::size_t j = 0; j <= b.dim_w; ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
}

}  // namespace

std::vector<LabeledCurvature> catalogue_curvatures(const std::string& catalogue_dir) {
    std::vector<LabeledCurvature> out;
    for (const auto& path : catalogue_files(catalogue_dir)) {
        LoadedSpec loaded = load_spec(path);
        if (loaded.spec) {
            FormContext ctx{LieAlgebra(*loaded.spec)};
            for (const auto& w : loaded.spec->modules) {
                const std::string base = loaded.name + "/" + w.name;
                out.push_back({base + "/projected", curvature_matrix(ctx, atiyah_tensor(ctx, w.name, true))});
                if (w.kind == ModuleKind::defining) {
                    out.push_back({base + "/unprojected", curvature_matrix(ctx, atiyah_tensor(ctx, w.name, false))});
                }
                if (!loaded.spec->cartan.empty()) {
                    try {
                        out.push_back({base + "/weight", weight_chern_forms(ctx.algebra(), w.name).omega});
                    } catch (const PreconditionError&) {
                    }
                }
            }
        }
        for (const auto& [name, c] : loaded.manual) out.push_back({loaded.name + "/" + name + "/manual", c});
    }
    return out;
}

SuiteResult rank_nullity(std::size_t count, std::uint64_t seed) {
    SuiteResult r{"rank-nullity", 0, {}};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < count; ++t) {
        RatMatrix m = random_matrix(rng);
        const std::size_t rk = rank(m);
        const auto ker = kernel_basis(m);
        ++r.cases;
        bool ok = rk + ker.size() == m.cols();
        for (const auto& v : ker) {
            RatVector mv(m.rows());
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) mv[i] += m(i, j) * v[j];
            }
            ok = ok && is_zero(mv);
        }
        if (!ker.empty()) ok = ok && rank(from_columns(ker, m.cols())) == ker.size();
        if (!ok) r.failures.push_back("case " + std::to_string(t));
    }
    return r;
}

SuiteResult koszul_signs(std::size_t count, std::uint64_t seed) {
    SuiteResult r{"koszul-signs", 0, {}};
    auto gens = std::make_shared<GeneratorSet>();
    for (int i = 0; i < 6; ++i) gens->add({"x" + std::to_string(i), 1, GenClass::custom});
    for (int i = 0; i < 3; ++i) gens->add({"u" + std::to_string(i), 2, GenClass::custom});
    GeneratorSetPtr shared = gens;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> odd(0, 3);
    std::uniform_int_distribution<std::size_t> even(0, 2);
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t fo = odd(rng), fe = even(rng), go = odd(rng), ge = even(rng);
        GradedPoly f = random_poly(shared, fo, fe, rng);
        GradedPoly g = random_poly(shared, go, ge, rng);
        GradedPoly h = random_poly(shared, odd(rng), even(rng), rng);
        const int sign = (fo * go) % 2 == 0 ? 1 : -1;
        ++r.cases;
        bool ok = f * g == g * f * Rational(sign);
        ok = ok && (f * g) * h == f * (g * h);
        ok = ok && f * (g + h) == f * g + f * h;
        if (fo % 2 == 1 && fe == 0) ok = ok && (f * f).is_zero();
        if (!ok) r.failures.push_back("pair " + std::to_string(t) + ": " + f.to_string() + " | " + g.to_string());
    }
    return r;
}

SuiteResult newton_consistency(const std::vector<LabeledCurvature>& curvatures) {
    SuiteResult r{"newton-identities", 0, {}};
    for (const auto& [label, omega] : curvatures) {
        ChernForms forms = chern_forms(omega);
        const auto brute = oracle::leibniz_chern(omega.omega);
        const std::size_t n = omega.dim_w();
        std::vector<GradedPoly> p(n + 1, GradedPoly(omega.omega.gens()));
        for (std::size_t k = 1; k <= n; ++k) p[k] = power_trace(omega.omega, k);
        for (std::size_t k = 1; k <= n; ++k) {
            ++r.cases;
            Rational kf = 1;
            for (std::size_t i = 2; i <= k; ++i) kf *= static_cast<unsigned long>(i);
            bool ok = forms.c[k] == brute[k];
            ok = ok && forms.ch[k] * kf == p[k];
            // k chat_k = sum_{i=1}^k (-1)^{i-1} chat_{k-i} p_i
            GradedPoly rhs(omega.omega.gens());
            for (std::size_t i = 1; i <= k; ++i) {
                GradedPoly t = forms.c[k - i] * p[i];
                rhs += i % 2 == 1 ? t : -t;
            }
            ok = ok && forms.c[k] * Rational(static_cast<long>(k)) == rhs;
            if (!ok) r.failures.push_back(label + " k=" + std::to_string(k));
        }
    }
    return r;
}

SuiteResult splitting_principle() {
    SuiteResult r{"splitting-principle", 0, {}};
    const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (auto [p, q] : shapes) {
        FormContext ctx{LieAlgebra(make_foliation_spec(p, q))};
        const std::string label = "foliation(" + std::to_string(p) + "," + std::to_string(q) + ")";
        ChernForms v = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, "V", true)));
        ChernForms n = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, "N", true)));
        ChernForms vn = product_forms(v, n);
        for (bool projected : {true, false}) {
            ChernForms t = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, "T", projected)));
            ++r.cases;
            if (t.c != vn.c) r.failures.push_back(label + (projected ? " projected" : " unprojected"));
        }
    }
    for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}}) {
        FormContext ctx{LieAlgebra(make_split_spec(p, q))};
        ChernForms v = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, "V", true)));
        ChernForms w = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, "W", true)));
        ChernForms t = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, "T", true)));
        ++r.cases;
        if (t.c != product_forms(v, w).c) {
            r.failures.push_back("split(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    }
    return r;
}

SuiteResult weight_relations_annihilate(const std::string& catalogue_dir) {
    SuiteResult r{"weight-relations", 0, {}};
    for (const auto& path : catalogue_files(catalogue_dir)) {
        LoadedSpec loaded = load_spec(path);
        if (!loaded.spec || loaded.spec->cartan.empty()) continue;
        FormContext ctx{LieAlgebra(*loaded.spec)};
        for (const auto& w : loaded.spec->modules) {
            WeightForms wf;
            try {
                wf = weight_chern_forms(ctx.algebra(), w.name);
            } catch (const PreconditionError&) {
                continue;
            }
            ChernForms forms = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, w.name, true)));
            for (int d = 1; d <= static_cast<int>(w.dim_w) + 1; ++d) {
                for (const auto& rel : relation_basis(wf.forms, d).basis) {
                    ++r.cases;
                    if (auto witness = check_polynomial(forms, rel)) {
                        r.failures.push_back(loaded.name + "/" + w.name + ": " + rel.to_string() + " leaves " + *witness);
                    }
                }
            }
        }
    }
    return r;
}

SuiteResult cs_coefficients_factorial(int max_k) {
    SuiteResult r{"cs-coefficients", 0, {}};
    for (int k = 1; k <= max_k; ++k) {
        const auto got = cs_coefficients(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            ++r.cases;
            if (got.a[static_cast<std::size_t>(j)] != oracle::cs_coefficient(k, j)) {
                r.failures.push_back("k=" + std::to_string(k) + " j=" + std::to_string(j));
            }
        }
    }
    return r;
}

SuiteResult todd_series() {
    SuiteResult r{"todd-series", 0, {}};
    const auto expected = oracle::todd_components(static_cast<int>(kMaxToddDegree));
    for (std::size_t k = 0; k <= kMaxToddDegree; ++k) {
        ++r.cases;
        std::map<Partition, Rational> got;
        for (const auto& [part, c] : todd_polynomial(k)) got[part] += c;
        if (got != expected[k]) r.failures.push_back("degree " + std::to_string(k));
    }
    return r;
}

}  // namespace gstruct::props
