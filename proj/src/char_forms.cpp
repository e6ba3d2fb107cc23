#include "gstruct/char_forms.hpp"

#include <bit>
#include <optional>

namespace gstruct {

// ------------------------------------------------------------- FormContext

FormContext::FormContext(LieAlgebra g) : g_(std::move(g)), basis_(prolongation_basis(g_)) {
    auto gens = std::make_shared<GeneratorSet>();
    for (std::size_t a : g_.g0_indices()) gens->add({"g_" + g_.basis_name(a), 1, GenClass::gamma});
    for (std::size_t a = 0; a < basis_.dim(); ++a) gens->add({"p" + std::to_string(a + 1), 1, GenClass::pi});
    for (std::size_t i = 0; i < g_.dim_v(); ++i) gens->add({"s" + std::to_string(i + 1), 1, GenClass::sigma});
    gens_ = std::move(gens);
}

GradedPoly FormContext::pi_sigma(std::size_t a, std::size_t i) const {
    return GradedPoly::generator(gens_, pi_index(a)) * GradedPoly::generator(gens_, sigma_index(i));
}

// ----------------------------------------------------------------- Atiyah

bool AtiyahTensor::is_zero() const {
    for (const auto& b : blocks) {
        if (!b.is_zero()) return false;
    }
    return true;
}

std::string to_string(CurvatureMode m) {
    switch (m) {
        case CurvatureMode::prolongation: return "prolongation";
        case CurvatureMode::weight: return "weight";
        case CurvatureMode::manual: return "manual";
    }
    return "prolongation";
}

AtiyahTensor atiyah_tensor(const FormContext& ctx, const std::string& module_name, bool projected) {
    const LieAlgebra& g = ctx.algebra();
    const ModuleAction& w = g.module(module_name);
    if (!projected && w.kind != ModuleKind::defining) {
        throw PreconditionError("unprojected Atiyah tensor needs a defining module; \"" + module_name +
                                "\" is explicit");
    }
    AtiyahTensor t;
    t.module = module_name;
    t.projected = projected;
    t.dim_w = w.dim_w;
    t.dim_v = g.dim_v();
    t.dim_prolongation = ctx.prolongation().dim();
    for (const auto& q : ctx.prolongation().elements) {
        for (std::size_t i = 0; i < g.dim_v(); ++i) {
            RatMatrix m = projected ? g.rho(w, g.project_g0(q.values[i])) : g.matrix_of(q.values[i]);
            t.blocks.push_back(m * Rational(-1));
        }
    }
    return t;
}

CurvatureMatrix curvature_matrix(const FormContext& ctx, const AtiyahTensor& tensor) {
    CurvatureMatrix out{FormMatrix(ctx.gens(), tensor.dim_w), CurvatureMode::prolongation};
    for (std::size_t a = 0; a < tensor.dim_prolongation; ++a) {
        for (std::size_t i = 0; i < tensor.dim_v; ++i) {
            const RatMatrix& block = tensor.at(a, i);
            if (block.is_zero()) continue;
            out.omega += scale(block, ctx.pi_sigma(a, i));
        }
    }
    return out;
}

std::vector<GradedPoly> g0_curvature_coordinates(const FormContext& ctx) {
    const LieAlgebra& g = ctx.algebra();
    std::vector<GradedPoly> theta(g.dim_g0(), GradedPoly(ctx.gens()));
    const auto& elems = ctx.prolongation().elements;
    for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t i = 0; i < g.dim_v(); ++i) {
            RatVector coeffs = g.project_g0(elems[a].values[i]);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                if (sgn(coeffs[k]) != 0) theta[k] -= ctx.pi_sigma(a, i) * coeffs[k];
            }
        }
    }
    return theta;
}

CurvatureMatrix module_curvature(const FormContext& ctx, const std::vector<GradedPoly>& theta,
                                 const ModuleAction& w) {
    CurvatureMatrix out{FormMatrix(ctx.gens(), w.dim_w), CurvatureMode::prolongation};
    for (std::size_t k = 0; k < theta.size(); ++k) {
        if (!theta[k].is_zero()) out.omega += scale(w.rho[k], theta[k]);
    }
    return out;
}

// ------------------------------------------------------------ Chern forms

namespace {

using TauPoly = std::vector<GradedPoly>;

TauPoly tau_multiply(const TauPoly& a, const TauPoly& b, std::size_t r, const GeneratorSetPtr& gens) {
    TauPoly out(r + 1, GradedPoly(gens));
    for (std::size_t i = 0; i < a.size() && i <= r; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= r; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// det(I + tau * Omega) truncated at tau^r, by Laplace expansion along rows
/// in order with memoization over the remaining column set.
TauPoly char_determinant(const FormMatrix& omega, std::size_t r) {
    const std::size_t n = omega.dim();
    const auto& gens = omega.gens();
    if (n > 24) throw PreconditionError("module dimension too large for determinant expansion");
    if (n == 0) return TauPoly{GradedPoly::constant(gens, Rational(1))};

    std::vector<std::optional<TauPoly>> memo(std::size_t{1} << n);
    auto rec = [&](auto&& self, std::uint32_t cols) -> const TauPoly& {
        auto& slot = memo[cols];
        if (slot) return *slot;
        if (cols == 0) {
            slot = TauPoly{GradedPoly::constant(gens, Rational(1))};
            return *slot;
        }
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
        TauPoly acc(r + 1, GradedPoly(gens));
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!((cols >> c) & 1u)) continue;
            TauPoly entry(2, GradedPoly(gens));
            if (c == row) entry[0] = GradedPoly::constant(gens, Rational(1));
            entry[1] = omega(row, c);
            if (!entry[0].is_zero() || !entry[1].is_zero()) {
                const TauPoly& minor = self(self, cols & ~(std::uint32_t{1} << c));
                TauPoly term = tau_multiply(entry, minor, r, gens);
                for (std::size_t k = 0; k <= r; ++k) {
                    if (position % 2 == 0) {
                        acc[k] += term[k];
                    } else {
                        acc[k] -= term[k];
                    }
                }
            }
            ++position;
        }
        slot = std::move(acc);
        return *slot;
    };
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    TauPoly out = rec(rec, all);
    out.resize(r + 1, GradedPoly(gens));
    return out;
}

const std::vector<std::vector<std::pair<std::vector<int>, const char*>>> kToddTable = {
    /* 0 */ {{{}, "1"}},
    /* 1 */ {{{1}, "1/2"}},
    /* 2 */ {{{1,1}, "1/12"}, {{2}, "1/12"}},
    /* 3 */ {{{2,1}, "1/24"}},
    /* 4 */ {{{1,1,1,1}, "-1/720"}, {{2,1,1}, "1/180"}, {{2,2}, "1/240"}, {{3,1}, "1/720"}, {{4}, "-1/720"}},
    /* 5 */ {{{2,1,1,1}, "-1/1440"}, {{2,2,1}, "1/480"}, {{3,1,1}, "1/1440"}, {{4,1}, "-1/1440"}},
    /* 6 */ {{{1,1,1,1,1,1}, "1/30240"}, {{2,1,1,1,1}, "-1/5040"}, {{2,2,1,1}, "11/60480"}, {{2,2,2}, "1/6048"}, {{3,1,1,1}, "1/12096"}, {{3,2,1}, "11/60480"}, {{3,3}, "-1/60480"}, {{4,1,1}, "-1/12096"}, {{4,2}, "-1/6720"}, {{5,1}, "-1/30240"}, {{6}, "1/30240"}},
    /* 7 */ {{{2,1,1,1,1,1}, "1/60480"}, {{2,2,1,1,1}, "-1/12096"}, {{2,2,2,1}, "1/12096"}, {{3,1,1,1,1}, "-1/60480"}, {{3,2,1,1}, "11/120960"}, {{3,3,1}, "-1/120960"}, {{4,1,1,1}, "1/60480"}, {{4,2,1}, "-1/13440"}, {{5,1,1}, "-1/60480"}, {{6,1}, "1/60480"}},
    /* 8 */ {{{1,1,1,1,1,1,1,1}, "-1/1209600"}, {{2,1,1,1,1,1,1}, "1/151200"}, {{2,2,1,1,1,1}, "-1/72576"}, {{2,2,2,1,1}, "1/453600"}, {{2,2,2,2}, "1/172800"}, {{3,1,1,1,1,1}, "-1/259200"}, {{3,2,1,1,1}, "13/1814400"}, {{3,2,2,1}, "1/72576"}, {{3,3,1,1}, "1/1209600"}, {{3,3,2}, "-1/453600"}, {{4,1,1,1,1}, "1/259200"}, {{4,2,1,1}, "-19/3628800"}, {{4,2,2}, "-17/1814400"}, {{4,3,1}, "-13/3628800"}, {{4,4}, "1/725760"}, {{5,1,1,1}, "-1/518400"}, {{5,2,1}, "-1/226800"}, {{5,3}, "1/1209600"}, {{6,1,1}, "1/518400"}, {{6,2}, "13/3628800"}, {{7,1}, "1/1209600"}, {{8}, "-1/1209600"}},
};

Rational factorial(std::size_t k) {
    mpz_class f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return Rational(f);
}

}  // namespace

GradedPoly ChernForms::chern(std::size_t k) const {
    if (k < c.size()) return c[k];
    return GradedPoly(gens);
}

const std::vector<std::pair<std::vector<int>, Rational>>& todd_polynomial(std::size_t k) {
    static const auto table = [] {
        std::vector<std::vector<std::pair<std::vector<int>, Rational>>> t;
        for (const auto& row : kToddTable) {
            std::vector<std::pair<std::vector<int>, Rational>> parsed;
            for (const auto& [part, coeff] : row) parsed.emplace_back(part, parse_rational(coeff));
            t.push_back(std::move(parsed));
        }
        return t;
    }();
    if (k >= table.size()) throw PreconditionError("Todd polynomials are tabulated up to degree 8");
    return table[k];
}

void complete_from_chern(ChernForms& forms) {
    const std::size_t r = forms.up_to();
    const auto& gens = forms.gens;

    // Power sums by Newton's identities:
    // p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
    std::vector<GradedPoly> p(r + 1, GradedPoly(gens));
    for (std::size_t k = 1; k <= r; ++k) {
        GradedPoly s = forms.c[k] * Rational(static_cast<long>(k));
        if (k % 2 == 0) s = -s;
        for (std::size_t i = 1; i < k; ++i) {
            GradedPoly t = forms.c[i] * p[k - i];
            if (i % 2 == 0) {
                s -= t;
            } else {
                s += t;
            }
        }
        p[k] = std::move(s);
    }
    forms.ch.assign(r + 1, GradedPoly(gens));
    forms.ch[0] = GradedPoly::constant(gens, Rational(static_cast<long>(forms.dim_w)));
    for (std::size_t k = 1; k <= r; ++k) forms.ch[k] = p[k] * (1 / factorial(k));

    const std::size_t todd_top = std::min(r, kMaxToddDegree);
    forms.todd.assign(todd_top + 1, GradedPoly(gens));
    for (std::size_t k = 0; k <= todd_top; ++k) {
        for (const auto& [part, coeff] : todd_polynomial(k)) {
            GradedPoly term = GradedPoly::constant(gens, coeff);
            for (int j : part) term = term * forms.chern(static_cast<std::size_t>(j));
            forms.todd[k] += term;
        }
    }
}

ChernForms chern_forms(const CurvatureMatrix& omega, std::size_t up_to) {
    if (up_to > omega.dim_w()) throw PreconditionError("up_to exceeds the module dimension");
    ChernForms forms;
    forms.gens = omega.omega.gens();
    forms.dim_w = omega.dim_w();
    forms.c = char_determinant(omega.omega, up_to);
    complete_from_chern(forms);
    return forms;
}

ChernForms chern_forms(const CurvatureMatrix& omega) { return chern_forms(omega, omega.dim_w()); }

// ----------------------------------------------------------- weight mode

WeightForms weight_chern_forms(const LieAlgebra& g, const std::string& module_name) {
    const ModuleAction& w = g.module(module_name);
    const auto& cartan = g.cartan_positions();
    if (cartan.empty()) throw PreconditionError("weight mode needs declared cartan elements");

    bool upper = true;
    bool lower = true;
    for (std::size_t pos : cartan) {
        const RatMatrix& h = w.rho[pos];
        for (std::size_t i = 0; i < w.dim_w; ++i) {
            for (std::size_t j = 0; j < w.dim_w; ++j) {
                if (sgn(h(i, j)) == 0) continue;
                if (i > j) upper = false;
                if (i < j) lower = false;
            }
        }
    }
    if (!upper && !lower) throw PreconditionError("not simultaneously triangular");

    auto gens = std::make_shared<GeneratorSet>();
    for (std::size_t s = 0; s < cartan.size(); ++s) gens->add({g.weight_var(s), 2, GenClass::weight});
    GeneratorSetPtr gp = gens;

    WeightForms out;
    out.gens = gp;
    out.omega = {FormMatrix(gp, w.dim_w), CurvatureMode::weight};
    for (std::size_t s = 0; s < cartan.size(); ++s) {
        out.omega.omega += scale(w.rho[cartan[s]], GradedPoly::generator(gp, s));
    }
    for (std::size_t i = 0; i < w.dim_w; ++i) out.weights.push_back(out.omega.omega(i, i));

    // prod_i (1 + tau L_i)
    std::vector<GradedPoly> e(w.dim_w + 1, GradedPoly(gp));
    e[0] = GradedPoly::constant(gp, Rational(1));
    for (std::size_t i = 0; i < w.dim_w; ++i) {
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * out.weights[i];
    }
    out.forms.gens = gp;
    out.forms.dim_w = w.dim_w;
    out.forms.c = std::move(e);
    complete_from_chern(out.forms);
    return out;
}

GradedPoly lift_weight_form(const FormContext& ctx, const WeightForms& wf, const GradedPoly& weight_poly) {
    const LieAlgebra& g = ctx.algebra();
    const auto& cartan = g.cartan_positions();
    if (cartan.size() != g.dim_g0()) {
        throw PreconditionError("weight lift needs the cartan elements to span g0");
    }
    auto theta = g0_curvature_coordinates(ctx);
    GradedPoly out(ctx.gens());
    for (const auto& [m, c] : weight_poly.terms()) {
        GradedPoly term = GradedPoly::constant(ctx.gens(), c);
        for (auto idx : m.factors()) {
            std::size_t slot = wf.gens->index((*weight_poly.gens())[idx].name);
            term = term * theta[cartan[slot]];
        }
        out += term;
    }
    return out;
}

// ------------------------------------------------------------ tangent a_T

bool TangentAtiyah::is_zero() const {
    for (const auto& v : values) {
        if (sgn(v) != 0) return false;
    }
    return true;
}

TangentAtiyah tangent_atiyah(const FormContext& ctx) {
    const LieAlgebra& g = ctx.algebra();
    const ModuleAction* defining = nullptr;
    for (const auto& w : g.spec().modules) {
        if (w.kind == ModuleKind::defining) {
            defining = &w;
            break;
        }
    }
    if (!defining) throw PreconditionError("tangent Atiyah form needs a defining module");
    AtiyahTensor a = atiyah_tensor(ctx, defining->name, true);

    const std::size_t n = g.dim_v();
    TangentAtiyah out;
    out.dim_v = n;
    out.dim_prolongation = a.dim_prolongation;
    out.values.assign(a.dim_prolongation * n * n * n, Rational(0));
    const Rational half(1, 2);
    for (std::size_t q = 0; q < a.dim_prolongation; ++q) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    out.values[((q * n + i) * n + j) * n + k] = half * (a.at(q, i)(k, j) + a.at(q, j)(k, i));
                }
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ powers

FormMatrix wedge_power(const FormMatrix& omega, std::size_t k) {
    FormMatrix out = FormMatrix::identity(omega.gens(), omega.dim());
    for (std::size_t i = 0; i < k; ++i) out = out * omega;
    return out;
}

bool wedge_power_vanishing(const CurvatureMatrix& omega, std::size_t k) {
    if (k == 0) throw PreconditionError("wedge power needs k >= 1");
    return wedge_power(omega.omega, k).is_zero();
}

GradedPoly power_trace(const FormMatrix& omega, std::size_t j) { return wedge_power(omega, j).trace(); }

}  // namespace gstruct
