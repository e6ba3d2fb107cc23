// Prints one PASS/FAIL line per acceptance criterion.
//
// Exit status is 0 when every criterion passes, except those named with
// --known-fail N; a known failure that starts passing is also reported as an
// error so the list cannot go stale.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "gstruct/chern_simons.hpp"
#include "gstruct/relations.hpp"
#include "gstruct/report.hpp"
#include "gstruct/spec_io.hpp"
#include "support/properties.hpp"

using namespace gstruct;

namespace {

const std::string kCatalogue = GSTRUCT_CATALOGUE_DIR;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

LoadedSpec catalogue_spec(const std::string& name) { return load_spec(kCatalogue + "/" + name + ".json"); }

GradedPoly var(const GeneratorSetPtr& gens, const std::string& name) { return GradedPoly::generator(gens, name); }

GradedPoly num(const GeneratorSetPtr& gens, long v) { return GradedPoly::constant(gens, Rational(v)); }

void engel_prolongation(Outcome& o) {
    Report r = prolong_report(catalogue_spec("engel"));
    const std::size_t dim_g = r.json["dim_g"], dim_g1 = r.json["dim_g1"];
    o.detail << "dim g = " << dim_g << ", dim g1 = " << dim_g1;
    o.require(dim_g == 8, "dim g = 8");
    o.require(dim_g1 == 14, "dim g1 = 14");
}

void engel_weight_forms(Outcome& o) {
    WeightForms wf = weight_chern_forms(LieAlgebra(*catalogue_spec("engel").spec), "T");
    const auto& g = wf.gens;
    GradedPoly a = var(g, "a"), b = var(g, "b");
    const GradedPoly expected[] = {
        num(g, 4) * a + num(g, 3) * b,
        num(g, 5) * a * a + num(g, 9) * a * b + num(g, 3) * b * b,
        num(g, 2) * a * a * a + num(g, 8) * a * a * b + num(g, 6) * a * b * b + b * b * b,
        (num(g, 2) * a + b) * (a + b) * a * b,
    };
    for (std::size_t k = 1; k <= 4; ++k) {
        o.require(wf.forms.c[k] == expected[k - 1], "chat_" + std::to_string(k));
    }
    o.detail << "chat_4 = " << wf.forms.c[4].to_string();
}

void engel_relation(Outcome& o) {
    WeightForms wf = weight_chern_forms(LieAlgebra(*catalogue_spec("engel").spec), "T");
    RelationSet rs = relation_basis(wf.forms, 4);
    o.detail << "kernel dim " << rs.kernel_dim;
    o.require(rs.kernel_dim == 1, "kernel dim 1");
    if (rs.basis.size() != 1) return;
    const ChernPolynomial quartic =
        ChernPolynomial::parse("c1^4 - 11/2*c1^2*c2 + 4*c2^2 + 21/2*c1*c3 - 75/2*c4");
    const auto& got = rs.basis.front();
    o.detail << ", relation " << got.to_string();
    const Rational scale = got.terms().begin()->second / quartic.terms().begin()->second;
    ChernPolynomial scaled;
    for (const auto& [lambda, c] : quartic.terms()) scaled.add(lambda, c * scale);
    o.require(sgn(scale) > 0 && scaled == got, "positive multiple of the quartic");
}

void engel_vanishing(Outcome& o) {
    FormContext ctx{LieAlgebra(*catalogue_spec("engel").spec)};
    CurvatureMatrix omega = curvature_matrix(ctx, atiyah_tensor(ctx, "T", true));
    ChernForms forms = chern_forms(omega);
    for (const char* p : {"c1^3", "c1*c2", "c3", "c2^2", "c4"}) {
        o.require(!check_polynomial(forms, ChernPolynomial::parse(p)), std::string(p) + " = 0");
    }
    WeightForms w1 = weight_chern_forms(ctx.algebra(), "W1");
    GradedPoly c1w = var(w1.gens, "a") * Rational(2) + var(w1.gens, "b");
    o.require(w1.forms.c[1] == c1w, "c1(W1) = 2a + b");
    o.require(lift_weight_form(ctx, w1, c1w * c1w).is_zero(), "c1(W1)^2 = 0");
    o.require(wedge_power_vanishing(omega, 3), "Omega^3 = 0");
    o.detail << "c1^3, c1*c2, c3, c2^2, c4, c1(W1)^2, Omega^3 vanish";
}

void baum_bott(Outcome& o) {
    for (std::size_t q : {1u, 2u}) {
        FormContext ctx{LieAlgebra(make_foliation_spec(1, q))};
        CurvatureMatrix omega = curvature_matrix(ctx, atiyah_tensor(ctx, "N", true));
        ChernForms forms = chern_forms(omega);
        const std::string tag = "foliation(1," + std::to_string(q) + ")";
        for (int d = static_cast<int>(q) + 1; d <= static_cast<int>(q) + 2; ++d) {
            for (const auto& lambda : partitions(d, static_cast<int>(q))) {
                o.require(expand_monomial(forms, lambda).is_zero(), tag + " Chern monomial of weight " + std::to_string(d));
            }
        }
        CSVanishing v = cs_vanishing_degree(ctx, "N");
        o.detail << tag << ": bound " << v.bound << ", " << v.nonzero.size() << "/" << v.patterns_checked
                 << " nonzero CS, " << v.leading_nonzero.size() << "/" << v.patterns_checked
                 << " nonzero f(Gamma,Omega,...); ";
        o.require(v.bound == q + 2, tag + " bound q+2");
        o.require(v.verified(), tag + " CS zero at degree q+2");
    }
}

void volume_form(Outcome& o) {
    FormContext ctx{LieAlgebra(*catalogue_spec("sl_foliation_p1_q1").spec)};
    ChernForms forms = chern_forms(curvature_matrix(ctx, atiyah_tensor(ctx, "TF", true)));
    o.require(!check_polynomial(forms, ChernPolynomial::parse("c1^2")), "c1(TF)^2 = 0");
    GradedPoly cs = cs_form(ctx, "TF", chern_polynomial_pattern(ChernPolynomial::parse("c1^3")));
    o.require(cs.is_zero(), "CS of c1(TF)^3 = 0");
    o.detail << "c1(TF) = " << forms.c[1].to_string() << ", CS_{c1^3} = " << cs.to_string();
}

void conservation(Outcome& o) {
    FormContext ctx{LieAlgebra(*catalogue_spec("conservation").spec)};
    CurvatureMatrix projected = curvature_matrix(ctx, atiyah_tensor(ctx, "T", true));
    CurvatureMatrix raw = curvature_matrix(ctx, atiyah_tensor(ctx, "T", false));
    o.require(projected.omega.is_zero(), "projected Omega = 0");
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < raw.dim_w(); ++i) {
        for (std::size_t j = 0; j < raw.dim_w(); ++j) nonzero += !raw.omega(i, j).is_zero();
    }
    const GradedPoly expected = -(var(ctx.gens(), "p1") * var(ctx.gens(), "s2"));
    o.require(nonzero == 1 && raw.omega(2, 1) == expected, "single entry Omega[3,2] = -p1*s2");
    for (const auto* omega : {&projected, &raw}) {
        ChernForms forms = chern_forms(*omega);
        for (std::size_t k = 1; k <= forms.dim_w; ++k) o.require(forms.c[k].is_zero(), "chat_k = 0");
    }
    o.require(wedge_power_vanishing(raw, 2), "Omega^Omega = 0");
    o.require(cs_form(ctx, "T", TracePattern::parse("tr(1,2)")).is_zero(), "CS of tr(1,2) = 0");
    o.detail << "Omega[3,2] = " << raw.omega(2, 1).to_string();
}

void projective(Outcome& o) {
    LoadedSpec loaded = catalogue_spec("projective_q2");
    ChernForms forms = chern_forms(loaded.manual.at("N"));
    RelationSet rs = relation_basis(forms, 2);
    const ChernPolynomial target = ChernPolynomial::parse("c1^2 - 3*c2");
    bool found = false;
    for (const auto& p : rs.basis) {
        o.detail << "relation " << p.to_string() << "; ";
        found = found || p == target;
    }
    o.require(found, "c1^2 - 3*c2 in the relation basis");
    o.require(!check_polynomial(forms, ChernPolynomial::parse("3*c1^2 - 9*c2")), "3^2 c1^2 = 9 c2 scaled");
}

void split_tangent(Outcome& o) {
    FormContext ctx{LieAlgebra(*catalogue_spec("split_p1_q1").spec)};
    CurvatureMatrix v = curvature_matrix(ctx, atiyah_tensor(ctx, "V", true));
    VanishingReport rep = vanishing_report(v);
    o.detail << "dim g1 = " << ctx.prolongation().dim() << ", V support size " << rep.support_bound;
    o.require(ctx.prolongation().dim() == 2, "dim g1 = 2");
    o.require(rep.support_bound == 1, "support size 1");
    o.require(!check_polynomial(chern_forms(v), ChernPolynomial::parse("c1^2")), "c1(V)^2 = 0");
}

void property_suites(Outcome& o) {
    const auto curvatures = props::catalogue_curvatures(kCatalogue);
    const props::SuiteResult results[] = {
        props::rank_nullity(500, 20240611),
        props::koszul_signs(1000, 20240612),
        props::newton_consistency(curvatures),
        props::splitting_principle(),
        props::weight_relations_annihilate(kCatalogue),
        props::cs_coefficients_factorial(12),
        props::todd_series(),
    };
    for (const auto& r : results) {
        o.detail << r.name << " " << r.cases << (r.ok() ? " ok; " : " FAILED; ");
        o.require(r.ok(), r.name + (r.failures.empty() ? "" : ": " + r.failures.front()));
    }
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known_fail;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--known-fail" && i + 1 < argc) {
            known_fail.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--known-fail N]...\n";
            return 1;
        }
    }

    const Criterion criteria[] = {
        {1, "Engel prolongation", 1, engel_prolongation},
        {2, "Engel weight-mode Chern forms", 1, engel_weight_forms},
        {3, "Engel degree-4 relation", 1, engel_relation},
        {4, "Engel prolongation-mode vanishing", 2, engel_vanishing},
        {5, "Baum-Bott vanishing", 5, baum_bott},
        {6, "Volume-form foliation", 2, volume_form},
        {7, "Conservation law", 1, conservation},
        {8, "Projective Baum-Bott", 1, projective},
        {9, "Split tangent bundle", 1, split_tangent},
        {10, "Property suites", 60, property_suites},
    };

    int unexpected = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream timing;
        timing << std::fixed << std::setprecision(3) << secs << "s";
        o.require(secs < c.budget_seconds, "time budget " + std::to_string(static_cast<int>(c.budget_seconds)) + "s");
        const bool expected_fail = known_fail.count(c.id) > 0;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << timing.str() << "): "
                  << o.detail.str() << (expected_fail ? " [known failure]" : "") << "\n";
        if (o.ok == expected_fail) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
