#pragma once

// Chern-Simons forms of invariant trace polynomials.
//
// An invariant f of degree k is a TracePattern: a rational combination of
// products of traces tr(X_{i1} ... X_{im}) over slots 1..k. It is evaluated
// on matrices of forms by full symmetrization over the slots. The CS form
// of f on a module W is
//     sum_j a_j f(Gamma, B x j, A x (k - 1 - j))
// with Gamma = sum_alpha g^alpha rho_W(e_alpha), B = Gamma ^ Gamma and
// A the projected curvature of W.

#include <cstddef>
#include <string>
#include <vector>

#include "gstruct/char_forms.hpp"
#include "gstruct/relations.hpp"

namespace gstruct {

class TracePattern {
public:
    struct Term {
        Rational coeff;
        std::vector<std::vector<int>> words;  // 1-based slot indices
    };

    TracePattern() = default;
    /// Throws std::invalid_argument unless every term uses each slot 1..k once.
    TracePattern(std::size_t degree, std::vector<Term> terms);

    std::size_t degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }

    /// e.g. "tr(1,2) - tr(1)*tr(2)"
    std::string to_string() const;
    static TracePattern parse(const std::string& text);

    /// Evaluates the pattern as written (no symmetrization).
    GradedPoly evaluate(const std::vector<const FormMatrix*>& slots) const;
    /// Average of evaluate() over all orderings of the slots.
    GradedPoly evaluate_symmetric(const std::vector<const FormMatrix*>& slots) const;

private:
    std::size_t degree_ = 0;
    std::vector<Term> terms_;
};

/// p_lambda = prod_i tr(X^{lambda_i}) on consecutive slots.
TracePattern power_sum_pattern(const Partition& lambda);
/// chat_k = sum_lambda eps_lambda / z_lambda p_lambda.
TracePattern chern_pattern(int k);
/// Homogeneous Chern polynomial as a pattern; throws std::invalid_argument
/// on mixed weights or the zero polynomial.
TracePattern chern_polynomial_pattern(const ChernPolynomial& p);

struct CSCoefficients {
    std::size_t k = 0;
    std::vector<Rational> a;  // a[j], j = 0..k-1
};

/// a_j = (-1)^j (k-1)! / ((k+j)! (k-1-j)!); throws std::invalid_argument for k = 0.
CSCoefficients cs_coefficients(std::size_t k);

/// Gamma = sum_alpha g^alpha rho_W(e_alpha).
FormMatrix connection_matrix(const FormContext& ctx, const ModuleAction& w);

/// CS_f from explicit connection and curvature matrices.
GradedPoly cs_from_matrices(const TracePattern& f, const FormMatrix& gamma, const FormMatrix& curvature);
/// The j-th summand f(Gamma, B x j, A x (k-1-j)) without the coefficient a_j.
GradedPoly cs_summand(const TracePattern& f, const FormMatrix& gamma, const FormMatrix& curvature, std::size_t j);

GradedPoly cs_form(const FormContext& ctx, const std::string& module_name, const TracePattern& f);

struct CSVanishing {
    std::size_t bound = 0;                 // |sigma support| + 2
    std::size_t patterns_checked = 0;      // power-sum patterns of degree `bound`
    std::vector<std::string> nonzero;      // patterns whose CS form is nonzero
    std::vector<std::string> leading_nonzero;  // patterns whose j = 0 summand f(Gamma, A, ..., A) is nonzero
    bool verified() const { return nonzero.empty(); }
};

CSVanishing cs_vanishing_degree(const FormContext& ctx, const std::string& module_name);

}  // namespace gstruct
