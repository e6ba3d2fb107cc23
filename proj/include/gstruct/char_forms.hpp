#pragma once

// Infinitesimal characteristic forms.
//
// The curvature of a g0-module W is the gl(W)-valued 2-form
//     Omega = sum_{a,i} A[a][i] p_a * s_i,   A[a][i] = -rho_W(proj_g0(Q_a(y_i))),
// with p_a dual to the g1 basis and s_i dual to the V basis. Curvature and
// torsion coefficients are dropped: they only contribute (2,0)-forms.
//
// Stored Chern forms are the reduced ones: chat_k is the tau^k coefficient of
// det(I + tau * Omega), and c_k = (i / 2 pi)^k chat_k.

#include <cstddef>
#include <string>
#include <vector>

#include "gstruct/graded_algebra.hpp"
#include "gstruct/lie_core.hpp"
#include "gstruct/prolongation.hpp"

namespace gstruct {

/// Largest degree for which universal Todd polynomials are tabulated.
inline constexpr std::size_t kMaxToddDegree = 8;

/// A lie algebra together with its prolongation and the generator set
/// gamma (one per g0 element), pi (one per g1 element), sigma (one per V
/// basis vector), in that order.
class FormContext {
public:
    explicit FormContext(LieAlgebra g);

    const LieAlgebra& algebra() const { return g_; }
    const ProlongationBasis& prolongation() const { return basis_; }
    const GeneratorSetPtr& gens() const { return gens_; }

    std::size_t gamma_index(std::size_t g0_pos) const { return g0_pos; }
    std::size_t pi_index(std::size_t a) const { return g_.dim_g0() + a; }
    std::size_t sigma_index(std::size_t i) const { return g_.dim_g0() + basis_.dim() + i; }

    /// p_a * s_i
    GradedPoly pi_sigma(std::size_t a, std::size_t i) const;

private:
    LieAlgebra g_;
    ProlongationBasis basis_;
    GeneratorSetPtr gens_;
};

struct AtiyahTensor {
    std::string module;
    bool projected = true;
    std::size_t dim_w = 0;
    std::size_t dim_v = 0;
    std::size_t dim_prolongation = 0;
    std::vector<RatMatrix> blocks;  // index a * dim_v + i

    const RatMatrix& at(std::size_t a, std::size_t i) const { return blocks[a * dim_v + i]; }
    bool is_zero() const;
};

enum class CurvatureMode { prolongation, weight, manual };
std::string to_string(CurvatureMode m);

struct CurvatureMatrix {
    FormMatrix omega;
    CurvatureMode mode = CurvatureMode::prolongation;

    std::size_t dim_w() const { return omega.dim(); }
};

struct ChernForms {
    GeneratorSetPtr gens;
    std::size_t dim_w = 0;
    std::vector<GradedPoly> c;     // c[0] = 1, ..., c[r]
    std::vector<GradedPoly> ch;    // reduced Chern character components, ch[0] = dim_w
    std::vector<GradedPoly> todd;  // reduced Todd components up to min(r, kMaxToddDegree)

    std::size_t up_to() const { return c.empty() ? 0 : c.size() - 1; }
    /// chat_k, or zero past the computed range.
    GradedPoly chern(std::size_t k) const;
};

/// Fixed convention string attached to every Chern report.
inline constexpr const char* kChernNormalization = "c_k = (i/(2*pi))^k * chat_k";

AtiyahTensor atiyah_tensor(const FormContext& ctx, const std::string& module_name, bool projected);
CurvatureMatrix curvature_matrix(const FormContext& ctx, const AtiyahTensor& tensor);

/// theta_alpha with projected Omega_W = sum_alpha theta_alpha rho_W(e_alpha)
/// for every module W; one entry per g0 element.
std::vector<GradedPoly> g0_curvature_coordinates(const FormContext& ctx);

/// Omega = sum_alpha gamma-free g0 coordinates pushed through rho_W.
CurvatureMatrix module_curvature(const FormContext& ctx, const std::vector<GradedPoly>& theta,
                                 const ModuleAction& w);

ChernForms chern_forms(const CurvatureMatrix& omega, std::size_t up_to);
ChernForms chern_forms(const CurvatureMatrix& omega);

/// Chern character and Todd components from given chat_0..chat_r.
void complete_from_chern(ChernForms& forms);

/// Universal Todd polynomial of degree k in chat_1..chat_k: list of
/// (partition, coefficient), partitions written with descending parts.
const std::vector<std::pair<std::vector<int>, Rational>>& todd_polynomial(std::size_t k);

struct WeightForms {
    GeneratorSetPtr gens;
    std::vector<GradedPoly> weights;  // diagonal linear forms, one per W basis vector
    CurvatureMatrix omega;            // sum_alpha w_alpha rho_W(h_alpha)
    ChernForms forms;
};

/// Chern forms from the diagonal weights of a triangular Cartan action.
/// Throws PreconditionError("not simultaneously triangular") or when no
/// Cartan elements are declared.
WeightForms weight_chern_forms(const LieAlgebra& g, const std::string& module_name);

/// Substitutes theta_alpha for each weight variable; needs the Cartan
/// elements to cover all of g0.
GradedPoly lift_weight_form(const FormContext& ctx, const WeightForms& wf, const GradedPoly& weight_poly);

/// a_T[a](i, j) = (a(Q_a, y_i) y_j + a(Q_a, y_j) y_i) / 2, from the projected
/// defining-module tensor. Value stored at ((a * n + i) * n + j) * n + k.
struct TangentAtiyah {
    std::size_t dim_v = 0;
    std::size_t dim_prolongation = 0;
    std::vector<Rational> values;

    const Rational& at(std::size_t a, std::size_t i, std::size_t j, std::size_t k) const {
        return values[((a * dim_v + i) * dim_v + j) * dim_v + k];
    }
    bool is_zero() const;
};

TangentAtiyah tangent_atiyah(const FormContext& ctx);

/// Omega^k as a matrix power with wedge multiplication of entries.
FormMatrix wedge_power(const FormMatrix& omega, std::size_t k);
bool wedge_power_vanishing(const CurvatureMatrix& omega, std::size_t k);

/// tr(Omega^j), used for Newton-identity checks.
GradedPoly power_trace(const FormMatrix& omega, std::size_t j);

}  // namespace gstruct
