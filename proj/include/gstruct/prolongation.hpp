#pragma once

// First prolongation g1 = ker(delta), Spencer dimensions, and the prolonged
// module V1 = V + g.
//
// Basis conventions:
//   domain  g (x) V*      : x_a (x) eta^l at index a * n + l   (a-major)
//   target  V (x) L^2 V*  : y_k (x) eta^i ^ eta^j, i < j, at index
//                           k * P + pair_index(i, j), pairs in lex order.

#include <cstddef>
#include <vector>

#include "gstruct/exact_linalg.hpp"
#include "gstruct/lie_core.hpp"

namespace gstruct {

/// An element Q of g1, stored as its values Q(y_i) in g-coordinates.
struct ProlongationElement {
    std::vector<RatVector> values;  // n entries, each of length dim g
};

struct ProlongationBasis {
    std::vector<ProlongationElement> elements;
    std::size_t dim() const { return elements.size(); }
};

struct SpencerReport {
    std::size_t dim_domain = 0;
    std::size_t dim_target = 0;
    std::size_t rank_delta = 0;
    std::size_t dim_prolongation = 0;
    std::size_t dim_spencer = 0;
    /// Target basis indices whose basis vectors span a complement of im(delta).
    std::vector<std::size_t> coker_reps;
};

struct ProlongedModuleSpec {
    std::size_t dim_v1 = 0;
    /// Action of each g basis element on V1: block diag(rho_V(x), ad(x)).
    std::vector<RatMatrix> g_action;
    /// Nilpotent action of each g1 basis element: (v, A) -> (0, Q v).
    std::vector<RatMatrix> prolongation_action;
};

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

RatMatrix delta_matrix(const LieAlgebra& g);
ProlongationBasis prolongation_basis(const LieAlgebra& g);
SpencerReport spencer_report(const LieAlgebra& g);
ProlongedModuleSpec prolonged_module(const LieAlgebra& g);

/// Q as the bilinear map Q(u, v) = rho_V(Q(u)) v, stored t[k][i][j] at
/// (k * n + i) * n + j meaning the y_k component of Q(y_i, y_j).
struct VectorValuedBilinear {
    std::size_t n = 0;
    std::vector<Rational> t;

    Rational& at(std::size_t k, std::size_t i, std::size_t j) { return t[(k * n + i) * n + j]; }
    const Rational& at(std::size_t k, std::size_t i, std::size_t j) const { return t[(k * n + i) * n + j]; }
    bool is_symmetric() const;
    friend bool operator==(const VectorValuedBilinear&, const VectorValuedBilinear&) = default;
};

VectorValuedBilinear as_bilinear(const LieAlgebra& g, const ProlongationElement& q);

/// Element (g, Q) of GL(V) x| (Sym^2 V* (x) V).
struct SemidirectElement {
    RatMatrix g;
    VectorValuedBilinear q;
};

/// (g Q)(u, v) = g Q(g^-1 u, g^-1 v). Throws PreconditionError if g is singular.
VectorValuedBilinear act(const RatMatrix& g, const VectorValuedBilinear& q);

/// (g1, Q1)(g2, Q2) = (g1 g2, Q1 + g1 Q2)
SemidirectElement compose(const SemidirectElement& a, const SemidirectElement& b);

}  // namespace gstruct
