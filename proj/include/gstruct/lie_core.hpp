#pragma once

// Input data for a G-structure computation: a matrix Lie algebra g in gl(V),
// a declared split g = g0 + gplus with gplus an ideal, and g0-module actions.
//
// Matrices act on column vectors, so rho(x) * rho(y) applies y first.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstruct/exact_linalg.hpp"

namespace gstruct {

/// Raised by validate() and by the spec loaders; maps to exit status 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition fails on otherwise valid input
/// (unknown module, missing Cartan data, ...); maps to exit status 3.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NamedMatrix {
    std::string name;
    RatMatrix matrix;
};

enum class ModuleKind { defining, explicit_action };

struct ModuleAction {
    std::string name;
    ModuleKind kind = ModuleKind::defining;
    std::size_t dim_w = 0;
    /// One matrix per g0 basis element, in g0_indices order. Filled in by
    /// validate() for defining modules.
    std::vector<RatMatrix> rho;
};

struct GStructureSpec {
    std::string name;
    std::size_t dim_v = 0;
    std::vector<NamedMatrix> g_basis;
    std::vector<std::string> g0;
    std::vector<std::string> gplus;
    std::vector<std::string> cartan;
    /// Display names of the commuting weight variables, parallel to `cartan`.
    /// Empty means "w_<cartan name>".
    std::vector<std::string> weight_vars;
    std::vector<ModuleAction> modules;
};

/// [x_i, x_j] = sum_k c[i][j][k] x_k
struct StructureConstants {
    std::size_t dim = 0;
    std::vector<Rational> c;

    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
};

/// A spec that passed validation, with the derived data every downstream
/// computation needs. Immutable once built.
class LieAlgebra {
public:
    /// Validates and fills in defining-module actions. Throws ValidationError.
    explicit LieAlgebra(GStructureSpec spec);

    const GStructureSpec& spec() const { return spec_; }
    std::size_t dim_v() const { return spec_.dim_v; }
    std::size_t dim() const { return spec_.g_basis.size(); }
    std::size_t dim_g0() const { return g0_index_.size(); }
    const RatMatrix& basis_matrix(std::size_t a) const { return spec_.g_basis[a].matrix; }
    const std::string& basis_name(std::size_t a) const { return spec_.g_basis[a].name; }

    /// Positions in g_basis of the g0 / gplus elements, in declared order.
    const std::vector<std::size_t>& g0_indices() const { return g0_index_; }
    const std::vector<std::size_t>& gplus_indices() const { return gplus_index_; }
    /// Positions within g0_indices() of the Cartan elements.
    const std::vector<std::size_t>& cartan_positions() const { return cartan_pos_; }

    const StructureConstants& structure_constants() const { return constants_; }

    /// Coordinates of a matrix in the g basis; nullopt if outside g.
    std::optional<RatVector> coordinates(const RatMatrix& m) const;

    /// Matrix of a g-coefficient vector.
    RatMatrix matrix_of(const RatVector& coeffs) const;

    /// g-coefficients to g0-coefficients (g0_indices order), projecting along
    /// the declared gplus.
    RatVector project_g0(const RatVector& coeffs) const;

    /// Bracket of two g-coefficient vectors, via structure constants.
    RatVector bracket(const RatVector& x, const RatVector& y) const;

    const ModuleAction& module(const std::string& name) const;
    bool has_module(const std::string& name) const;

    /// rho_W applied to a g0-coefficient vector.
    RatMatrix rho(const ModuleAction& w, const RatVector& g0_coeffs) const;

    std::string weight_var(std::size_t cartan_slot) const;

private:
    GStructureSpec spec_;
    std::vector<std::size_t> g0_index_;
    std::vector<std::size_t> gplus_index_;
    std::vector<std::size_t> cartan_pos_;
    CoordinateMap coords_;
    StructureConstants constants_;
};

/// Convenience wrapper: validates and returns the structure constants.
StructureConstants validate(const GStructureSpec& spec);

RatVector project_g0(const LieAlgebra& g, const RatVector& coeffs);

/// Bundled constructions.
GStructureSpec make_foliation_spec(std::size_t p, std::size_t q);
GStructureSpec make_split_spec(std::size_t p, std::size_t q);
GStructureSpec make_sl_foliation_spec(std::size_t p, std::size_t q);
GStructureSpec make_engel_spec();
GStructureSpec make_conservation_spec();
/// All of gl(n), g0 = gl(n); handy for tests.
GStructureSpec make_gl_spec(std::size_t n);

}  // namespace gstruct
