#include "gstruct/lie_core.hpp"

#include <algorithm>
#include <set>

namespace gstruct {
namespace {

RatVector flatten(const RatMatrix& m) { return m.data(); }

std::size_t find_name(const GStructureSpec& spec, const std::string& name) {
    for (std::size_t a = 0; a < spec.g_basis.size(); ++a) {
        if (spec.g_basis[a].name == name) return a;
    }
    throw ValidationError("unknown basis element \"" + name + "\"");
}

}  // namespace

LieAlgebra::LieAlgebra(GStructureSpec spec) : spec_(std::move(spec)) {
    const std::size_t n = spec_.dim_v;
    if (n == 0) throw ValidationError("dim_v must be positive");

    std::set<std::string> names;
    for (const auto& b : spec_.g_basis) {
        if (b.matrix.rows() != n || b.matrix.cols() != n) {
            throw ValidationError("basis element \"" + b.name + "\" is not " + std::to_string(n) + "x" +
                                  std::to_string(n));
        }
        if (!names.insert(b.name).second) throw ValidationError("duplicate basis name \"" + b.name + "\"");
    }

    std::vector<RatVector> flat;
    flat.reserve(spec_.g_basis.size());
    for (const auto& b : spec_.g_basis) flat.push_back(flatten(b.matrix));
    try {
        coords_ = CoordinateMap(flat, n * n);
    } catch (const std::invalid_argument&) {
        throw ValidationError("basis dependent: g_basis matrices are linearly dependent");
    }

    // Split bookkeeping.
    std::vector<int> role(dim(), -1);
    for (const auto& nm : spec_.g0) {
        std::size_t a = find_name(spec_, nm);
        if (role[a] != -1) throw ValidationError("\"" + nm + "\" listed twice in the split");
        role[a] = 0;
        g0_index_.push_back(a);
    }
    for (const auto& nm : spec_.gplus) {
        std::size_t a = find_name(spec_, nm);
        if (role[a] != -1) throw ValidationError("\"" + nm + "\" listed twice in the split");
        role[a] = 1;
        gplus_index_.push_back(a);
    }
    for (std::size_t a = 0; a < dim(); ++a) {
        if (role[a] == -1) {
            throw ValidationError("g0 and gplus must partition the basis; \"" + basis_name(a) + "\" is in neither");
        }
    }

    const std::size_t d = dim();
    constants_.dim = d;
    constants_.c.assign(d * d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            auto c = coords_.coordinates(flatten(commutator(basis_matrix(i), basis_matrix(j))));
            if (!c) {
                throw ValidationError("not closed under bracket: [" + basis_name(i) + ", " + basis_name(j) +
                                      "] leaves span(g_basis)");
            }
            for (std::size_t k = 0; k < d; ++k) {
                constants_(i, j, k) = (*c)[k];
                constants_(j, i, k) = -(*c)[k];
            }
        }
    }

    for (std::size_t x : g0_index_) {
        for (std::size_t y : g0_index_) {
            for (std::size_t k : gplus_index_) {
                if (sgn(constants_(x, y, k)) != 0) {
                    throw ValidationError("g0 not a subalgebra: [" + basis_name(x) + ", " + basis_name(y) +
                                          "] has a gplus component");
                }
            }
        }
    }
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y : gplus_index_) {
            for (std::size_t k : g0_index_) {
                if (sgn(constants_(x, y, k)) != 0) {
                    throw ValidationError("gplus not an ideal: [" + basis_name(x) + ", " + basis_name(y) +
                                          "] has a g0 component");
                }
            }
        }
    }

    for (const auto& nm : spec_.cartan) {
        auto it = std::find_if(g0_index_.begin(), g0_index_.end(),
                               [&](std::size_t a) { return basis_name(a) == nm; });
        if (it == g0_index_.end()) throw ValidationError("cartan element \"" + nm + "\" is not in g0");
        cartan_pos_.push_back(static_cast<std::size_t>(it - g0_index_.begin()));
    }
    if (!spec_.weight_vars.empty() && spec_.weight_vars.size() != spec_.cartan.size()) {
        throw ValidationError("weight_vars must be parallel to cartan");
    }

    std::set<std::string> module_names;
    const std::size_t d0 = g0_index_.size();
    for (auto& w : spec_.modules) {
        if (!module_names.insert(w.name).second) throw ValidationError("duplicate module \"" + w.name + "\"");
        if (w.kind == ModuleKind::defining) {
            w.dim_w = n;
            w.rho.clear();
            for (std::size_t a : g0_index_) w.rho.push_back(basis_matrix(a));
            continue;
        }
        if (w.rho.size() != d0) {
            throw ValidationError("module \"" + w.name + "\" needs one matrix per g0 element");
        }
        for (const auto& m : w.rho) {
            if (m.rows() != w.dim_w || m.cols() != w.dim_w) {
                throw ValidationError("module \"" + w.name + "\" has a matrix of the wrong size");
            }
        }
        for (std::size_t i = 0; i < d0; ++i) {
            for (std::size_t j = i + 1; j < d0; ++j) {
                RatMatrix lhs(w.dim_w, w.dim_w);
                for (std::size_t k = 0; k < d0; ++k) {
                    const Rational& c = constants_(g0_index_[i], g0_index_[j], g0_index_[k]);
                    if (sgn(c) != 0) lhs += w.rho[k] * c;
                }
                if (lhs != commutator(w.rho[i], w.rho[j])) {
                    throw ValidationError("rho not a homomorphism: module \"" + w.name + "\", pair (" +
                                          basis_name(g0_index_[i]) + ", " + basis_name(g0_index_[j]) + ")");
                }
            }
        }
    }
}

std::optional<RatVector> LieAlgebra::coordinates(const RatMatrix& m) const {
    return coords_.coordinates(flatten(m));
}

RatMatrix LieAlgebra::matrix_of(const RatVector& coeffs) const {
    RatMatrix m(dim_v(), dim_v());
    for (std::size_t a = 0; a < dim(); ++a) {
        if (sgn(coeffs[a]) != 0) m += basis_matrix(a) * coeffs[a];
    }
    return m;
}

RatVector LieAlgebra::project_g0(const RatVector& coeffs) const {
    RatVector out(g0_index_.size());
    for (std::size_t k = 0; k < g0_index_.size(); ++k) out[k] = coeffs[g0_index_[k]];
    return out;
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
    const std::size_t d = dim();
    RatVector out(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < d; ++k) {
                if (sgn(constants_(i, j, k)) != 0) out[k] += s * constants_(i, j, k);
            }
        }
    }
    return out;
}

const ModuleAction& LieAlgebra::module(const std::string& name) const {
    for (const auto& w : spec_.modules) {
        if (w.name == name) return w;
    }
    throw PreconditionError("unknown module \"" + name + "\"");
}

bool LieAlgebra::has_module(const std::string& name) const {
    return std::any_of(spec_.modules.begin(), spec_.modules.end(),
                       [&](const ModuleAction& w) { return w.name == name; });
}

RatMatrix LieAlgebra::rho(const ModuleAction& w, const RatVector& g0_coeffs) const {
    RatMatrix m(w.dim_w, w.dim_w);
    for (std::size_t k = 0; k < w.rho.size(); ++k) {
        if (sgn(g0_coeffs[k]) != 0) m += w.rho[k] * g0_coeffs[k];
    }
    return m;
}

std::string LieAlgebra::weight_var(std::size_t cartan_slot) const {
    if (!spec_.weight_vars.empty()) return spec_.weight_vars[cartan_slot];
    return "w_" + spec_.cartan[cartan_slot];
}

StructureConstants validate(const GStructureSpec& spec) { return LieAlgebra(spec).structure_constants(); }

RatVector project_g0(const LieAlgebra& g, const RatVector& coeffs) { return g.project_g0(coeffs); }

}  // namespace gstruct
