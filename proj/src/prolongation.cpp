#include "gstruct/prolongation.hpp"

namespace gstruct {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

RatMatrix delta_matrix(const LieAlgebra& g) {
    const std::size_t n = g.dim_v();
    const std::size_t d = g.dim();
    const std::size_t pairs = n * (n - 1) / 2;
    RatMatrix m(n * pairs, d * n);
    // delta(x_a (x) eta^l)(y_i, y_j) = eta^l(y_j) x_a y_i - eta^l(y_i) x_a y_j
    for (std::size_t a = 0; a < d; ++a) {
        const RatMatrix& x = g.basis_matrix(a);
        for (std::size_t l = 0; l < n; ++l) {
            const std::size_t col = a * n + l;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    const std::size_t p = pair_index(n, i, j);
                    for (std::size_t k = 0; k < n; ++k) {
                        Rational v = 0;
                        if (l == j) v += x(k, i);
                        if (l == i) v -= x(k, j);
                        if (sgn(v) != 0) m(k * pairs + p, col) = v;
                    }
                }
            }
        }
    }
    return m;
}

ProlongationBasis prolongation_basis(const LieAlgebra& g) {
    const std::size_t n = g.dim_v();
    const std::size_t d = g.dim();
    ProlongationBasis basis;
    for (const auto& v : kernel_basis(delta_matrix(g))) {
        ProlongationElement q;
        q.values.assign(n, RatVector(d, Rational(0)));
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t l = 0; l < n; ++l) q.values[l][a] = v[a * n + l];
        }
        basis.elements.push_back(std::move(q));
    }
    return basis;
}

SpencerReport spencer_report(const LieAlgebra& g) {
    const std::size_t n = g.dim_v();
    RatMatrix delta = delta_matrix(g);
    SpencerReport r;
    r.dim_domain = g.dim() * n;
    r.dim_target = n * n * (n - 1) / 2;
    r.rank_delta = rank(delta);
    r.dim_prolongation = r.dim_domain - r.rank_delta;
    r.dim_spencer = r.dim_target - r.rank_delta;

    // Columns of delta followed by the target's standard basis; pivots that
    // land in the identity block mark cokernel representatives.
    RatMatrix aug(r.dim_target, r.dim_domain + r.dim_target);
    for (std::size_t i = 0; i < r.dim_target; ++i) {
        for (std::size_t j = 0; j < r.dim_domain; ++j) aug(i, j) = delta(i, j);
        aug(i, r.dim_domain + i) = 1;
    }
    for (std::size_t p : rref(aug).pivots) {
        if (p >= r.dim_domain) r.coker_reps.push_back(p - r.dim_domain);
    }
    return r;
}

ProlongedModuleSpec prolonged_module(const LieAlgebra& g) {
    const std::size_t n = g.dim_v();
    const std::size_t d = g.dim();
    const auto& sc = g.structure_constants();
    ProlongedModuleSpec out;
    out.dim_v1 = n + d;

    for (std::size_t a = 0; a < d; ++a) {
        RatMatrix m(n + d, n + d);
        const RatMatrix& x = g.basis_matrix(a);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = x(i, j);
        }
        // ad(x_a): column b holds the coordinates of [x_a, x_b].
        for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t k = 0; k < d; ++k) m(n + k, n + b) = sc(a, b, k);
        }
        out.g_action.push_back(std::move(m));
    }

    for (const auto& q : prolongation_basis(g).elements) {
        RatMatrix m(n + d, n + d);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < d; ++k) m(n + k, i) = q.values[i][k];
        }
        out.prolongation_action.push_back(std::move(m));
    }
    return out;
}

bool VectorValuedBilinear::is_symmetric() const {
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (at(k, i, j) != at(k, j, i)) return false;
            }
        }
    }
    return true;
}

VectorValuedBilinear as_bilinear(const LieAlgebra& g, const ProlongationElement& q) {
    const std::size_t n = g.dim_v();
    VectorValuedBilinear b{n, std::vector<Rational>(n * n * n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix qi = g.matrix_of(q.values[i]);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) b.at(k, i, j) = qi(k, j);
        }
    }
    return b;
}

VectorValuedBilinear act(const RatMatrix& g, const VectorValuedBilinear& q) {
    const std::size_t n = q.n;
    auto ginv = inverse(g);
    if (!ginv) throw PreconditionError("group element is singular");
    // (gQ)^k_{ij} = g^k_m Q^m_{rs} (g^-1)^r_i (g^-1)^s_j
    VectorValuedBilinear tmp{n, std::vector<Rational>(n * n * n, Rational(0))};
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t r = 0; r < n; ++r) {
                    for (std::size_t t = 0; t < n; ++t) s += q.at(m, r, t) * (*ginv)(r, i) * (*ginv)(t, j);
                }
                tmp.at(m, i, j) = s;
            }
        }
    }
    VectorValuedBilinear out{n, std::vector<Rational>(n * n * n, Rational(0))};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t m = 0; m < n; ++m) s += g(k, m) * tmp.at(m, i, j);
                out.at(k, i, j) = s;
            }
        }
    }
    return out;
}

SemidirectElement compose(const SemidirectElement& a, const SemidirectElement& b) {
    VectorValuedBilinear moved = act(a.g, b.q);
    for (std::size_t i = 0; i < moved.t.size(); ++i) moved.t[i] += a.q.t[i];
    return {a.g * b.g, std::move(moved)};
}

}  // namespace gstruct
