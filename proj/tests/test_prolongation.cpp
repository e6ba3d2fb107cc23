#include "doctest.h"

#include <random>

#include "gstruct/prolongation.hpp"
#include "support/oracles.hpp"

using namespace gstruct;

namespace {

std::vector<GStructureSpec> sample_specs() {
    return {make_engel_spec(),           make_foliation_spec(1, 1), make_foliation_spec(1, 2),
            make_foliation_spec(2, 1),   make_split_spec(1, 1),     make_split_spec(2, 1),
            make_sl_foliation_spec(1, 1), make_sl_foliation_spec(1, 2), make_conservation_spec(),
            make_gl_spec(2),             make_gl_spec(3)};
}

GStructureSpec empty_algebra(std::size_t n) {
    GStructureSpec s;
    s.name = "zero";
    s.dim_v = n;
    return s;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    while (true) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        }
        if (inverse(m)) return m;
    }
}

VectorValuedBilinear random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    VectorValuedBilinear q{n, std::vector<Rational>(n * n * n)};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) q.at(k, i, j) = q.at(k, j, i) = d(rng);
        }
    }
    return q;
}

}  // namespace

TEST_CASE("delta of gl(2) has rank 2 and kernel of dimension 6") {
    LieAlgebra g(make_gl_spec(2));
    RatMatrix d = delta_matrix(g);
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 8);
    CHECK(rank(d) == 2);
    CHECK(kernel_basis(d).size() == 6);
}

TEST_CASE("prolongation dimensions agree with the symmetric-tensor oracle") {
    for (const auto& s : sample_specs()) {
        LieAlgebra g(s);
        CAPTURE(s.name);
        CHECK(prolongation_basis(g).dim() == oracle::prolongation_dim(g));
    }
}

TEST_CASE("frozen prolongation dimensions") {
    CHECK(prolongation_basis(LieAlgebra(make_engel_spec())).dim() == 13);
    CHECK(prolongation_basis(LieAlgebra(make_foliation_spec(1, 1))).dim() == 4);
    CHECK(prolongation_basis(LieAlgebra(make_split_spec(1, 1))).dim() == 2);
    CHECK(prolongation_basis(LieAlgebra(make_sl_foliation_spec(1, 1))).dim() == 2);
    CHECK(prolongation_basis(LieAlgebra(make_gl_spec(2))).dim() == 6);
    CHECK(prolongation_basis(LieAlgebra(make_gl_spec(3))).dim() == 18);
}

TEST_CASE("every prolongation element is symmetric and killed by delta") {
    for (const auto& s : sample_specs()) {
        LieAlgebra g(s);
        CAPTURE(s.name);
        RatMatrix d = delta_matrix(g);
        const std::size_t n = g.dim_v();
        for (const auto& q : prolongation_basis(g).elements) {
            CHECK(as_bilinear(g, q).is_symmetric());
            RatVector flat(g.dim() * n);
            for (std::size_t a = 0; a < g.dim(); ++a) {
                for (std::size_t l = 0; l < n; ++l) flat[a * n + l] = q.values[l][a];
            }
            CHECK(is_zero(d * flat));
        }
    }
}

TEST_CASE("spencer report satisfies rank-nullity") {
    for (const auto& s : sample_specs()) {
        SpencerReport r = spencer_report(LieAlgebra(s));
        CAPTURE(s.name);
        CHECK(r.dim_domain == r.rank_delta + r.dim_prolongation);
        CHECK(r.dim_target == r.rank_delta + r.dim_spencer);
        CHECK(r.coker_reps.size() == r.dim_spencer);
    }
}

TEST_CASE("spencer dimension vanishes for the full general linear algebra") {
    for (std::size_t n : {2u, 3u}) CHECK(spencer_report(LieAlgebra(make_gl_spec(n))).dim_spencer == 0);
}

TEST_CASE("zero algebra has empty delta domain") {
    LieAlgebra g(empty_algebra(2));
    RatMatrix d = delta_matrix(g);
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 0);
    CHECK(spencer_report(g).dim_spencer == 2);
    CHECK(prolongation_basis(g).dim() == 0);
}

TEST_CASE("conservation prolongation is the single e32 direction") {
    LieAlgebra g(make_conservation_spec());
    auto basis = prolongation_basis(g);
    REQUIRE(basis.dim() == 1);
    const auto& q = basis.elements[0];
    CHECK(is_zero(q.values[0]));
    CHECK(is_zero(q.values[2]));
    CHECK(g.matrix_of(q.values[1]) == RatMatrix::unit(3, 2, 1));
}

TEST_CASE("prolongation of a direct sum is the sum of prolongations") {
    for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        const std::size_t whole = prolongation_basis(LieAlgebra(make_split_spec(p, q))).dim();
        const std::size_t parts =
            prolongation_basis(LieAlgebra(make_gl_spec(p))).dim() + prolongation_basis(LieAlgebra(make_gl_spec(q))).dim();
        CHECK(whole == parts);
    }
}

TEST_CASE("prolonged module has dimension n + dim g and square-zero g1 action") {
    LieAlgebra g(make_engel_spec());
    ProlongedModuleSpec v1 = prolonged_module(g);
    CHECK(v1.dim_v1 == 12);
    CHECK(v1.g_action.size() == g.dim());
    CHECK(v1.prolongation_action.size() == 13);
    for (const auto& a : v1.prolongation_action) CHECK((a * a).is_zero());
}

TEST_CASE("prolonged module action is a representation of g") {
    LieAlgebra g(make_foliation_spec(1, 2));
    ProlongedModuleSpec v1 = prolonged_module(g);
    for (std::size_t a = 0; a < g.dim(); ++a) {
        for (std::size_t b = 0; b < g.dim(); ++b) {
            RatVector x(g.dim()), y(g.dim());
            x[a] = 1;
            y[b] = 1;
            RatVector c = g.bracket(x, y);
            RatMatrix expected(v1.dim_v1, v1.dim_v1);
            for (std::size_t k = 0; k < g.dim(); ++k) expected += v1.g_action[k] * c[k];
            CHECK(commutator(v1.g_action[a], v1.g_action[b]) == expected);
        }
    }
}

TEST_CASE("semidirect product law is associative") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
        SemidirectElement a{random_invertible(rng, n), random_symmetric(rng, n)};
        SemidirectElement b{random_invertible(rng, n), random_symmetric(rng, n)};
        SemidirectElement c{random_invertible(rng, n), random_symmetric(rng, n)};
        SemidirectElement left = compose(compose(a, b), c);
        SemidirectElement right = compose(a, compose(b, c));
        CHECK(left.g == right.g);
        CHECK(left.q == right.q);
    }
}

TEST_CASE("action by the identity is trivial and action composes") {
    std::mt19937_64 rng(11);
    auto q = random_symmetric(rng, 3);
    CHECK(act(RatMatrix::identity(3), q) == q);
    auto g1 = random_invertible(rng, 3);
    auto g2 = random_invertible(rng, 3);
    CHECK(act(g1 * g2, q) == act(g1, act(g2, q)));
    CHECK_THROWS_AS(act(RatMatrix(3, 3), q), PreconditionError);
}
