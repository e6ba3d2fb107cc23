#include "gstruct/lie_core.hpp"

namespace gstruct {
namespace {

std::string unit_name(std::size_t n, std::size_t r, std::size_t c) {
    if (n <= 9) return "e" + std::to_string(r + 1) + std::to_string(c + 1);
    return "e" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
}

RatMatrix diag(std::initializer_list<int> entries) {
    RatMatrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (int e : entries) {
        m(i, i) = e;
        ++i;
    }
    return m;
}

RatMatrix block(const RatMatrix& m, std::size_t offset, std::size_t size) {
    RatMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) out(i, j) = m(offset + i, offset + j);
    }
    return out;
}

/// Explicit module obtained by restricting every g0 element to one diagonal block.
ModuleAction block_module(const GStructureSpec& spec, std::string name, std::size_t offset, std::size_t size) {
    ModuleAction w;
    w.name = std::move(name);
    w.kind = ModuleKind::explicit_action;
    w.dim_w = size;
    for (const auto& g0_name : spec.g0) {
        for (const auto& b : spec.g_basis) {
            if (b.name == g0_name) w.rho.push_back(block(b.matrix, offset, size));
        }
    }
    return w;
}

ModuleAction defining_module() {
    ModuleAction t;
    t.name = "T";
    t.kind = ModuleKind::defining;
    return t;
}

void check_pq(std::size_t p, std::size_t q) {
    if (p < 1 || q < 1) throw PreconditionError("p and q must be at least 1");
}

}  // namespace

GStructureSpec make_foliation_spec(std::size_t p, std::size_t q) {
    check_pq(p, q);
    const std::size_t n = p + q;
    GStructureSpec s;
    s.name = "foliation_p" + std::to_string(p) + "_q" + std::to_string(q);
    s.dim_v = n;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r >= p && c < p) continue;
            std::string nm = unit_name(n, r, c);
            s.g_basis.push_back({nm, RatMatrix::unit(n, r, c)});
            ((r < p) == (c < p) ? s.g0 : s.gplus).push_back(nm);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        s.cartan.push_back(unit_name(n, k, k));
        s.weight_vars.push_back("x" + std::to_string(k + 1));
    }
    s.modules.push_back(defining_module());
    s.modules.push_back(block_module(s, "V", 0, p));
    s.modules.push_back(block_module(s, "N", p, q));
    return s;
}

GStructureSpec make_split_spec(std::size_t p, std::size_t q) {
    check_pq(p, q);
    const std::size_t n = p + q;
    GStructureSpec s;
    s.name = "split_p" + std::to_string(p) + "_q" + std::to_string(q);
    s.dim_v = n;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if ((r < p) != (c < p)) continue;
            std::string nm = unit_name(n, r, c);
            s.g_basis.push_back({nm, RatMatrix::unit(n, r, c)});
            s.g0.push_back(nm);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        s.cartan.push_back(unit_name(n, k, k));
        s.weight_vars.push_back("x" + std::to_string(k + 1));
    }
    s.modules.push_back(defining_module());
    s.modules.push_back(block_module(s, "V", 0, p));
    s.modules.push_back(block_module(s, "W", p, q));
    return s;
}

GStructureSpec make_sl_foliation_spec(std::size_t p, std::size_t q) {
    check_pq(p, q);
    const std::size_t n = p + q;
    GStructureSpec s;
    s.name = "sl_foliation_p" + std::to_string(p) + "_q" + std::to_string(q);
    s.dim_v = n;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        RatMatrix h(n, n);
        h(k, k) = 1;
        h(k + 1, k + 1) = -1;
        std::string nm = "h" + std::to_string(k + 1);
        s.g_basis.push_back({nm, h});
        s.g0.push_back(nm);
        s.cartan.push_back(nm);
        s.weight_vars.push_back("t" + std::to_string(k + 1));
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c || (r >= p && c < p)) continue;
            std::string nm = unit_name(n, r, c);
            s.g_basis.push_back({nm, RatMatrix::unit(n, r, c)});
            ((r < p) == (c < p) ? s.g0 : s.gplus).push_back(nm);
        }
    }
    s.modules.push_back(defining_module());
    s.modules.push_back(block_module(s, "TF", 0, p));
    s.modules.push_back(block_module(s, "N", p, q));
    return s;
}

GStructureSpec make_engel_spec() {
    GStructureSpec s;
    s.name = "engel";
    s.dim_v = 4;
    // Coefficient matrices of gamma^3_3 and gamma^4_4 in the connection matrix,
    // then the strictly lower-triangular entries.
    s.g_basis.push_back({"g33", diag({2, 1, 1, 0})});
    s.g_basis.push_back({"g44", diag({1, 1, 0, 1})});
    for (auto [r, c] : {std::pair{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}) {
        std::string nm = unit_name(4, r, c);
        s.g_basis.push_back({nm, RatMatrix::unit(4, r, c)});
        s.gplus.push_back(nm);
    }
    s.g0 = {"g33", "g44"};
    s.cartan = {"g33", "g44"};
    s.weight_vars = {"a", "b"};
    s.modules.push_back(defining_module());

    // The line on which g0 acts by 2a + b.
    ModuleAction w1;
    w1.name = "W1";
    w1.kind = ModuleKind::explicit_action;
    w1.dim_w = 1;
    w1.rho = {RatMatrix::from_rows({{Rational(2)}}), RatMatrix::from_rows({{Rational(1)}})};
    s.modules.push_back(w1);
    return s;
}

GStructureSpec make_conservation_spec() {
    GStructureSpec s;
    s.name = "conservation";
    s.dim_v = 3;
    s.g_basis.push_back({"g1", diag({2, 1, -1})});
    s.g_basis.push_back({"g2", RatMatrix::unit(3, 2, 1)});
    s.g0 = {"g1"};
    s.gplus = {"g2"};
    s.cartan = {"g1"};
    s.weight_vars = {"w"};
    s.modules.push_back(defining_module());
    return s;
}

GStructureSpec make_gl_spec(std::size_t n) {
    GStructureSpec s;
    s.name = "gl" + std::to_string(n);
    s.dim_v = n;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::string nm = unit_name(n, r, c);
            s.g_basis.push_back({nm, RatMatrix::unit(n, r, c)});
            s.g0.push_back(nm);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        s.cartan.push_back(unit_name(n, k, k));
        s.weight_vars.push_back("x" + std::to_string(k + 1));
    }
    s.modules.push_back(defining_module());
    return s;
}

}  // namespace gstruct
