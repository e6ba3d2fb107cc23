#include "gstruct/graded_algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gstruct {

std::string to_string(GenClass c) {
    switch (c) {
        case GenClass::sigma: return "sigma";
        case GenClass::pi: return "pi";
        case GenClass::gamma: return "gamma";
        case GenClass::weight: return "weight";
        case GenClass::custom: return "custom";
    }
    return "custom";
}

GenClass parse_gen_class(const std::string& s) {
    if (s == "sigma") return GenClass::sigma;
    if (s == "pi") return GenClass::pi;
    if (s == "gamma") return GenClass::gamma;
    if (s == "weight") return GenClass::weight;
    if (s == "custom") return GenClass::custom;
    throw std::invalid_argument("unknown generator class \"" + s + "\"");
}

GeneratorSet::GeneratorSet(std::vector<Generator> gens) {
    for (auto& g : gens) add(std::move(g));
}

std::size_t GeneratorSet::add(Generator g) {
    if (g.degree != 1 && g.degree != 2) {
        throw std::invalid_argument("generator \"" + g.name + "\" must have degree 1 or 2");
    }
    if (index_.count(g.name)) throw std::invalid_argument("duplicate generator \"" + g.name + "\"");
    index_.emplace(g.name, gens_.size());
    gens_.push_back(std::move(g));
    return gens_.size() - 1;
}

std::optional<std::size_t> GeneratorSet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GeneratorSet::index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("unknown generator \"" + name + "\"");
    return *i;
}

std::size_t GeneratorSet::count(GenClass tag) const {
    return static_cast<std::size_t>(
        std::count_if(gens_.begin(), gens_.end(), [&](const Generator& g) { return g.tag == tag; }));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::generator(const GeneratorSet& gens, std::size_t index) {
    Monomial m;
    if (gens[index].degree == 1) {
        m.set_odd(index);
    } else {
        m.even_.emplace_back(static_cast<std::uint32_t>(index), 1u);
    }
    return m;
}

void Monomial::set_odd(std::size_t index) {
    std::size_t w = index / 64;
    if (odd_.size() <= w) odd_.resize(w + 1, 0);
    odd_[w] |= std::uint64_t{1} << (index % 64);
}

void Monomial::trim() {
    while (!odd_.empty() && odd_.back() == 0) odd_.pop_back();
}

bool Monomial::has_odd(std::size_t index) const {
    std::size_t w = index / 64;
    return w < odd_.size() && ((odd_[w] >> (index % 64)) & 1u);
}

std::size_t Monomial::odd_count() const {
    std::size_t c = 0;
    for (auto w : odd_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

int Monomial::degree() const {
    int d = static_cast<int>(odd_count());
    for (const auto& [idx, e] : even_) d += 2 * static_cast<int>(e);
    return d;
}

std::vector<std::size_t> Monomial::factors() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < odd_.size(); ++w) {
        std::uint64_t bits = odd_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + static_cast<std::size_t>(b));
            bits &= bits - 1;
        }
    }
    for (const auto& [idx, e] : even_) {
        for (std::uint32_t k = 0; k < e; ++k) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) {
    const std::size_t common = std::min(a.odd_.size(), b.odd_.size());
    for (std::size_t w = 0; w < common; ++w) {
        if (a.odd_[w] & b.odd_[w]) return {0, Monomial{}};
    }

    // Sign: parity of pairs (i in a, j in b) with i > j; every such pair is a
    // transposition needed to sort the concatenation a b.
    std::vector<std::size_t> above(a.odd_.size() + 1, 0);  // popcount of a's words w' > w
    for (std::size_t w = a.odd_.size(); w-- > 0;) {
        above[w] = above[w + 1] + static_cast<std::size_t>(std::popcount(a.odd_[w]));
    }
    std::size_t inversions = 0;
    for (std::size_t w = 0; w < b.odd_.size(); ++w) {
        std::uint64_t bits = b.odd_[w];
        std::uint64_t aw = w < a.odd_.size() ? a.odd_[w] : 0;
        std::size_t higher_words = w + 1 < above.size() ? above[w + 1] : 0;
        while (bits) {
            int j = std::countr_zero(bits);
            std::uint64_t mask = j == 63 ? 0 : (~std::uint64_t{0} << (j + 1));
            inversions += static_cast<std::size_t>(std::popcount(aw & mask)) + higher_words;
            bits &= bits - 1;
        }
    }

    Monomial out;
    out.odd_.resize(std::max(a.odd_.size(), b.odd_.size()), 0);
    for (std::size_t w = 0; w < out.odd_.size(); ++w) {
        out.odd_[w] = (w < a.odd_.size() ? a.odd_[w] : 0) | (w < b.odd_.size() ? b.odd_[w] : 0);
    }
    out.trim();

    auto ia = a.even_.begin();
    auto ib = b.even_.begin();
    while (ia != a.even_.end() || ib != b.even_.end()) {
        if (ib == b.even_.end() || (ia != a.even_.end() && ia->first < ib->first)) {
            out.even_.push_back(*ia++);
        } else if (ia == a.even_.end() || ib->first < ia->first) {
            out.even_.push_back(*ib++);
        } else {
            out.even_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return {inversions % 2 == 0 ? 1 : -1, std::move(out)};
}

// -------------------------------------------------------------- GradedPoly

GradedPoly GradedPoly::constant(GeneratorSetPtr gens, const Rational& c) {
    GradedPoly p(std::move(gens));
    p.add_term(Monomial{}, c);
    return p;
}

GradedPoly GradedPoly::generator(GeneratorSetPtr gens, std::size_t index) {
    GradedPoly p(gens);
    p.add_term(Monomial::generator(*gens, index), Rational(1));
    return p;
}

GradedPoly GradedPoly::generator(GeneratorSetPtr gens, const std::string& name) {
    std::size_t idx = gens->index(name);
    return generator(std::move(gens), idx);
}

std::optional<int> GradedPoly::degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int md = m.degree();
        if (d && *d != md) return std::nullopt;
        d = md;
    }
    return d;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

void GradedPoly::check_compatible(const GradedPoly& o) {
    if (!o.gens_ || gens_ == o.gens_) return;
    if (!gens_) {
        gens_ = o.gens_;
        return;
    }
    if (!(*gens_ == *o.gens_)) throw GeneratorMismatch();
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly out(a.gens_);
    out.check_compatible(b);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [sign, m] = multiply(ma, mb);
            if (sign == 0) continue;
            Rational c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
    if (a.gens_ && b.gens_ && a.gens_ != b.gens_ && !(*a.gens_ == *b.gens_)) return false;
    return a.terms_ == b.terms_;
}

std::string GradedPoly::render_monomial(const GeneratorSet& gens, const Monomial& m) {
    std::ostringstream os;
    auto f = m.factors();
    for (std::size_t i = 0; i < f.size();) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        if (i > 0) os << '*';
        os << gens[f[i]].name;
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::vector<std::size_t>, const TermMap::value_type*>> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.emplace_back(t.first.factors(), &t);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    std::ostringstream os;
    bool first = true;
    for (const auto& [factors, term] : order) {
        const auto& [m, c] = *term;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << gstruct::to_string(mag);
            continue;
        }
        if (mag != 1) os << gstruct::to_string(mag) << '*';
        os << render_monomial(*gens_, m);
    }
    return os.str();
}

GradedPoly wedge(const GradedPoly& f, const GradedPoly& g) { return f * g; }

GradedPoly graded_component(const GradedPoly& f, int d) {
    GradedPoly out(f.gens());
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() == d) out.add_term(m, c);
    }
    return out;
}

std::map<int, std::size_t> class_degree(const GradedPoly& f, GenClass tag) {
    std::map<int, std::size_t> hist;
    for (const auto& [m, c] : f.terms()) {
        int k = 0;
        for (auto idx : m.factors()) {
            if ((*f.gens())[idx].tag == tag) ++k;
        }
        ++hist[k];
    }
    return hist;
}

bool is_zero(const GradedPoly& f) { return f.is_zero(); }

std::set<std::size_t> sigma_support(const GradedPoly& f) {
    std::set<std::size_t> out;
    for (const auto& [m, c] : f.terms()) {
        for (auto idx : m.factors()) {
            if ((*f.gens())[idx].tag == GenClass::sigma) out.insert(idx);
        }
    }
    return out;
}

GradedPoly rebase(const GradedPoly& f, const GeneratorSetPtr& target) {
    GradedPoly out(target);
    if (!f.gens()) {
        for (const auto& [m, c] : f.terms()) out.add_term(m, c);
        return out;
    }
    for (const auto& [m, c] : f.terms()) {
        GradedPoly term = GradedPoly::constant(target, c);
        for (auto idx : m.factors()) term = term * GradedPoly::generator(target, (*f.gens())[idx].name);
        out += term;
    }
    return out;
}

// -------------------------------------------------------------- FormMatrix

FormMatrix::FormMatrix(GeneratorSetPtr gens, std::size_t dim)
    : gens_(gens), dim_(dim), entries_(dim * dim, GradedPoly(gens)) {}

FormMatrix FormMatrix::identity(GeneratorSetPtr gens, std::size_t dim) {
    FormMatrix m(gens, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = GradedPoly::constant(gens, Rational(1));
    return m;
}

bool FormMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const GradedPoly& p) { return p.is_zero(); });
}

GradedPoly FormMatrix::trace() const {
    GradedPoly t(gens_);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

FormMatrix& FormMatrix::operator+=(const FormMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("form matrix shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("form matrix shape mismatch");
    FormMatrix out(a.gens_, a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
        for (std::size_t k = 0; k < a.dim_; ++k) {
            const GradedPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < a.dim_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

FormMatrix scale(const RatMatrix& m, const GradedPoly& form) {
    FormMatrix out(form.gens(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j)) != 0) out(i, j) = form * m(i, j);
        }
    }
    return out;
}

}  // namespace gstruct
