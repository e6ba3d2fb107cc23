#include "gstruct/relations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gstruct {
namespace {

void partitions_rec(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = 1; part <= std::min(remaining, max_part); ++part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::string render_partition(const Partition& lambda) {
    std::ostringstream os;
    Partition ascending(lambda.rbegin(), lambda.rend());
    for (std::size_t i = 0; i < ascending.size();) {
        std::size_t j = i;
        while (j < ascending.size() && ascending[j] == ascending[i]) ++j;
        if (i > 0) os << '*';
        os << 'c' << ascending[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

/// Makes a rational vector integral and primitive, keeping the sign.
RatVector primitive(const RatVector& v) {
    mpz_class l = 1;
    for (const auto& x : v) {
        if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& x : v) {
        if (sgn(x) == 0) continue;
        mpz_class num = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = sgn(v[i]) == 0 ? Rational(0) : Rational(v[i] * Rational(l) / Rational(g));
    }
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ChernPolynomial parse() {
        ChernPolynomial p;
        skip();
        if (done()) fail("empty polynomial");
        bool first = true;
        while (!done()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [lambda, coeff] = term();
            p.add(lambda, sign < 0 ? Rational(-coeff) : coeff);
            skip();
        }
        return p;
    }

private:
    std::pair<Partition, Rational> term() {
        Rational coeff = 1;
        Partition lambda;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
            } else {
                return {lambda, coeff};
            }
        }
        while (true) {
            if (peek() != 'c') fail("expected c<k>");
            ++pos_;
            int k = integer();
            int e = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                skip();
                e = integer();
                skip();
            }
            if (k < 1) fail("Chern index must be positive");
            for (int i = 0; i < e; ++i) lambda.push_back(k);
            if (peek() == '*') {
                ++pos_;
                skip();
                continue;
            }
            break;
        }
        std::sort(lambda.rbegin(), lambda.rend());
        return {lambda, coeff};
    }

    Rational number() {
        std::size_t start = pos_;
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        return parse_rational(s_.substr(start, pos_ - start));
    }

    int integer() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    void skip() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse Chern polynomial \"" + s_ + "\" at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Partition> partitions(int d, int max_part) {
    std::vector<Partition> out;
    if (d < 0) return out;
    Partition prefix;
    partitions_rec(d, std::max(0, max_part), prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

void ChernPolynomial::add(const Partition& lambda, const Rational& c) {
    if (sgn(c) == 0) return;
    Partition key = lambda;
    std::sort(key.rbegin(), key.rend());
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

int ChernPolynomial::max_index() const {
    int m = 0;
    for (const auto& [lambda, c] : terms_) {
        if (!lambda.empty()) m = std::max(m, lambda.front());
    }
    return m;
}

std::string ChernPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (lambda.empty()) {
            os << gstruct::to_string(mag);
            continue;
        }
        if (mag != 1) os << gstruct::to_string(mag) << '*';
        os << render_partition(lambda);
    }
    return os.str();
}

ChernPolynomial ChernPolynomial::parse(const std::string& text) { return Parser(text).parse(); }

std::string monic_rendering(const ChernPolynomial& p) {
    if (p.is_zero()) return "0";
    Rational lead = p.terms().begin()->second;
    ChernPolynomial scaled;
    for (const auto& [lambda, c] : p.terms()) scaled.add(lambda, c / lead);
    return scaled.to_string();
}

GradedPoly expand_monomial(const ChernForms& forms, const Partition& lambda) {
    GradedPoly out = GradedPoly::constant(forms.gens, Rational(1));
    for (int k : lambda) {
        if (k < 1) throw std::invalid_argument("Chern index must be positive");
        if (static_cast<std::size_t>(k) > forms.dim_w) return GradedPoly(forms.gens);
        if (static_cast<std::size_t>(k) > forms.up_to()) {
            throw PreconditionError("Chern forms computed only up to c" + std::to_string(forms.up_to()));
        }
        out = out * forms.c[static_cast<std::size_t>(k)];
    }
    return out;
}

GradedPoly expand(const ChernForms& forms, const ChernPolynomial& p) {
    GradedPoly out(forms.gens);
    for (const auto& [lambda, c] : p.terms()) out += expand_monomial(forms, lambda) * c;
    return out;
}

RelationSet relation_basis(const ChernForms& forms, int degree) {
    if (degree < 1) throw PreconditionError("relation degree must be at least 1");
    const int max_part = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(degree), forms.dim_w));
    if (forms.up_to() < static_cast<std::size_t>(max_part)) {
        throw PreconditionError("Chern forms must be computed up to c" + std::to_string(max_part));
    }

    const auto parts = partitions(degree, max_part);
    std::vector<GradedPoly> expansions;
    expansions.reserve(parts.size());
    std::map<Monomial, std::size_t> row_of;
    for (const auto& lambda : parts) {
        expansions.push_back(expand_monomial(forms, lambda));
        for (const auto& [m, c] : expansions.back().terms()) row_of.try_emplace(m, row_of.size());
    }

    RatMatrix coeffs(row_of.size(), parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (const auto& [m, c] : expansions[j].terms()) coeffs(row_of.at(m), j) = c;
    }

    RelationSet out;
    out.degree = degree;
    out.monomial_count = parts.size();
    auto kernel = kernel_basis(coeffs);
    out.kernel_dim = kernel.size();
    out.rank = parts.size() - kernel.size();
    if (kernel.empty()) return out;

    // Canonical basis: rref of the kernel rows, then integer-primitive.
    RatMatrix k(kernel.size(), parts.size());
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        for (std::size_t j = 0; j < parts.size(); ++j) k(i, j) = kernel[i][j];
    }
    RrefResult r = rref(k);
    for (std::size_t i = 0; i < r.rank; ++i) {
        RatVector row = primitive(r.reduced.row(i));
        ChernPolynomial p;
        for (std::size_t j = 0; j < parts.size(); ++j) p.add(parts[j], row[j]);
        out.basis.push_back(std::move(p));
    }
    return out;
}

std::optional<std::string> check_form(const GradedPoly& f) {
    if (f.is_zero()) return std::nullopt;
    const GradedPoly::TermMap::value_type* best = nullptr;
    std::vector<std::size_t> best_factors;
    for (const auto& t : f.terms()) {
        auto fac = t.first.factors();
        if (!best || fac < best_factors) {
            best = &t;
            best_factors = std::move(fac);
        }
    }
    GradedPoly witness(f.gens());
    witness.add_term(best->first, best->second);
    return witness.to_string();
}

std::optional<std::string> check_polynomial(const ChernForms& forms, const ChernPolynomial& p) {
    return check_form(expand(forms, p));
}

VanishingReport vanishing_report(const CurvatureMatrix& omega) {
    VanishingReport r;
    const auto& gens = omega.omega.gens();
    for (std::size_t i = 0; i < omega.dim_w(); ++i) {
        for (std::size_t j = 0; j < omega.dim_w(); ++j) {
            auto s = sigma_support(omega.omega(i, j));
            r.support.insert(s.begin(), s.end());
        }
    }
    for (auto idx : r.support) r.support_names.push_back((*gens)[idx].name);
    r.support_bound = r.support.size();
    ChernForms forms = chern_forms(omega);
    r.chern_zero.assign(omega.dim_w() + 1, false);
    for (std::size_t k = 1; k <= omega.dim_w(); ++k) r.chern_zero[k] = forms.c[k].is_zero();
    return r;
}

}  // namespace gstruct
