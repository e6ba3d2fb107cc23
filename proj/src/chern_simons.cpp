#include "gstruct/chern_simons.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gstruct {
namespace {

Rational factorial(std::size_t k) {
    mpz_class f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return Rational(f);
}

std::string render_word(const std::vector<int>& w) {
    std::ostringstream os;
    os << "tr(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

class PatternParser {
public:
    explicit PatternParser(const std::string& s) : s_(s) {}

    TracePattern parse() {
        std::vector<TracePattern::Term> terms;
        skip();
        if (done()) fail("empty pattern");
        bool first = true;
        std::size_t degree = 0;
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
            TracePattern::Term t = term();
            if (sign < 0) t.coeff = -t.coeff;
            for (const auto& w : t.words) {
                for (int s : w) degree = std::max(degree, static_cast<std::size_t>(s));
            }
            terms.push_back(std::move(t));
            skip();
        }
        return TracePattern(degree, std::move(terms));
    }

private:
    TracePattern::Term term() {
        TracePattern::Term t{Rational(1), {}};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            t.coeff = parse_rational(s_.substr(start, pos_ - start));
            skip();
            if (peek() != '*') fail("expected '*' after coefficient");
            ++pos_;
            skip();
        }
        while (true) {
            if (s_.compare(pos_, 3, "tr(") != 0) fail("expected tr(");
            pos_ += 3;
            std::vector<int> word;
            while (true) {
                skip();
                std::size_t start = pos_;
                while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (start == pos_) fail("expected slot index");
                word.push_back(std::stoi(s_.substr(start, pos_ - start)));
                skip();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() != ')') fail("expected ',' or ')'");
                ++pos_;
                break;
            }
            t.words.push_back(std::move(word));
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
                continue;
            }
            break;
        }
        return t;
    }

    void skip() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse trace pattern \"" + s_ + "\" at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

TracePattern product(const TracePattern& a, const TracePattern& b) {
    std::vector<TracePattern::Term> terms;
    const int shift = static_cast<int>(a.degree());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            TracePattern::Term t{ta.coeff * tb.coeff, ta.words};
            for (auto w : tb.words) {
                for (int& s : w) s += shift;
                t.words.push_back(std::move(w));
            }
            terms.push_back(std::move(t));
        }
    }
    return TracePattern(a.degree() + b.degree(), std::move(terms));
}

}  // namespace

TracePattern::TracePattern(std::size_t degree, std::vector<Term> terms) : degree_(degree) {
    for (auto& t : terms) {
        if (sgn(t.coeff) == 0) continue;
        std::vector<int> seen(degree + 1, 0);
        for (const auto& w : t.words) {
            if (w.empty()) throw std::invalid_argument("empty trace word");
            for (int s : w) {
                if (s < 1 || static_cast<std::size_t>(s) > degree || seen[static_cast<std::size_t>(s)]++) {
                    throw std::invalid_argument("trace pattern terms must use each slot 1.." +
                                                std::to_string(degree) + " exactly once");
                }
            }
        }
        if (std::count(seen.begin() + 1, seen.end(), 1) != static_cast<long>(degree)) {
            throw std::invalid_argument("trace pattern terms must use each slot 1.." + std::to_string(degree) +
                                        " exactly once");
        }
        terms_.push_back(std::move(t));
    }
}

std::string TracePattern::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational mag = abs(t.coeff);
        if (first) {
            if (sgn(t.coeff) < 0) os << '-';
        } else {
            os << (sgn(t.coeff) < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << gstruct::to_string(mag) << '*';
        for (std::size_t i = 0; i < t.words.size(); ++i) os << (i ? "*" : "") << render_word(t.words[i]);
    }
    return os.str();
}

TracePattern TracePattern::parse(const std::string& text) { return PatternParser(text).parse(); }

GradedPoly TracePattern::evaluate(const std::vector<const FormMatrix*>& slots) const {
    if (slots.size() != degree_) {
        throw std::invalid_argument("pattern of degree " + std::to_string(degree_) + " given " +
                                    std::to_string(slots.size()) + " slots");
    }
    if (slots.empty()) return GradedPoly();
    const auto& gens = slots.front()->gens();
    GradedPoly out(gens);
    std::map<std::vector<const FormMatrix*>, GradedPoly> traces;
    for (const auto& t : terms_) {
        GradedPoly value = GradedPoly::constant(gens, t.coeff);
        for (const auto& w : t.words) {
            std::vector<const FormMatrix*> key;
            for (int s : w) key.push_back(slots[static_cast<std::size_t>(s - 1)]);
            auto it = traces.find(key);
            if (it == traces.end()) {
                FormMatrix m = *key.front();
                for (std::size_t i = 1; i < key.size(); ++i) m = m * *key[i];
                it = traces.emplace(key, m.trace()).first;
            }
            value = value * it->second;
            if (value.is_zero()) break;
        }
        out += value;
    }
    return out;
}

GradedPoly TracePattern::evaluate_symmetric(const std::vector<const FormMatrix*>& slots) const {
    if (slots.size() != degree_) {
        throw std::invalid_argument("pattern of degree " + std::to_string(degree_) + " given " +
                                    std::to_string(slots.size()) + " slots");
    }
    if (slots.empty()) return GradedPoly();
    // Average over distinct arrangements of the slot multiset; equal to the
    // average over all k! orderings.
    std::vector<const FormMatrix*> distinct;
    std::vector<std::size_t> types;
    for (const auto* s : slots) {
        auto it = std::find(distinct.begin(), distinct.end(), s);
        types.push_back(static_cast<std::size_t>(it - distinct.begin()));
        if (it == distinct.end()) distinct.push_back(s);
    }
    std::sort(types.begin(), types.end());
    GradedPoly sum(slots.front()->gens());
    long count = 0;
    do {
        std::vector<const FormMatrix*> arranged;
        for (std::size_t t : types) arranged.push_back(distinct[t]);
        sum += evaluate(arranged);
        ++count;
    } while (std::next_permutation(types.begin(), types.end()));
    return sum * Rational(1, count);
}

TracePattern power_sum_pattern(const Partition& lambda) {
    TracePattern::Term t{Rational(1), {}};
    int next = 1;
    for (int part : lambda) {
        std::vector<int> w;
        for (int i = 0; i < part; ++i) w.push_back(next++);
        t.words.push_back(std::move(w));
    }
    return TracePattern(static_cast<std::size_t>(next - 1), {t});
}

TracePattern chern_pattern(int k) {
    if (k < 1) throw std::invalid_argument("Chern index must be positive");
    std::vector<TracePattern::Term> terms;
    for (const auto& lambda : partitions(k, k)) {
        std::map<int, std::size_t> mult;
        for (int part : lambda) ++mult[part];
        Rational z = 1;
        for (const auto& [part, m] : mult) {
            for (std::size_t i = 0; i < m; ++i) z *= part;
            z *= factorial(m);
        }
        Rational coeff = 1 / z;
        if ((k - static_cast<int>(lambda.size())) % 2 != 0) coeff = -coeff;
        TracePattern::Term t = power_sum_pattern(lambda).terms().front();
        t.coeff = coeff;
        terms.push_back(std::move(t));
    }
    return TracePattern(static_cast<std::size_t>(k), std::move(terms));
}

TracePattern chern_polynomial_pattern(const ChernPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero invariant polynomial");
    int weight = -1;
    std::vector<TracePattern::Term> terms;
    for (const auto& [lambda, c] : p.terms()) {
        int w = 0;
        for (int part : lambda) w += part;
        if (weight >= 0 && w != weight) throw std::invalid_argument("invariant polynomial must be homogeneous");
        if (w == 0) throw std::invalid_argument("invariant polynomial must have positive degree");
        weight = w;
        TracePattern m = chern_pattern(lambda.front());
        for (std::size_t i = 1; i < lambda.size(); ++i) m = product(m, chern_pattern(lambda[i]));
        for (auto t : m.terms()) {
            t.coeff *= c;
            terms.push_back(std::move(t));
        }
    }
    return TracePattern(static_cast<std::size_t>(weight), std::move(terms));
}

CSCoefficients cs_coefficients(std::size_t k) {
    if (k == 0) throw std::invalid_argument("Chern-Simons degree must be at least 1");
    CSCoefficients out;
    out.k = k;
    for (std::size_t j = 0; j < k; ++j) {
        Rational a = factorial(k - 1) / (factorial(k + j) * factorial(k - 1 - j));
        out.a.push_back(j % 2 == 0 ? a : Rational(-a));
    }
    return out;
}

FormMatrix connection_matrix(const FormContext& ctx, const ModuleAction& w) {
    FormMatrix gamma(ctx.gens(), w.dim_w);
    for (std::size_t alpha = 0; alpha < w.rho.size(); ++alpha) {
        if (w.rho[alpha].is_zero()) continue;
        gamma += scale(w.rho[alpha], GradedPoly::generator(ctx.gens(), ctx.gamma_index(alpha)));
    }
    return gamma;
}

GradedPoly cs_summand(const TracePattern& f, const FormMatrix& gamma, const FormMatrix& curvature, std::size_t j) {
    const std::size_t k = f.degree();
    if (k == 0 || j >= k) throw std::invalid_argument("summand index out of range");
    if (gamma.dim() != curvature.dim()) throw std::invalid_argument("connection and curvature sizes differ");
    const FormMatrix b = gamma * gamma;
    std::vector<const FormMatrix*> slots{&gamma};
    for (std::size_t i = 0; i < j; ++i) slots.push_back(&b);
    for (std::size_t i = 0; i + j + 1 < k; ++i) slots.push_back(&curvature);
    return f.evaluate_symmetric(slots);
}

GradedPoly cs_from_matrices(const TracePattern& f, const FormMatrix& gamma, const FormMatrix& curvature) {
    const auto coeffs = cs_coefficients(f.degree());
    GradedPoly out(gamma.gens());
    for (std::size_t j = 0; j < f.degree(); ++j) out += cs_summand(f, gamma, curvature, j) * coeffs.a[j];
    return out;
}

GradedPoly cs_form(const FormContext& ctx, const std::string& module_name, const TracePattern& f) {
    const ModuleAction& w = ctx.algebra().module(module_name);
    CurvatureMatrix omega = curvature_matrix(ctx, atiyah_tensor(ctx, module_name, true));
    return cs_from_matrices(f, connection_matrix(ctx, w), omega.omega);
}

CSVanishing cs_vanishing_degree(const FormContext& ctx, const std::string& module_name) {
    const ModuleAction& w = ctx.algebra().module(module_name);
    CurvatureMatrix omega = curvature_matrix(ctx, atiyah_tensor(ctx, module_name, true));
    std::set<std::size_t> support;
    for (std::size_t i = 0; i < omega.dim_w(); ++i) {
        for (std::size_t j = 0; j < omega.dim_w(); ++j) {
            auto s = sigma_support(omega.omega(i, j));
            support.insert(s.begin(), s.end());
        }
    }
    CSVanishing out;
    out.bound = support.size() + 2;
    const FormMatrix gamma = connection_matrix(ctx, w);
    for (const auto& lambda : partitions(static_cast<int>(out.bound), static_cast<int>(out.bound))) {
        TracePattern f = power_sum_pattern(lambda);
        ++out.patterns_checked;
        if (!cs_from_matrices(f, gamma, omega.omega).is_zero()) out.nonzero.push_back(f.to_string());
        if (!cs_summand(f, gamma, omega.omega, 0).is_zero()) out.leading_nonzero.push_back(f.to_string());
    }
    return out;
}

}  // namespace gstruct
