#pragma once

// Polynomial relations among Chern symbols c_1, ..., c_n.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gstruct/char_forms.hpp"

namespace gstruct {

/// Parts in descending order; the weight of c_lambda is the sum of parts.
using Partition = std::vector<int>;

/// Partitions of d with every part <= max_part, in graded-lex order:
/// lexicographically ascending as descending sequences, so for d = 4:
/// 1111, 211, 22, 31, 4.
std::vector<Partition> partitions(int d, int max_part);

/// Linear combination of Chern monomials c_lambda.
class ChernPolynomial {
public:
    ChernPolynomial() = default;

    void add(const Partition& lambda, const Rational& c);
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_index() const;

    /// e.g. "2*c1^4 - 11*c1^2*c2 + 8*c2^2 + 21*c1*c3 - 75*c4"
    std::string to_string() const;
    /// Parses sums of rational multiples of products of c<k>^<e>.
    static ChernPolynomial parse(const std::string& text);

    friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

private:
    std::map<Partition, Rational> terms_;
};

struct RelationSet {
    int degree = 0;
    std::vector<ChernPolynomial> basis;
    std::size_t kernel_dim = 0;
    std::size_t rank = 0;
    std::size_t monomial_count = 0;  // number of partitions considered
};

/// c_lambda expanded on the given forms.
GradedPoly expand_monomial(const ChernForms& forms, const Partition& lambda);
GradedPoly expand(const ChernForms& forms, const ChernPolynomial& p);

RelationSet relation_basis(const ChernForms& forms, int degree);

/// Zero, or the first nonvanishing term of the expansion rendered as a form.
std::optional<std::string> check_polynomial(const ChernForms& forms, const ChernPolynomial& p);
/// Same for an already expanded form.
std::optional<std::string> check_form(const GradedPoly& f);

/// Rendering with the first monomial's coefficient scaled to 1, e.g.
/// "c1^4 - 11/2*c1^2*c2 + ...".
std::string monic_rendering(const ChernPolynomial& p);

struct VanishingReport {
    std::set<std::size_t> support;       // sigma generator indices
    std::vector<std::string> support_names;
    std::size_t support_bound = 0;       // Chern monomials of weight > bound vanish
    std::vector<bool> chern_zero;        // chern_zero[k]: chat_k == 0, k = 1..dim_w (index 0 unused)
};

VanishingReport vanishing_report(const CurvatureMatrix& omega);

}  // namespace gstruct
