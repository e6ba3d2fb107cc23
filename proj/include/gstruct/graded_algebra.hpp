#pragma once

// Graded-commutative polynomials over Q on named generators of degree 1
// (anticommuting, square zero) or degree 2 (central).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gstruct/exact_linalg.hpp"

namespace gstruct {

enum class GenClass { sigma, pi, gamma, weight, custom };

std::string to_string(GenClass c);
GenClass parse_gen_class(const std::string& s);

struct Generator {
    std::string name;
    int degree = 1;
    GenClass tag = GenClass::custom;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> gens);

    /// Appends a generator; throws std::invalid_argument on a duplicate name
    /// or a degree outside {1, 2}.
    std::size_t add(Generator g);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index(const std::string& name) const;
    std::size_t count(GenClass tag) const;

    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.gens_ == b.gens_; }

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, std::size_t> index_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

/// Product of distinct degree-1 generators (a bitset, trailing zero words
/// trimmed) times powers of degree-2 generators.
class Monomial {
public:
    Monomial() = default;
    static Monomial generator(const GeneratorSet& gens, std::size_t index);

    bool has_odd(std::size_t index) const;
    std::size_t odd_count() const;
    const std::vector<std::uint64_t>& odd_words() const { return odd_; }
    /// (generator index, exponent), sorted by index.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& even() const { return even_; }

    int degree() const;
    bool is_one() const { return odd_.empty() && even_.empty(); }
    /// Generator indices in canonical order, repeated by multiplicity.
    std::vector<std::size_t> factors() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// a * b in canonical order. Returns sign 0 when a repeated degree-1
    /// generator kills the product, otherwise +1 or -1.
    friend std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b);

private:
    void set_odd(std::size_t index);
    void trim();

    std::vector<std::uint64_t> odd_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> even_;
};

class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    GradedPoly() = default;
    explicit GradedPoly(GeneratorSetPtr gens) : gens_(std::move(gens)) {}

    static GradedPoly constant(GeneratorSetPtr gens, const Rational& c);
    static GradedPoly generator(GeneratorSetPtr gens, std::size_t index);
    static GradedPoly generator(GeneratorSetPtr gens, const std::string& name);

    const GeneratorSetPtr& gens() const { return gens_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Common degree of all terms; nullopt for zero or mixed-degree input.
    std::optional<int> degree() const;

    void add_term(const Monomial& m, const Rational& c);

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const Rational& s);
    GradedPoly operator-() const;

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const Rational& s) { return a *= s; }
    friend GradedPoly operator*(const Rational& s, GradedPoly a) { return a *= s; }
    /// Wedge product.
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend bool operator==(const GradedPoly& a, const GradedPoly& b);

    /// Canonical text: terms ordered by factor sequence, factors joined by
    /// '*', degree-2 powers as name^e, coefficients as p or p/q.
    std::string to_string() const;
    static std::string render_monomial(const GeneratorSet& gens, const Monomial& m);

private:
    void check_compatible(const GradedPoly& o);

    GeneratorSetPtr gens_;
    TermMap terms_;
};

class GeneratorMismatch : public std::invalid_argument {
public:
    GeneratorMismatch() : std::invalid_argument("generator-set mismatch") {}
};

GradedPoly wedge(const GradedPoly& f, const GradedPoly& g);
GradedPoly graded_component(const GradedPoly& f, int d);
/// Histogram: number of tag-class factors -> number of monomials with that count.
std::map<int, std::size_t> class_degree(const GradedPoly& f, GenClass tag);
bool is_zero(const GradedPoly& f);
/// Indices of sigma-class generators appearing in some term.
std::set<std::size_t> sigma_support(const GradedPoly& f);

/// Re-expresses f over a generator set containing all of f's generators by name.
GradedPoly rebase(const GradedPoly& f, const GeneratorSetPtr& target);

/// Square matrix of graded polynomials; products use the wedge product.
class FormMatrix {
public:
    FormMatrix() = default;
    FormMatrix(GeneratorSetPtr gens, std::size_t dim);
    static FormMatrix identity(GeneratorSetPtr gens, std::size_t dim);

    std::size_t dim() const { return dim_; }
    const GeneratorSetPtr& gens() const { return gens_; }
    GradedPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const GradedPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    bool is_zero() const;
    GradedPoly trace() const;

    FormMatrix& operator+=(const FormMatrix& o);
    friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);
    friend bool operator==(const FormMatrix&, const FormMatrix&) = default;

private:
    GeneratorSetPtr gens_;
    std::size_t dim_ = 0;
    std::vector<GradedPoly> entries_;
};

/// a * m for a rational matrix and a single form.
FormMatrix scale(const RatMatrix& m, const GradedPoly& form);

}  // namespace gstruct
