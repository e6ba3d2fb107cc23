#pragma once

// Exact dense linear algebra over the rationals.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gstruct {

/// Arbitrary-precision rational; GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q".
std::string to_string(const Rational& q);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    /// Matrix unit with a single 1 at (r, c).
    static RatMatrix unit(std::size_t n, std::size_t r, std::size_t c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& data() const { return data_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    RatMatrix transpose() const;
    RatVector column(std::size_t c) const;
    RatVector row(std::size_t r) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVector operator*(const RatMatrix& a, const RatVector& v);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// a*b - b*a
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical null-space basis: one vector per free column of rref(m), in
/// increasing free-column order, with that free variable set to 1 and the
/// other free variables set to 0.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some x with m*x = b, or nullopt when b is outside the column space.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

bool is_zero(const RatVector& v);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Matrix whose columns are the given vectors (all of equal length `rows`).
RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

/// Coordinates with respect to a fixed linearly independent family of
/// vectors. Precomputes a left inverse so repeated lookups are cheap.
class CoordinateMap {
public:
    CoordinateMap() = default;
    /// Throws std::invalid_argument when the vectors are dependent.
    CoordinateMap(const std::vector<RatVector>& basis, std::size_t ambient_dim);

    std::size_t size() const { return basis_.cols(); }
    std::size_t ambient_dim() const { return basis_.rows(); }

    /// Coordinates of v, or nullopt if v is not in the span.
    std::optional<RatVector> coordinates(const RatVector& v) const;

private:
    RatMatrix basis_;         // ambient x size
    RatMatrix left_inverse_;  // size x |pivot_rows_|
    std::vector<std::size_t> pivot_rows_;
};

}  // namespace gstruct
