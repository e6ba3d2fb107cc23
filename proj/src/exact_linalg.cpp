#include "gstruct/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gstruct {

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
            }
        }
        std::string owned(s[0] == '+' ? s.substr(1) : s);
        return mpz_class(owned, 10);
    };

    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };

    std::string_view t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(t));
    mpz_class num = parse_int(trim(t.substr(0, slash)));
    std::string_view den_text = trim(t.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-') {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class den = parse_int(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t r, std::size_t c) {
    RatMatrix m(n, n);
    m(r, c) = 1;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

RatVector RatMatrix::column(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    RatVector out(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

RrefResult rref(const RatMatrix& m) {
    RrefResult out{m, {}, 0};
    RatMatrix& r = out.reduced;
    const std::size_t rows = r.rows();
    const std::size_t cols = r.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && sgn(r(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != lead) {
            for (std::size_t j = c; j < cols; ++j) std::swap(r(p, j), r(lead, j));
        }
        Rational inv = 1 / r(lead, c);
        for (std::size_t j = c; j < cols; ++j) r(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || sgn(r(i, c)) == 0) continue;
            Rational f = r(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(r(lead, j)) != 0) r(i, j) -= f * r(lead, j);
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols(), Rational(0));
    for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, m.cols());
    return x;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    }
    return inv;
}

RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("column has wrong length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

CoordinateMap::CoordinateMap(const std::vector<RatVector>& basis, std::size_t ambient_dim)
    : basis_(from_columns(basis, ambient_dim)) {
    const std::size_t d = basis.size();
    // Pivot columns of the transpose pick d independent coordinates.
    RrefResult rt = rref(basis_.transpose());
    if (rt.rank != d) throw std::invalid_argument("basis vectors are linearly dependent");
    pivot_rows_ = rt.pivots;

    RatMatrix aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = basis_(pivot_rows_[i], j);
        aug(i, d + i) = 1;
    }
    RrefResult inv = rref(aug);
    left_inverse_ = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) left_inverse_(i, j) = inv.reduced(i, d + j);
    }
}

std::optional<RatVector> CoordinateMap::coordinates(const RatVector& v) const {
    if (v.size() != basis_.rows()) throw std::invalid_argument("vector has wrong ambient dimension");
    RatVector restricted(pivot_rows_.size());
    for (std::size_t i = 0; i < pivot_rows_.size(); ++i) restricted[i] = v[pivot_rows_[i]];
    RatVector x = left_inverse_ * restricted;
    if (basis_ * x != v) return std::nullopt;
    return x;
}

}  // namespace gstruct
