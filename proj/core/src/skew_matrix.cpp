#include "logsym/skew_matrix.hpp"

#include <string>
#include <utility>

#include "logsym/errors.hpp"

namespace logsym {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("ragged matrix row " + std::to_string(r + 1));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

// ---------------------------------------------------------------- SkewMatrix

SkewMatrix SkewMatrix::from_full(RationalMatrix m) {
    if (!m.is_square()) throw DomainError("matrix is not square");
    if (m.rows() % 2 != 0) throw DomainError("matrix size " + std::to_string(m.rows()) + " is odd");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i))
                throw DomainError("matrix is not skew at (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                  "): expected " + to_string(Rational(-m(i, j))) + ", found " + to_string(m(j, i)));
    return SkewMatrix(std::move(m));
}

SkewMatrix SkewMatrix::zero(std::size_t n) { return complete_skew(RationalMatrix(n, n)); }

SkewMatrix SkewMatrix::standard(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k + 1 < n; k += 2) m(k, k + 1) = 1;
    return complete_skew(m);
}

SkewMatrix SkewMatrix::scaled(const Rational& q) const {
    RationalMatrix m = m_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= q;
    return SkewMatrix(std::move(m));
}

SkewMatrix complete_skew(const RationalMatrix& square) {
    if (!square.is_square()) throw DomainError("matrix is not square");
    if (square.rows() % 2 != 0) throw DomainError("matrix size " + std::to_string(square.rows()) + " is odd");
    RationalMatrix m(square.rows(), square.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            m(i, j) = square(i, j);
            m(j, i) = -square(i, j);
        }
    return SkewMatrix(std::move(m));
}

// ---------------------------------------------------------------- Pfaffian

// Skew elimination: pivot on the 2x2 block at (k, k+1), then Pf(A) =
// a Pf(S) for the Schur complement S, which is again skew.
Rational pfaffian(const SkewMatrix& b) {
    RationalMatrix a = b.matrix();
    const std::size_t n = a.rows();
    Rational pf(1);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t p = k + 1;
        while (p < n && sgn(a(k, p)) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k + 1) {
            // simultaneous row/column swap flips the sign
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k + 1, c), a(p, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k + 1), a(r, p));
            pf = -pf;
        }
        const Rational piv = a(k, k + 1);
        pf *= piv;
        const Rational inv = 1 / piv;
        for (std::size_t i = k + 2; i < n; ++i) {
            const Rational u = a(i, k) * inv, v = a(i, k + 1) * inv;
            if (sgn(u) == 0 && sgn(v) == 0) continue;
            for (std::size_t j = k + 2; j < n; ++j) a(i, j) += u * a(k + 1, j) - v * a(k, j);
        }
    }
    return pf;
}

// ---------------------------------------------------------------- elimination

namespace {

// Row-reduces m in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> reduce(RationalMatrix& m, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return reduce(m, m.cols()).size(); }

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
    if (b.size() != a.rows()) throw DimensionError("right-hand side length mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = std::move(a(r, c));
        aug(r, a.cols()) = std::move(b[r]);
    }
    const auto pivots = reduce(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (sgn(aug(r, a.cols())) != 0) return std::nullopt;
    RationalVector x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
    return x;
}

SkewMatrix invert(const SkewMatrix& b) {
    const std::size_t n = b.size();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = b(i, j);
        aug(i, n + i) = 1;
    }
    if (reduce(aug, n).size() != n) throw DegenerateStructureError("degenerate log-symplectic structure: Pf(B) = 0");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return SkewMatrix::from_full(std::move(inv));
}

std::optional<SpanCertificate> span_solve(std::span<const Rational> c, std::span<const Rational> r1,
                                          std::span<const Rational> r2) {
    if (c.size() != r1.size() || c.size() != r2.size()) throw DimensionError("span_solve: vector lengths differ");
    RationalMatrix a(c.size(), 2);
    for (std::size_t k = 0; k < c.size(); ++k) {
        a(k, 0) = r1[k];
        a(k, 1) = r2[k];
    }
    auto x = solve(std::move(a), RationalVector(c.begin(), c.end()));
    if (!x) return std::nullopt;
    return SpanCertificate{(*x)[0], (*x)[1]};
}

}  // namespace logsym
