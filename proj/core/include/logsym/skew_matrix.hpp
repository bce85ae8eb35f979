#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "logsym/rational.hpp"

namespace logsym {

/// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Throws DomainError on ragged input.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Even-sized rational matrix with B^T = -B.
class SkewMatrix {
public:
    SkewMatrix() = default;

    /// Validates a full matrix.  Throws DomainError naming the first entry
    /// that breaks skewness; use complete_skew to trust only the upper triangle.
    static SkewMatrix from_full(RationalMatrix m);
    static SkewMatrix zero(std::size_t n);
    /// Block-diagonal [[0,1],[-1,0]] of size n.
    static SkewMatrix standard(std::size_t n);

    std::size_t size() const noexcept { return m_.rows(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const RationalMatrix& matrix() const noexcept { return m_; }
    RationalVector row(std::size_t i) const { return m_.row(i); }
    RationalVector column(std::size_t j) const { return m_.column(j); }

    SkewMatrix scaled(const Rational& q) const;

    friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

private:
    explicit SkewMatrix(RationalMatrix m) : m_(std::move(m)) {}
    friend SkewMatrix complete_skew(const RationalMatrix& square);

    RationalMatrix m_;
};

/// Witness that c = lambda * r1 + mu * r2.
struct SpanCertificate {
    Rational lambda;
    Rational mu;

    friend bool operator==(const SpanCertificate&, const SpanCertificate&) = default;
};

/// Keeps the strict upper triangle, fills the lower one with its negated
/// transpose and zeroes the diagonal.  Throws DomainError for non-square or odd sizes.
SkewMatrix complete_skew(const RationalMatrix& square);

/// Exact skew elimination, O(N^3) rational operations.
Rational pfaffian(const SkewMatrix& b);

/// Throws DegenerateStructureError when Pf(B) = 0.
SkewMatrix invert(const SkewMatrix& b);

std::optional<SpanCertificate> span_solve(std::span<const Rational> c, std::span<const Rational> r1,
                                          std::span<const Rational> r2);

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

}  // namespace logsym
