#pragma once

// Meromorphic differential forms with Laurent-monomial coefficients, written in
// the all-dlog basis eta_k = dz_k / z_k.  A term is c * z^a * eta_I.  In this
// basis d(z^a eta_I) = sum_k a_k z^a eta_k ^ eta_I, so the exterior derivative
// preserves the exponent vector ("multidegree") of every term.
//
// Coordinates are 0-based throughout the library; reports print them 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logsym/rational.hpp"

namespace logsym {

/// Largest ambient dimension supported by IndexSet.
inline constexpr std::size_t kMaxDimension = 32;

class ExponentVector {
public:
    ExponentVector() = default;
    ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}
    explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    static ExponentVector zero(std::size_t dim) { return ExponentVector(std::vector<int>(dim, 0)); }
    static ExponentVector unit(std::size_t dim, std::size_t k);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t k) const { return entries_[k]; }
    int& operator[](std::size_t k) { return entries_[k]; }
    std::span<const int> entries() const noexcept { return entries_; }

    int total() const noexcept;
    bool is_zero() const noexcept;
    bool is_nonnegative() const noexcept;

    ExponentVector& operator+=(const ExponentVector& other);
    ExponentVector& operator-=(const ExponentVector& other);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<int> entries_;
};

std::string to_string(const ExponentVector& e);

/// Strictly increasing set of coordinate indices, stored as a bit mask.
class IndexSet {
public:
    constexpr IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> indices);  // must be strictly increasing

    static constexpr IndexSet from_mask(std::uint32_t mask) {
        IndexSet s;
        s.mask_ = mask;
        return s;
    }
    static IndexSet single(std::size_t k);

    std::uint32_t mask() const noexcept { return mask_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(std::size_t k) const noexcept { return k < kMaxDimension && ((mask_ >> k) & 1U) != 0; }
    bool intersects(IndexSet other) const noexcept { return (mask_ & other.mask_) != 0; }
    /// Largest index + 1, or 0 for the empty set.
    std::size_t bound() const noexcept;

    /// Number of members strictly below / above k.
    std::size_t count_below(std::size_t k) const noexcept;
    std::size_t count_above(std::size_t k) const noexcept;

    IndexSet with(std::size_t k) const;
    IndexSet without(std::size_t k) const;
    std::vector<std::size_t> indices() const;

    friend bool operator==(IndexSet, IndexSet) = default;
    /// Lexicographic on the increasing index sequences.
    friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

private:
    std::uint32_t mask_ = 0;
};

std::string to_string(IndexSet s);

/// Sign of eta_I ^ eta_J relative to eta_{I u J}; 0 when I and J meet.
int shuffle_sign(IndexSet i, IndexSet j) noexcept;

struct LogTerm {
    Rational coeff;
    ExponentVector exp;
    IndexSet idx;
};

/// Finite canonical sum of LogTerms.  Terms are ordered by (degree, idx, exp),
/// carry nonzero coefficients and distinct (exp, idx) keys.
class LogForm {
public:
    explicit LogForm(std::size_t dim = 0) : dim_(dim) {}

    static LogForm monomial(Rational coeff, ExponentVector exp, IndexSet idx);
    static LogForm constant(std::size_t dim, Rational value);
    /// eta_k = dlog z_k.
    static LogForm eta(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const LogTerm> terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Common form degree, or nullopt for the zero form and mixed-degree sums.
    std::optional<std::size_t> degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const ExponentVector& exp, IndexSet idx) const;

    LogForm& operator+=(const LogForm& other);
    LogForm& operator-=(const LogForm& other);
    LogForm& operator*=(const Rational& q);
    friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
    friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
    friend LogForm operator-(LogForm a) { return a *= Rational(-1); }
    friend LogForm operator*(const Rational& q, LogForm a) { return a *= q; }

    /// Multiplies by the monomial z^shift.
    LogForm shifted(const ExponentVector& shift) const;

    friend bool operator==(const LogForm& a, const LogForm& b);

private:
    friend LogForm normalize(std::size_t dim, std::span<const LogTerm> raw);

    std::size_t dim_;
    std::vector<LogTerm> terms_;
};

std::string to_string(const LogForm& form);

/// Merges terms with equal (exp, idx), drops zeros, sorts canonically.
/// Throws DimensionError if some term's exponent vector is not of length dim.
LogForm normalize(std::size_t dim, std::span<const LogTerm> raw);
/// Same, taking the dimension from the first term (the empty list gives dim 0).
LogForm normalize(std::span<const LogTerm> raw);

LogForm wedge(const LogForm& a, const LogForm& b);
LogForm exterior_derivative(const LogForm& form);

/// True iff every term has exp_i >= 0, i.e. at worst a dlog pole along z_i = 0.
bool is_log_along(const LogForm& form, std::size_t i);

/// Poincare residue along z_i = 0.  Each term is rewritten with eta_i in the
/// last wedge slot, form = alpha ^ eta_i + beta, and alpha|_{z_i = 0} is
/// returned: terms with exp_i > 0 vanish.  Throws InvalidResidueError when the
/// form is not log along i.
LogForm residue(const LogForm& form, std::size_t i);

/// residue(residue(phi, j), i) read as a constant.  With the last-slot
/// convention this is the coefficient of eta_i ^ eta_j.
Rational biresidue(const LogForm& phi, std::size_t i, std::size_t j);

std::map<ExponentVector, LogForm> multidegree_split(const LogForm& form);

/// No poles along the non-branch coordinates k >= first_non_branch:
/// exp_k >= 1 where eta_k occurs (dz_k = z_k eta_k) and exp_k >= 0 elsewhere.
bool is_honest(const LogForm& form, std::size_t first_non_branch);

/// Drops every term whose index set meets `killed`; realizes the quotient of
/// the exterior algebra by the ideal generated by the eta_k, k in killed.
LogForm quotient_by(const LogForm& form, IndexSet killed);

}  // namespace logsym
