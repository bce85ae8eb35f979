#pragma once

// Monomial first-order deformations z^a d_i ^ d_j of the Poisson structure.
// Under contraction with Phi such a bivector corresponds to the log-plus
// 2-form z^(a - e_i - e_j) rho_i ^ rho_j; the deformation is a cocycle iff
// that form is closed and trivial iff it is exact in the log-plus complex.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logsym/logform.hpp"
#include "logsym/model.hpp"

namespace logsym {

enum class ClosednessMethod {
    Span,    ///< a - e_i - e_j in span{row_i, row_j}, cross-checked against d
    Direct,  ///< d(candidate) = 0 computed term by term
};

struct ClosednessResult {
    bool closed = false;
    ClosednessMethod method = ClosednessMethod::Direct;
    /// Present when closed via the span criterion.
    std::optional<SpanCertificate> certificate;
};

struct DeformationCandidate {
    std::size_t i = 0;
    std::size_t j = 0;
    ExponentVector a;
    bool closed = false;
    /// nullopt when exactness was not evaluated (not closed, or m < N).
    std::optional<bool> exact;
    std::optional<SpanCertificate> certificate;
    ClosednessMethod method = ClosednessMethod::Direct;
};

/// rho_i ^ rho_j, the constant part shared by every candidate of the pair.
LogForm pair_wedge(const Model& model, std::size_t i, std::size_t j);

/// z^(a - e_i - e_j) rho_i ^ rho_j.  Requires i < j < N and a >= 0.
LogForm candidate_form(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a);

/// For m = N the span criterion decides and the direct computation of d must
/// agree (InternalConsistencyError otherwise).  For m < N only d is used.
ClosednessResult is_closed(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a);
/// Same, reusing wedge = pair_wedge(model, i, j) across a sweep over a.
ClosednessResult is_closed(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a,
                           const LogForm& wedge);

/// Log-plus 1-forms of multidegree c: z^c rho_k for the k with c + e_k >= 0
/// (contractions of the polynomial vector fields z^(c+e_k) d_k).
std::vector<std::size_t> admissible_primitive_directions(const ExponentVector& c);

/// A log-plus primitive beta with d beta = candidate_form(model, i, j, a), if
/// one exists.  Only defined for m = N (DomainError otherwise), where d and
/// the log-plus complex are both graded by multidegree.
std::optional<LogForm> find_primitive(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a);

/// find_primitive(...).has_value().
bool is_exact(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a);

/// Every closed candidate with i < j < N, a >= 0, a_i = a_j = 0 and
/// 1 <= |a| <= max_degree, ordered by (i, j, |a|, a).
std::vector<DeformationCandidate> search(const Model& model, int max_degree);

/// All a >= 0 with a_i = a_j = 0 and min_degree <= |a| <= max_degree, graded
/// then lexicographic.
std::vector<ExponentVector> off_pair_exponents(std::size_t dim, std::size_t i, std::size_t j, int min_degree,
                                               int max_degree);

/// The closedness certificate as an identity between columns k of B and unit
/// vectors e:  (-lambda) k_i + (-mu) k_j + (e_i + e_j) - a = 0.
struct ColumnRelation {
    Rational coeff_i;  ///< multiplies k_i
    Rational coeff_j;  ///< multiplies k_j
    std::vector<int> unit_coeffs;  ///< coefficient of each e_l
    bool integral = false;
    bool verified = false;
    std::string text;
};

/// Requires a span certificate.  Throws DomainError otherwise.
ColumnRelation column_relation(const Model& model, const DeformationCandidate& cand);

std::string to_string(ClosednessMethod method);

}  // namespace logsym
