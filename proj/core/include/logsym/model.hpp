#pragma once

#include <cstddef>

#include "logsym/logform.hpp"
#include "logsym/skew_matrix.hpp"

namespace logsym {

/// Phi = sum_{i<j} b_ij e_i ^ e_j with e_k = eta_k for the branch coordinates
/// k < log_branches and e_k = dz_k = z_k eta_k for the remaining ones.
LogForm log_two_form(const SkewMatrix& b, std::size_t log_branches);

/// rho_i = sum_k b_ik e_k, the contraction of Phi with the i-th dual frame vector.
LogForm row_form(const SkewMatrix& b, std::size_t i, std::size_t log_branches);

/// A log-symplectic structure in normal-crossing normal form: dimension
/// N = 2n, the first m coordinates are branches of the polar divisor, and
/// Phi has the constant coefficient matrix B with Pf(B) != 0.
class Model {
public:
    /// Throws DegenerateStructureError when Pf(B) = 0 and DomainError when m > N.
    static Model create(SkewMatrix b, std::size_t log_branches);

    std::size_t dim() const noexcept { return b_.size(); }
    std::size_t half_dim() const noexcept { return b_.size() / 2; }
    std::size_t log_branches() const noexcept { return m_; }
    bool fully_logarithmic() const noexcept { return m_ == b_.size(); }

    const SkewMatrix& matrix() const noexcept { return b_; }
    const Rational& b(std::size_t i, std::size_t j) const { return b_(i, j); }
    const Rational& pfaffian() const noexcept { return pf_; }
    const LogForm& phi() const noexcept { return phi_; }
    LogForm rho(std::size_t i) const { return row_form(b_, i, m_); }

    Model scaled(const Rational& q) const;

private:
    Model(SkewMatrix b, std::size_t m, Rational pf, LogForm phi)
        : b_(std::move(b)), m_(m), pf_(std::move(pf)), phi_(std::move(phi)) {}

    SkewMatrix b_;
    std::size_t m_;
    Rational pf_;
    LogForm phi_;
};

}  // namespace logsym
