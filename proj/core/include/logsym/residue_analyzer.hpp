#pragma once

// Classification of the codimension-2 strata {z_i = z_j = 0} of the polar
// divisor (pairs of branches) and of the triple loci meeting them.
//
// A pair {i,j} is residual when its biresidue c_ij is nonzero.  For a third
// branch l the triple is special when
//     (c_jl + c_li) / c_ij  is a nonnegative integer (0 included),
// and the pair is special when it has at least one triple and all are special.
// Every pair and every triple of branches is assumed to meet (global normal
// crossings, toric model).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logsym/logform.hpp"
#include "logsym/model.hpp"

namespace logsym {

struct TripleReport {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t third = 0;
    std::optional<Rational> ratio;  ///< undefined when c_ij = 0
    bool special = false;
    /// Classification with the opposite sign, (c_jl + c_li) in N c_ji.
    bool special_opposite_sign = false;
};

struct PairReport {
    std::size_t i = 0;
    std::size_t j = 0;
    Rational c;
    bool residual = false;
    bool meets_triple_locus = false;
    std::optional<bool> special;  ///< not applicable (nullopt) for non-residual pairs
    std::vector<TripleReport> triples;
};

enum class WitnessReason { NonResidual, NoTriplePoints, Special };

struct Witness {
    std::size_t i = 0;
    std::size_t j = 0;
    WitnessReason reason = WitnessReason::NonResidual;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool criterion_holds = true;
    std::vector<Witness> witnesses;
};

std::string to_string(WitnessReason reason);

/// Ratio (c_jl + c_li) / c_ij, nullopt when c_ij = 0.
std::optional<Rational> triple_ratio(const Model& model, std::size_t i, std::size_t j, std::size_t l);

TripleReport classify_triple(const Model& model, std::size_t i, std::size_t j, std::size_t l);

/// Requires i < j < m.  Throws DomainError otherwise.
PairReport classify_pair(const Model& model, std::size_t i, std::size_t j);

std::vector<PairReport> classify_all_pairs(const Model& model);

Verdict verdict(const Model& model);
Verdict verdict(const std::vector<PairReport>& pairs, std::size_t log_branches);

/// Kernel of the zeroth differential on the codimension-2 stratum {i,j},
/// searched among monomials g = z^b with b >= 0 supported off {i,j}.
struct G2Diagnostic {
    std::size_t i = 0;
    std::size_t j = 0;
    int max_degree = 0;
    /// b for which z^(b - e_i - e_j) rho_i ^ rho_j is closed.
    std::vector<ExponentVector> kernel;
    /// psi_2 = -dlog(z_i z_j) + (psi_i1 + psi_j2) / c_ij.
    LogForm psi2;
    /// Solutions of dlog g = psi2, resp. dlog g = -psi2.
    std::vector<ExponentVector> kernel_minus_sign;
    std::vector<ExponentVector> kernel_plus_sign;
    bool minus_sign_agrees = false;
    bool plus_sign_agrees = false;
};

/// Throws DomainError when the pair is not residual.
G2Diagnostic g2_kernel_diagnostic(const Model& model, std::size_t i, std::size_t j, int max_degree);

}  // namespace logsym
