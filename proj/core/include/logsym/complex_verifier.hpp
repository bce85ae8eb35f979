#pragma once

// Finite-dimensional checks of two exactness statements:
//  * the principal parts complex of a trivialized line bundle is the mapping
//    cone of the identity on the de Rham complex, hence null-homotopic;
//  * the normal log complex (forms omega / z_1 restricted to z_1 = 0, with
//    differential d(omega / z_1) = d omega / z_1 - dlog z_1 ^ omega / z_1) is exact.
// Both differentials preserve multidegree, so homology is computed one
// multidegree at a time by exact rank computations.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "logsym/logform.hpp"

namespace logsym {

/// Element of degree p of the cone: alpha of form degree p - 1, beta of degree p.
struct ConeElement {
    int degree = 0;
    LogForm alpha;
    LogForm beta;

    friend bool operator==(const ConeElement&, const ConeElement&) = default;
};

/// D(alpha, beta) = (d alpha + beta, -d beta).
ConeElement cone_differential(const ConeElement& e);
/// h(alpha, beta) = (0, alpha); lowers the degree by one.
ConeElement cone_homotopy(const ConeElement& e);

struct TruncationSpec {
    std::size_t dim = 2;
    int max_exponent = 1;
    /// Fixes the exponent of z_1 (e.g. -1 for the normal log complex).
    std::optional<int> first_exponent;
};

struct MultidegreeHomology {
    ExponentVector multidegree;
    std::vector<std::size_t> chain_dims;  ///< by form degree 0..N
    std::vector<std::size_t> homology;    ///< by form degree 0..N

    bool acyclic() const;
};

struct HomologyReport {
    std::vector<MultidegreeHomology> entries;

    bool acyclic() const;
    std::size_t total_homology() const;
};

struct ConeCheckReport {
    std::size_t dim = 0;
    int max_exponent = 0;
    IndexSet foliation;
    std::size_t basis_elements = 0;
    std::size_t d_squared_failures = 0;
    std::size_t homotopy_failures = 0;  ///< hD + Dh != id
    std::size_t h_squared_failures = 0;
    /// The same checks for the unsigned block differential (d id; 0 d) with
    /// homotopy (0 id; 0 0), read literally on (alpha, beta) columns.
    std::size_t unsigned_d_squared_failures = 0;
    std::size_t unsigned_homotopy_failures = 0;

    bool passed() const { return d_squared_failures == 0 && homotopy_failures == 0 && h_squared_failures == 0; }
};

/// Exhaustive check of D^2 = 0, hD + Dh = id and h^2 = 0 on every basis element
/// z^a eta_I of the polynomial cone with 0 <= a_k <= max_exponent.  With a
/// nonempty `foliation`, works in the quotient by the ideal of the eta_k, k in it.
ConeCheckReport verify_cone_identity(std::size_t dim, int max_exponent, IndexSet foliation = {});

/// Homology of the normal log complex: span of z^a eta_I with a_1 fixed
/// (default -1), 0 <= a_k <= t otherwise, log along the first `log_branches`
/// coordinates and honest along the rest.  Requires dim >= 2 and log_branches >= 1.
HomologyReport normal_log_homology(const TruncationSpec& spec, std::size_t log_branches);

/// Homology of d + j dlog(z_1) ^ on log forms z^a eta_I (all coordinates log), 0 <= a_k <= t (a_1
/// fixed if the spec says so).  Throws DomainError for j <= 0.
HomologyReport principal_parts_exactness(const TruncationSpec& spec, int j);

/// dlog(z_1) ^ form scaled by j, added to d form.
LogForm twisted_derivative(const LogForm& form, int j);

/// Per-multidegree homology of an arbitrary multidegree-preserving
/// differential on the span of the monomials z^a eta_I with `allowed(a, I)`.
HomologyReport homology_by_multidegree(const std::vector<ExponentVector>& multidegrees,
                                       const std::function<bool(const ExponentVector&, IndexSet)>& allowed,
                                       const std::function<LogForm(const LogForm&)>& differential);

/// All exponent vectors of length dim with entries in [0, t], entry 0 replaced
/// by `first` when given, in lexicographic order.
std::vector<ExponentVector> truncated_multidegrees(std::size_t dim, int t, std::optional<int> first);

}  // namespace logsym
