#include "logsym/model.hpp"

#include <string>
#include <vector>

#include "logsym/errors.hpp"

namespace logsym {

namespace {

ExponentVector frame_exponent(std::size_t dim, std::size_t k, std::size_t log_branches) {
    return k < log_branches ? ExponentVector::zero(dim) : ExponentVector::unit(dim, k);
}

}  // namespace

LogForm log_two_form(const SkewMatrix& b, std::size_t log_branches) {
    const std::size_t n = b.size();
    std::vector<LogTerm> raw;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sgn(b(i, j)) != 0)
                raw.push_back({b(i, j), frame_exponent(n, i, log_branches) + frame_exponent(n, j, log_branches),
                               IndexSet::single(i).with(j)});
    return normalize(n, raw);
}

LogForm row_form(const SkewMatrix& b, std::size_t i, std::size_t log_branches) {
    const std::size_t n = b.size();
    if (i >= n) throw DomainError("row index out of range");
    std::vector<LogTerm> raw;
    for (std::size_t k = 0; k < n; ++k)
        if (sgn(b(i, k)) != 0) raw.push_back({b(i, k), frame_exponent(n, k, log_branches), IndexSet::single(k)});
    return normalize(n, raw);
}

Model Model::create(SkewMatrix b, std::size_t log_branches) {
    if (b.size() == 0) throw DomainError("model dimension must be positive");
    if (log_branches > b.size())
        throw DomainError("log_branches = " + std::to_string(log_branches) + " exceeds dimension " +
                          std::to_string(b.size()));
    Rational pf = logsym::pfaffian(b);
    if (sgn(pf) == 0) throw DegenerateStructureError("degenerate log-symplectic structure: Pf(B) = 0");
    LogForm phi = log_two_form(b, log_branches);
    return Model(std::move(b), log_branches, std::move(pf), std::move(phi));
}

Model Model::scaled(const Rational& q) const {
    if (sgn(q) == 0) throw DomainError("scale factor must be nonzero");
    return create(b_.scaled(q), m_);
}

}  // namespace logsym
