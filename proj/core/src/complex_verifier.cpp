#include "logsym/complex_verifier.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "logsym/errors.hpp"
#include "logsym/skew_matrix.hpp"

namespace logsym {

namespace {

void check_spec(const TruncationSpec& spec) {
    if (spec.dim < 1 || spec.dim > kMaxDimension) throw DomainError("truncation dimension out of range");
    if (spec.max_exponent < 0) throw DomainError("truncation bound must be nonnegative");
}

std::vector<IndexSet> subsets_of_size(std::size_t dim, std::size_t size) {
    std::vector<IndexSet> out;
    for (std::uint32_t mask = 0; mask < (1U << dim); ++mask) {
        const auto s = IndexSet::from_mask(mask);
        if (s.size() == size) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LogForm basis_form(const ExponentVector& a, IndexSet idx) { return LogForm::monomial(Rational(1), a, idx); }

ConeElement add(const ConeElement& x, const ConeElement& y) {
    return {x.degree, x.alpha + y.alpha, x.beta + y.beta};
}

}  // namespace

ConeElement cone_differential(const ConeElement& e) {
    return {e.degree + 1, exterior_derivative(e.alpha) + e.beta, -exterior_derivative(e.beta)};
}

ConeElement cone_homotopy(const ConeElement& e) {
    return {e.degree - 1, LogForm(e.alpha.dim()), e.alpha};
}

bool MultidegreeHomology::acyclic() const {
    return std::all_of(homology.begin(), homology.end(), [](std::size_t h) { return h == 0; });
}

bool HomologyReport::acyclic() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.acyclic(); });
}

std::size_t HomologyReport::total_homology() const {
    std::size_t total = 0;
    for (const auto& e : entries)
        for (std::size_t h : e.homology) total += h;
    return total;
}

std::vector<ExponentVector> truncated_multidegrees(std::size_t dim, int t, std::optional<int> first) {
    std::vector<ExponentVector> out;
    auto current = ExponentVector::zero(dim);
    const std::size_t start = (first && dim > 0) ? 1 : 0;
    if (start == 1) current[0] = *first;
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == dim) {
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= t; ++v) {
            current[k] = v;
            fill(k + 1);
        }
        current[k] = 0;
    };
    fill(start);
    return out;
}

HomologyReport homology_by_multidegree(const std::vector<ExponentVector>& multidegrees,
                                       const std::function<bool(const ExponentVector&, IndexSet)>& allowed,
                                       const std::function<LogForm(const LogForm&)>& differential) {
    HomologyReport report;
    for (const auto& a : multidegrees) {
        const std::size_t n = a.size();
        std::vector<std::vector<IndexSet>> basis(n + 1);
        for (std::size_t p = 0; p <= n; ++p)
            for (IndexSet s : subsets_of_size(n, p))
                if (allowed(a, s)) basis[p].push_back(s);

        // rank of d_p : C^p -> C^{p+1}
        std::vector<std::size_t> ranks(n + 1, 0);
        for (std::size_t p = 0; p < n; ++p) {
            const auto& src = basis[p];
            const auto& dst = basis[p + 1];
            if (src.empty() || dst.empty()) {
                // d_p must vanish identically when the target is empty.
                for (IndexSet s : src)
                    if (!differential(basis_form(a, s)).empty())
                        throw InternalConsistencyError("differential leaves the truncated subcomplex");
                continue;
            }
            std::map<IndexSet, std::size_t> row_of;
            for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
            RationalMatrix m(dst.size(), src.size());
            for (std::size_t c = 0; c < src.size(); ++c) {
                const LogForm image = differential(basis_form(a, src[c]));
                for (const auto& t : image.terms()) {
                    auto it = row_of.find(t.idx);
                    if (t.exp != a || it == row_of.end())
                        throw InternalConsistencyError("differential leaves the truncated subcomplex");
                    m(it->second, c) = t.coeff;
                }
            }
            ranks[p] = rank(std::move(m));
        }

        MultidegreeHomology entry{a, {}, {}};
        for (std::size_t p = 0; p <= n; ++p) {
            const std::size_t dim_p = basis[p].size();
            const std::size_t incoming = p > 0 ? ranks[p - 1] : 0;
            entry.chain_dims.push_back(dim_p);
            entry.homology.push_back(dim_p - ranks[p] - incoming);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

ConeCheckReport verify_cone_identity(std::size_t dim, int max_exponent, IndexSet foliation) {
    check_spec({dim, max_exponent, std::nullopt});
    if (foliation.bound() > dim) throw DomainError("foliation index outside the dimension");

    ConeCheckReport report;
    report.dim = dim;
    report.max_exponent = max_exponent;
    report.foliation = foliation;

    auto project = [&](ConeElement e) {
        e.alpha = quotient_by(e.alpha, foliation);
        e.beta = quotient_by(e.beta, foliation);
        return e;
    };
    auto D = [&](const ConeElement& e) { return project(cone_differential(e)); };
    auto h = [&](const ConeElement& e) { return cone_homotopy(e); };
    auto D_unsigned = [&](const ConeElement& e) {
        return project(ConeElement{e.degree + 1, exterior_derivative(e.alpha) + e.beta, exterior_derivative(e.beta)});
    };
    auto h_unsigned = [&](const ConeElement& e) { return ConeElement{e.degree - 1, e.beta, LogForm(dim)}; };

    const LogForm zero(dim);
    for (const auto& a : truncated_multidegrees(dim, max_exponent, std::nullopt)) {
        for (std::uint32_t mask = 0; mask < (1U << dim); ++mask) {
            const auto s = IndexSet::from_mask(mask);
            if (s.intersects(foliation)) continue;
            bool honest = true;  // polynomial forms: dz_k = z_k eta_k
            for (std::size_t k : s.indices()) honest = honest && a[k] >= 1;
            if (!honest) continue;

            const LogForm f = basis_form(a, s);
            const int p = static_cast<int>(s.size());
            // f as the alpha slot (cone degree p + 1) and as the beta slot (degree p).
            for (const ConeElement& x : {ConeElement{p + 1, f, zero}, ConeElement{p, zero, f}}) {
                ++report.basis_elements;
                const ConeElement dd = D(D(x));
                if (!dd.alpha.empty() || !dd.beta.empty()) ++report.d_squared_failures;
                if (add(h(D(x)), D(h(x))) != x) ++report.homotopy_failures;
                const ConeElement hh = h(h(x));
                if (!hh.alpha.empty() || !hh.beta.empty()) ++report.h_squared_failures;

                const ConeElement ud = D_unsigned(D_unsigned(x));
                if (!ud.alpha.empty() || !ud.beta.empty()) ++report.unsigned_d_squared_failures;
                const ConeElement uh = add(h_unsigned(D_unsigned(x)), D_unsigned(h_unsigned(x)));
                if (uh.alpha != x.alpha || uh.beta != x.beta) ++report.unsigned_homotopy_failures;
            }
        }
    }
    return report;
}

LogForm twisted_derivative(const LogForm& form, int j) {
    if (form.dim() == 0) return form;
    return exterior_derivative(form) + Rational(j) * wedge(LogForm::eta(form.dim(), 0), form);
}

HomologyReport normal_log_homology(const TruncationSpec& spec, std::size_t log_branches) {
    check_spec(spec);
    if (spec.dim < 2) throw DomainError("normal log complex needs dimension >= 2");
    if (log_branches < 1 || log_branches > spec.dim) throw DomainError("branch count must lie in 1..dim");
    const int first = spec.first_exponent.value_or(-1);
    auto allowed = [log_branches](const ExponentVector& a, IndexSet s) {
        for (std::size_t k : s.indices())
            if (k >= log_branches && a[k] < 1) return false;
        return true;
    };
    return homology_by_multidegree(truncated_multidegrees(spec.dim, spec.max_exponent, first), allowed,
                                   [](const LogForm& f) { return exterior_derivative(f); });
}

HomologyReport principal_parts_exactness(const TruncationSpec& spec, int j) {
    check_spec(spec);
    if (j <= 0) throw DomainError("principal parts complex needs j > 0, got " + std::to_string(j));
    return homology_by_multidegree(truncated_multidegrees(spec.dim, spec.max_exponent, spec.first_exponent),
                                   [](const ExponentVector&, IndexSet) { return true; },
                                   [j](const LogForm& f) { return twisted_derivative(f, j); });
}

}  // namespace logsym
