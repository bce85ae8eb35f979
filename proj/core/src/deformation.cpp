#include "logsym/deformation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "logsym/errors.hpp"

namespace logsym {

namespace {

void check_candidate_args(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a) {
    if (!(i < j && j < model.dim()))
        throw DomainError("candidate needs indices i < j <= " + std::to_string(model.dim()) + ", got (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (a.size() != model.dim()) throw DimensionError("exponent vector length differs from model dimension");
    if (!a.is_nonnegative()) throw DomainError("candidate exponent must be nonnegative: " + to_string(a));
}

ExponentVector pole_offset(std::size_t dim, std::size_t i, std::size_t j, const ExponentVector& a) {
    return a - ExponentVector::unit(dim, i) - ExponentVector::unit(dim, j);
}

// gamma_c = sum_k c_k eta_k, so that d(z^c w) = z^c gamma_c ^ w for constant w.
LogForm dlog_monomial(const ExponentVector& c) {
    const std::size_t n = c.size();
    std::vector<LogTerm> raw;
    for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) raw.push_back({Rational(c[k]), ExponentVector::zero(n), IndexSet::single(k)});
    return normalize(n, raw);
}

std::string coefficient_prefix(const Rational& q) {
    const Rational mag = abs(q);
    if (mag == 1) return "";
    if (is_integer(mag)) return to_string(mag);
    return "(" + to_string(mag) + ")";
}

std::string unit_group(const std::vector<std::pair<int, std::size_t>>& parts) {
    std::string body;
    for (const auto& [mult, l] : parts) {
        if (!body.empty()) body += "+";
        if (mult != 1) body += std::to_string(mult);
        body += "e_" + std::to_string(l + 1);
    }
    return parts.size() > 1 ? "(" + body + ")" : body;
}

}  // namespace

std::string to_string(ClosednessMethod method) { return method == ClosednessMethod::Span ? "span" : "direct"; }

LogForm pair_wedge(const Model& model, std::size_t i, std::size_t j) {
    LogForm rr = wedge(model.rho(i), model.rho(j));
    if (rr.empty()) throw InternalConsistencyError("rho_i ^ rho_j vanishes for a nondegenerate matrix");
    return rr;
}

LogForm candidate_form(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a) {
    check_candidate_args(model, i, j, a);
    return pair_wedge(model, i, j).shifted(pole_offset(model.dim(), i, j, a));
}

ClosednessResult is_closed(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a) {
    check_candidate_args(model, i, j, a);
    return is_closed(model, i, j, a, pair_wedge(model, i, j));
}

ClosednessResult is_closed(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a,
                           const LogForm& wedge) {
    check_candidate_args(model, i, j, a);
    const bool direct = exterior_derivative(wedge.shifted(pole_offset(model.dim(), i, j, a))).empty();
    if (!model.fully_logarithmic()) return {direct, ClosednessMethod::Direct, std::nullopt};

    const ExponentVector c = pole_offset(model.dim(), i, j, a);
    RationalVector target(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) target[k] = c[k];
    auto cert = span_solve(target, model.matrix().row(i), model.matrix().row(j));
    if (cert.has_value() != direct)
        throw InternalConsistencyError("span criterion and direct exterior derivative disagree for (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ", a = " + to_string(a) +
                                       ")");
    return {direct, ClosednessMethod::Span, std::move(cert)};
}

std::vector<std::size_t> admissible_primitive_directions(const ExponentVector& c) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        bool ok = c[k] >= -1;
        for (std::size_t l = 0; ok && l < c.size(); ++l)
            if (l != k && c[l] < 0) ok = false;
        if (ok) out.push_back(k);
    }
    return out;
}

std::optional<LogForm> find_primitive(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a) {
    if (!model.fully_logarithmic())
        throw DomainError("exactness is only decided when every coordinate is a log branch (m = N)");
    check_candidate_args(model, i, j, a);
    const std::size_t n = model.dim();
    const ExponentVector c = pole_offset(n, i, j, a);
    const LogForm theta = wedge(model.rho(i), model.rho(j));
    const LogForm gamma = dlog_monomial(c);
    const auto dirs = admissible_primitive_directions(c);

    // Unknowns s_k (k in dirs); equations indexed by the 2-subsets {p < q}.
    std::vector<IndexSet> pairs;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) pairs.push_back(IndexSet::single(p).with(q));
    const auto zero = ExponentVector::zero(n);

    RationalMatrix system(pairs.size(), dirs.size());
    for (std::size_t col = 0; col < dirs.size(); ++col) {
        const LogForm image = wedge(gamma, model.rho(dirs[col]));
        for (std::size_t row = 0; row < pairs.size(); ++row) system(row, col) = image.coefficient(zero, pairs[row]);
    }
    RationalVector rhs(pairs.size());
    for (std::size_t row = 0; row < pairs.size(); ++row) rhs[row] = theta.coefficient(zero, pairs[row]);

    const auto s = solve(std::move(system), std::move(rhs));
    if (!s) return std::nullopt;

    LogForm beta(n);
    for (std::size_t col = 0; col < dirs.size(); ++col) beta += (*s)[col] * model.rho(dirs[col]);
    beta = beta.shifted(c);
    if (exterior_derivative(beta) != theta.shifted(c))
        throw InternalConsistencyError("primitive does not differentiate to the candidate");
    return beta;
}

bool is_exact(const Model& model, std::size_t i, std::size_t j, const ExponentVector& a) {
    return find_primitive(model, i, j, a).has_value();
}

std::vector<ExponentVector> off_pair_exponents(std::size_t dim, std::size_t i, std::size_t j, int min_degree,
                                               int max_degree) {
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < dim; ++k)
        if (k != i && k != j) free.push_back(k);

    std::vector<ExponentVector> out;
    for (int degree = std::max(min_degree, 0); degree <= max_degree; ++degree) {
        std::vector<ExponentVector> level;
        auto current = ExponentVector::zero(dim);
        std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int left) {
            if (pos == free.size()) {
                if (left == 0) level.push_back(current);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                current[free[pos]] = v;
                fill(pos + 1, left - v);
            }
            current[free[pos]] = 0;
        };
        fill(0, degree);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<DeformationCandidate> search(const Model& model, int max_degree) {
    if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
    std::vector<DeformationCandidate> found;
    const std::size_t n = model.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const LogForm rr = pair_wedge(model, i, j);
            for (const auto& a : off_pair_exponents(n, i, j, 1, max_degree)) {
                auto closed = is_closed(model, i, j, a, rr);
                if (!closed.closed) continue;
                DeformationCandidate cand{i, j, a, true, std::nullopt, std::move(closed.certificate), closed.method};
                if (model.fully_logarithmic()) cand.exact = is_exact(model, i, j, a);
                found.push_back(std::move(cand));
            }
        }
    return found;
}

ColumnRelation column_relation(const Model& model, const DeformationCandidate& cand) {
    if (!cand.closed || !cand.certificate)
        throw DomainError("column relation needs a closed candidate with a span certificate");
    const std::size_t n = model.dim();
    ColumnRelation rel;
    rel.coeff_i = -cand.certificate->lambda;
    rel.coeff_j = -cand.certificate->mu;
    rel.unit_coeffs.assign(n, 0);
    rel.unit_coeffs[cand.i] += 1;
    rel.unit_coeffs[cand.j] += 1;
    for (std::size_t l = 0; l < n; ++l) rel.unit_coeffs[l] -= cand.a[l];
    rel.integral = is_integer(rel.coeff_i) && is_integer(rel.coeff_j);

    const auto ki = model.matrix().column(cand.i);
    const auto kj = model.matrix().column(cand.j);
    rel.verified = true;
    for (std::size_t l = 0; l < n; ++l)
        if (rel.coeff_i * ki[l] + rel.coeff_j * kj[l] + rel.unit_coeffs[l] != 0) rel.verified = false;

    // Render: column terms, then the positive and negative unit-vector groups.
    std::vector<std::pair<bool, std::string>> parts;  // (negative, body)
    auto add_column = [&](const Rational& q, std::size_t k) {
        if (sgn(q) != 0) parts.emplace_back(sgn(q) < 0, coefficient_prefix(q) + "k_" + std::to_string(k + 1));
    };
    add_column(rel.coeff_i, cand.i);
    add_column(rel.coeff_j, cand.j);
    std::vector<std::pair<int, std::size_t>> pos, neg;
    for (std::size_t l = 0; l < n; ++l) {
        if (rel.unit_coeffs[l] > 0) pos.emplace_back(rel.unit_coeffs[l], l);
        if (rel.unit_coeffs[l] < 0) neg.emplace_back(-rel.unit_coeffs[l], l);
    }
    if (!pos.empty()) parts.emplace_back(false, unit_group(pos));
    if (!neg.empty()) parts.emplace_back(true, unit_group(neg));

    std::ostringstream text;
    if (parts.empty()) text << "0";
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (p == 0)
            text << (parts[p].first ? "-" : "");
        else
            text << (parts[p].first ? " - " : " + ");
        text << parts[p].second;
    }
    text << " = 0";
    rel.text = text.str();
    return rel;
}

}  // namespace logsym
