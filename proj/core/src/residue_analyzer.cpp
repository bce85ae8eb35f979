#include "logsym/residue_analyzer.hpp"

#include "logsym/deformation.hpp"
#include "logsym/errors.hpp"

namespace logsym {

namespace {

void check_branch(const Model& model, std::size_t k) {
    if (k >= model.log_branches())
        throw DomainError("index " + std::to_string(k + 1) + " is not a log branch (m = " +
                          std::to_string(model.log_branches()) + ")");
}

}  // namespace

std::string to_string(WitnessReason reason) {
    switch (reason) {
        case WitnessReason::NonResidual: return "non-residual";
        case WitnessReason::NoTriplePoints: return "no-triple-points";
        case WitnessReason::Special: return "special";
    }
    return "unknown";
}

std::optional<Rational> triple_ratio(const Model& model, std::size_t i, std::size_t j, std::size_t l) {
    const Rational& cij = model.b(i, j);
    if (sgn(cij) == 0) return std::nullopt;
    return Rational((model.b(j, l) + model.b(l, i)) / cij);
}

TripleReport classify_triple(const Model& model, std::size_t i, std::size_t j, std::size_t l) {
    check_branch(model, i);
    check_branch(model, j);
    check_branch(model, l);
    if (i == j || l == i || l == j) throw DomainError("triple needs three distinct branches");
    TripleReport t{i, j, l, triple_ratio(model, i, j, l), false, false};
    if (t.ratio) {
        t.special = is_natural(*t.ratio);
        t.special_opposite_sign = is_natural(Rational(-*t.ratio));
    }
    return t;
}

PairReport classify_pair(const Model& model, std::size_t i, std::size_t j) {
    if (!(i < j)) throw DomainError("pair needs i < j");
    check_branch(model, i);
    check_branch(model, j);

    PairReport p;
    p.i = i;
    p.j = j;
    p.c = biresidue(model.phi(), i, j);
    if (p.c != model.b(i, j)) throw InternalConsistencyError("biresidue differs from the matrix coefficient");
    p.residual = sgn(p.c) != 0;
    p.meets_triple_locus = model.log_branches() >= 3;
    for (std::size_t l = 0; l < model.log_branches(); ++l)
        if (l != i && l != j) p.triples.push_back(classify_triple(model, i, j, l));
    if (p.residual) {
        bool all_special = !p.triples.empty();
        for (const auto& t : p.triples) all_special = all_special && t.special;
        p.special = all_special;
    }
    return p;
}

std::vector<PairReport> classify_all_pairs(const Model& model) {
    std::vector<PairReport> out;
    for (std::size_t i = 0; i < model.log_branches(); ++i)
        for (std::size_t j = i + 1; j < model.log_branches(); ++j) out.push_back(classify_pair(model, i, j));
    return out;
}

Verdict verdict(const std::vector<PairReport>& pairs, std::size_t log_branches) {
    Verdict v;
    for (const auto& p : pairs) {
        if (!p.residual)
            v.witnesses.push_back({p.i, p.j, WitnessReason::NonResidual});
        else if (log_branches < 3)
            v.witnesses.push_back({p.i, p.j, WitnessReason::NoTriplePoints});
        else if (p.special.value_or(false))
            v.witnesses.push_back({p.i, p.j, WitnessReason::Special});
    }
    v.criterion_holds = v.witnesses.empty();
    return v;
}

Verdict verdict(const Model& model) { return verdict(classify_all_pairs(model), model.log_branches()); }

G2Diagnostic g2_kernel_diagnostic(const Model& model, std::size_t i, std::size_t j, int max_degree) {
    if (!(i < j)) throw DomainError("pair needs i < j");
    check_branch(model, i);
    check_branch(model, j);
    const Rational& c = model.b(i, j);
    if (sgn(c) == 0)
        throw DomainError("pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} is not residual");
    if (max_degree < 0) throw DomainError("max_degree must be nonnegative");

    const std::size_t n = model.dim();
    G2Diagnostic diag;
    diag.i = i;
    diag.j = j;
    diag.max_degree = max_degree;

    // psi_i1 = sum_k b_ik e_k,  psi_j2 = sum_k b_kj e_k.
    const LogForm psi_i1 = model.rho(i);
    const LogForm psi_j2 = Rational(-1) * model.rho(j);
    diag.psi2 = Rational(1 / c) * (psi_i1 + psi_j2) - LogForm::eta(n, i) - LogForm::eta(n, j);

    for (const auto& b : off_pair_exponents(n, i, j, 0, max_degree)) {
        if (is_closed(model, i, j, b).closed) diag.kernel.push_back(b);
        LogForm dlog_g(n);
        for (std::size_t k = 0; k < n; ++k)
            if (b[k] != 0) dlog_g += Rational(b[k]) * LogForm::eta(n, k);
        if (dlog_g == diag.psi2) diag.kernel_minus_sign.push_back(b);
        if (dlog_g == -diag.psi2) diag.kernel_plus_sign.push_back(b);
    }
    diag.minus_sign_agrees = diag.kernel_minus_sign == diag.kernel;
    diag.plus_sign_agrees = diag.kernel_plus_sign == diag.kernel;
    return diag;
}

}  // namespace logsym
