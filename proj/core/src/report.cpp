#include "logsym/report.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "logsym/errors.hpp"

namespace logsym {

using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- parsing

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::size_t require_count(const nlohmann::json& doc, const char* key) {
    const std::string where = std::string("/") + key;
    if (!doc.contains(key)) throw InputError(where, "missing field");
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) throw InputError(where, "expected an integer");
    const auto value = v.get<long long>();
    if (value < 0) throw InputError(where, "must be nonnegative");
    return static_cast<std::size_t>(value);
}

Rational parse_entry(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()), 10);
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where, e.detail());
        }
    }
    throw InputError(where, "expected an integer or a \"p/q\" string");
}

std::string entry_pointer(std::size_t r, std::size_t c) {
    return "/matrix/" + std::to_string(r) + "/" + std::to_string(c);
}

}  // namespace

Model parse_model_json(std::string_view text, std::vector<std::string>* diagnostics) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
    }
    if (!doc.is_object()) throw InputError("/", "model file must be a JSON object");

    const std::size_t dim = require_count(doc, "dim");
    if (dim < 2 || dim % 2 != 0) throw InputError("/dim", "dimension must be even and at least 2");
    if (dim > kMaxDimension) throw InputError("/dim", "dimension exceeds " + std::to_string(kMaxDimension));
    const std::size_t m = require_count(doc, "log_branches");
    if (m > dim) throw InputError("/log_branches", "exceeds dim");

    if (!doc.contains("matrix")) throw InputError("/matrix", "missing field");
    const auto& rows = doc.at("matrix");
    if (!rows.is_array()) throw InputError("/matrix", "expected an array of rows");

    RationalMatrix square(dim, dim);
    if (rows.size() == dim - 1) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& row = rows[r];
            if (!row.is_array() || row.size() != dim - 1 - r)
                throw InputError("/matrix/" + std::to_string(r),
                                 "upper-triangle row must have " + std::to_string(dim - 1 - r) + " entries");
            for (std::size_t c = 0; c < row.size(); ++c) square(r, r + 1 + c) = parse_entry(row[c], entry_pointer(r, c));
        }
        return Model::create(complete_skew(square), m);
    }
    if (rows.size() != dim)
        throw InputError("/matrix", "expected " + std::to_string(dim) + " rows (full) or " + std::to_string(dim - 1) +
                                        " rows (strict upper triangle)");
    for (std::size_t r = 0; r < dim; ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || row.size() != dim)
            throw InputError("/matrix/" + std::to_string(r), "row must have " + std::to_string(dim) + " entries");
        for (std::size_t c = 0; c < dim; ++c) square(r, c) = parse_entry(row[c], entry_pointer(r, c));
    }
    SkewMatrix b = complete_skew(square);
    if (diagnostics) {
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c <= r; ++c)
                if (square(r, c) != b(r, c))
                    diagnostics->push_back(entry_pointer(r, c) + ": " + to_string(square(r, c)) +
                                           " ignored; the upper triangle gives " + to_string(b(r, c)));
    }
    return Model::create(std::move(b), m);
}

Model parse_model_file(const std::filesystem::path& path, std::vector<std::string>* diagnostics) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string(), "cannot open model file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_model_json(buffer.str(), diagnostics);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.where(), e.detail());
    }
}

// ---------------------------------------------------------------- analysis

std::string rational_json(const Rational& q) { return to_string(q); }

std::string verdict_summary(const Verdict& v) {
    return v.criterion_holds ? "criterion holds: strong unobstructedness guaranteed"
                             : "criterion fails: Theorem inapplicable; witnesses listed";
}

std::vector<CandidateReport> deformation_reports(const Model& model, int max_degree) {
    std::vector<CandidateReport> out;
    for (auto& cand : search(model, max_degree)) {
        CandidateReport r{std::move(cand), std::nullopt};
        if (r.candidate.certificate) r.relation = column_relation(model, r.candidate);
        out.push_back(std::move(r));
    }
    return out;
}

AnalysisReport analyze(const Model& model, std::optional<int> deform_max_degree) {
    AnalysisReport report{model, classify_all_pairs(model), {}, deform_max_degree, {}, {}};
    report.verdict = verdict(report.pairs, model.log_branches());
    if (deform_max_degree) report.candidates = deformation_reports(model, *deform_max_degree);

    auto& notes = report.convention_notes;
    notes.push_back("triple ({i,j},l) is special when (c_jl + c_li)/c_ij is a nonnegative integer; 0 counts");
    std::string flipped;
    for (const auto& p : report.pairs)
        for (const auto& t : p.triples)
            if (t.ratio && t.special != t.special_opposite_sign)
                flipped += (flipped.empty() ? "" : ", ") + std::string("({") + std::to_string(t.i + 1) + "," +
                           std::to_string(t.j + 1) + "}," + std::to_string(t.third + 1) + ")";
    if (!flipped.empty())
        notes.push_back("with the opposite sign, (c_jl + c_li) in N c_ji, these triples classify differently: " +
                        flipped);
    if (model.log_branches() == 2)
        notes.push_back("residual pairs without triple points are reported as no-triple-points, not as non-residual");
    if (deform_max_degree && !model.fully_logarithmic())
        notes.push_back("log_branches < dim: closedness decided by direct exterior derivative; exactness not evaluated");
    return report;
}

// ---------------------------------------------------------------- JSON

namespace {

Json pair_json(std::size_t i, std::size_t j) { return Json::array({i + 1, j + 1}); }

Json exponent_json(const ExponentVector& e) {
    Json out = Json::array();
    for (int v : e.entries()) out.push_back(v);
    return out;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const Model& model) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < model.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < model.dim(); ++j) row.push_back(rational_json(model.b(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"dim", model.dim()}, {"log_branches", model.log_branches()}, {"matrix", std::move(rows)}};
}

Json to_json(const PairReport& p) {
    Json triples = Json::array();
    for (const auto& t : p.triples)
        triples.push_back(Json{{"pair", pair_json(t.i, t.j)},
                               {"third", t.third + 1},
                               {"ratio", t.ratio ? Json(rational_json(*t.ratio)) : Json(nullptr)},
                               {"special", t.special},
                               {"special_opposite_sign", t.special_opposite_sign}});
    return Json{{"pair", pair_json(p.i, p.j)},
                {"biresidue", rational_json(p.c)},
                {"residual", p.residual},
                {"meets_triple_locus", p.meets_triple_locus},
                {"special", optional_bool(p.special)},
                {"triples", std::move(triples)}};
}

Json to_json(const CandidateReport& r) {
    const auto& c = r.candidate;
    Json out{{"pair", pair_json(c.i, c.j)},
             {"exponent", exponent_json(c.a)},
             {"closed", c.closed},
             {"exact", optional_bool(c.exact)},
             {"method", to_string(c.method)}};
    out["certificate"] = c.certificate ? Json{{"lambda", rational_json(c.certificate->lambda)},
                                              {"mu", rational_json(c.certificate->mu)}}
                                       : Json(nullptr);
    if (r.relation) {
        Json units = Json::array();
        for (int u : r.relation->unit_coeffs) units.push_back(u);
        out["column_relation"] = Json{{"text", r.relation->text},
                                      {"column_coefficients", Json::array({rational_json(r.relation->coeff_i),
                                                                           rational_json(r.relation->coeff_j)})},
                                      {"unit_coefficients", std::move(units)},
                                      {"integral", r.relation->integral},
                                      {"verified", r.relation->verified}};
    } else {
        out["column_relation"] = nullptr;
    }
    return out;
}

Json to_json(const AnalysisReport& report) {
    Json pairs = Json::array();
    for (const auto& p : report.pairs) pairs.push_back(to_json(p));
    Json witnesses = Json::array();
    for (const auto& w : report.verdict.witnesses)
        witnesses.push_back(Json{{"pair", pair_json(w.i, w.j)}, {"reason", to_string(w.reason)}});

    Json out{{"schema", kAnalysisSchema},
             {"model", to_json(report.model)},
             {"pfaffian", rational_json(report.model.pfaffian())},
             {"pairs", std::move(pairs)},
             {"verdict", Json{{"criterion_holds", report.verdict.criterion_holds},
                              {"summary", verdict_summary(report.verdict)},
                              {"witnesses", std::move(witnesses)}}}};
    if (report.deform_max_degree) {
        Json cands = Json::array();
        for (const auto& c : report.candidates) cands.push_back(to_json(c));
        out["deformations"] = Json{{"max_degree", *report.deform_max_degree}, {"candidates", std::move(cands)}};
    }
    out["convention_notes"] = report.convention_notes;
    return out;
}

Json to_json(const G2Diagnostic& d) {
    auto list = [](const std::vector<ExponentVector>& v) {
        Json out = Json::array();
        for (const auto& e : v) out.push_back(exponent_json(e));
        return out;
    };
    return Json{{"pair", pair_json(d.i, d.j)},
                {"max_degree", d.max_degree},
                {"psi2", to_string(d.psi2)},
                {"kernel", list(d.kernel)},
                {"kernel_dlog_g_eq_psi2", list(d.kernel_minus_sign)},
                {"kernel_dlog_g_eq_minus_psi2", list(d.kernel_plus_sign)},
                {"psi2_sign_agrees", d.minus_sign_agrees},
                {"minus_psi2_sign_agrees", d.plus_sign_agrees}};
}

Json to_json(const HomologyReport& h) {
    Json entries = Json::array();
    for (const auto& e : h.entries) {
        Json dims = Json::array(), hom = Json::array();
        for (auto v : e.chain_dims) dims.push_back(v);
        for (auto v : e.homology) hom.push_back(v);
        entries.push_back(Json{{"multidegree", exponent_json(e.multidegree)},
                               {"chain_dims", std::move(dims)},
                               {"homology", std::move(hom)}});
    }
    return Json{{"acyclic", h.acyclic()}, {"total_homology", h.total_homology()}, {"multidegrees", std::move(entries)}};
}

Json to_json(const ConeCheckReport& c) {
    Json fol = Json::array();
    for (auto k : c.foliation.indices()) fol.push_back(k + 1);
    return Json{{"dim", c.dim},
                {"truncation", c.max_exponent},
                {"foliation", std::move(fol)},
                {"basis_elements", c.basis_elements},
                {"d_squared_failures", c.d_squared_failures},
                {"homotopy_failures", c.homotopy_failures},
                {"h_squared_failures", c.h_squared_failures},
                {"unsigned_block_d_squared_failures", c.unsigned_d_squared_failures},
                {"unsigned_block_homotopy_failures", c.unsigned_homotopy_failures},
                {"passed", c.passed()}};
}

Json pfaffian_report(const Model& model) {
    return Json{{"schema", kPfaffianSchema}, {"model", to_json(model)}, {"pfaffian", rational_json(model.pfaffian())}};
}

Json residues_report(const Model& model, int g2_max_degree) {
    Json biresidues = Json::array();
    Json pairs = Json::array();
    Json g2 = Json::array();
    for (const auto& p : classify_all_pairs(model)) {
        biresidues.push_back(Json{{"pair", pair_json(p.i, p.j)}, {"value", rational_json(p.c)}});
        pairs.push_back(to_json(p));
        if (p.residual) g2.push_back(to_json(g2_kernel_diagnostic(model, p.i, p.j, g2_max_degree)));
    }
    return Json{{"schema", kResiduesSchema},
                {"model", to_json(model)},
                {"biresidues", std::move(biresidues)},
                {"pairs", std::move(pairs)},
                {"zeroth_differential_kernels", std::move(g2)}};
}

Json deform_search_report(const Model& model, int max_degree) {
    Json cands = Json::array();
    for (const auto& c : deformation_reports(model, max_degree)) cands.push_back(to_json(c));
    return Json{{"schema", kDeformSchema},
                {"model", to_json(model)},
                {"max_degree", max_degree},
                {"exactness_evaluated", model.fully_logarithmic()},
                {"candidates", std::move(cands)}};
}

// ---------------------------------------------------------------- complexes

ComplexCheckSummary verify_complexes(const ComplexCheckOptions& o) {
    if (o.dim < 2 || o.dim > 6) throw DomainError("--dim must lie in 2..6");
    if (o.truncation < 0 || o.truncation > 3) throw DomainError("--truncation must lie in 0..3");
    if (o.j <= 0) throw DomainError("--j must be positive");

    ComplexCheckSummary s;
    s.options = o;
    s.cone = verify_cone_identity(o.dim, o.truncation);
    s.cone_foliated = verify_cone_identity(o.dim, o.truncation, IndexSet::single(o.dim - 1));
    s.normal_log = normal_log_homology({o.dim, o.truncation, -1}, o.dim);
    s.normal_log_one_branch = normal_log_homology({o.dim, o.truncation, -1}, 1);
    s.normal_log_control = normal_log_homology({o.dim, o.truncation, 0}, o.dim);
    s.principal_parts = principal_parts_exactness({o.dim, o.truncation, std::nullopt}, o.j);

    const auto& origin = s.normal_log_control.entries.front();  // multidegree 0
    s.control_has_constants = origin.multidegree.is_zero() && origin.homology[0] > 0;
    s.passed = s.cone.passed() && s.cone_foliated.passed() && s.normal_log.acyclic() &&
               s.normal_log_one_branch.acyclic() && s.control_has_constants && s.principal_parts.acyclic();
    return s;
}

Json to_json(const ComplexCheckSummary& s) {
    Json control = to_json(s.normal_log_control);
    control["constants_survive"] = s.control_has_constants;
    return Json{
        {"schema", kComplexesSchema},
        {"dim", s.options.dim},
        {"truncation", s.options.truncation},
        {"j", s.options.j},
        {"cone", to_json(s.cone)},
        {"cone_foliated", to_json(s.cone_foliated)},
        {"normal_log", to_json(s.normal_log)},
        {"normal_log_one_branch", to_json(s.normal_log_one_branch)},
        {"normal_log_control", std::move(control)},
        {"principal_parts", to_json(s.principal_parts)},
        {"passed", s.passed},
        {"notes",
         Json::array({"cone differential D(a,b) = (da + b, -db), homotopy h(a,b) = (0, a); the unsigned block form "
                      "(d id; 0 d) with homotopy (0 id; 0 0) fails D^2 = 0 and hD + Dh = id (counts above)",
                      "normal_log_control fixes a_1 = 0 and is expected to keep the constants in H^0",
                      "principal parts differential: d + j dlog(z_1) ^ on log forms"})}};
}

// ---------------------------------------------------------------- text

namespace {

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

std::string scalar_text(const Json& v) {
    if (v.is_null()) return "null";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (!v.is_string()) return v.dump();
    static const std::regex number(R"(^-?[0-9]+(/[0-9]+)?$)");
    static const std::regex word(R"(^[A-Za-z_][A-Za-z0-9_./-]*$)");
    static const std::regex reserved(R"(^(true|false|null|yes|no|on|off|y|n|~)$)", std::regex::icase);
    const auto s = v.get<std::string>();
    if (std::regex_match(s, number) || (std::regex_match(s, word) && !std::regex_match(s, reserved))) return s;
    return v.dump();
}

std::string flow(const Json& arr) {
    std::string out = "[";
    for (std::size_t k = 0; k < arr.size(); ++k) {
        if (k) out += ", ";
        out += arr[k].is_array() ? flow(arr[k]) : scalar_text(arr[k]);
    }
    return out + "]";
}

bool flat_array(const Json& arr) {
    for (const auto& v : arr)
        if (v.is_object() || (v.is_array() && !flat_array(v))) return false;
    return true;
}

void render(const Json& v, std::size_t indent, std::ostringstream& out);

void render_value_after_key(const Json& v, std::size_t indent, std::ostringstream& out) {
    if (is_scalar(v)) {
        out << ' ' << scalar_text(v) << '\n';
    } else if (v.is_array() && flat_array(v)) {
        out << ' ' << flow(v) << '\n';
    } else if (v.empty()) {
        out << (v.is_object() ? " {}" : " []") << '\n';
    } else {
        out << '\n';
        render(v, indent + 2, out);
    }
}

void render(const Json& v, std::size_t indent, std::ostringstream& out) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            out << pad << key << ':';
            render_value_after_key(value, indent, out);
        }
        return;
    }
    for (const auto& item : v) {
        if (item.is_object() && !item.empty()) {
            bool first = true;
            for (const auto& [key, value] : item.items()) {
                out << (first ? pad + "- " : pad + "  ") << key << ':';
                render_value_after_key(value, indent + 2, out);
                first = false;
            }
        } else if (is_scalar(item) || flat_array(item) || item.empty()) {
            out << pad << "- " << (item.is_array() ? flow(item) : item.is_object() ? "{}" : scalar_text(item)) << '\n';
        } else {
            out << pad << "-\n";
            render(item, indent + 2, out);
        }
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

}  // namespace logsym
