#pragma once

// Model files, analysis reports and their JSON / text renderings.
//
// Model file (JSON):
//   { "dim": 4, "log_branches": 4,
//     "matrix": [[1, 2, 4], [3, 5], [6]] }
// `matrix` is either the strict upper triangle (rows of length N-1, ..., 1)
// or a full N x N array.  The strict upper triangle is authoritative: B is its
// skew completion, and a diagonal or lower entry that disagrees is reported as
// a diagnostic, not an error.  Entries are integers or strings "p/q".
//
// Reports serialize rationals as strings in lowest terms and print indices
// 1-based.  The text rendering carries exactly the JSON data.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "logsym/complex_verifier.hpp"
#include "logsym/deformation.hpp"
#include "logsym/model.hpp"
#include "logsym/residue_analyzer.hpp"

namespace logsym {

enum class ExitCode : int {
    Ok = 0,
    InputError = 1,
    Degenerate = 2,
    VerificationFailed = 3,
};

inline constexpr std::string_view kAnalysisSchema = "logsym.analysis/1";
inline constexpr std::string_view kPfaffianSchema = "logsym.pfaffian/1";
inline constexpr std::string_view kResiduesSchema = "logsym.residues/1";
inline constexpr std::string_view kDeformSchema = "logsym.deform-search/1";
inline constexpr std::string_view kComplexesSchema = "logsym.complexes/1";

inline constexpr int kDefaultDeformMaxDegree = 6;

/// Throws InputError (malformed) or DegenerateStructureError (Pf = 0).
/// Non-fatal findings are appended to `diagnostics` when given.
Model parse_model_json(std::string_view text, std::vector<std::string>* diagnostics = nullptr);
Model parse_model_file(const std::filesystem::path& path, std::vector<std::string>* diagnostics = nullptr);

struct CandidateReport {
    DeformationCandidate candidate;
    std::optional<ColumnRelation> relation;
};

struct AnalysisReport {
    Model model;
    std::vector<PairReport> pairs;
    Verdict verdict;
    std::optional<int> deform_max_degree;
    std::vector<CandidateReport> candidates;
    std::vector<std::string> convention_notes;
};

AnalysisReport analyze(const Model& model, std::optional<int> deform_max_degree);
std::vector<CandidateReport> deformation_reports(const Model& model, int max_degree);

std::string verdict_summary(const Verdict& v);

nlohmann::ordered_json to_json(const Model& model);
nlohmann::ordered_json to_json(const AnalysisReport& report);
nlohmann::ordered_json to_json(const PairReport& pair);
nlohmann::ordered_json to_json(const CandidateReport& cand);
nlohmann::ordered_json to_json(const G2Diagnostic& diag);
nlohmann::ordered_json to_json(const HomologyReport& homology);
nlohmann::ordered_json to_json(const ConeCheckReport& cone);

nlohmann::ordered_json pfaffian_report(const Model& model);
/// Biresidues of all branch pairs, pair/triple classification and, for every
/// residual pair, the zeroth-differential kernel up to g2_max_degree.
nlohmann::ordered_json residues_report(const Model& model, int g2_max_degree);
nlohmann::ordered_json deform_search_report(const Model& model, int max_degree);

struct ComplexCheckOptions {
    std::size_t dim = 4;
    int truncation = 2;
    int j = 1;
};

struct ComplexCheckSummary {
    ComplexCheckOptions options;
    ConeCheckReport cone;
    ConeCheckReport cone_foliated;
    HomologyReport normal_log;             ///< all coordinates log, a_1 = -1
    HomologyReport normal_log_one_branch;  ///< only z_1 log, a_1 = -1
    HomologyReport normal_log_control;     ///< a_1 = 0
    HomologyReport principal_parts;
    bool control_has_constants = false;
    bool passed = false;
};

/// Validates dim in 2..6, truncation in 0..3, j >= 1 (DomainError otherwise).
ComplexCheckSummary verify_complexes(const ComplexCheckOptions& options);
nlohmann::ordered_json to_json(const ComplexCheckSummary& summary);

/// Indented block rendering of a JSON report (YAML-compatible).
std::string render_text(const nlohmann::ordered_json& report);

std::string rational_json(const Rational& q);

}  // namespace logsym
