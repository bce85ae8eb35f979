// logsym: local analysis of log-symplectic normal forms.
//
//   logsym analyze MODEL [--format json|text] [--deform-max-degree K]
//   logsym pfaffian MODEL [--format ...]
//   logsym residues MODEL [--g2-max-degree K]
//   logsym deform-search MODEL [--max-degree K]
//   logsym verify-complexes [--dim N] [--truncation T] [--j J]
//
// Reports go to stdout, diagnostics to stderr.  Exit codes: 0 ok, 1 input
// error, 2 degenerate structure (Pf = 0), 3 verification failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "logsym/errors.hpp"
#include "logsym/report.hpp"

namespace {

using logsym::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

struct Options {
    std::string model_path;
    std::string format = "json";
    int deform_max_degree = logsym::kDefaultDeformMaxDegree;
    int g2_max_degree = 4;
    int search_max_degree = logsym::kDefaultDeformMaxDegree;
    logsym::ComplexCheckOptions complexes;
};

void emit(const nlohmann::ordered_json& report, const std::string& format) {
    if (format == "text")
        std::cout << logsym::render_text(report);
    else
        std::cout << report.dump(2) << '\n';
}

logsym::Model load(const Options& opt) {
    std::vector<std::string> diagnostics;
    auto model = logsym::parse_model_file(opt.model_path, &diagnostics);
    for (const auto& d : diagnostics) std::cerr << "logsym: warning: " << opt.model_path << ": " << d << '\n';
    return model;
}

void require_nonnegative(int value, const char* flag) {
    if (value < 0) throw logsym::InputError(flag, "must be nonnegative");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residue, deformation and complex checks for log-symplectic normal forms", "logsym"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "logsym 0.1.0");

    Options opt;
    const auto add_model = [&opt](CLI::App* cmd) {
        cmd->add_option("model", opt.model_path, "model file (JSON)")->required();
        cmd->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "pair and triple classification, verdict, deformation candidates");
    add_model(analyze);
    analyze->add_option("--deform-max-degree", opt.deform_max_degree, "monomial degree bound, 0 skips the search")
        ->capture_default_str();

    auto* pfaffian = app.add_subcommand("pfaffian", "Pfaffian of the coefficient matrix");
    add_model(pfaffian);

    auto* residues = app.add_subcommand("residues", "biresidues, triple ratios and zeroth-differential kernels");
    add_model(residues);
    residues->add_option("--g2-max-degree", opt.g2_max_degree, "degree bound for the kernel search")
        ->capture_default_str();

    auto* deform = app.add_subcommand("deform-search", "closed and exact monomial deformation candidates");
    add_model(deform);
    deform->add_option("--max-degree", opt.search_max_degree, "monomial degree bound")->capture_default_str();

    auto* complexes = app.add_subcommand("verify-complexes", "cone, normal log and principal parts exactness");
    complexes->add_option("--dim", opt.complexes.dim, "ambient dimension, 2..6")->capture_default_str();
    complexes->add_option("--truncation", opt.complexes.truncation, "exponent bound, 0..3")->capture_default_str();
    complexes->add_option("--j", opt.complexes.j, "twist, j >= 1")->capture_default_str();
    complexes->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return code(ExitCode::InputError);
    }

    try {
        if (analyze->parsed()) {
            require_nonnegative(opt.deform_max_degree, "--deform-max-degree");
            const auto model = load(opt);
            std::optional<int> bound;
            if (opt.deform_max_degree > 0) bound = opt.deform_max_degree;
            emit(logsym::to_json(logsym::analyze(model, bound)), opt.format);
        } else if (pfaffian->parsed()) {
            emit(logsym::pfaffian_report(load(opt)), opt.format);
        } else if (residues->parsed()) {
            require_nonnegative(opt.g2_max_degree, "--g2-max-degree");
            emit(logsym::residues_report(load(opt), opt.g2_max_degree), opt.format);
        } else if (deform->parsed()) {
            require_nonnegative(opt.search_max_degree, "--max-degree");
            emit(logsym::deform_search_report(load(opt), opt.search_max_degree), opt.format);
        } else if (complexes->parsed()) {
            logsym::ComplexCheckSummary summary;
            try {
                summary = logsym::verify_complexes(opt.complexes);
            } catch (const logsym::DomainError& e) {
                throw logsym::InputError("verify-complexes", e.what());
            }
            emit(logsym::to_json(summary), opt.format);
            if (!summary.passed) {
                std::cerr << "logsym: complex verification failed\n";
                return code(ExitCode::VerificationFailed);
            }
        }
    } catch (const logsym::InputError& e) {
        std::cerr << "logsym: error: " << e.what() << '\n';
        return code(ExitCode::InputError);
    } catch (const logsym::DegenerateStructureError& e) {
        std::cerr << "logsym: " << e.what() << '\n';
        return code(ExitCode::Degenerate);
    } catch (const logsym::InternalConsistencyError& e) {
        std::cerr << "logsym: verification failure: " << e.what() << '\n';
        return code(ExitCode::VerificationFailed);
    } catch (const logsym::Error& e) {
        std::cerr << "logsym: error: " << e.what() << '\n';
        return code(ExitCode::InputError);
    }
    return code(ExitCode::Ok);
}
