// graded-aut: command-line front end.
//
// Exit codes: 0 success, 1 validation failure, 2 parse failure,
// 3 resource-guard refusal, 4 internal error.

#include "gaut/cas_export.hpp"
#include "gaut/errors.hpp"
#include "gaut/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace gaut;

struct Settings {
    std::string input;
    std::string w;
    std::string mode;
    std::string dialect = "singular-like";
    std::string out;
    std::string fromReport;
    unsigned jobs = 1;
    bool timing = false;
    std::size_t maxBasis = 128;
    std::size_t maxSubsetVariables = 20;
    std::uint64_t maxDeterminantTerms = 1'000'000;
    std::uint64_t maxMultiplicativityTerms = 1'000'000;
};

unsigned defaultJobs()
{
    if (const char* env = std::getenv("GRADED_AUT_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring GRADED_AUT_JOBS='" << env << "'\n";
    }
    return 1;
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
}

ProblemInput loadWithOverrides(const Settings& s)
{
    if (s.input.empty())
        throw ParseError("--input is required", 0, 0);
    ProblemInput in = loadInput(s.input);
    if (!s.w.empty()) {
        in.w = parseIntegerList(s.w);
        if (in.w->size() != in.freeRank + in.torsion.size())
            throw ParseError("--w has " + std::to_string(in.w->size()) + " entries, expected " +
                                 std::to_string(in.freeRank + in.torsion.size()),
                             0, 0);
    }
    if (!s.mode.empty()) {
        try {
            in.mode = parseFaceMode(s.mode);
        } catch (const StructuralError& e) {
            throw ParseError(e.what(), 0, 0);
        }
        if (in.mode == FaceMode::UserFaces && in.faces.empty())
            throw ParseError("--mode user-faces needs a 'faces' list in the input file", 0, 0);
    }
    return in;
}

RunOptions runOptions(const Settings& s)
{
    RunOptions o;
    o.jobs = s.jobs;
    o.timing = s.timing;
    o.aut.maxBasisSize = s.maxBasis;
    o.aut.maxDeterminantTerms = s.maxDeterminantTerms;
    o.aut.maxMultiplicativityTerms = s.maxMultiplicativityTerms;
    o.maxSubsetVariables = s.maxSubsetVariables;
    return o;
}

int runCommand(const std::string& command, const Settings& s)
{
    if (command == "export") {
        ResultBundle bundle;
        if (!s.fromReport.empty()) {
            bundle = readReport(s.fromReport);
        } else {
            ProblemInput in = loadWithOverrides(s);
            bundle = runStage(in, in.w ? Stage::AutXhat : Stage::AutGradAlg, runOptions(s));
        }
        emit(exportCasScript(bundle, s.dialect), s.out);
        return 0;
    }

    static const std::map<std::string, Stage> stages{{"check", Stage::Check},
                                                     {"weights-aut", Stage::WeightsAut},
                                                     {"autks", Stage::AutKS},
                                                     {"autgradalg", Stage::AutGradAlg},
                                                     {"autxhat", Stage::AutXhat}};
    const ProblemInput in = loadWithOverrides(s);
    ResultBundle bundle = runStage(in, stages.at(command), runOptions(s));
    emit(reportText(bundle), s.out);
    if (command == "check") {
        const auto& v = bundle.validation;
        bool ok = v.effective && v.pointed && v.latticeBasis && v.homogeneous && v.inMaximalIdealSquared &&
                  v.trivialAtGeneratorWeights;
        for (const auto& d : v.diagnostics)
            std::cerr << d << "\n";
        return ok ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Automorphism groups of graded algebras S/I"};
    app.require_subcommand(1);
    Settings s;
    s.jobs = defaultJobs();

    auto common = [&](CLI::App* sub, bool withW) {
        sub->add_option("--input,-i", s.input, "problem file");
        sub->add_option("--out,-o", s.out, "write output here instead of stdout");
        sub->add_option("--jobs,-j", s.jobs, "worker threads (default from GRADED_AUT_JOBS)")->check(CLI::PositiveNumber);
        sub->add_flag("--timing", s.timing, "record wall-clock timings in the report");
        sub->add_option("--max-n", s.maxBasis, "cap on the action basis size n");
        sub->add_option("--max-det-terms", s.maxDeterminantTerms, "cap on symbolic determinant terms");
        sub->add_option("--max-mult-terms", s.maxMultiplicativityTerms,
                        "cap on terms when expanding the multiplicativity conditions");
        if (withW) {
            sub->add_option("--w", s.w, "weight class, e.g. \"1,9,16,0\"");
            sub->add_option("--mode", s.mode, "face source: all-subsets or user-faces");
            sub->add_option("--max-subset-vars", s.maxSubsetVariables, "largest r enumerated in all-subsets mode");
        }
    };
    common(app.add_subcommand("check", "validate the standing assumptions"), false);
    common(app.add_subcommand("weights-aut", "symmetries of the generator weights"), false);
    common(app.add_subcommand("autks", "presentation of the graded automorphisms of S"), false);
    common(app.add_subcommand("autgradalg", "presentation of the graded automorphisms of S/I"), false);
    common(app.add_subcommand("autxhat", "triples fixing the GIT cone of w"), true);
    auto* exp = app.add_subcommand("export", "CAS script for the combined ideal");
    common(exp, true);
    exp->add_option("--dialect", s.dialect, "singular-like or macaulay2-like");
    exp->add_option("--from-report", s.fromReport, "reuse a JSON report instead of recomputing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return runCommand(command, s);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return 1;
    } catch (const ResourceGuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
