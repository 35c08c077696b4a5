// Command-line front end: exact GUE multi-trace moments, chord-diagram
// topology tables, large-N asymptotics, and Monte Carlo cross-checks.
//
// Exit codes: 0 success, 2 usage error, 3 enumeration cap exceeded,
// 4 undefined result, 5 Monte Carlo check failed.

#include "gue/asymptotics.hpp"
#include "gue/bipoly.hpp"
#include "gue/chords.hpp"
#include "gue/mc.hpp"
#include "gue/moments.hpp"
#include "gue/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitUndefined = 4;
constexpr int kExitMcFail = 5;

json envelope(const std::string& command, json inputs, json result) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"version", gue::kVersion}};
}

void emitJson(const json& doc) { std::cout << doc.dump() << "\n"; }

std::string formatDouble(double value, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << value;
    return os.str();
}

gue::Rational parseRational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return gue::Rational(gue::BigInt(text));
    return gue::Rational(gue::BigInt(text.substr(0, slash)),
                         gue::BigInt(text.substr(slash + 1)));
}

struct MomentOptions {
    std::vector<int> ks;
    bool gammaForm = false;
    std::int64_t evalAt = 0;
    bool hasEval = false;
    std::string method = "recursion";
    std::string format = "text";
    bool header = false;
    bool cacheStats = false;
    int cap = gue::EnumerationLimits{}.maxPoints;
    int threads = gue::defaultThreadCount();
};

int runMoment(const MomentOptions& opt) {
    const gue::IndexMultiset ks(opt.ks);

    gue::BivariatePolynomial moment;
    gue::MomentCache cache;
    if (opt.method == "enumeration")
        moment = gue::momentByEnumeration(ks, {.maxPoints = opt.cap}, opt.threads);
    else
        moment = gue::momentByRecursion(ks, cache);
    if (opt.cacheStats) std::cerr << "cache entries: " << cache.size() << "\n";

    const gue::UnivariatePolynomial nuForm = moment.setGammaOne();
    const std::string text = opt.gammaForm ? moment.toString() : nuForm.toString();

    gue::BigInt value;
    if (opt.hasEval) {
        if (opt.evalAt < 1) throw CLI::ValidationError("--eval", "N must be >= 1");
        value = nuForm.evalAt(opt.evalAt);
    }

    if (opt.format == "json") {
        json inputs{{"ks", opt.ks}, {"gammaForm", opt.gammaForm}, {"method", opt.method}};
        if (opt.hasEval) inputs["eval"] = opt.evalAt;
        json result{{"form", opt.gammaForm ? "gamma" : "nu"},
                    {"polynomial", opt.gammaForm ? moment.toJson() : nuForm.toJson()},
                    {"text", text}};
        if (opt.hasEval) result["value"] = value.str();
        emitJson(envelope("moment", inputs, result));
    } else if (opt.format == "csv") {
        if (opt.gammaForm) {
            if (opt.header) std::cout << "g,v,c\n";
            for (const auto& [key, c] : moment.terms())
                std::cout << key.gammaExp << "," << key.nuExp << "," << c.str() << "\n";
        } else {
            if (opt.header) std::cout << "v,c\n";
            for (const auto& [e, c] : nuForm.coeffs()) std::cout << e << "," << c.str() << "\n";
        }
        if (opt.hasEval) std::cout << "value,," << value.str() << "\n";
    } else {
        std::cout << text << "\n";
        if (opt.hasEval) std::cout << value.str() << "\n";
    }
    return kExitOk;
}

struct EtaOptions {
    std::vector<int> ks;
    std::string format = "text";
    bool header = false;
    int cap = gue::EnumerationLimits{}.maxPoints;
    int threads = gue::defaultThreadCount();
};

int runEta(const EtaOptions& opt) {
    const gue::EtaTable table =
        gue::etaTable(gue::VertexProfile(opt.ks), {.maxPoints = opt.cap}, opt.threads);

    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& [gb, count] : table.counts)
            rows.push_back({{"g", gb.first}, {"b", gb.second}, {"count", count.str()}});
        emitJson(envelope("eta", json{{"ks", opt.ks}},
                          json{{"rows", rows}, {"total", table.total().str()}}));
    } else {
        if (opt.header) std::cout << "g,b,count\n";
        for (const auto& [gb, count] : table.counts)
            std::cout << gb.first << "," << gb.second << "," << count.str() << "\n";
        std::cout << "total,," << table.total().str() << "\n";
    }
    return kExitOk;
}

struct AsymptOptions {
    std::vector<int> evens;
    std::vector<int> odds;
    std::string which;
    std::string format = "text";
};

int runAsympt(const AsymptOptions& opt) {
    std::string value;
    if (opt.which == "leading") {
        if (opt.odds.size() % 2 != 0)
            throw CLI::ValidationError("--odds",
                                       "leading coefficients need an even count of odd traces");
        value = gue::leadingGeneral(opt.evens, opt.odds).str();
    } else if (opt.which == "subleading") {
        if (!opt.odds.empty())
            throw CLI::ValidationError("--odds",
                                       "subleading coefficients are defined for even traces only");
        value = gue::subleadingMulti(opt.evens).str();
    } else { // degree
        std::vector<int> ks;
        for (int i : opt.evens) ks.push_back(2 * i);
        for (int j : opt.odds) ks.push_back(2 * j + 1);
        value = std::to_string(gue::degreeFormula(gue::IndexMultiset(ks)));
    }

    if (opt.format == "json") {
        emitJson(envelope(
            "asympt", json{{"evens", opt.evens}, {"odds", opt.odds}, {"which", opt.which}},
            json{{"value", value}}));
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

struct CorrLimitOptions {
    std::vector<int> fEvens, fOdds, gEvens, gOdds;
    std::string format = "text";
};

int runCorrLimit(const CorrLimitOptions& opt) {
    const auto result = gue::correlationLimit(gue::TraceVariableSpec(opt.fEvens, opt.fOdds),
                                              gue::TraceVariableSpec(opt.gEvens, opt.gOdds));
    const json inputs{{"fEvens", opt.fEvens},
                      {"fOdds", opt.fOdds},
                      {"gEvens", opt.gEvens},
                      {"gOdds", opt.gOdds}};

    if (!result.defined) {
        if (opt.format == "json")
            emitJson(envelope("corr-limit", inputs, json{{"defined", false}}));
        else
            std::cout << "undefined\n";
        return kExitUndefined;
    }

    if (opt.format == "json") {
        emitJson(envelope("corr-limit", inputs,
                          json{{"defined", true},
                               {"case", result.theoremCase},
                               {"exact", result.symbolic},
                               {"approx", result.approx}}));
    } else {
        std::cout << "exact: " << result.symbolic << "\n";
        std::cout << "approx: " << formatDouble(result.approx, 15) << "\n";
        std::cout << "case: " << result.theoremCase << "\n";
    }
    return kExitOk;
}

struct McCheckOptions {
    std::vector<int> ks;
    int dimension = 0;
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
    double sigma = 4.0;
    std::string format = "text";
    int threads = gue::defaultThreadCount();
};

int runMcCheck(const McCheckOptions& opt) {
    const auto report = gue::crossCheck(gue::IndexMultiset(opt.ks), opt.dimension, opt.samples,
                                        opt.seed, opt.sigma, opt.threads);

    if (opt.format == "json") {
        emitJson(envelope("mc-check",
                          json{{"ks", opt.ks},
                               {"n", opt.dimension},
                               {"samples", opt.samples},
                               {"seed", opt.seed},
                               {"sigma", opt.sigma}},
                          json{{"exact", report.exact.str()},
                               {"mean", report.estimate.mean},
                               {"stdError", report.estimate.stdError},
                               {"z", report.zScore},
                               {"pass", report.pass}}));
    } else {
        std::cout << "exact: " << report.exact.str() << "\n";
        std::cout << "mean: " << formatDouble(report.estimate.mean, 10) << "\n";
        std::cout << "stderr: " << formatDouble(report.estimate.stdError, 10) << "\n";
        std::cout << "z: " << formatDouble(report.zScore, 6) << "\n";
        std::cout << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? kExitOk : kExitMcFail;
}

struct SemicircleOptions {
    std::vector<std::string> poly;
    std::string mode = "exact";
    double tolerance = 1e-10;
    std::string format = "text";
};

int runSemicircle(const SemicircleOptions& opt) {
    std::vector<gue::Rational> coeffs;
    coeffs.reserve(opt.poly.size());
    for (const auto& c : opt.poly) coeffs.push_back(parseRational(c));

    const bool wantExact = opt.mode == "exact" || opt.mode == "both";
    const bool wantQuadrature = opt.mode == "quadrature" || opt.mode == "both";

    std::string exact;
    double quadrature = 0.0;
    if (wantExact) {
        const gue::Rational m = gue::semicircleMoment(coeffs);
        exact = denominator(m) == 1 ? numerator(m).str() : m.str();
    }
    if (wantQuadrature) quadrature = gue::numericSemicircleQuadrature(coeffs, opt.tolerance);

    if (opt.format == "json") {
        json result;
        if (wantExact) result["exact"] = exact;
        if (wantQuadrature) {
            result["quadrature"] = quadrature;
            result["tolerance"] = opt.tolerance;
        }
        emitJson(envelope("semicircle", json{{"poly", opt.poly}, {"mode", opt.mode}}, result));
    } else {
        if (wantExact) std::cout << "exact: " << exact << "\n";
        if (wantQuadrature) {
            std::ostringstream os;
            os << std::fixed << std::setprecision(10) << quadrature;
            std::cout << "quadrature: " << os.str() << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact GUE multi-trace moments via ribbon graphs and chord diagrams"};
    app.set_version_flag("--version", gue::kVersion);
    app.require_subcommand(1);
    app.footer("The GUE_THREADS environment variable sets the default worker count for\n"
               "enumeration and sampling; --threads overrides it per command.");

    const auto formatValidator = CLI::IsMember({"text", "json"});

    MomentOptions momentOpt;
    auto* momentCmd = app.add_subcommand("moment", "Moment polynomial of Tr(X^k1)...Tr(X^kn)");
    momentCmd->add_option("--ks", momentOpt.ks, "Trace exponents k1,...,kn")
        ->required()
        ->delimiter(',');
    momentCmd->add_flag("--gamma-form", momentOpt.gammaForm,
                        "Print the genus-graded form instead of the boundary polynomial");
    momentCmd->add_option("--eval", momentOpt.evalAt, "Also evaluate at rank N >= 1");
    momentCmd->add_option("--method", momentOpt.method, "recursion (default) or enumeration")
        ->check(CLI::IsMember({"recursion", "enumeration"}));
    momentCmd->add_option("--format", momentOpt.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    momentCmd->add_flag("--header", momentOpt.header, "Emit a CSV header row");
    momentCmd->add_flag("--cache-stats", momentOpt.cacheStats,
                        "Report the recursion cache size on stderr");
    momentCmd->add_option("--cap", momentOpt.cap, "Enumeration cap on points (default 20)");
    momentCmd->add_option("--threads", momentOpt.threads, "Worker threads for enumeration");

    EtaOptions etaOpt;
    auto* etaCmd = app.add_subcommand("eta", "Chord-diagram counts per (genus, boundary) class");
    etaCmd->add_option("--ks", etaOpt.ks, "Vertex valencies k1,...,kn (positive)")
        ->required()
        ->delimiter(',');
    etaCmd->add_option("--format", etaOpt.format, "text (CSV rows) or json")
        ->check(formatValidator);
    etaCmd->add_flag("--header", etaOpt.header, "Emit a CSV header row");
    etaCmd->add_option("--cap", etaOpt.cap, "Enumeration cap on points (default 20)");
    etaCmd->add_option("--threads", etaOpt.threads, "Worker threads for enumeration");

    AsymptOptions asymptOpt;
    auto* asymptCmd = app.add_subcommand("asympt", "Large-N coefficients and degrees");
    asymptCmd->add_option("--evens", asymptOpt.evens, "i-values for even exponents 2i")
        ->delimiter(',');
    asymptCmd->add_option("--odds", asymptOpt.odds, "j-values for odd exponents 2j+1")
        ->delimiter(',');
    asymptCmd->add_option("--which", asymptOpt.which, "leading, subleading, or degree")
        ->required()
        ->check(CLI::IsMember({"leading", "subleading", "degree"}));
    asymptCmd->add_option("--format", asymptOpt.format, "text or json")->check(formatValidator);

    CorrLimitOptions corrOpt;
    auto* corrCmd = app.add_subcommand("corr-limit", "Large-N correlation of two trace variables");
    corrCmd->add_option("--f-evens", corrOpt.fEvens, "i-values of f")->delimiter(',');
    corrCmd->add_option("--f-odds", corrOpt.fOdds, "j-values of f")->delimiter(',');
    corrCmd->add_option("--g-evens", corrOpt.gEvens, "i-values of g")->delimiter(',');
    corrCmd->add_option("--g-odds", corrOpt.gOdds, "j-values of g")->delimiter(',');
    corrCmd->add_option("--format", corrOpt.format, "text or json")->check(formatValidator);

    McCheckOptions mcOpt;
    auto* mcCmd = app.add_subcommand("mc-check", "Monte Carlo check of the exact expectation");
    mcCmd->add_option("--ks", mcOpt.ks, "Trace exponents")->required()->delimiter(',');
    mcCmd->add_option("--n", mcOpt.dimension, "Matrix rank N")
        ->required()
        ->check(CLI::PositiveNumber);
    mcCmd->add_option("--samples", mcOpt.samples, "Sample count (default 100000)")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    mcCmd->add_option("--seed", mcOpt.seed, "RNG seed");
    mcCmd->add_option("--sigma", mcOpt.sigma, "Pass bound in standard errors (default 4)")
        ->check(CLI::PositiveNumber);
    mcCmd->add_option("--format", mcOpt.format, "text or json")->check(formatValidator);
    mcCmd->add_option("--threads", mcOpt.threads, "Worker threads for sampling");

    SemicircleOptions scOpt;
    auto* scCmd = app.add_subcommand("semicircle", "Semicircle moments of a polynomial");
    scCmd->add_option("--poly", scOpt.poly, "Ascending coefficients c0,c1,... (integers or a/b)")
        ->required()
        ->delimiter(',');
    scCmd->add_option("--mode", scOpt.mode, "exact, quadrature, or both")
        ->check(CLI::IsMember({"exact", "quadrature", "both"}));
    scCmd->add_option("--tol", scOpt.tolerance, "Quadrature tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);
    scCmd->add_option("--format", scOpt.format, "text or json")->check(formatValidator);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    momentOpt.hasEval = momentCmd->count("--eval") > 0;

    try {
        if (app.got_subcommand(momentCmd)) return runMoment(momentOpt);
        if (app.got_subcommand(etaCmd)) return runEta(etaOpt);
        if (app.got_subcommand(asymptCmd)) return runAsympt(asymptOpt);
        if (app.got_subcommand(corrCmd)) return runCorrLimit(corrOpt);
        if (app.got_subcommand(mcCmd)) return runMcCheck(mcOpt);
        if (app.got_subcommand(scCmd)) return runSemicircle(scOpt);
    } catch (const gue::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
