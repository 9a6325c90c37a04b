// polystab command line: exact stability-condition computations driven by
// JSON files, with CSV output for scans and plots.

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>

#include "polystab/enclosure.hpp"
#include "polystab/json_io.hpp"

using namespace polystab;

namespace {

// Complex literals like "-1", "i", "1-2i", "3/2+1/4i".
GaussianRational parseComplexLiteral(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.back() != 'i') {
        auto re = parseRational(s);
        if (!re) throw ParseError("malformed rational: " + s);
        return GaussianRational(*re);
    }
    s.pop_back();  // imaginary part present
    // split at the last top-level sign (not leading, not an exponent of /)
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    }
    std::string reStr, imStr;
    if (split == std::string::npos) {
        reStr = "0";
        imStr = s;
    } else {
        reStr = s.substr(0, split);
        imStr = s.substr(split);
    }
    if (imStr.empty() || imStr == "+") imStr = "1";
    if (imStr == "-") imStr = "-1";
    auto re = parseRational(reStr);
    auto im = parseRational(imStr);
    if (!re || !im) throw ParseError("malformed complex literal: " + text);
    return {*re, *im};
}

std::vector<GaussianRational> parseComplexList(const std::string& text) {
    std::vector<GaussianRational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parseComplexLiteral(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::pair<Rational, Rational> parseRange(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("range must be lo:hi");
    auto lo = parseRational(text.substr(0, colon));
    auto hi = parseRational(text.substr(colon + 1));
    if (!lo || !hi) throw ParseError("malformed range: " + text);
    return {*lo, *hi};
}

void printRejections(const OmegaValidation& v) {
    for (const auto& r : v.rejections) {
        std::cout << "rejected: " << clauseName(r.clause);
        if (r.index >= 0) std::cout << "(" << r.index << ")";
        std::cout << ": " << r.detail << "\n";
    }
}

OmegaData loadOmega(const std::string& modelFlag, const std::string& omegaPath, int& exitCode) {
    Json j = loadJsonFile(omegaPath);
    ModelPtr model = modelFlag.empty() ? nullptr : loadModel(modelFlag);
    OmegaValidation v = omegaFromJson(j, model);
    if (!v.ok()) {
        printRejections(v);
        exitCode = 2;
    }
    return v.ok() ? v.get() : throw DomainError("omega data rejected");
}

double phiDouble(const PhaseAtInfinity& v) { return phiAtInfinityDouble(v); }

int runPhaseCmp(const std::string& fileA, const std::string& fileB) {
    PhaseGerm a = phaseGermFromJson(loadJsonFile(fileA));
    PhaseGerm b = phaseGermFromJson(loadJsonFile(fileB));
    std::cout << orderingName(cmpPhase(a, b)) << "\n";
    std::cout << "stabilization-bound " << formatRational(stabilizationBound(a, b)) << "\n";
    return 0;
}

int runValidateOmega(const std::string& modelFlag, const std::string& omegaPath) {
    Json j = loadJsonFile(omegaPath);
    ModelPtr model = modelFlag.empty() ? nullptr : loadModel(modelFlag);
    OmegaValidation v = omegaFromJson(j, model);
    if (v.ok()) {
        std::cout << "valid\n";
        return 0;
    }
    printRejections(v);
    return 2;
}

int runCharge(const std::string& modelFlag, const std::string& omegaPath,
              const std::string& classPath) {
    int code = 0;
    OmegaData o = loadOmega(modelFlag, omegaPath, code);
    NumClass ch = numClassFromJson(loadJsonFile(classPath), o.model);
    std::cout << toJson(centralCharge(o, ch)).dump() << "\n";
    return 0;
}

int runHn(const std::string& quiverPath, const std::string& repPath) {
    QuiverModel m = quiverFromJson(loadJsonFile(quiverPath));
    QuiverRep rep = repFromJson(loadJsonFile(repPath), m);
    HNFiltration f = hnFilter(m, rep);
    std::cout << "steps " << f.steps.size() << "\n";
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const auto& step = f.steps[i];
        std::cout << "step " << (i + 1) << ": dims=(";
        for (std::size_t v = 0; v < step.dims.size(); ++v)
            std::cout << (v ? "," : "") << step.dims[v];
        std::cout << ") phase_at_infinity=" << std::setprecision(12)
                  << phiDouble(phaseAtInfinity(step.phase))
                  << " poly=" << toJson(step.phase.poly).dump() << " branch=" << step.phase.branch
                  << "\n";
    }
    if (!bruteForceValidate(m, rep, f)) throw DomainError("internal: filtration failed validation");
    return 0;
}

int runWallScan(const std::string& rho012Text, const std::string& familyText,
                const std::string& rangeText, int steps) {
    auto rho012List = parseComplexList(rho012Text);
    if (rho012List.size() != 3) throw ParseError("--rho012 needs three complex entries");
    auto family = parseComplexList(familyText);
    if (family.size() != 2) throw ParseError("--family needs \"c,v\"");
    auto [lo, hi] = parseRange(rangeText);
    std::array<GaussianRational, 3> rho012 = {rho012List[0], rho012List[1], rho012List[2]};
    WallScanResult r = scanWallFamily(rho012, family[0], family[1], lo, hi, steps);
    std::cout << "t,verdict,phase_minus_rho3,phase_rho0\n";
    for (const auto& s : r.samples) {
        std::cout << formatRational(s.t) << "," << tagName(s.verdict.tag) << ",";
        if (s.verdict.tag != DTPTTag::Invalid) {
            std::cout << std::setprecision(12)
                      << phiDouble({s.verdict.minusRho3, 0}) << ","
                      << phiDouble({s.verdict.rho0, 0});
        } else {
            std::cout << ",";
        }
        std::cout << "\n";
    }
    for (const auto& w : r.walls) std::cout << "wall t=" << formatRational(w) << "\n";
    return 0;
}

int runSurfaceClassify(const std::string& inputPath) {
    SurfaceInput in = surfaceInputFromJson(loadJsonFile(inputPath));
    SurfaceVerdict v = surfaceClassify(in);
    for (const auto& check : v.checks) std::cout << "check: " << check << "\n";
    if (v.caseTag) {
        std::cout << "case " << caseName(*v.caseTag) << "\n";
        return 0;
    }
    std::cout << "no-case\n";
    for (const auto& clause : v.failedClauses) std::cout << "failed: " << clause << "\n";
    return 2;
}

int runDual(const std::string& modelFlag, const std::string& omegaPath,
            const std::string& dualizingPath) {
    int code = 0;
    OmegaData o = loadOmega(modelFlag, omegaPath, code);
    DualizingData dd = dualizingFromJson(loadJsonFile(dualizingPath), o.model);
    OmegaValidation dual = dualOmega(o, dd);
    if (!dual.ok()) {
        printRejections(dual);
        return 2;
    }
    std::cout << toJson(dual.get()).dump() << "\n";
    return 0;
}

int runNorm(const std::string& sigmaPath, const std::string& uPath) {
    FiniteStabilityPresentation sigma = presentationFromJson(loadJsonFile(sigmaPath));
    CentralChargeMap u = chargeMapFromJson(loadJsonFile(uPath));
    NormValue n = semiNorm(u, sigma);
    Json out;
    out["infinite"] = n.infinite;
    if (!n.infinite) out["normSquared"] = formatRational(n.squared);
    std::cout << out.dump() << "\n";
    return 0;
}

int runPlotPhase(const std::string& germPath, const std::string& rangeText, int steps) {
    PhaseGerm g = phaseGermFromJson(loadJsonFile(germPath));
    auto [lo, hi] = parseRange(rangeText);
    if (steps < 1 || lo > hi) throw DomainError("plot-phase: empty range");
    std::vector<double> ms(steps + 1), principal(steps + 1);
    bool anyZero = false;
    for (int j = 0; j <= steps; ++j) {
        Rational t = lo + (hi - lo) * Rational(j, steps);
        ms[j] = toDouble(t);
        std::complex<double> z = g.poly.evalDouble(ms[j]);
        if (z == std::complex<double>(0.0, 0.0)) anyZero = true;
        principal[j] = std::atan2(z.imag(), z.real()) / std::numbers::pi;
    }
    if (anyZero) throw DomainError("plot-phase: polynomial vanishes inside the range");
    // continuous branch tracking, anchored to the germ's value at infinity
    std::vector<double> phi(principal);
    double limit = phiAtInfinityDouble(phaseAtInfinity(g));
    phi[steps] += 2.0 * std::round((limit - principal[steps]) / 2.0);
    for (int j = steps - 1; j >= 0; --j) {
        phi[j] += 2.0 * std::round((phi[j + 1] - principal[j]) / 2.0);
    }
    std::cout << "m,phi\n" << std::setprecision(12);
    for (int j = 0; j <= steps; ++j) std::cout << ms[j] << "," << phi[j] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polynomial stability conditions toolkit"};
    app.require_subcommand(1);

    std::string fileA, fileB, modelFlag, omegaPath, classPath, quiverPath, repPath;
    std::string rho012Text, familyText, rangeText, inputPath, dualizingPath, sigmaPath, uPath;
    std::string germPath;
    int steps = 16;

    auto* phaseCmp = app.add_subcommand("phase-cmp", "compare two phase germs");
    phaseCmp->add_option("a", fileA, "first germ JSON")->required();
    phaseCmp->add_option("b", fileB, "second germ JSON")->required();

    auto* validate = app.add_subcommand("validate-omega", "validate stability data");
    validate->add_option("--model", modelFlag, "model preset name or JSON path");
    validate->add_option("--omega", omegaPath, "omega JSON")->required();

    auto* charge = app.add_subcommand("charge", "evaluate a central charge");
    charge->add_option("--model", modelFlag, "model preset name or JSON path");
    charge->add_option("--omega", omegaPath, "omega JSON")->required();
    charge->add_option("--class", classPath, "class JSON")->required();

    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a quiver rep");
    hn->add_option("--quiver", quiverPath, "quiver JSON")->required();
    hn->add_option("--rep", repPath, "representation JSON")->required();

    auto* wallScan = app.add_subcommand("wall-scan", "scan a rho_3 family for walls");
    wallScan->add_option("--rho012", rho012Text, "rho_0,rho_1,rho_2 complex literals")->required();
    wallScan->add_option("--family", familyText, "c,v with rho_3(t) = c + t v")->required();
    wallScan->add_option("--range", rangeText, "lo:hi rational range")->required();
    wallScan->add_option("--steps", steps, "sample count");

    auto* surface = app.add_subcommand("surface-classify", "classify surface data");
    surface->add_option("--input", inputPath, "surface input JSON")->required();

    auto* dual = app.add_subcommand("dual", "dual stability data");
    dual->add_option("--model", modelFlag, "model preset name or JSON path");
    dual->add_option("--omega", omegaPath, "omega JSON")->required();
    dual->add_option("--dualizing", dualizingPath, "dualizing data JSON")->required();

    auto* norm = app.add_subcommand("norm", "semi-norm of a charge perturbation");
    norm->add_option("--sigma", sigmaPath, "presentation JSON")->required();
    norm->add_option("--u", uPath, "charge map JSON")->required();

    auto* plot = app.add_subcommand("plot-phase", "CSV of the continuous phase");
    plot->add_option("--germ", germPath, "phase germ JSON")->required();
    plot->add_option("--range", rangeText, "lo:hi rational range")->required();
    plot->add_option("--steps", steps, "sample count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (phaseCmp->parsed()) return runPhaseCmp(fileA, fileB);
        if (validate->parsed()) return runValidateOmega(modelFlag, omegaPath);
        if (charge->parsed()) return runCharge(modelFlag, omegaPath, classPath);
        if (hn->parsed()) return runHn(quiverPath, repPath);
        if (wallScan->parsed()) return runWallScan(rho012Text, familyText, rangeText, steps);
        if (surface->parsed()) return runSurfaceClassify(inputPath);
        if (dual->parsed()) return runDual(modelFlag, omegaPath, dualizingPath);
        if (norm->parsed()) return runNorm(sigmaPath, uPath);
        if (plot->parsed()) return runPlotPhase(germPath, rangeText, steps);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
