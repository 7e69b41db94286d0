#include "liefour/clifford.hpp"
#include "liefour/presentation_io.hpp"
#include "liefour/susy.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace liefour;

/// Assembled output of one command run.
struct RunReport {
    std::string command;
    std::vector<VerificationReport> reports;
    std::vector<LedgerEntry> ledger;
    Json extra = Json::object(); // command-specific payload

    bool passed() const {
        for (const auto& r : reports)
            if (!r.passed()) return false;
        return true;
    }

    Json toJson() const {
        Json j;
        j["command"] = command;
        j["status"] = passed() ? "pass" : "fail";
        Json rs = Json::array();
        for (const auto& r : reports) rs.push_back(r.toJson());
        j["reports"] = rs;
        Json jl = Json::array();
        for (const auto& e : ledger) jl.push_back(e.toJson());
        j["conventions-ledger"] = jl;
        if (!extra.empty()) j["details"] = extra;
        return j;
    }
};

struct OutputOptions {
    std::string outPath;
    bool compact = false;
};

int finish(const RunReport& report, const OutputOptions& opts) {
    std::string text = opts.compact ? report.toJson().dump() + "\n"
                                    : report.toJson().dump(2) + "\n";
    if (!opts.outPath.empty()) {
        std::ofstream out(opts.outPath, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << opts.outPath << "\n";
            return 2;
        }
        out << text;
    } else {
        std::cout << text;
    }
    for (const auto& r : report.reports)
        std::cerr << (r.passed() ? "pass" : "FAIL") << "  " << r.check() << "  ("
                  << r.total() << " cases, " << r.failures().size() << " failures)\n";
    for (const auto& e : report.ledger)
        std::cerr << "note  " << e.name << ": computed " << e.computed << " vs stated "
                  << e.stated << "\n";
    std::cerr << (report.passed() ? "OK" : "FAILED") << "\n";
    return report.passed() ? 0 : 1;
}

/// Accepts a rational literal or a symbol name; anything else is a usage error.
Scalar parseParameter(const std::string& text, const std::string& flag) {
    Scalar s = Scalar::parse(text);
    bool plainSymbol = s.terms().size() == 1 && s.terms().begin()->first.size() == 1 &&
                       s.terms().begin()->first.begin()->second == 1 &&
                       s.terms().begin()->second == GaussianRational(1);
    bool rational = s.isConstant() && (s.isZero() || s.constantValue().isReal());
    if (!plainSymbol && !rational)
        throw ValidationError(flag + " must be a rational number or a symbol");
    return s;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

void gatherLedger(RunReport& run) {
    for (const auto& r : run.reports)
        for (const auto& e : r.ledger()) run.ledger.push_back(e);
}

Json epsilonTableJson(EpsilonKind kind, Variance variance) {
    Json rows = Json::array();
    for (int i = 1; i <= 2; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= 2; ++j)
            row.push_back(Scalar(epsilonLookup(kind, variance, i, j)).str());
        rows.push_back(row);
    }
    return rows;
}

Json matrixJson(const Matrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

int cmdConventions(const OutputOptions& opts) {
    RunReport run;
    run.command = "conventions";
    const SigmaSet& sig = conventionSigmas();

    VerificationReport clifford("metric-anticommutators",
                                "sigma/sigmabar and Gamma pairs, eta = diag(1,-1,-1,-1)");
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            clifford.countCase();
            Matrix lhs = sig.sigma(mu) * sig.sigmaBar(nu) + sig.sigma(nu) * sig.sigmaBar(mu);
            Matrix want = Matrix::scalar(2, Scalar(GaussianRational(2) * sig.eta(mu, nu)));
            if (lhs != want)
                clifford.addFailure({{std::to_string(mu), std::to_string(nu)}, false,
                                     "sigma pair mismatch"});
            clifford.countCase();
            Matrix glhs = sig.gamma(mu) * sig.gamma(nu) + sig.gamma(nu) * sig.gamma(mu);
            Matrix gwant = Matrix::scalar(4, Scalar(GaussianRational(2) * sig.eta(mu, nu)));
            if (glhs != gwant)
                clifford.addFailure({{std::to_string(mu), std::to_string(nu)}, false,
                                     "Gamma pair mismatch"});
        }
    run.reports.push_back(clifford);

    run.extra["epsilon"] = {
        {"spinor-lower", epsilonTableJson(EpsilonKind::SpinorUndotted, Variance::Lower)},
        {"spinor-upper", epsilonTableJson(EpsilonKind::SpinorUndotted, Variance::Upper)},
        {"dotted-lower", epsilonTableJson(EpsilonKind::SpinorDotted, Variance::Lower)},
        {"dotted-upper", epsilonTableJson(EpsilonKind::SpinorDotted, Variance::Upper)},
        {"internal-lower", epsilonLookup(EpsilonKind::Internal, Variance::Lower, 1, 2).str(),},
        {"internal-upper", epsilonLookup(EpsilonKind::Internal, Variance::Upper, 1, 2).str()}};
    Json sigmas = Json::array();
    for (int mu = 0; mu < 4; ++mu) sigmas.push_back(matrixJson(sig.sigma(mu)));
    run.extra["sigma"] = sigmas;
    Json gammas = Json::array();
    for (int mu = 0; mu < 4; ++mu) gammas.push_back(matrixJson(sig.gamma(mu)));
    run.extra["gamma"] = gammas;
    run.extra["flipped-signature-consistent"] = SigmaSet(false).signatureConsistent();

    gatherLedger(run);
    return finish(run, opts);
}

int cmdVerifySuper(const Scalar& m, const Scalar& z, bool lorentz,
                   const OutputOptions& opts) {
    RunReport run;
    run.command = "verify-super";
    AlgebraPresentation p = buildN2Presentation(false);
    LittleAlgebraRep la = buildLittleAlgebraRep(m, z);
    run.reports.push_back(checkSuperJacobi(p, la.rep));
    run.reports.push_back(checkGeneralizedJacobi(p.oddNames(), la.rep));
    run.reports.push_back(hermiticitySpotCheck());
    if (lorentz)
        run.reports.push_back(checkEvenJacobiStructure(buildN2Presentation(true)));
    run.ledger = la.conventionsLedger;
    gatherLedger(run);
    return finish(run, opts);
}

int cmdInduce(const std::string& algPath, bool lorentz, const OutputOptions& opts) {
    AlgebraPresentation p = algPath.empty() ? buildN2Presentation(lorentz)
                                            : parsePresentation(readFile(algPath));
    AlgebraPresentation induced = induceQuartic(p);
    std::string text = emitPresentation(induced);
    if (!opts.outPath.empty()) writeFile(opts.outPath, text);
    else std::cout << text;
    std::cerr << "induced order-four presentation with "
              << induced.tables().quartic.size() << " quartic entries\n";
    return 0;
}

int cmdVerifyQuartic(const std::string& against, const Scalar& m, const Scalar& z,
                     const OutputOptions& opts) {
    RunReport run;
    run.command = "verify-quartic";
    if (against == "eq4") {
        run.reports.push_back(verifyAbstractQuarticPoincare());
    } else {
        LittleAlgebraRep la = buildLittleAlgebraRep(m, z);
        if (against == "induced") {
            AlgebraPresentation induced = induceQuartic(buildN2Presentation(false));
            run.reports.push_back(checkRepresentationTransfer(induced, la.rep));
            run.reports.push_back(verifyInducedN2Quartic(la));
            run.reports.push_back(checkGeneralizedJacobi(induced.oddNames(), la.rep));
        } else { // little
            run.reports.push_back(verifyLittleAlgebraDisplay(la));
        }
        run.ledger = la.conventionsLedger;
    }
    gatherLedger(run);
    return finish(run, opts);
}

int cmdLittleRep(const Scalar& m, const Scalar& z, bool lorentz, const std::string& emitPath,
                 const OutputOptions& opts) {
    RunReport run;
    run.command = "little-rep";
    LittleAlgebraRep la = buildLittleAlgebraRep(m, z);
    VerificationReport built("little-rep-build",
                             "16-dimensional Fock representation, all brackets re-checked");
    built.countCase(); // construction self-check already threw on failure
    run.reports.push_back(built);
    run.reports.push_back(checkSuperJacobi(buildN2Presentation(false), la.rep));
    run.reports.push_back(hermiticitySpotCheck());
    if (lorentz)
        run.reports.push_back(checkEvenJacobiStructure(buildN2Presentation(true)));
    run.ledger = la.conventionsLedger;
    run.extra["dim"] = la.rep.dim;
    for (int I = 0; I < 4; ++I)
        run.extra["oscillator-coefficients"].push_back(la.oscCoeff[I].str());
    if (!emitPath.empty()) writeFile(emitPath, emitRepresentation(la.rep));
    gatherLedger(run);
    return finish(run, opts);
}

int cmdClifford(const std::string& matricesPath, unsigned degree, const std::string& target,
                const OutputOptions& opts) {
    RunReport run;
    run.command = "clifford";
    Representation stored = parseRepresentation(readFile(matricesPath));
    LinearForm form;
    for (const auto& [name, mat] : stored.images) {
        form.indeterminates.push_back(name);
        form.matrices.push_back(mat);
    }
    if (!target.empty()) {
        PolynomialTarget t{Scalar::parse(target), degree};
        run.reports.push_back(cliffordVerify(form, t));
    } else {
        QuadraticCompatibility qc = quadraticCompatibilityCheck(form);
        run.extra["quadratic-compatible"] = qc.compatible;
        if (qc.compatible) {
            run.extra["quadratic-polynomial"] = qc.poly.str();
            run.reports.push_back(
                cliffordVerify(form, {qc.poly * qc.poly, 4}));
        } else {
            run.extra["obstruction"] = qc.obstruction;
        }
    }
    gatherLedger(run);
    return finish(run, opts);
}

int cmdGcal(unsigned n, const OutputOptions& opts) {
    RunReport run;
    run.command = "gcal";
    GeneralizedClifford gc = buildGeneralizedClifford(n);
    run.extra["generators"] = n;
    run.extra["dim"] = gc.dim;
    run.extra["target"] = gc.target.poly.str();
    run.reports.push_back(cliffordVerify(gc.form, gc.target));
    QuadraticCompatibility qc = quadraticCompatibilityCheck(gc.form);
    run.extra["quadratic-compatible"] = qc.compatible;
    if (qc.compatible) run.extra["quadratic-polynomial"] = qc.poly.str();
    else run.extra["quadratic-obstruction"] = qc.obstruction;
    gatherLedger(run);
    return finish(run, opts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for Lie algebras of order four"};
    app.require_subcommand(1);

    OutputOptions opts;
    std::string mText = "m", zText = "z";
    bool lorentz = false;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--out", opts.outPath, "write the JSON report to this path");
        cmd->add_flag("--json", opts.compact, "compact single-line JSON");
    };
    auto addParams = [&](CLI::App* cmd) {
        cmd->add_option("--m", mText, "mass: rational or symbol (default m)");
        cmd->add_option("--z", zText, "central charge: rational or symbol (default z)");
        cmd->add_flag("--lorentz", lorentz, "include the extrapolated Lorentz sector");
    };

    CLI::App* conv = app.add_subcommand("conventions", "emit and verify convention tables");
    addCommon(conv);

    CLI::App* vs = app.add_subcommand("verify-super", "verify the superalgebra brackets");
    addCommon(vs);
    addParams(vs);

    std::string algPath;
    CLI::App* ind = app.add_subcommand("induce", "derive the order-four presentation");
    ind->add_option("--alg", algPath, "input presentation file (default: built-in)");
    ind->add_flag("--lorentz", lorentz, "include the extrapolated Lorentz sector");
    ind->add_option("--out", opts.outPath, "write the presentation to this path");

    std::string against = "induced";
    CLI::App* vq = app.add_subcommand("verify-quartic", "verify quartic brackets");
    vq->add_option("--against", against, "comparison suite")
        ->check(CLI::IsMember({"induced", "eq4", "little"}));
    addCommon(vq);
    addParams(vq);

    std::string emitPath;
    CLI::App* lr = app.add_subcommand("little-rep", "build the Fock representation");
    lr->add_option("--emit", emitPath, "also write the representation file here");
    addCommon(lr);
    addParams(lr);

    std::string matricesPath, targetText;
    unsigned degree = 2;
    CLI::App* cl = app.add_subcommand("clifford", "verify a Clifford-of-polynomial relation");
    cl->add_option("--matrices", matricesPath, "representation-format matrix file")
        ->required();
    cl->add_option("--degree", degree, "power of the generic form");
    cl->add_option("--target", targetText, "target polynomial (scalar grammar)");
    addCommon(cl);

    unsigned gcalN = 2;
    CLI::App* gc = app.add_subcommand("gcal", "clock-shift generalized Clifford witness");
    gc->add_option("--n", gcalN, "number of generators");
    addCommon(gc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (conv->parsed()) return cmdConventions(opts);
        Scalar m = parseParameter(mText, "--m");
        Scalar z = parseParameter(zText, "--z");
        if (vs->parsed()) return cmdVerifySuper(m, z, lorentz, opts);
        if (ind->parsed()) return cmdInduce(algPath, lorentz, opts);
        if (vq->parsed()) return cmdVerifyQuartic(against, m, z, opts);
        if (lr->parsed()) return cmdLittleRep(m, z, lorentz, emitPath, opts);
        if (cl->parsed()) return cmdClifford(matricesPath, degree, targetText, opts);
        if (gc->parsed()) return cmdGcal(gcalN, opts);
    } catch (const liefour::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
