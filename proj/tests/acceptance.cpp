// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria.  argv[1] = path to the CLI binary, argv[2] = data dir.
#include "liefour/clifford.hpp"
#include "liefour/presentation_io.hpp"
#include "liefour/susy.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace liefour;

namespace {

std::string cliPath, dataDir;
int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << number << " " << name << note << "\n";
    if (!ok) ++failures;
}

GaussianRational randomGaussian(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

Matrix randomMatrix(std::mt19937& rng, size_t dim) {
    Matrix m(dim);
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) m(r, c) = Scalar(randomGaussian(rng));
    return m;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const LittleAlgebraRep& fock() {
    static LittleAlgebraRep la =
        buildLittleAlgebraRep(Scalar::symbol("m"), Scalar::symbol("z"));
    return la;
}

const AlgebraPresentation& inducedPresentation() {
    static AlgebraPresentation p = induceQuartic(buildN2Presentation(false));
    return p;
}

bool hasLedgerEntry(const VerificationReport& r, const std::string& prefix) {
    for (const auto& e : r.ledger())
        if (e.name.rfind(prefix, 0) == 0) return true;
    return false;
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) cliPath = argv[1];
    if (argc > 2) dataDir = argv[2];

    criterion(1, "four-bracket-identity", [] {
        std::mt19937 rng(20240819);
        for (int trial = 0; trial < 100; ++trial) {
            Matrix a = randomMatrix(rng, 4), b = randomMatrix(rng, 4),
                   c = randomMatrix(rng, 4), d = randomMatrix(rng, 4);
            if (!(fourBracketSym(a, b, c, d) == fourBracketNested(a, b, c, d)))
                return false;
        }
        return true;
    });

    criterion(2, "convention-suite", [] {
        for (EpsilonKind kind : {EpsilonKind::SpinorUndotted, EpsilonKind::SpinorDotted}) {
            if (epsilonLookup(kind, Variance::Lower, 1, 2) != GaussianRational(1))
                return false;
            if (epsilonLookup(kind, Variance::Upper, 1, 2) != GaussianRational(-1))
                return false;
        }
        if (epsilonLookup(EpsilonKind::Internal, Variance::Upper, 1, 2) !=
            GaussianRational(-1))
            return false;
        if (epsilonLookup(EpsilonKind::Internal, Variance::Lower, 1, 2) !=
            GaussianRational(1))
            return false;
        const SigmaSet& s = conventionSigmas();
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                Scalar want(GaussianRational(2) * s.eta(mu, nu));
                if (s.sigma(mu) * s.sigmaBar(nu) + s.sigma(nu) * s.sigmaBar(mu) !=
                    Matrix::scalar(2, want))
                    return false;
                if (s.gamma(mu) * s.gamma(nu) + s.gamma(nu) * s.gamma(mu) !=
                    Matrix::scalar(4, want))
                    return false;
            }
        return true;
    });

    criterion(3, "fock-self-check", [] {
        VerificationReport r = checkSuperJacobi(buildN2Presentation(false), fock().rep);
        return r.passed() && r.total() > 0;
    });

    criterion(4, "transfer-theorem", [] {
        VerificationReport r = checkRepresentationTransfer(inducedPresentation(), fock().rep);
        return r.passed() && r.total() == 330;
    });

    criterion(5, "generalized-jacobi", [] {
        VerificationReport r =
            checkGeneralizedJacobi(buildN2Presentation(false).oddNames(), fock().rep);
        return r.passed() && r.total() == 792;
    });

    criterion(6, "display-comparison", [] {
        VerificationReport induced = verifyInducedN2Quartic(fock());
        VerificationReport little = verifyLittleAlgebraDisplay(fock());
        return induced.passed() && little.passed() &&
               hasLedgerEntry(induced, "lambda ") && hasLedgerEntry(little, "lambda ") &&
               hasLedgerEntry(little, "P^2 coefficient") &&
               !fock().conventionsLedger.empty();
    });

    criterion(7, "abstract-quartic-poincare", [] {
        VerificationReport r = verifyAbstractQuarticPoincare();
        return r.passed() && r.total() == 330 + 792;
    });

    criterion(8, "zero-central-charge", [] {
        LittleAlgebraRep la = buildLittleAlgebraRep(Scalar::symbol("m"), Scalar());
        auto names = superchargeNames();
        for (const auto& ms : multisets(names, 4)) {
            int bars = 0;
            for (const auto& n : ms) bars += ChargeIndex::fromName(n).bar ? 1 : 0;
            if (bars > 1) continue;
            Matrix bracket = fourBracketSym(la.rep.image(ms[0]), la.rep.image(ms[1]),
                                            la.rep.image(ms[2]), la.rep.image(ms[3]));
            if (!bracket.isZero()) return false;
            const EvenQuadratic* v =
                inducedPresentation().quarticBracket({ms[0], ms[1], ms[2], ms[3]});
            if (v && !evaluateEvenQuadratic(*v, la.rep).isZero()) return false;
        }
        return true;
    });

    criterion(9, "clifford-hierarchy", [] {
        LinearForm form;
        for (int I = 0; I < 4; ++I) {
            form.indeterminates.push_back("x_" + std::to_string(I + 1));
            form.matrices.push_back(fock().osc[I]);
        }
        for (int I = 0; I < 4; ++I) {
            form.indeterminates.push_back("y_" + std::to_string(I + 1));
            form.matrices.push_back(fock().oscDual[I]);
        }
        QuadraticCompatibility qc = quadraticCompatibilityCheck(form);
        if (!qc.compatible) return false;
        if (!cliffordVerify(form, {qc.poly * qc.poly, 4}).passed()) return false;

        GeneralizedClifford gc = buildGeneralizedClifford(2);
        if (gc.target.poly != Scalar::parse("x_1^4 + x_2^4")) return false;
        if (!cliffordVerify(gc.form, gc.target).passed()) return false;
        return !quadraticCompatibilityCheck(gc.form).compatible;
    });

    criterion(10, "cli-contract", [] {
        if (cliPath.empty() || dataDir.empty()) return false;
        // bundled fixtures parse and round-trip byte-identically
        for (const char* name : {"n2-susy-d4.alg", "quartic-poincare-eq4.alg"}) {
            std::string text = readFile(dataDir + "/" + name);
            if (emitPresentation(parsePresentation(text)) != text) return false;
        }
        std::string repText = readFile(dataDir + "/little-rep-16.rep");
        if (emitRepresentation(parseRepresentation(repText)) != repText) return false;

        // full pipeline exits 0 with a deterministic report
        std::string tmp1 = "/tmp/liefour-acceptance-1.json";
        std::string tmp2 = "/tmp/liefour-acceptance-2.json";
        std::string base = "\"" + cliPath + "\" verify-quartic --against induced --m m --z z";
        if (run(base + " --out " + tmp1 + " 2>/dev/null") != 0) return false;
        if (run(base + " --out " + tmp2 + " 2>/dev/null") != 0) return false;
        return readFile(tmp1) == readFile(tmp2) && !readFile(tmp1).empty();
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (10 - failures) << "/10)\n";
    return failures;
}
