#include "liefour/susy.hpp"
#include "liefour/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace liefour {

namespace {

const char* kMomentum[4] = {"P_0", "P_1", "P_2", "P_3"};

Scalar half() { return Scalar(GaussianRational::fromRatio(1, 2)); }

GaussianRational epsUpper(int i, int j) {
    return epsilonLookup(EpsilonKind::Internal, Variance::Upper, i, j);
}
GaussianRational epsLower(int i, int j) {
    return epsilonLookup(EpsilonKind::Internal, Variance::Lower, i, j);
}
GaussianRational epsSpinorLower(int a, int b) {
    return epsilonLookup(EpsilonKind::SpinorUndotted, Variance::Lower, a, b);
}
GaussianRational epsDottedLower(int a, int b) {
    return epsilonLookup(EpsilonKind::SpinorDotted, Variance::Lower, a, b);
}

GaussianRational sigmaEntry(int mu, int a, int ad) {
    return conventionSigmas().sigma(mu)(a - 1, ad - 1).constantValue();
}

void addCombo(LinearCombo& combo, const std::string& gen, const Scalar& c) {
    if (c.isZero()) return;
    auto& slot = combo[gen];
    slot += c;
    if (slot.isZero()) combo.erase(gen);
}

} // namespace

std::string ChargeIndex::name() const {
    return std::string(bar ? "Qb" : "Q") + std::to_string(iso) + "_" + std::to_string(spin);
}

ChargeIndex ChargeIndex::fromName(const std::string& name) {
    ChargeIndex c;
    size_t pos = 1;
    if (name.size() > 1 && name[1] == 'b') {
        c.bar = true;
        pos = 2;
    }
    c.iso = name[pos] - '0';
    c.spin = name[pos + 2] - '0';
    return c;
}

std::vector<std::string> superchargeNames() {
    std::vector<std::string> out;
    for (bool bar : {false, true})
        for (int iso = 1; iso <= 2; ++iso)
            for (int spin = 1; spin <= 2; ++spin)
                out.push_back(ChargeIndex{bar, iso, spin}.name());
    return out;
}

AlgebraPresentation buildN2Presentation(bool includeLorentz) {
    std::vector<Generator> gens;
    for (int mu = 0; mu < 4; ++mu) gens.push_back({kMomentum[mu], {1, 1}});
    gens.push_back({"Z", {0, 0}});
    for (int iso = 1; iso <= 2; ++iso)
        for (int spin = 1; spin <= 2; ++spin)
            gens.push_back({ChargeIndex{false, iso, spin}.name(), {1, 0}});
    for (int iso = 1; iso <= 2; ++iso)
        for (int spin = 1; spin <= 2; ++spin)
            gens.push_back({ChargeIndex{true, iso, spin}.name(), {0, 1}});

    StructureTables tables;
    const SigmaSet& sig = conventionSigmas();

    // {Q^I_a, Qbar_{J ad}} = -2i delta^I_J sigma^mu_{a ad} P_mu
    for (int iso = 1; iso <= 2; ++iso)
        for (int a = 1; a <= 2; ++a)
            for (int ad = 1; ad <= 2; ++ad) {
                LinearCombo combo;
                for (int mu = 0; mu < 4; ++mu) {
                    GaussianRational coeff =
                        GaussianRational(-2) * GaussianRational::i() * sigmaEntry(mu, a, ad);
                    addCombo(combo, kMomentum[mu], Scalar(coeff));
                }
                tables.oddOdd[sortedPair(ChargeIndex{false, iso, a}.name(),
                                         ChargeIndex{true, iso, ad}.name())] = combo;
            }
    // {Q^I_a, Q^J_b} = 2 Z eps^{IJ} eps_{ab}
    for (int i1 = 1; i1 <= 2; ++i1)
        for (int a1 = 1; a1 <= 2; ++a1)
            for (int i2 = 1; i2 <= 2; ++i2)
                for (int a2 = 1; a2 <= 2; ++a2) {
                    std::string n1 = ChargeIndex{false, i1, a1}.name();
                    std::string n2 = ChargeIndex{false, i2, a2}.name();
                    if (n2 < n1) continue;
                    GaussianRational c = GaussianRational(2) * epsUpper(i1, i2) *
                                         epsSpinorLower(a1, a2);
                    if (c.isZero()) continue;
                    LinearCombo combo;
                    addCombo(combo, "Z", Scalar(c));
                    tables.oddOdd[{n1, n2}] = combo;
                }
    // {Qbar_{I ad}, Qbar_{J bd}} = -2 Z eps_{IJ} eps_{ad bd}
    for (int i1 = 1; i1 <= 2; ++i1)
        for (int a1 = 1; a1 <= 2; ++a1)
            for (int i2 = 1; i2 <= 2; ++i2)
                for (int a2 = 1; a2 <= 2; ++a2) {
                    std::string n1 = ChargeIndex{true, i1, a1}.name();
                    std::string n2 = ChargeIndex{true, i2, a2}.name();
                    if (n2 < n1) continue;
                    GaussianRational c = GaussianRational(-2) * epsLower(i1, i2) *
                                         epsDottedLower(a1, a2);
                    if (c.isZero()) continue;
                    LinearCombo combo;
                    addCombo(combo, "Z", Scalar(c));
                    tables.oddOdd[{n1, n2}] = combo;
                }

    if (includeLorentz) {
        auto lname = [](int mu, int nu) {
            return "L_" + std::to_string(mu) + std::to_string(nu);
        };
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) gens.push_back({lname(mu, nu), {1, 1}});
        // L_{nu mu} = -L_{mu nu}, L_{mu mu} = 0, via a signed lookup.
        auto addL = [&](LinearCombo& combo, int mu, int nu, const GaussianRational& c) {
            if (mu == nu || c.isZero()) return;
            if (mu < nu) addCombo(combo, lname(mu, nu), Scalar(c));
            else addCombo(combo, lname(nu, mu), Scalar(-c));
        };
        auto eta = [&](int mu, int nu) { return sig.eta(mu, nu); };
        // [L_{mu nu}, L_{rho si}] = eta_{nu rho} L_{mu si} - eta_{mu rho} L_{nu si}
        //                           - eta_{nu si} L_{mu rho} + eta_{mu si} L_{nu rho}
        std::vector<std::pair<int, int>> lpairs;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) lpairs.push_back({mu, nu});
        for (auto [mu, nu] : lpairs)
            for (auto [rho, si] : lpairs) {
                std::string n1 = lname(mu, nu), n2 = lname(rho, si);
                if (!(n1 < n2)) continue;
                LinearCombo combo;
                addL(combo, mu, si, eta(nu, rho));
                addL(combo, nu, si, -eta(mu, rho));
                addL(combo, mu, rho, -eta(nu, si));
                addL(combo, nu, rho, eta(mu, si));
                if (!combo.empty()) tables.evenEven[{n1, n2}] = combo;
            }
        // [L_{mu nu}, P_rho] = eta_{nu rho} P_mu - eta_{mu rho} P_nu
        for (auto [mu, nu] : lpairs)
            for (int rho = 0; rho < 4; ++rho) {
                LinearCombo combo;
                addCombo(combo, kMomentum[mu], Scalar(eta(nu, rho)));
                addCombo(combo, kMomentum[nu], Scalar(-eta(mu, rho)));
                if (combo.empty()) continue;
                std::string n1 = lname(mu, nu), n2 = kMomentum[rho];
                if (n1 < n2) tables.evenEven[{n1, n2}] = combo;
                else {
                    for (auto& [g, s] : combo) s = -s;
                    tables.evenEven[{n2, n1}] = combo;
                }
            }
        // [L_{mu nu}, Q^I_a] = (sigma_{mu nu})_a{}^b Q^I_b;
        // [L_{mu nu}, Qbar_{I ad}] = -(sigmabar_{mu nu})^{bd}{}_{ad} Qbar_{I bd}.
        // No reference constants exist for the Lorentz-odd sector; this is
        // the standard extrapolation, clearly an optional addition.
        for (auto [mu, nu] : lpairs) {
            Matrix smn = Scalar(eta(mu, mu)) * (Scalar(eta(nu, nu)) * sig.sigmaMuNu(mu, nu));
            Matrix sbmn =
                Scalar(eta(mu, mu)) * (Scalar(eta(nu, nu)) * sig.sigmaBarMuNu(mu, nu));
            for (int iso = 1; iso <= 2; ++iso) {
                for (int a = 1; a <= 2; ++a) {
                    LinearCombo combo;
                    for (int b = 1; b <= 2; ++b)
                        addCombo(combo, ChargeIndex{false, iso, b}.name(), smn(a - 1, b - 1));
                    if (!combo.empty())
                        tables.evenOdd[{lname(mu, nu), ChargeIndex{false, iso, a}.name()}] =
                            combo;
                }
                for (int ad = 1; ad <= 2; ++ad) {
                    LinearCombo combo;
                    for (int bd = 1; bd <= 2; ++bd)
                        addCombo(combo, ChargeIndex{true, iso, bd}.name(),
                                 -sbmn(bd - 1, ad - 1));
                    if (!combo.empty())
                        tables.evenOdd[{lname(mu, nu), ChargeIndex{true, iso, ad}.name()}] =
                            combo;
                }
            }
        }
    }

    return AlgebraPresentation(AlgebraKind::Superalgebra, std::move(gens), std::move(tables),
                               "Z");
}

namespace {

/// Formal linear combination of supercharges, used by the structure-constant
/// oracle for the oscillator coefficients.
using ChargeCombo = std::vector<std::pair<Scalar, std::string>>;

/// {combo1, combo2} evaluated through the structure tables at rest:
/// P_0 -> -i m, P_1..P_3 -> 0, Z -> z.
Scalar restAnticommutator(const AlgebraPresentation& p, const ChargeCombo& u,
                          const ChargeCombo& v, const Scalar& m, const Scalar& z) {
    Scalar p0 = -(Scalar::i() * m);
    Scalar out;
    for (const auto& [cu, nu] : u)
        for (const auto& [cv, nv] : v)
            for (const auto& [gen, coeff] : p.oddOddBracket(nu, nv)) {
                if (gen == "Z") out += cu * cv * coeff * z;
                else if (gen == "P_0") out += cu * cv * coeff * p0;
                // P_1..P_3 vanish in the rest frame
            }
    return out;
}

struct OscCombos {
    std::array<ChargeCombo, 4> osc;
    std::array<ChargeCombo, 4> dual;
};

// a^1 = Q1_1 - Qb2_2   a^3 = Q1_1 + Qb2_2
// a^2 = Q1_2 + Qb2_1   a^4 = Q1_2 - Qb2_1
// duals by the conjugate substitution.
OscCombos oscillatorCombos() {
    Scalar one(1), neg(-1);
    OscCombos oc;
    oc.osc[0] = {{one, "Q1_1"}, {neg, "Qb2_2"}};
    oc.osc[1] = {{one, "Q1_2"}, {one, "Qb2_1"}};
    oc.osc[2] = {{one, "Q1_1"}, {one, "Qb2_2"}};
    oc.osc[3] = {{one, "Q1_2"}, {neg, "Qb2_1"}};
    oc.dual[0] = {{one, "Qb1_1"}, {neg, "Q2_2"}};
    oc.dual[1] = {{one, "Qb1_2"}, {one, "Q2_1"}};
    oc.dual[2] = {{one, "Qb1_1"}, {one, "Q2_2"}};
    oc.dual[3] = {{one, "Qb1_2"}, {neg, "Q2_1"}};
    return oc;
}

struct FermionModes {
    std::array<Matrix, 4> lower; // b_I
    std::array<Matrix, 4> raise; // bdag_I
};

/// Four canonical fermionic modes on 2^4 states via the alternating
/// sign-string construction: {b_I, bdag_J} = delta_IJ, all else zero.
FermionModes fermionModes() {
    Matrix b(2), bd(2), strg(2), id2 = Matrix::identity(2);
    b(0, 1) = Scalar(1);
    bd(1, 0) = Scalar(1);
    strg(0, 0) = Scalar(1);
    strg(1, 1) = Scalar(-1);
    FermionModes fm;
    for (int I = 0; I < 4; ++I) {
        Matrix lo = Matrix::identity(1), hi = Matrix::identity(1);
        for (int k = 0; k < 4; ++k) {
            const Matrix& factorLo = (k < I) ? strg : (k == I ? b : id2);
            const Matrix& factorHi = (k < I) ? strg : (k == I ? bd : id2);
            lo = kron(lo, factorLo);
            hi = kron(hi, factorHi);
        }
        fm.lower[I] = lo;
        fm.raise[I] = hi;
    }
    return fm;
}

/// Solve the substitution for the supercharge images given oscillator
/// matrices: Q1_1 = (a1+a3)/2, Qb2_2 = (a3-a1)/2, ... and the daggered
/// family from the duals.
std::map<std::string, Matrix> superchargesFromOscillators(const std::array<Matrix, 4>& a,
                                                          const std::array<Matrix, 4>& d) {
    Scalar h = half();
    std::map<std::string, Matrix> out;
    out["Q1_1"] = h * (a[0] + a[2]);
    out["Qb2_2"] = h * (a[2] - a[0]);
    out["Q1_2"] = h * (a[1] + a[3]);
    out["Qb2_1"] = h * (a[1] - a[3]);
    out["Qb1_1"] = h * (d[0] + d[2]);
    out["Q2_2"] = h * (d[2] - d[0]);
    out["Qb1_2"] = h * (d[1] + d[3]);
    out["Q2_1"] = h * (d[1] - d[3]);
    return out;
}

void checkOscillatorRelations(const std::array<Matrix, 4>& a, const std::array<Matrix, 4>& d,
                              const std::array<Scalar, 4>& c) {
    Matrix zero(16);
    for (int I = 0; I < 4; ++I)
        for (int J = 0; J < 4; ++J) {
            if (anticommutator(a[I], a[J]) != zero)
                throw SelfCheckFailed("{a,a} nonzero at " + std::to_string(I) + "," +
                                      std::to_string(J));
            if (anticommutator(d[I], d[J]) != zero)
                throw SelfCheckFailed("{adag,adag} nonzero");
            Matrix mixed = anticommutator(a[I], d[J]);
            Matrix want = (I == J) ? Matrix::scalar(16, c[I]) : zero;
            if (mixed != want) throw SelfCheckFailed("{a,adag} violates the pairing pattern");
        }
}

} // namespace

std::array<Matrix, 4> oscillatorSubstitution(const Representation& rep) {
    std::array<Matrix, 4> out;
    auto oc = oscillatorCombos();
    for (int I = 0; I < 4; ++I) {
        Matrix acc(rep.dim);
        for (const auto& [c, name] : oc.osc[I]) acc += c * rep.image(name);
        out[I] = acc;
    }
    return out;
}

std::array<Matrix, 4> oscillatorSubstitutionDual(const Representation& rep) {
    std::array<Matrix, 4> out;
    auto oc = oscillatorCombos();
    for (int I = 0; I < 4; ++I) {
        Matrix acc(rep.dim);
        for (const auto& [c, name] : oc.dual[I]) acc += c * rep.image(name);
        out[I] = acc;
    }
    return out;
}

LittleAlgebraRep buildLittleAlgebraRep(const Scalar& m, const Scalar& z) {
    AlgebraPresentation p = buildN2Presentation(false);
    auto oc = oscillatorCombos();

    // Oracle for the anticommutator coefficients c_I from the structure
    // constants; the stated reference values go to the ledger below.
    std::array<Scalar, 4> c;
    for (int I = 0; I < 4; ++I)
        c[I] = restAnticommutator(p, oc.osc[I], oc.dual[I], m, z);

    FermionModes fm = fermionModes();
    LittleAlgebraRep la;
    la.mass = m;
    la.centralCharge = z;
    la.oscCoeff = c;
    for (int I = 0; I < 4; ++I) {
        la.osc[I] = c[I] * fm.lower[I]; // asymmetric scaling keeps entries polynomial
        la.oscDual[I] = fm.raise[I];
    }
    checkOscillatorRelations(la.osc, la.oscDual, c);

    la.rep.dim = 16;
    la.rep.images = superchargesFromOscillators(la.osc, la.oscDual);
    la.rep.images["P_0"] = Matrix::scalar(16, -(Scalar::i() * m));
    la.rep.images["P_1"] = Matrix(16);
    la.rep.images["P_2"] = Matrix(16);
    la.rep.images["P_3"] = Matrix(16);
    la.rep.images["Z"] = Matrix::scalar(16, z);
    la.rep.bindings["m"] = m;
    la.rep.bindings["z"] = z;

    VerificationReport self = checkSuperJacobi(p, la.rep);
    if (!self.passed())
        throw SelfCheckFailed("little-algebra bracket residual at {" +
                              self.failures()[0].indices[0] + "," +
                              self.failures()[0].indices[1] + "}: " +
                              self.failures()[0].residual);

    Scalar two(2), four(4);
    std::array<Scalar, 4> stated = {
        two * (two * m + z), two * (two * m + z),
        two * (two * m - z), two * (two * m - z)};
    for (int I = 0; I < 4; ++I) {
        la.conventionsLedger.push_back(
            {"oscillator-coefficient c_" + std::to_string(I + 1), c[I].str(),
             stated[I].str(),
             "computed {a^I, adag_I} coefficient vs the stated polynomial coefficient"});
    }
    return la;
}

VerificationReport hermiticitySpotCheck() {
    VerificationReport report("hermiticity-spot-check",
                              "numeric points with square c_I, symmetric scaling");
    // m = -5/2, z = -3/2 gives c_1 = c_2 = 4 and c_3 = c_4 = 16.
    Scalar m(GaussianRational::fromRatio(-5, 2)), z(GaussianRational::fromRatio(-3, 2));
    AlgebraPresentation p = buildN2Presentation(false);
    auto oc = oscillatorCombos();
    std::array<Scalar, 4> c;
    std::array<Scalar, 4> root;
    for (int I = 0; I < 4; ++I) {
        c[I] = restAnticommutator(p, oc.osc[I], oc.dual[I], m, z);
        GaussianRational val = c[I].constantValue();
        mpz_class num = val.re().get_num(), den = val.re().get_den();
        if (!val.isReal() || val.re() < 0 || mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
            mpz_perfect_square_p(den.get_mpz_t()) == 0)
            throw SelfCheckFailed("spot-check point does not make c_I a rational square");
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        root[I] = Scalar(GaussianRational(mpq_class(rn, rd)));
    }
    FermionModes fm = fermionModes();
    std::array<Matrix, 4> a, d;
    for (int I = 0; I < 4; ++I) {
        a[I] = root[I] * fm.lower[I];
        d[I] = root[I] * fm.raise[I];
    }
    Representation rep;
    rep.dim = 16;
    rep.images = superchargesFromOscillators(a, d);
    rep.images["P_0"] = Matrix::scalar(16, -(Scalar::i() * m));
    rep.images["P_1"] = Matrix(16);
    rep.images["P_2"] = Matrix(16);
    rep.images["P_3"] = Matrix(16);
    rep.images["Z"] = Matrix::scalar(16, z);

    // (Q^I_alpha)^dagger = Qbar_{I alphadot}
    for (int iso = 1; iso <= 2; ++iso)
        for (int spin = 1; spin <= 2; ++spin) {
            report.countCase();
            std::string q = ChargeIndex{false, iso, spin}.name();
            std::string qb = ChargeIndex{true, iso, spin}.name();
            Matrix residual = rep.image(q).dagger() - rep.image(qb);
            if (!residual.isZero())
                report.addFailure({{q, qb}, false, "dagger mismatch"});
        }
    VerificationReport brackets = checkSuperJacobi(p, rep);
    report.countCase();
    if (!brackets.passed())
        report.addFailure({{"brackets"}, false, "symmetric-scaling bracket self-check failed"});
    return report;
}

namespace {

int barCount(const std::array<ChargeIndex, 4>& ch) {
    int n = 0;
    for (const auto& c : ch) n += c.bar ? 1 : 0;
    return n;
}

// three pairings of four slots
const int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

/// The abstract quartic table value for an ordered tuple: linear in P_mu,
/// nonzero only for the three-one families.
EvenQuadratic eq4Value(const std::array<ChargeIndex, 4>& ch) {
    EvenQuadratic out;
    int bars = barCount(ch);
    if (bars != 1 && bars != 3) return out;
    bool conjFamily = (bars == 3);
    // positions of the majority species and of the lone opposite charge
    std::vector<int> major;
    int lone = -1;
    for (int k = 0; k < 4; ++k) {
        if (ch[k].bar == conjFamily) major.push_back(k);
        else lone = k;
    }
    for (int pick = 0; pick < 3; ++pick) {
        int k = major[pick];
        int l = major[(pick + 1) % 3], mm = major[(pick + 2) % 3];
        if (l > mm) std::swap(l, mm);
        GaussianRational coeffBase;
        if (!conjFamily) {
            // 2i delta^{Ik}_{Ilone} eps^{Il Im} eps_{al am} sigma^mu_{ak adlone}
            if (ch[k].iso != ch[lone].iso) continue;
            coeffBase = GaussianRational(2) * GaussianRational::i() *
                        epsUpper(ch[l].iso, ch[mm].iso) *
                        epsSpinorLower(ch[l].spin, ch[mm].spin);
        } else {
            if (ch[k].iso != ch[lone].iso) continue;
            coeffBase = GaussianRational(-2) * GaussianRational::i() *
                        epsLower(ch[l].iso, ch[mm].iso) *
                        epsDottedLower(ch[l].spin, ch[mm].spin);
        }
        if (coeffBase.isZero()) continue;
        for (int mu = 0; mu < 4; ++mu) {
            GaussianRational s = conjFamily
                                     ? sigmaEntry(mu, ch[lone].spin, ch[k].spin).conj()
                                     : sigmaEntry(mu, ch[k].spin, ch[lone].spin);
            out.addLinear(kMomentum[mu], Scalar(coeffBase * s));
        }
    }
    return out;
}

Scalar deltaIso(const ChargeIndex& a, const ChargeIndex& b) {
    return Scalar(a.iso == b.iso ? 1 : 0);
}

} // namespace

AlgebraPresentation buildEq4Presentation() {
    std::vector<Generator> gens;
    for (int mu = 0; mu < 4; ++mu) gens.push_back({kMomentum[mu], {1, 1}});
    for (int iso = 1; iso <= 2; ++iso)
        for (int spin = 1; spin <= 2; ++spin)
            gens.push_back({ChargeIndex{false, iso, spin}.name(), {1, 0}});
    for (int iso = 1; iso <= 2; ++iso)
        for (int spin = 1; spin <= 2; ++spin)
            gens.push_back({ChargeIndex{true, iso, spin}.name(), {0, 1}});
    StructureTables tables;
    auto names = superchargeNames();
    for (const auto& ms : multisets(names, 4)) {
        std::array<ChargeIndex, 4> ch;
        for (int k = 0; k < 4; ++k) ch[k] = ChargeIndex::fromName(ms[k]);
        EvenQuadratic v = eq4Value(ch);
        if (!v.isZero()) tables.quartic[{ms[0], ms[1], ms[2], ms[3]}] = v;
    }
    return AlgebraPresentation(AlgebraKind::OrderFour, std::move(gens), std::move(tables));
}

VerificationReport verifyAbstractQuarticPoincare() {
    VerificationReport report("abstract-quartic-poincare",
                              "transcribed quartic table: symmetry and generalized Jacobi");
    AlgebraPresentation p = buildEq4Presentation();
    auto names = superchargeNames();

    // (a) total symmetry of the transcription
    for (const auto& ms : multisets(names, 4)) {
        report.countCase();
        std::array<int, 4> idx{0, 1, 2, 3};
        std::array<ChargeIndex, 4> ch;
        for (int k = 0; k < 4; ++k) ch[k] = ChargeIndex::fromName(ms[k]);
        EvenQuadratic ref = eq4Value(ch);
        bool symmetric = true;
        std::array<int, 4> perm = idx;
        std::sort(perm.begin(), perm.end());
        do {
            std::array<ChargeIndex, 4> permuted;
            for (int k = 0; k < 4; ++k) permuted[k] = ch[perm[k]];
            if (!(eq4Value(permuted) == ref)) {
                symmetric = false;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!symmetric)
            report.addFailure({{ms[0], ms[1], ms[2], ms[3]}, false,
                               "table value depends on argument order"});
    }

    // (b) generalized Jacobi at structure-constant level: the four-brackets
    // close on P_mu and [P_mu, Q] = 0, so every five-term sum vanishes.
    for (const auto& ms : multisets(names, 5)) {
        report.countCase();
        LinearCombo residual;
        for (int leaveOut = 0; leaveOut < 5; ++leaveOut) {
            std::array<std::string, 4> rest;
            int w = 0;
            for (int k = 0; k < 5; ++k)
                if (k != leaveOut) rest[w++] = ms[k];
            const EvenQuadratic* v = p.quarticBracket(sortedQuad(rest));
            if (!v) continue;
            for (const auto& [gen, coeff] : v->linear) {
                // [Y, gen] = -[gen, Y] from the even-odd table
                for (const auto& [g, s] : p.evenOddBracket(gen, ms[leaveOut]))
                    addCombo(residual, g, -(coeff * s));
            }
        }
        if (!residual.empty())
            report.addFailure({{ms[0], ms[1], ms[2], ms[3], ms[4]}, false,
                               "nonzero structure-level residual"});
    }
    return report;
}

namespace {

struct SplitCharges {
    std::vector<ChargeIndex> plain; // unbarred
    std::vector<ChargeIndex> barred;
};

SplitCharges split(const std::array<ChargeIndex, 4>& ch) {
    SplitCharges s;
    for (const auto& c : ch) (c.bar ? s.barred : s.plain).push_back(c);
    return s;
}

Scalar threeOnePattern(const std::vector<ChargeIndex>& majors, const ChargeIndex& lone,
                       bool conjFamily) {
    Scalar acc;
    for (int pick = 0; pick < 3; ++pick) {
        const ChargeIndex& k = majors[pick];
        const ChargeIndex& l = majors[(pick + 1) % 3];
        const ChargeIndex& mm = majors[(pick + 2) % 3];
        GaussianRational pairEps =
            conjFamily ? epsLower(l.iso, mm.iso) * epsDottedLower(l.spin, mm.spin)
                       : epsUpper(l.iso, mm.iso) * epsSpinorLower(l.spin, mm.spin);
        GaussianRational sig = conjFamily ? sigmaEntry(0, lone.spin, k.spin)
                                          : sigmaEntry(0, k.spin, lone.spin);
        acc += deltaIso(k, lone) * Scalar(pairEps * sig);
    }
    return acc;
}

Scalar fourZeroPattern(const std::vector<ChargeIndex>& cs, bool conjFamily) {
    Scalar acc;
    for (const auto& pr : kPairings) {
        GaussianRational t =
            conjFamily
                ? epsUpper(cs[pr[0]].iso, cs[pr[1]].iso) *
                      epsUpper(cs[pr[2]].iso, cs[pr[3]].iso) *
                      epsDottedLower(cs[pr[0]].spin, cs[pr[1]].spin) *
                      epsDottedLower(cs[pr[2]].spin, cs[pr[3]].spin)
                : epsUpper(cs[pr[0]].iso, cs[pr[1]].iso) *
                      epsUpper(cs[pr[2]].iso, cs[pr[3]].iso) *
                      epsSpinorLower(cs[pr[0]].spin, cs[pr[1]].spin) *
                      epsSpinorLower(cs[pr[2]].spin, cs[pr[3]].spin);
        acc += Scalar(t);
    }
    return acc;
}

Scalar twoTwoMomentumPattern(const SplitCharges& s) {
    const ChargeIndex &q1 = s.plain[0], &q2 = s.plain[1];
    const ChargeIndex &b3 = s.barred[0], &b4 = s.barred[1];
    return deltaIso(q1, b3) * deltaIso(q2, b4) *
               Scalar(sigmaEntry(0, q1.spin, b3.spin) * sigmaEntry(0, q2.spin, b4.spin)) +
           deltaIso(q1, b4) * deltaIso(q2, b3) *
               Scalar(sigmaEntry(0, q1.spin, b4.spin) * sigmaEntry(0, q2.spin, b3.spin));
}

Scalar twoTwoCentralTensor(const SplitCharges& s) {
    const ChargeIndex &q1 = s.plain[0], &q2 = s.plain[1];
    const ChargeIndex &b3 = s.barred[0], &b4 = s.barred[1];
    return Scalar(epsSpinorLower(q1.spin, q2.spin) * epsDottedLower(b3.spin, b4.spin) *
                  epsUpper(q1.iso, q2.iso) * epsLower(b3.iso, b4.iso));
}

} // namespace

Scalar inducedDisplayRhs(const std::array<ChargeIndex, 4>& charges, const Scalar& m,
                         const Scalar& z) {
    SplitCharges s = split(charges);
    Scalar p0 = -(Scalar::i() * m);
    Scalar two(2);
    switch (s.barred.size()) {
        case 0:
            return two * z * z * fourZeroPattern(s.plain, false);
        case 1:
            // -2i Z (...) sigma^mu P_mu, at rest
            return -(two * Scalar::i()) * z * threeOnePattern(s.plain, s.barred[0], false) * p0;
        case 2:
            return two * twoTwoMomentumPattern(s) * p0 * p0 +
                   two * z * z * twoTwoCentralTensor(s);
        case 3:
            return (two * Scalar::i()) * z * threeOnePattern(s.barred, s.plain[0], true) * p0;
        default:
            return two * z * z * fourZeroPattern(s.barred, true);
    }
}

Scalar littleDisplayRhs(const std::array<ChargeIndex, 4>& charges, const Scalar& m,
                        const Scalar& z) {
    SplitCharges s = split(charges);
    Scalar two(2);
    switch (s.barred.size()) {
        case 0:
            return two * z * z * fourZeroPattern(s.plain, false);
        case 1:
            return two * m * z * threeOnePattern(s.plain, s.barred[0], false);
        case 2:
            // 2 m^2 (...) - 2 Z^2 (...): the Z^2 sign follows the derivation
            // (the printed display carries the opposite sign; ledgered).
            return two * m * m * twoTwoMomentumPattern(s) -
                   two * z * z * twoTwoCentralTensor(s);
        case 3:
            return two * m * z * threeOnePattern(s.barred, s.plain[0], true);
        default:
            return two * z * z * fourZeroPattern(s.barred, true);
    }
}

namespace {

const char* kFamilyNames[5] = {"{Q,Q,Q,Q}", "{Q,Q,Q,Qbar}", "{Q,Q,Qbar,Qbar}",
                               "{Q,Qbar,Qbar,Qbar}", "{Qbar,Qbar,Qbar,Qbar}"};

/// Tracks LHS = lambda * RHS with one constant per family.
struct LambdaTracker {
    bool have = false;
    GaussianRational lambda;
    std::vector<Failure> failures;

    static bool constantRatio(const Scalar& lhs, const Scalar& rhs, GaussianRational& out) {
        // rhs != 0; out satisfies lhs == out * rhs, or no constant works
        const auto& [mono, cr] = *rhs.terms().begin();
        auto it = lhs.terms().find(mono);
        GaussianRational cand = (it == lhs.terms().end()) ? GaussianRational(0)
                                                          : it->second / cr;
        if (!(lhs - Scalar(cand) * rhs).isZero()) return false;
        out = cand;
        return true;
    }

    void feed(const std::vector<std::string>& indices, const Scalar& lhs, const Scalar& rhs) {
        if (rhs.isZero()) {
            if (!lhs.isZero())
                failures.push_back({indices, false,
                                    "display value is zero but computed bracket is " +
                                        lhs.str()});
            return;
        }
        GaussianRational cand;
        if (!constantRatio(lhs, rhs, cand)) {
            failures.push_back({indices, false,
                                "bracket is not a constant multiple of the display value"});
            return;
        }
        if (!have) {
            have = true;
            lambda = cand;
        } else if (cand != lambda) {
            failures.push_back({indices, false,
                                "family constant not uniform: " + Scalar(cand).str() +
                                    " vs " + Scalar(lambda).str()});
        }
    }
};

VerificationReport displayComparison(const LittleAlgebraRep& la, bool littleDisplay) {
    VerificationReport report(littleDisplay ? "little-algebra-display" : "induced-display",
                              "330 supercharge 4-multisets, one lambda per family");
    auto names = superchargeNames();
    auto cases = multisets(names, 4);
    struct Row {
        Scalar lhs, rhs;
        int family;
        bool scalarLhs;
    };
    auto rows = mapIndexed<Row>(cases.size(), [&](size_t n) {
        const auto& ms = cases[n];
        std::array<ChargeIndex, 4> ch;
        for (int k = 0; k < 4; ++k) ch[k] = ChargeIndex::fromName(ms[k]);
        Matrix lhs = fourBracketSym(la.rep.image(ms[0]), la.rep.image(ms[1]),
                                    la.rep.image(ms[2]), la.rep.image(ms[3]));
        Row row;
        row.family = barCount(ch);
        row.scalarLhs = lhs.isScalarMultipleOfIdentity();
        row.lhs = lhs(0, 0);
        row.rhs = littleDisplay ? littleDisplayRhs(ch, la.mass, la.centralCharge)
                                : inducedDisplayRhs(ch, la.mass, la.centralCharge);
        return row;
    });
    std::array<LambdaTracker, 5> trackers;
    for (size_t n = 0; n < cases.size(); ++n) {
        report.countCase();
        const auto& ms = cases[n];
        std::vector<std::string> idx(ms.begin(), ms.end());
        if (!rows[n].scalarLhs) {
            report.addFailure({idx, false, "four-bracket is not a scalar matrix"});
            continue;
        }
        trackers[rows[n].family].feed(idx, rows[n].lhs, rows[n].rhs);
    }
    for (int f = 0; f < 5; ++f) {
        for (auto& fail : trackers[f].failures) report.addFailure(fail);
        report.addLedger({std::string("lambda ") + kFamilyNames[f],
                          trackers[f].have ? Scalar(trackers[f].lambda).str()
                                           : "indeterminate",
                          "1", "computed-vs-display family constant"});
    }
    if (littleDisplay) {
        // cross-check: ratio of the two displays per family
        std::array<LambdaTracker, 5> cross;
        for (size_t n = 0; n < cases.size(); ++n) {
            const auto& ms = cases[n];
            std::array<ChargeIndex, 4> ch;
            for (int k = 0; k < 4; ++k) ch[k] = ChargeIndex::fromName(ms[k]);
            std::vector<std::string> idx(ms.begin(), ms.end());
            Scalar induced = inducedDisplayRhs(ch, la.mass, la.centralCharge);
            Scalar little = littleDisplayRhs(ch, la.mass, la.centralCharge);
            if (little.isZero()) {
                if (!induced.isZero())
                    report.addFailure({idx, false, "display cross-check shape mismatch"});
                continue;
            }
            cross[barCount(ch)].feed(idx, induced, little);
        }
        for (int f = 0; f < 5; ++f) {
            for (auto& fail : cross[f].failures) report.addFailure(fail);
            report.addLedger({std::string("display-ratio ") + kFamilyNames[f],
                              cross[f].have ? Scalar(cross[f].lambda).str() : "indeterminate",
                              "1",
                              "induced display at rest over little-algebra display"});
        }
        report.addLedger({"P^2 coefficient comparison",
                          "c = (" + la.oscCoeff[0].str() + ", " + la.oscCoeff[1].str() +
                              ", " + la.oscCoeff[2].str() + ", " + la.oscCoeff[3].str() + ")",
                          "2(2m+z), 2(2m+z), 2(2m-z), 2(2m-z)",
                          "oracle-computed oscillator pairing vs stated polynomial"});
    }
    return report;
}

} // namespace

VerificationReport verifyInducedN2Quartic(const LittleAlgebraRep& la) {
    return displayComparison(la, false);
}

VerificationReport verifyLittleAlgebraDisplay(const LittleAlgebraRep& la) {
    return displayComparison(la, true);
}

VerificationReport checkRepresentationTransfer(const AlgebraPresentation& orderFour,
                                               const Representation& rep) {
    if (orderFour.kind() != AlgebraKind::OrderFour)
        throw ShapeMismatch("transfer check expects an order-four presentation");
    VerificationReport report("representation-transfer",
                              "quartic table vs symmetric four-bracket of images");
    auto odd = orderFour.oddNames();
    auto cases = multisets(odd, 4);
    auto residuals = mapIndexed<Matrix>(cases.size(), [&](size_t n) {
        const auto& ms = cases[n];
        OddQuad key{ms[0], ms[1], ms[2], ms[3]};
        const EvenQuadratic* v = orderFour.quarticBracket(key);
        Matrix tableSide = v ? evaluateEvenQuadratic(*v, rep) : Matrix(rep.dim);
        Matrix bracketSide = fourBracketSym(rep.image(ms[0]), rep.image(ms[1]),
                                            rep.image(ms[2]), rep.image(ms[3]));
        return tableSide - bracketSide;
    });
    for (size_t n = 0; n < cases.size(); ++n) {
        report.countCase();
        if (!residuals[n].isZero()) {
            const auto& ms = cases[n];
            report.addFailure({{ms[0], ms[1], ms[2], ms[3]}, false,
                               "table and bracket disagree"});
        }
    }
    return report;
}

} // namespace liefour
