#ifndef LIEFOUR_ALGEBRA_HPP
#define LIEFOUR_ALGEBRA_HPP

#include "liefour/matrix.hpp"
#include "liefour/report.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liefour {

/// Z2 x Z2 grade; the generator is even when a+b = 0 mod 2.
struct Grade {
    int a = 0;
    int b = 0;

    bool even() const { return (a + b) % 2 == 0; }
    bool odd() const { return !even(); }
    Grade operator+(const Grade& o) const { return {(a + o.a) % 2, (b + o.b) % 2}; }
    friend bool operator==(const Grade&, const Grade&) = default;
};

struct Generator {
    std::string name;
    Grade grade;
};

/// Generator name -> Scalar coefficient; the value of a quadratic bracket.
using LinearCombo = std::map<std::string, Scalar>;

using OddPair = std::pair<std::string, std::string>; // stored sorted
using OddQuad = std::array<std::string, 4>;          // stored sorted (multiset key)

/// Formal element of span{1, B_i, {B_i,B_j}} over Scalar: the codomain of
/// quartic brackets.  quad coefficients are stored against the
/// anticommutator {B_i,B_j} = B_i B_j + B_j B_i, exactly as the nested
/// identity produces them.
class EvenQuadratic {
public:
    Scalar constant;
    std::map<std::string, Scalar> linear;
    std::map<OddPair, Scalar> quad; // key sorted

    bool isZero() const;
    void addLinear(const std::string& gen, const Scalar& c);
    void addQuad(const std::string& g1, const std::string& g2, const Scalar& c);

    EvenQuadratic operator+(const EvenQuadratic& o) const;
    friend bool operator==(const EvenQuadratic&, const EvenQuadratic&) = default;

    std::string str() const;
};

struct StructureTables {
    /// [even, even]; keyed by the name-sorted pair, antisymmetry handled by
    /// sign at lookup.
    std::map<std::pair<std::string, std::string>, LinearCombo> evenEven;
    /// [even, odd] action.
    std::map<std::pair<std::string, std::string>, LinearCombo> evenOdd;
    /// {odd, odd}; keyed by the name-sorted pair (anticommutator symmetry is
    /// structural).
    std::map<OddPair, LinearCombo> oddOdd;
    /// Totally symmetric 4-bracket, keyed by sorted 4-multisets.
    std::map<OddQuad, EvenQuadratic> quartic;
};

enum class AlgebraKind { Superalgebra, OrderFour };

class AlgebraPresentation {
public:
    AlgebraPresentation() = default;
    AlgebraPresentation(AlgebraKind kind, std::vector<Generator> generators,
                        StructureTables tables,
                        std::optional<std::string> central = std::nullopt);

    AlgebraKind kind() const { return kind_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const StructureTables& tables() const { return tables_; }
    const std::optional<std::string>& central() const { return central_; }

    bool hasGenerator(const std::string& name) const { return grades_.count(name) > 0; }
    Grade grade(const std::string& name) const;
    bool isEven(const std::string& name) const { return grade(name).even(); }

    std::vector<std::string> evenNames() const;
    std::vector<std::string> oddNames() const;

    /// Bracket lookups; missing entries mean a zero bracket.
    LinearCombo evenEvenBracket(const std::string& x, const std::string& y) const;
    LinearCombo evenOddBracket(const std::string& evenGen, const std::string& oddGen) const;
    LinearCombo oddOddBracket(const std::string& x, const std::string& y) const;
    /// Quadratic bracket of any two generators, dispatching on parity.
    LinearCombo bracket(const std::string& x, const std::string& y) const;
    const EvenQuadratic* quarticBracket(const OddQuad& sortedKey) const;

private:
    void validate() const;

    AlgebraKind kind_ = AlgebraKind::Superalgebra;
    std::vector<Generator> generators_;
    StructureTables tables_;
    std::optional<std::string> central_;
    std::map<std::string, Grade> grades_;
};

/// Finite-dimensional assignment generator -> square Scalar matrix.
struct Representation {
    size_t dim = 0;
    std::map<std::string, Matrix> images;
    std::map<std::string, Scalar> bindings;

    const Matrix& image(const std::string& gen) const;
    bool hasImage(const std::string& gen) const { return images.count(gen) > 0; }
};

/// AB - BA when either argument is even, AB + BA when both odd.
Matrix gradedBracket(const Matrix& a, const Matrix& b, bool oddA, bool oddB);

/// Sum of all 24 ordered products; totally symmetric.
Matrix fourBracketSym(const Matrix& a1, const Matrix& a2, const Matrix& a3,
                      const Matrix& a4);

/// {{A1,A2},{A3,A4}} + {{A1,A3},{A2,A4}} + {{A1,A4},{A2,A3}}; identical to
/// fourBracketSym.
Matrix fourBracketNested(const Matrix& a1, const Matrix& a2, const Matrix& a3,
                         const Matrix& a4);

Matrix evaluateLinearCombo(const LinearCombo& combo, const Representation& rep);

/// constant*1 + sum linear*M_i + sum quad*(M_i M_j + M_j M_i).
Matrix evaluateEvenQuadratic(const EvenQuadratic& e, const Representation& rep);

/// Verifies that the representation realizes every quadratic bracket of the
/// presentation exactly, then that the graded Jacobi identity holds on every
/// generator triple.
VerificationReport checkSuperJacobi(const AlgebraPresentation& p, const Representation& rep);

/// Structure-constant-level Jacobi for the purely even (Lie) sector.
VerificationReport checkEvenJacobiStructure(const AlgebraPresentation& p);

/// Five-term generalized Jacobi identity over every 5-multiset of the given
/// odd generators, evaluated in the representation.
VerificationReport checkGeneralizedJacobi(const std::vector<std::string>& oddGens,
                                          const Representation& rep);

/// Derives the order-four presentation from a superalgebra whose odd-odd
/// brackets land in the even span, via the nested-anticommutator identity.
/// Quadratic brackets are copied.
AlgebraPresentation induceQuartic(const AlgebraPresentation& p);

/// [X, {Y1..Y4}] = sum over slots of {..,[X,Yi],..} at representation level,
/// with the left side read from the stored quartic table.
VerificationReport checkEquivariance(const AlgebraPresentation& p, const Representation& rep);

/// All k-multisets (sorted tuples) of the given names.
std::vector<std::vector<std::string>> multisets(const std::vector<std::string>& names,
                                                size_t k);

OddPair sortedPair(std::string a, std::string b);
OddQuad sortedQuad(std::array<std::string, 4> q);

} // namespace liefour

#endif
