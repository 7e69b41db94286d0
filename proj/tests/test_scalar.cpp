#include <doctest.h>

#include "liefour/error.hpp"
#include "test_util.hpp"

using namespace liefour;
using liefour::testutil::randomScalar;

namespace {
const std::vector<std::string> kSymbols = {"m", "z", "x"};
}

TEST_CASE("gaussian rational field operations") {
    GaussianRational a(mpq_class(3, 4), mpq_class(-2, 5));
    GaussianRational b(mpq_class(-1, 3), mpq_class(7, 2));
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == GaussianRational(mpq_class(3, 4) * mpq_class(3, 4) +
                                           mpq_class(2, 5) * mpq_class(2, 5)));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(GaussianRational::fromRatio(4, 6) == GaussianRational::fromRatio(2, 3));
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 120; ++trial) {
        Scalar a = randomScalar(rng, kSymbols);
        Scalar b = randomScalar(rng, kSymbols);
        Scalar c = randomScalar(rng, kSymbols);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar() == a);
        CHECK(a * Scalar(1) == a);
        CHECK((a - a).isZero());
        CHECK(a * Scalar() == Scalar());
    }
}

TEST_CASE("conjugation is an involutive ring morphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = randomScalar(rng, kSymbols);
        Scalar b = randomScalar(rng, kSymbols);
        CHECK(a.conj().conj() == a);
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
    CHECK(Scalar::i().conj() == -Scalar::i());
    // symbols are real: fixed by conjugation
    CHECK(Scalar::symbol("m").conj() == Scalar::symbol("m"));
}

TEST_CASE("canonical rendering round-trips through the parser") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        Scalar a = randomScalar(rng, kSymbols);
        CHECK(Scalar::parse(a.str()) == a);
        // canonical: re-rendering is stable
        CHECK(Scalar::parse(a.str()).str() == a.str());
    }
}

TEST_CASE("rendering of simple values") {
    CHECK(Scalar().str() == "0");
    CHECK(Scalar(1).str() == "1");
    CHECK(Scalar(-3).str() == "-3");
    CHECK(Scalar::i().str() == "i");
    CHECK((-Scalar::i()).str() == "-i");
    CHECK(Scalar::symbol("m").str() == "m");
    CHECK((Scalar(2) * Scalar::symbol("m")).str() == "2*m");
    CHECK((Scalar::symbol("m") * Scalar::symbol("m")).str() == "m^2");
    CHECK((Scalar::symbol("z") - Scalar::symbol("m")).str() == "-m + z");
    CHECK(Scalar(GaussianRational::fromRatio(1, 2)).str() == "1/2");
}

TEST_CASE("parser handles the full grammar") {
    CHECK(Scalar::parse("2*m + 3*z") == Scalar(2) * Scalar::symbol("m") +
                                            Scalar(3) * Scalar::symbol("z"));
    CHECK(Scalar::parse("-(m - z)^2") == -(Scalar::symbol("m") - Scalar::symbol("z")).pow(2));
    CHECK(Scalar::parse("1/2*i") == Scalar(GaussianRational(mpq_class(0), mpq_class(1, 2))));
    CHECK(Scalar::parse("i*i") == Scalar(-1));
    CHECK(Scalar::parse("  7/14  ") == Scalar(GaussianRational::fromRatio(1, 2)));
    CHECK(Scalar::parse("m^3*z").degree() == 4);
}

TEST_CASE("parser reports malformed input") {
    CHECK_THROWS_AS(Scalar::parse("1/"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("(m"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("m +"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("m z"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
}

TEST_CASE("evaluation agrees with substitution") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = randomScalar(rng, kSymbols);
        std::map<std::string, GaussianRational> point = {
            {"m", GaussianRational::fromRatio(3, 2)},
            {"z", GaussianRational(-2)},
            {"x", GaussianRational::fromRatio(-1, 3)}};
        std::map<std::string, Scalar> asScalars;
        for (const auto& [k, v] : point) asScalars[k] = Scalar(v);
        Scalar substituted = a.substitute(asScalars);
        REQUIRE(substituted.isConstant());
        CHECK(substituted.constantValue() == a.eval(point));
    }
    CHECK_THROWS_AS(Scalar::symbol("q").eval({}), UnboundSymbol);
}

TEST_CASE("powers") {
    Scalar m = Scalar::symbol("m");
    CHECK(m.pow(0) == Scalar(1));
    CHECK(m.pow(3) == m * m * m);
    CHECK(Scalar::parse("m^3") == m.pow(3));
}
