#include <doctest.h>

#include "liefour/presentation_io.hpp"
#include "liefour/susy.hpp"

using namespace liefour;

TEST_CASE("presentation emission is canonical and round-trip stable") {
    for (bool lorentz : {false, true}) {
        AlgebraPresentation p = buildN2Presentation(lorentz);
        std::string text = emitPresentation(p);
        AlgebraPresentation back = parsePresentation(text);
        CHECK(emitPresentation(back) == text);
    }
}

TEST_CASE("order-four presentations round-trip with their quartic tables") {
    AlgebraPresentation induced = induceQuartic(buildN2Presentation(false));
    std::string text = emitPresentation(induced);
    AlgebraPresentation back = parsePresentation(text);
    CHECK(back.kind() == AlgebraKind::OrderFour);
    CHECK(emitPresentation(back) == text);
    CHECK(back.tables().quartic.size() == induced.tables().quartic.size());
    // spot-check a quartic value survives exactly
    OddQuad key = sortedQuad({"Q1_1", "Q1_2", "Qb1_1", "Qb1_2"});
    REQUIRE(back.quarticBracket(key) != nullptr);
    CHECK(*back.quarticBracket(key) == *induced.quarticBracket(key));

    std::string abstractText = emitPresentation(buildEq4Presentation());
    CHECK(emitPresentation(parsePresentation(abstractText)) == abstractText);
}

TEST_CASE("representations round-trip byte-identically") {
    LittleAlgebraRep la = buildLittleAlgebraRep(Scalar::symbol("m"), Scalar::symbol("z"));
    std::string text = emitRepresentation(la.rep);
    Representation back = parseRepresentation(text);
    CHECK(emitRepresentation(back) == text);
    CHECK(back.dim == 16);
    for (const auto& [gen, mat] : la.rep.images) CHECK(back.image(gen) == mat);
    CHECK(back.bindings == la.rep.bindings);
}

TEST_CASE("an empty generator list is a valid presentation") {
    AlgebraPresentation p = parsePresentation("{\"schema\":1,\"kind\":\"superalgebra\"}\n");
    CHECK(p.generators().empty());
    CHECK(emitPresentation(p) == "{\"schema\":1,\"kind\":\"superalgebra\"}\n");
}

TEST_CASE("parse errors carry line positions") {
    std::string text = "{\"schema\":1,\"kind\":\"superalgebra\"}\n"
                       "{\"generator\": \"P\", \"grade\": [1, 1]\n"; // unterminated
    try {
        parsePresentation(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parsePresentation(""), ParseError);
    CHECK_THROWS_AS(parsePresentation("{\"schema\":2,\"kind\":\"superalgebra\"}\n"),
                    ParseError);
    CHECK_THROWS_AS(parsePresentation("{\"schema\":1,\"kind\":\"mystery\"}\n"), ParseError);
}

TEST_CASE("symmetry invariants are enforced at load") {
    std::string header = "{\"schema\":1,\"kind\":\"superalgebra\"}\n"
                         "{\"generator\":\"P\",\"grade\":[1,1]}\n"
                         "{\"generator\":\"q1\",\"grade\":[1,0]}\n"
                         "{\"generator\":\"q2\",\"grade\":[0,1]}\n";
    // odd-odd key stored against the anticommutator must be name-sorted
    CHECK_THROWS_AS(
        parsePresentation(header +
                          "{\"bracket\":\"odd-odd\",\"left\":\"q2\",\"right\":\"q1\","
                          "\"value\":{\"P\":\"1\"}}\n"),
        ValidationError);
    // duplicate entries are rejected
    CHECK_THROWS_AS(
        parsePresentation(header +
                          "{\"bracket\":\"odd-odd\",\"left\":\"q1\",\"right\":\"q2\","
                          "\"value\":{\"P\":\"1\"}}\n"
                          "{\"bracket\":\"odd-odd\",\"left\":\"q1\",\"right\":\"q2\","
                          "\"value\":{\"P\":\"2\"}}\n"),
        ValidationError);
    // wrong parity target is caught by presentation validation
    CHECK_THROWS_AS(
        parsePresentation(header +
                          "{\"bracket\":\"odd-odd\",\"left\":\"q1\",\"right\":\"q2\","
                          "\"value\":{\"q1\":\"1\"}}\n"),
        ValidationError);
    // quartic keys must be multiset-canonical
    std::string orderFour = "{\"schema\":1,\"kind\":\"order-four\"}\n"
                            "{\"generator\":\"P\",\"grade\":[1,1]}\n"
                            "{\"generator\":\"q1\",\"grade\":[1,0]}\n"
                            "{\"generator\":\"q2\",\"grade\":[0,1]}\n";
    CHECK_THROWS_AS(
        parsePresentation(orderFour +
                          "{\"bracket\":\"quartic\",\"args\":[\"q2\",\"q1\",\"q1\",\"q1\"],"
                          "\"linear\":{\"P\":\"1\"}}\n"),
        ValidationError);
    // undeclared generator in a value
    CHECK_THROWS_AS(
        parsePresentation(header +
                          "{\"bracket\":\"odd-odd\",\"left\":\"q1\",\"right\":\"q2\","
                          "\"value\":{\"W\":\"1\"}}\n"),
        ValidationError);
}

TEST_CASE("scalar coefficients use the canonical grammar") {
    AlgebraPresentation p = buildN2Presentation(false);
    std::string text = emitPresentation(p);
    // a known structure constant appears with its canonical rendering
    CHECK(text.find("\"Z\":\"-2\"") != std::string::npos);
    CHECK(text.find("-2*i") != std::string::npos);
}
