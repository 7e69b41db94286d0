#include "liefour/presentation_io.hpp"
#include "liefour/error.hpp"
#include "liefour/report.hpp"

#include <algorithm>
#include <sstream>

namespace liefour {

namespace {

Json comboToJson(const LinearCombo& combo) {
    Json j = Json::object();
    for (const auto& [gen, coeff] : combo) j[gen] = coeff.str();
    return j;
}

LinearCombo jsonToCombo(const Json& j, int line) {
    if (!j.is_object()) throw ParseError(line, 1, "bracket value must be an object");
    LinearCombo combo;
    for (const auto& [gen, coeff] : j.items()) {
        if (!coeff.is_string())
            throw ParseError(line, 1, "coefficient must be a scalar string");
        Scalar s = Scalar::parse(coeff.get<std::string>());
        if (!s.isZero()) combo[gen] = s;
    }
    return combo;
}

std::string pairKey(const OddPair& p) { return p.first + " " + p.second; }

OddPair parsePairKey(const std::string& key, int line) {
    size_t sp = key.find(' ');
    if (sp == std::string::npos || key.find(' ', sp + 1) != std::string::npos)
        throw ParseError(line, 1, "pair key must be two names separated by one space");
    return {key.substr(0, sp), key.substr(sp + 1)};
}

std::string dumpLine(const Json& j) { return j.dump(); }

/// Splits into (1-based line number, trimmed content) pairs, skipping blanks.
std::vector<std::pair<int, std::string>> numberedLines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.push_back({n, line.substr(a, b - a + 1)});
    }
    return out;
}

Json parseLine(const std::pair<int, std::string>& numbered) {
    try {
        return Json::parse(numbered.second);
    } catch (const Json::parse_error& e) {
        throw ParseError(numbered.first, static_cast<int>(e.byte), e.what());
    }
}

std::string requireString(const Json& j, const char* key, int line) {
    if (!j.contains(key) || !j[key].is_string())
        throw ParseError(line, 1, std::string("missing string field \"") + key + "\"");
    return j[key].get<std::string>();
}

} // namespace

std::string emitPresentation(const AlgebraPresentation& p) {
    std::ostringstream out;
    Json header;
    header["schema"] = 1;
    header["kind"] = p.kind() == AlgebraKind::Superalgebra ? "superalgebra" : "order-four";
    if (p.central()) header["central"] = *p.central();
    out << dumpLine(header) << "\n";

    for (const Generator& g : p.generators()) {
        Json j;
        j["generator"] = g.name;
        j["grade"] = {g.grade.a, g.grade.b};
        out << dumpLine(j) << "\n";
    }
    const StructureTables& t = p.tables();
    auto emitPairTable = [&](const char* kind, const auto& table) {
        for (const auto& [key, combo] : table) {
            Json j;
            j["bracket"] = kind;
            j["left"] = key.first;
            j["right"] = key.second;
            j["value"] = comboToJson(combo);
            out << dumpLine(j) << "\n";
        }
    };
    emitPairTable("even-even", t.evenEven);
    emitPairTable("even-odd", t.evenOdd);
    emitPairTable("odd-odd", t.oddOdd);
    for (const auto& [key, value] : t.quartic) {
        Json j;
        j["bracket"] = "quartic";
        j["args"] = {key[0], key[1], key[2], key[3]};
        if (!value.constant.isZero()) j["constant"] = value.constant.str();
        if (!value.linear.empty()) {
            Json lin = Json::object();
            for (const auto& [gen, c] : value.linear) lin[gen] = c.str();
            j["linear"] = lin;
        }
        if (!value.quad.empty()) {
            Json quad = Json::object();
            for (const auto& [pr, c] : value.quad) quad[pairKey(pr)] = c.str();
            j["quad"] = quad;
        }
        out << dumpLine(j) << "\n";
    }
    return out.str();
}

AlgebraPresentation parsePresentation(const std::string& text) {
    auto lines = numberedLines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty presentation file");
    Json header = parseLine(lines.front());
    if (!header.contains("schema") || header["schema"] != 1)
        throw ParseError(lines.front().first, 1, "unsupported or missing schema");
    std::string kindName = requireString(header, "kind", lines.front().first);
    AlgebraKind kind;
    if (kindName == "superalgebra") kind = AlgebraKind::Superalgebra;
    else if (kindName == "order-four") kind = AlgebraKind::OrderFour;
    else throw ParseError(lines.front().first, 1, "unknown presentation kind");
    std::optional<std::string> central;
    if (header.contains("central")) central = requireString(header, "central", lines.front().first);

    std::vector<Generator> gens;
    StructureTables tables;
    for (size_t n = 1; n < lines.size(); ++n) {
        int lineNo = lines[n].first;
        Json j = parseLine(lines[n]);
        if (j.contains("generator")) {
            Generator g;
            g.name = requireString(j, "generator", lineNo);
            if (!j.contains("grade") || !j["grade"].is_array() || j["grade"].size() != 2)
                throw ParseError(lineNo, 1, "generator grade must be a pair");
            g.grade = {j["grade"][0].get<int>(), j["grade"][1].get<int>()};
            gens.push_back(g);
            continue;
        }
        if (!j.contains("bracket")) throw ParseError(lineNo, 1, "unrecognized entry");
        std::string kindStr = requireString(j, "bracket", lineNo);
        if (kindStr == "quartic") {
            if (!j.contains("args") || !j["args"].is_array() || j["args"].size() != 4)
                throw ParseError(lineNo, 1, "quartic entry needs four args");
            OddQuad key;
            for (int k = 0; k < 4; ++k) key[k] = j["args"][k].get<std::string>();
            if (!std::is_sorted(key.begin(), key.end()))
                throw ValidationError(
                    "quartic keys must be name-sorted multisets (total symmetry of the "
                    "four-bracket)");
            if (tables.quartic.count(key))
                throw ValidationError("duplicate quartic entry");
            EvenQuadratic value;
            if (j.contains("constant"))
                value.constant = Scalar::parse(j["constant"].get<std::string>());
            if (j.contains("linear"))
                for (const auto& [gen, c] : j["linear"].items())
                    value.addLinear(gen, Scalar::parse(c.get<std::string>()));
            if (j.contains("quad"))
                for (const auto& [pk, c] : j["quad"].items()) {
                    OddPair pr = parsePairKey(pk, lineNo);
                    if (pr.second < pr.first)
                        throw ValidationError(
                            "quadratic keys must be name-sorted (anticommutator symmetry)");
                    value.addQuad(pr.first, pr.second,
                                  Scalar::parse(c.get<std::string>()));
                }
            if (!value.isZero()) tables.quartic[key] = value;
            continue;
        }
        std::string left = requireString(j, "left", lineNo);
        std::string right = requireString(j, "right", lineNo);
        if (!j.contains("value")) throw ParseError(lineNo, 1, "bracket entry needs a value");
        LinearCombo combo = jsonToCombo(j["value"], lineNo);
        auto insertPair = [&](auto& table, const char* what) {
            if (table.count({left, right}))
                throw ValidationError(std::string("duplicate ") + what + " entry");
            if (combo.empty()) return;
            table[{left, right}] = combo;
        };
        if (kindStr == "even-even") {
            if (right < left)
                throw ValidationError(
                    "even-even keys must be name-sorted (antisymmetry is applied at "
                    "lookup)");
            insertPair(tables.evenEven, "even-even");
        } else if (kindStr == "even-odd") {
            insertPair(tables.evenOdd, "even-odd");
        } else if (kindStr == "odd-odd") {
            if (right < left)
                throw ValidationError(
                    "odd-odd keys must be name-sorted (anticommutator symmetry)");
            insertPair(tables.oddOdd, "odd-odd");
        } else {
            throw ParseError(lineNo, 1, "unknown bracket kind");
        }
    }
    return AlgebraPresentation(kind, std::move(gens), std::move(tables), central);
}

std::string emitRepresentation(const Representation& rep) {
    std::ostringstream out;
    Json header;
    header["schema"] = 1;
    header["kind"] = "representation";
    header["dim"] = rep.dim;
    out << dumpLine(header) << "\n";
    for (const auto& [sym, value] : rep.bindings) {
        Json j;
        j["binding"] = sym;
        j["value"] = value.str();
        out << dumpLine(j) << "\n";
    }
    for (const auto& [gen, mat] : rep.images) {
        Json j;
        j["image"] = gen;
        Json entries = Json::array();
        for (size_t r = 0; r < rep.dim; ++r)
            for (size_t c = 0; c < rep.dim; ++c) entries.push_back(mat(r, c).str());
        j["entries"] = entries;
        out << dumpLine(j) << "\n";
    }
    return out.str();
}

Representation parseRepresentation(const std::string& text) {
    auto lines = numberedLines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty representation file");
    Json header = parseLine(lines.front());
    if (!header.contains("schema") || header["schema"] != 1)
        throw ParseError(lines.front().first, 1, "unsupported or missing schema");
    if (requireString(header, "kind", lines.front().first) != "representation")
        throw ParseError(lines.front().first, 1, "not a representation file");
    if (!header.contains("dim") || !header["dim"].is_number_unsigned())
        throw ParseError(lines.front().first, 1, "missing dimension");
    Representation rep;
    rep.dim = header["dim"].get<size_t>();
    for (size_t n = 1; n < lines.size(); ++n) {
        int lineNo = lines[n].first;
        Json j = parseLine(lines[n]);
        if (j.contains("binding")) {
            rep.bindings[requireString(j, "binding", lineNo)] =
                Scalar::parse(requireString(j, "value", lineNo));
            continue;
        }
        if (!j.contains("image")) throw ParseError(lineNo, 1, "unrecognized entry");
        std::string gen = requireString(j, "image", lineNo);
        if (rep.images.count(gen)) throw ValidationError("duplicate image for " + gen);
        if (!j.contains("entries") || !j["entries"].is_array() ||
            j["entries"].size() != rep.dim * rep.dim)
            throw ParseError(lineNo, 1, "image needs dim*dim entries");
        Matrix m(rep.dim);
        for (size_t r = 0; r < rep.dim; ++r)
            for (size_t c = 0; c < rep.dim; ++c)
                m(r, c) = Scalar::parse(j["entries"][r * rep.dim + c].get<std::string>());
        rep.images[gen] = m;
    }
    return rep;
}

} // namespace liefour
