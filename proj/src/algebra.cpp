#include "liefour/algebra.hpp"
#include "liefour/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace liefour {

namespace {

void negate(LinearCombo& c) {
    for (auto& [g, s] : c) s = -s;
}

std::string comboStr(const LinearCombo& c) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, s] : c) {
        if (!first) out << " + ";
        first = false;
        out << "(" << s.str() << ")*" << g;
    }
    return out.str();
}

std::string matrixResidualStr(const Matrix& m, size_t cap = 4) {
    if (m.isZero()) return "0";
    std::ostringstream out;
    size_t shown = 0, nonzero = 0;
    for (size_t r = 0; r < m.dim(); ++r)
        for (size_t c = 0; c < m.dim(); ++c) {
            if (m(r, c).isZero()) continue;
            ++nonzero;
            if (shown < cap) {
                if (shown) out << "; ";
                out << "(" << r << "," << c << ")=" << m(r, c).str();
                ++shown;
            }
        }
    if (nonzero > shown) out << "; ... " << (nonzero - shown) << " more";
    return out.str();
}

} // namespace

OddPair sortedPair(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

OddQuad sortedQuad(std::array<std::string, 4> q) {
    std::sort(q.begin(), q.end());
    return q;
}

bool EvenQuadratic::isZero() const {
    return constant.isZero() && linear.empty() && quad.empty();
}

void EvenQuadratic::addLinear(const std::string& gen, const Scalar& c) {
    if (c.isZero()) return;
    auto& slot = linear[gen];
    slot += c;
    if (slot.isZero()) linear.erase(gen);
}

void EvenQuadratic::addQuad(const std::string& g1, const std::string& g2, const Scalar& c) {
    if (c.isZero()) return;
    OddPair key = sortedPair(g1, g2);
    auto& slot = quad[key];
    slot += c;
    if (slot.isZero()) quad.erase(key);
}

EvenQuadratic EvenQuadratic::operator+(const EvenQuadratic& o) const {
    EvenQuadratic r = *this;
    r.constant += o.constant;
    for (const auto& [g, c] : o.linear) r.addLinear(g, c);
    for (const auto& [k, c] : o.quad) r.addQuad(k.first, k.second, c);
    return r;
}

std::string EvenQuadratic::str() const {
    if (isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    if (!constant.isZero()) {
        sep();
        out << "(" << constant.str() << ")";
    }
    for (const auto& [g, c] : linear) {
        sep();
        out << "(" << c.str() << ")*" << g;
    }
    for (const auto& [k, c] : quad) {
        sep();
        out << "(" << c.str() << ")*{" << k.first << "," << k.second << "}";
    }
    return out.str();
}

AlgebraPresentation::AlgebraPresentation(AlgebraKind kind, std::vector<Generator> generators,
                                         StructureTables tables,
                                         std::optional<std::string> central)
    : kind_(kind), generators_(std::move(generators)), tables_(std::move(tables)),
      central_(std::move(central)) {
    for (const auto& g : generators_) {
        if (!grades_.emplace(g.name, g.grade).second)
            throw ValidationError("duplicate generator name: " + g.name);
    }
    validate();
}

Grade AlgebraPresentation::grade(const std::string& name) const {
    auto it = grades_.find(name);
    if (it == grades_.end()) throw ValidationError("unknown generator: " + name);
    return it->second;
}

std::vector<std::string> AlgebraPresentation::evenNames() const {
    std::vector<std::string> out;
    for (const auto& g : generators_)
        if (g.grade.even()) out.push_back(g.name);
    return out;
}

std::vector<std::string> AlgebraPresentation::oddNames() const {
    std::vector<std::string> out;
    for (const auto& g : generators_)
        if (g.grade.odd()) out.push_back(g.name);
    return out;
}

void AlgebraPresentation::validate() const {
    auto checkCombo = [&](const LinearCombo& c, bool wantEven, const std::string& where) {
        for (const auto& [g, s] : c) {
            if (!hasGenerator(g))
                throw ValidationError(where + " references undeclared generator " + g);
            if (grade(g).even() != wantEven)
                throw ValidationError(where + ": bracket lands in the wrong parity sector (" +
                                      g + ")");
        }
    };
    for (const auto& [key, combo] : tables_.evenEven) {
        if (!isEven(key.first) || !isEven(key.second))
            throw ValidationError("even-even table entry with odd operand");
        if (key.second < key.first)
            throw ValidationError("even-even table key not name-sorted");
        checkCombo(combo, true, "[" + key.first + "," + key.second + "]");
    }
    for (const auto& [key, combo] : tables_.evenOdd) {
        if (!isEven(key.first) || isEven(key.second))
            throw ValidationError("even-odd table entry with wrong parities");
        checkCombo(combo, false, "[" + key.first + "," + key.second + "]");
    }
    for (const auto& [key, combo] : tables_.oddOdd) {
        if (isEven(key.first) || isEven(key.second))
            throw ValidationError("odd-odd table entry with even operand");
        if (key.second < key.first)
            throw ValidationError("odd-odd table key not name-sorted (symmetry invariant)");
        checkCombo(combo, true, "{" + key.first + "," + key.second + "}");
        // Odd-odd brackets land in the grade-sum component of Z2 x Z2.
        Grade sum = grade(key.first) + grade(key.second);
        for (const auto& [g, s] : combo)
            if (!(grade(g) == sum))
                throw ValidationError("{" + key.first + "," + key.second +
                                      "} lands outside the grade-sum component (" + g + ")");
    }
    for (const auto& [key, eq] : tables_.quartic) {
        for (const auto& n : key)
            if (isEven(n)) throw ValidationError("quartic table key with even operand");
        if (!std::is_sorted(key.begin(), key.end()))
            throw ValidationError("quartic table key not multiset-canonical");
        for (const auto& [g, s] : eq.linear) checkCombo({{g, s}}, true, "quartic linear");
        for (const auto& [k, s] : eq.quad) {
            checkCombo({{k.first, s}}, true, "quartic quad");
            checkCombo({{k.second, s}}, true, "quartic quad");
        }
    }
}

LinearCombo AlgebraPresentation::evenEvenBracket(const std::string& x, const std::string& y) const {
    if (x == y) return {};
    bool swap = y < x;
    auto it = tables_.evenEven.find(swap ? std::make_pair(y, x) : std::make_pair(x, y));
    if (it == tables_.evenEven.end()) return {};
    LinearCombo c = it->second;
    if (swap) negate(c);
    return c;
}

LinearCombo AlgebraPresentation::evenOddBracket(const std::string& evenGen,
                                                const std::string& oddGen) const {
    auto it = tables_.evenOdd.find({evenGen, oddGen});
    return it == tables_.evenOdd.end() ? LinearCombo{} : it->second;
}

LinearCombo AlgebraPresentation::oddOddBracket(const std::string& x, const std::string& y) const {
    auto it = tables_.oddOdd.find(sortedPair(x, y));
    return it == tables_.oddOdd.end() ? LinearCombo{} : it->second;
}

LinearCombo AlgebraPresentation::bracket(const std::string& x, const std::string& y) const {
    bool ex = isEven(x), ey = isEven(y);
    if (ex && ey) return evenEvenBracket(x, y);
    if (ex && !ey) return evenOddBracket(x, y);
    if (!ex && ey) {
        LinearCombo c = evenOddBracket(y, x);
        negate(c);
        return c;
    }
    return oddOddBracket(x, y);
}

const EvenQuadratic* AlgebraPresentation::quarticBracket(const OddQuad& sortedKey) const {
    auto it = tables_.quartic.find(sortedKey);
    return it == tables_.quartic.end() ? nullptr : &it->second;
}

const Matrix& Representation::image(const std::string& gen) const {
    auto it = images.find(gen);
    if (it == images.end()) throw MissingImage(gen);
    return it->second;
}

Matrix gradedBracket(const Matrix& a, const Matrix& b, bool oddA, bool oddB) {
    return (oddA && oddB) ? anticommutator(a, b) : commutator(a, b);
}

Matrix fourBracketSym(const Matrix& a1, const Matrix& a2, const Matrix& a3, const Matrix& a4) {
    const Matrix* m[4] = {&a1, &a2, &a3, &a4};
    int idx[4] = {0, 1, 2, 3};
    Matrix sum(a1.dim());
    do {
        sum += (*m[idx[0]] * *m[idx[1]]) * (*m[idx[2]] * *m[idx[3]]);
    } while (std::next_permutation(idx, idx + 4));
    return sum;
}

Matrix fourBracketNested(const Matrix& a1, const Matrix& a2, const Matrix& a3, const Matrix& a4) {
    return anticommutator(anticommutator(a1, a2), anticommutator(a3, a4)) +
           anticommutator(anticommutator(a1, a3), anticommutator(a2, a4)) +
           anticommutator(anticommutator(a1, a4), anticommutator(a2, a3));
}

Matrix evaluateLinearCombo(const LinearCombo& combo, const Representation& rep) {
    Matrix acc(rep.dim);
    for (const auto& [g, c] : combo) acc += c * rep.image(g);
    return acc;
}

Matrix evaluateEvenQuadratic(const EvenQuadratic& e, const Representation& rep) {
    Matrix acc = Matrix::scalar(rep.dim, e.constant);
    for (const auto& [g, c] : e.linear) acc += c * rep.image(g);
    for (const auto& [k, c] : e.quad)
        acc += c * anticommutator(rep.image(k.first), rep.image(k.second));
    return acc;
}

VerificationReport checkSuperJacobi(const AlgebraPresentation& p, const Representation& rep) {
    VerificationReport report("super-jacobi", "all generator pairs and triples");
    const auto& gens = p.generators();
    for (const auto& g : gens) rep.image(g.name); // MissingImage up front

    // Every quadratic bracket of the presentation must be realized exactly.
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i; j < gens.size(); ++j) {
            report.countCase();
            Matrix claimed = evaluateLinearCombo(p.bracket(gens[i].name, gens[j].name), rep);
            Matrix actual = gradedBracket(rep.image(gens[i].name), rep.image(gens[j].name),
                                          gens[i].grade.odd(), gens[j].grade.odd());
            Matrix residual = claimed - actual;
            if (!residual.isZero())
                report.addFailure({{gens[i].name, gens[j].name}, false,
                                   matrixResidualStr(residual)});
        }
    }

    // Graded Jacobi identity on every generator triple (representation level).
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            for (size_t k = j; k < gens.size(); ++k) {
                report.countCase();
                const Matrix &x = rep.image(gens[i].name), &y = rep.image(gens[j].name),
                             &z = rep.image(gens[k].name);
                bool px = gens[i].grade.odd(), py = gens[j].grade.odd(),
                     pz = gens[k].grade.odd();
                auto sign = [](bool pa, bool pb) { return (pa && pb) ? Scalar(-1) : Scalar(1); };
                Matrix jac =
                    sign(px, pz) * gradedBracket(x, gradedBracket(y, z, py, pz), px, (py != pz)) +
                    sign(py, px) * gradedBracket(y, gradedBracket(z, x, pz, px), py, (pz != px)) +
                    sign(pz, py) * gradedBracket(z, gradedBracket(x, y, px, py), pz, (px != py));
                if (!jac.isZero())
                    report.addFailure({{gens[i].name, gens[j].name, gens[k].name}, false,
                                       matrixResidualStr(jac)});
            }
    return report;
}

VerificationReport checkEvenJacobiStructure(const AlgebraPresentation& p) {
    VerificationReport report("even-jacobi-structure", "even sector structure constants");
    auto evens = p.evenNames();
    auto adjoint = [&](const std::string& x, const LinearCombo& c) {
        LinearCombo out;
        for (const auto& [g, s] : c)
            for (const auto& [h, t] : p.evenEvenBracket(x, g)) {
                auto& slot = out[h];
                slot += s * t;
                if (slot.isZero()) out.erase(h);
            }
        return out;
    };
    for (size_t i = 0; i < evens.size(); ++i)
        for (size_t j = i; j < evens.size(); ++j)
            for (size_t k = j; k < evens.size(); ++k) {
                report.countCase();
                const auto &x = evens[i], &y = evens[j], &z = evens[k];
                LinearCombo total;
                LinearCombo t1 = adjoint(x, p.evenEvenBracket(y, z));
                LinearCombo t2 = adjoint(y, p.evenEvenBracket(z, x));
                LinearCombo t3 = adjoint(z, p.evenEvenBracket(x, y));
                for (const auto* t : {&t1, &t2, &t3})
                    for (const auto& [g, s] : *t) {
                        auto& slot = total[g];
                        slot += s;
                        if (slot.isZero()) total.erase(g);
                    }
                if (!total.empty())
                    report.addFailure({{x, y, z}, false, comboStr(total)});
            }
    return report;
}

std::vector<std::vector<std::string>> multisets(const std::vector<std::string>& names, size_t k) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < names.size(); ++i) {
            cur.push_back(names[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

VerificationReport checkGeneralizedJacobi(const std::vector<std::string>& oddGens,
                                          const Representation& rep) {
    VerificationReport report("generalized-jacobi", "5-multisets of odd generators");
    for (const auto& g : oddGens) rep.image(g);

    // Four-brackets precomputed per 4-multiset (read-only during the
    // 5-element sweep, so the sweep can fan out safely).
    auto quadCases = multisets(oddGens, 4);
    auto quadValues = mapIndexed<Matrix>(quadCases.size(), [&](size_t n) {
        const auto& ms = quadCases[n];
        return fourBracketNested(rep.image(ms[0]), rep.image(ms[1]), rep.image(ms[2]),
                                 rep.image(ms[3]));
    });
    std::map<OddQuad, Matrix> cache;
    for (size_t n = 0; n < quadCases.size(); ++n)
        cache.emplace(OddQuad{quadCases[n][0], quadCases[n][1], quadCases[n][2],
                              quadCases[n][3]},
                      std::move(quadValues[n]));
    auto fourBracket = [&](const OddQuad& key) -> const Matrix& { return cache.at(key); };

    auto cases = multisets(oddGens, 5);
    auto residuals = mapIndexed<Matrix>(cases.size(), [&](size_t n) {
        const auto& ms = cases[n];
        Matrix residual(rep.dim);
        for (size_t leaveOut = 0; leaveOut < 5; ++leaveOut) {
            std::array<std::string, 4> rest;
            size_t w = 0;
            for (size_t k = 0; k < 5; ++k)
                if (k != leaveOut) rest[w++] = ms[k];
            residual += commutator(rep.image(ms[leaveOut]), fourBracket(sortedQuad(rest)));
        }
        return residual;
    });
    for (size_t n = 0; n < cases.size(); ++n) {
        report.countCase();
        if (!residuals[n].isZero())
            report.addFailure({{cases[n][0], cases[n][1], cases[n][2], cases[n][3], cases[n][4]},
                               false, matrixResidualStr(residuals[n])});
    }
    return report;
}

AlgebraPresentation induceQuartic(const AlgebraPresentation& p) {
    if (p.kind() != AlgebraKind::Superalgebra)
        throw ShapeMismatch("induceQuartic expects a superalgebra presentation");
    if (p.central()) {
        const std::string& z = *p.central();
        for (const auto& g : p.generators()) {
            if (g.name == z) continue;
            LinearCombo c = g.grade.even() ? p.evenEvenBracket(z, g.name)
                                           : p.evenOddBracket(z, g.name);
            if (!c.empty())
                throw NotCentral("designated central generator " + z +
                                 " has a nonzero bracket with " + g.name);
        }
    }
    for (const auto& [key, combo] : p.tables().oddOdd)
        for (const auto& [g, s] : combo)
            if (!p.isEven(g))
                throw ShapeMismatch("odd-odd bracket not expressible in even generators");

    StructureTables tables;
    tables.evenEven = p.tables().evenEven;
    tables.evenOdd = p.tables().evenOdd;

    auto odd = p.oddNames();
    for (const auto& ms : multisets(odd, 4)) {
        OddQuad key{ms[0], ms[1], ms[2], ms[3]};
        EvenQuadratic value;
        static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& pr : pairings) {
            LinearCombo left = p.oddOddBracket(key[pr[0]], key[pr[1]]);
            LinearCombo right = p.oddOddBracket(key[pr[2]], key[pr[3]]);
            for (const auto& [ga, ca] : left)
                for (const auto& [gb, cb] : right) value.addQuad(ga, gb, ca * cb);
        }
        if (!value.isZero()) tables.quartic.emplace(key, std::move(value));
    }
    return AlgebraPresentation(AlgebraKind::OrderFour, p.generators(), std::move(tables),
                               p.central());
}

VerificationReport checkEquivariance(const AlgebraPresentation& p, const Representation& rep) {
    if (p.kind() != AlgebraKind::OrderFour)
        throw ShapeMismatch("checkEquivariance expects an order-four presentation");
    VerificationReport report("equivariance", "even action vs quartic table");
    for (const auto& gen : p.generators()) {
        if (!gen.grade.even()) continue;
        const Matrix& x = rep.image(gen.name);
        for (const auto& [key, value] : p.tables().quartic) {
            report.countCase();
            Matrix lhs = commutator(x, evaluateEvenQuadratic(value, rep));
            Matrix rhs(rep.dim);
            for (size_t slot = 0; slot < 4; ++slot) {
                std::array<const Matrix*, 4> args;
                Matrix replaced = commutator(x, rep.image(key[slot]));
                for (size_t k = 0; k < 4; ++k)
                    args[k] = (k == slot) ? &replaced : &rep.image(key[k]);
                rhs += fourBracketSym(*args[0], *args[1], *args[2], *args[3]);
            }
            Matrix residual = lhs - rhs;
            if (!residual.isZero())
                report.addFailure({{gen.name, key[0], key[1], key[2], key[3]}, false,
                                   matrixResidualStr(residual)});
        }
    }
    return report;
}

} // namespace liefour
