#include "liefour/scalar.hpp"
#include "liefour/error.hpp"

#include <sstream>

namespace liefour {

std::string GaussianRational::str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string imPart;
    if (im_ == 1) imPart = "i";
    else if (im_ == -1) imPart = "-i";
    else imPart = rat(im_) + "*i";
    if (re_ == 0) return imPart;
    if (im_ > 0) return "(" + rat(re_) + "+" + imPart + ")";
    // imPart already carries the minus sign
    return "(" + rat(re_) + imPart + ")";
}

GaussianRational Scalar::constantValue() const {
    if (terms_.empty()) return GaussianRational(0);
    return terms_.begin()->second;
}

unsigned Scalar::degree() const {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) {
        unsigned t = 0;
        for (const auto& [sym, e] : mono) t += e;
        if (t > d) d = t;
    }
    return d;
}

void Scalar::addTerm(const Monomial& m, const GaussianRational& c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Scalar Scalar::conj() const {
    Scalar r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c.conj());
    return r;
}

GaussianRational Scalar::eval(const std::map<std::string, GaussianRational>& bindings) const {
    GaussianRational total(0);
    for (const auto& [mono, c] : terms_) {
        GaussianRational term = c;
        for (const auto& [sym, e] : mono) {
            auto it = bindings.find(sym);
            if (it == bindings.end()) throw UnboundSymbol(sym);
            for (unsigned k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
    Scalar total;
    for (const auto& [mono, c] : terms_) {
        Scalar term(c);
        for (const auto& [sym, e] : mono) {
            auto it = bindings.find(sym);
            if (it == bindings.end()) {
                term *= Scalar::symbol(sym).pow(e);
            } else {
                term *= it->second.pow(e);
            }
        }
        total += term;
    }
    return total;
}

Scalar Scalar::pow(unsigned n) const {
    Scalar r(1);
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    for (const auto& [mono, c] : b.terms_) r.addTerm(mono, c);
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    for (const auto& [mono, c] : b.terms_) r.addTerm(mono, -c);
    return r;
}

Scalar operator-(const Scalar& a) {
    Scalar r;
    for (const auto& [mono, c] : a.terms_) r.terms_.emplace(mono, -c);
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [sym, e] : mb) m[sym] += e;
            r.addTerm(m, ca * cb);
        }
    }
    return r;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        GaussianRational coeff = c;
        // Fold a real negative (or pure-imaginary negative) sign into the
        // separator so rendering stays minus-sign canonical.
        bool negative = (coeff.im() == 0 && coeff.re() < 0) ||
                        (coeff.re() == 0 && coeff.im() < 0);
        if (first) {
            if (negative) { out << "-"; coeff = -coeff; }
            first = false;
        } else {
            if (negative) { out << " - "; coeff = -coeff; }
            else out << " + ";
        }
        bool unitCoeff = (coeff == GaussianRational(1)) && !mono.empty();
        if (!unitCoeff) out << coeff.str();
        bool firstFactor = unitCoeff;
        for (const auto& [sym, e] : mono) {
            if (!firstFactor || !unitCoeff) out << "*";
            firstFactor = false;
            out << sym;
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// Recursive-descent parser for the Scalar grammar.
class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : text_(text) {}

    Scalar run() {
        Scalar v = expr();
        skipWs();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(1, static_cast<int>(pos_) + 1, msg);
    }

    void skipWs() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skipWs();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skipWs();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        while (eat('*')) v *= factor();
        return v;
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        Scalar base = primary();
        if (eat('^')) {
            std::string digits = readDigits();
            if (digits.empty()) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Scalar primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c >= '0' && c <= '9') {
            std::string num = readDigits();
            std::string den = "1";
            if (eat('/')) {
                den = readDigits();
                if (den.empty()) fail("expected denominator");
            }
            mpq_class q{mpz_class(num), mpz_class(den)};
            q.canonicalize();
            return Scalar(GaussianRational(q));
        }
        if (isIdentStart(c)) {
            std::string name = readIdent();
            if (name == "i") return Scalar::i();
            return Scalar::symbol(name);
        }
        fail("expected rational, symbol, 'i' or '('");
    }

    std::string readDigits() {
        skipWs();
        std::string s;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            s += text_[pos_++];
        return s;
    }

    static bool isIdentStart(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool isIdentChar(char c) {
        return isIdentStart(c) || (c >= '0' && c <= '9');
    }

    std::string readIdent() {
        skipWs();
        std::string s;
        while (pos_ < text_.size() && isIdentChar(text_[pos_])) s += text_[pos_++];
        return s;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

Scalar Scalar::parse(const std::string& text) {
    return ScalarParser(text).run();
}

} // namespace liefour
