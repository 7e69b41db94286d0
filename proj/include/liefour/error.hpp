#ifndef LIEFOUR_ERROR_HPP
#define LIEFOUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liefour {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundSymbol : Error {
    explicit UnboundSymbol(const std::string& sym)
        : Error("unbound symbol: " + sym) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Internal consistency failure of the fixed convention tables.  Never fires
// on a correct build; it exists so a bad table cannot be used silently.
struct ConventionViolation : Error {
    explicit ConventionViolation(const std::string& what) : Error(what) {}
};

struct MissingImage : Error {
    explicit MissingImage(const std::string& gen)
        : Error("representation has no image for generator: " + gen) {}
};

struct NotCentral : Error {
    explicit NotCentral(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct SelfCheckFailed : Error {
    explicit SelfCheckFailed(const std::string& what) : Error(what) {}
};

struct InhomogeneousTarget : Error {
    explicit InhomogeneousTarget(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(int line, int column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" +
                std::to_string(column) + ": " + what),
          line(line), column(column) {}
    int line;
    int column;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& invariant)
        : Error("validation failed: " + invariant) {}
};

} // namespace liefour

#endif
