#ifndef LIEFOUR_PRESENTATION_IO_HPP
#define LIEFOUR_PRESENTATION_IO_HPP

#include "liefour/algebra.hpp"

#include <string>

namespace liefour {

/// Line-oriented JSON presentation format: a header object on the first line,
/// then one object per generator and per structure-constant entry.  The
/// emitter is canonical (fixed entry order, canonical Scalar strings), so
/// emit(parse(emit(p))) == emit(p) byte for byte.
std::string emitPresentation(const AlgebraPresentation& p);

/// Throws ParseError (with line/column) on malformed input and
/// ValidationError when the parsed tables violate a presentation invariant.
AlgebraPresentation parsePresentation(const std::string& text);

/// Same format for representations: header, bindings, then one object per
/// generator image with dense row-major Scalar-grammar entries.
std::string emitRepresentation(const Representation& rep);
Representation parseRepresentation(const std::string& text);

} // namespace liefour

#endif
