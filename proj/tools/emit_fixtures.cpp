// Regenerates the bundled data files from the builders.
// Usage: emit_fixtures <output-dir>
#include "liefour/presentation_io.hpp"
#include "liefour/spinor.hpp"
#include "liefour/susy.hpp"

#include <fstream>
#include <iostream>

using namespace liefour;

namespace {

void write(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    std::cerr << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    write(dir + "/n2-susy-d4.alg", emitPresentation(buildN2Presentation(false)));
    write(dir + "/quartic-poincare-eq4.alg", emitPresentation(buildEq4Presentation()));
    LittleAlgebraRep la = buildLittleAlgebraRep(Scalar::symbol("m"), Scalar::symbol("z"));
    write(dir + "/little-rep-16.rep", emitRepresentation(la.rep));

    Representation pauli;
    pauli.dim = 2;
    pauli.images["w"] = conventionSigmas().sigma(1);
    pauli.images["x"] = conventionSigmas().sigma(2);
    pauli.images["y"] = conventionSigmas().sigma(3);
    write(dir + "/pauli.rep", emitRepresentation(pauli));
    return 0;
}
