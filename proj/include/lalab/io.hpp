#pragma once

#include <iosfwd>

#include "lalab/bounds.hpp"
#include "lalab/constructions.hpp"

namespace lalab {

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// "p q", optional "order ...", then q lines "u v label".
// Stops at a "sums" or "matrix" section.
EdgeLabeling read_labeling(std::istream& in);
void write_labeling(std::ostream& out, const EdgeLabeling& l);

void write_certificate(std::ostream& out, const ConstructionCertificate& c, bool emit_matrix);
void write_report(std::ostream& out, const VerificationReport& r);
void write_bounds(std::ostream& out, const BoundReport& b);
void write_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace lalab
