#pragma once
// Rendition tightening: four local transformations, each of which either
// raises the number of non-empty cells or keeps it while lowering the total
// degree, applied to a fixpoint.  At the fixpoint every cell that holds an
// edge between two of its own nodes holds nothing else, no node of a cell is
// stranded edgeless inside a flap that has edges elsewhere, nodes of one cell
// never sit in different pieces of its flap, and no node of a degree-3 cell
// separates the other two inside the flap.

#include <string>
#include <vector>

#include "flatwall/multigraph.hpp"
#include "flatwall/rendition.hpp"

namespace flatwall {

// transformation fixpoint; input must validate (checked), output validates
Rendition tighten(const Multigraph& g, const std::vector<VertexId>& boundary,
                  Rendition rho);

// one line per violated tightness property with the offending cell;
// empty iff no transformation of tighten() applies
std::vector<std::string> check_tight_properties(const Multigraph& g, const Rendition& rho);

}  // namespace flatwall
