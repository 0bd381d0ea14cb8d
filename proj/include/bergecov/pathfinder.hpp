#pragma once

#include "bergecov/berge.hpp"
#include "bergecov/hypergraph.hpp"

namespace bergecov {

/// Hamiltonian Berge path in a covering hypergraph with edge sizes in {2,3}
/// and n >= 4.
///
/// Grows a path from the lowest edge. Each round either attaches an outside
/// vertex u at a free end, or, when both ends are blocked, rotates
/// v1..vt into v2..vt v1 u using the edge through {v1, vt} (always free in
/// that situation) and the edge that used to embed {v1, v2}.
///
/// Throws NotCovering, TooFewVertices or EdgeSizeOutOfRange on bad input, and
/// InternalInvariantViolation if a blocked end is not of the forced shape.
auto find_hamiltonian_path(const Hypergraph & h) -> BergePath;

/// Shared precondition check for the {2,3} constructive finders.
void require_covering_rank3(const Hypergraph & h, int min_order);

}
