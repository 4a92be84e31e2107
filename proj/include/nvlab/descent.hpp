#ifndef NVLAB_DESCENT_HPP
#define NVLAB_DESCENT_HPP

#include "nvlab/equivariant_system.hpp"
#include "nvlab/group.hpp"
#include "nvlab/local_system.hpp"
#include "nvlab/simplicial.hpp"

#include <vector>

namespace nvlab {

struct DescentResult {
    SimplicialComplex quotient;       // one cell per orbit; loops and
                                      // parallel edges are expected
    LocalSystem system;
    OneCocycle cocycle;
    std::vector<long> vertex_orbit;   // upstairs vertex -> quotient vertex
};

/* Orbit complex of a free admissible action, with the system and cocycle
 * pushed down along lexicographically smallest orbit representatives. The
 * quotient fiber at an orbit is the fiber at the representative vertex;
 * for a representative edge [v0, v1] with v0 = g0 * a, v1 = g1 * b (a, b
 * the representative vertices), the descended transport is
 * A_{g0}(a)^{-1} * T[v0 v1] * A_{g1}(b) and the cocycle value descends
 * unchanged. Twisted cohomology of the result equals the equivariant
 * dimensions of the input in every degree.
 *
 * ActionNotFree when some nonidentity element fixes a vertex. Quotient
 * cells of dimension >= 2 whose faces would attach with permuted vertex
 * order are rejected (NotAdmissible) with a subdivision hint. */
DescentResult descend_free_quotient(const SimplicialComplex& k, const FiniteGroup& g,
                                    const SimplicialAction& a, const EquivariantLocalSystem& f,
                                    const OneCocycle& theta);

}  // namespace nvlab

#endif
