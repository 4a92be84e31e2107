#ifndef NVLAB_EQUIVARIANT_SYSTEM_HPP
#define NVLAB_EQUIVARIANT_SYSTEM_HPP

#include "nvlab/group.hpp"
#include "nvlab/local_system.hpp"
#include "nvlab/simplicial.hpp"

#include <vector>

namespace nvlab {

/* Group action by vertex permutations: vertex_map[g][v] = g.v. Whether the
 * permutations respect the simplicial structure is checked by
 * validate_action, not here. */
struct SimplicialAction {
    std::vector<std::vector<long>> vertex_map;

    static SimplicialAction trivial(long group_order, long vertex_count);
};

/* Flat system together with a lift of the action: fiber_maps[g][v] carries
 * fiber(v) to fiber(g.v). */
struct EquivariantLocalSystem {
    LocalSystem base;
    std::vector<std::vector<QMatrix>> fiber_maps;

    static EquivariantLocalSystem trivial(long rank, long edge_count, long group_order,
                                          long vertex_count);
};

/* Image of a cell under one element's vertex permutation. `cell` is the id
 * of the sorted image; slot j of the source lands at slot position[j] of the
 * image; sign is the parity of that rearrangement. */
struct CellImage {
    long cell = -1;
    int sign = 1;
    std::vector<long> position;
};

CellImage cell_image(const SimplicialComplex& k, const std::vector<long>& gmap, long dim, long id);

/* Full structural check of an equivariant package, in order: action shape
 * and permutation/homomorphism laws (NotHomomorphism), simplices mapping to
 * simplices (NotSimplicial), setwise-fixed simplices being pointwise fixed
 * (NotAdmissible, remediation: barycentric subdivision), base local-system
 * and cocycle validity (propagated), the fiber-map cocycle law
 * (CocycleLawViolation), transport compatibility (TransportIncompatible),
 * and cocycle invariance (CocycleNotInvariant).
 *
 * Orientation convention when g reverses an edge [v0, v1] (g.v0 > g.v1):
 * the stored image transport is inverted and the stored image cocycle value
 * is negated before comparison, matching the oriented pullback. */
void validate_action(const SimplicialComplex& k, const FiniteGroup& g, const SimplicialAction& a,
                     const EquivariantLocalSystem& f, const OneCocycle& theta);

}  // namespace nvlab

#endif
