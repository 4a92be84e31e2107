#ifndef NVLAB_JOIN_HPP
#define NVLAB_JOIN_HPP

#include "nvlab/equivariant_system.hpp"
#include "nvlab/group.hpp"
#include "nvlab/simplicial.hpp"

namespace nvlab {

/* m-fold join of the group with itself: vertex (g, slot) has id
 * slot * |G| + g, and the p-simplices are the tuples using p+1 distinct
 * slots in increasing order, with an arbitrary group element in each. The
 * left translation action on the group coordinate is free, and the complex
 * has vanishing reduced rational cohomology in degrees <= m - 2. */
struct JoinResolution {
    long join_count = 0;   // m
    long acyclicity = 0;   // m - 2
    long group_order = 0;
    SimplicialComplex complex;
    SimplicialAction action;
};

/* Join with acyclicity n, i.e. m = n + 2 copies. */
JoinResolution join_resolution(const FiniteGroup& g, long n);

}  // namespace nvlab

#endif
