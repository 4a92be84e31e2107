#ifndef NVLAB_BOREL_HPP
#define NVLAB_BOREL_HPP

#include "nvlab/equivariant_system.hpp"
#include "nvlab/group.hpp"
#include "nvlab/join.hpp"
#include "nvlab/twisted.hpp"

namespace nvlab {

/* Matrix of the action of group element gi on twisted q-cochains. A cochain
 * value on a q-cell lives in the fiber of the cell's first vertex; the
 * action pulls the cell back through gi, applies the fiber map at the
 * pulled-back first vertex, then carries the value to the first vertex of
 * the image cell along the twisted transport of the connecting edge, with
 * the sign of the vertex-sorting permutation. */
RFMatrix cochain_action(const SimplicialComplex& k, const FiniteGroup& g,
                        const SimplicialAction& a, const EquivariantLocalSystem& f,
                        const OneCocycle& theta, long gi, long q);

/* Cap on the total number of differential entries a Borel assembly may
 * allocate. 200,000 unless the NOVIKOV_LAB_LIMIT environment variable
 * overrides it. */
long default_entry_limit();

/* G-invariant total Hom complex of chains(E) into twisted cochains(M).
 * Since the action on E is free, an invariant Hom is determined by its
 * values on one representative per cell orbit of E, which is how the
 * complex is laid out: the degree-n space is the direct sum over p+q = n of
 * (orbit representatives of p-cells of E) x (twisted q-cochains of M),
 * blocks ordered by increasing p. The differential applies the twisted
 * coboundary of M with sign (-1)^p and precomposes with the boundary of E,
 * translating each face back to its representative through cochain_action.
 *
 * Degrees up to valid_degree_max = join_count - 2 compute the true
 * equivariant dimensions; higher ones depend on the resolution size. */
struct BorelComplex {
    Integer clearing_factor = 1;
    long valid_degree_max = 0;
    std::vector<long> dims;                // total degrees 0..top_built
    std::vector<RFMatrix> differentials;   // D^t, t = 0..top_built-1
};

/* Assemble total degrees 0..top_degree (the whole complex when
 * top_degree = -1). ResourceLimit when the differentials would exceed
 * entry_limit entries in total. */
BorelComplex borel_complex(const JoinResolution& e, const SimplicialComplex& k,
                           const FiniteGroup& g, const SimplicialAction& a,
                           const EquivariantLocalSystem& f, const OneCocycle& theta,
                           long top_degree = -1, long entry_limit = default_entry_limit());

/* Generic-s equivariant cohomology dimensions in degrees 0..i_max, computed
 * from a join resolution of acyclicity i_max + 1 (join_count = i_max + 3). */
std::vector<long> equivariant_dims(const SimplicialComplex& k, const FiniteGroup& g,
                                   const SimplicialAction& a, const EquivariantLocalSystem& f,
                                   const OneCocycle& theta, long i_max,
                                   long entry_limit = default_entry_limit());

/* Recompute the dimensions in degrees 0..degree with join resolutions of
 * acyclicity n1 and n2 (both must be >= degree + 1) and require equality.
 * A StabilityViolation can only come from an implementation defect, never
 * from valid data. */
void stability_check(const SimplicialComplex& k, const FiniteGroup& g, const SimplicialAction& a,
                     const EquivariantLocalSystem& f, const OneCocycle& theta, long degree,
                     long n1, long n2, long entry_limit = default_entry_limit());

}  // namespace nvlab

#endif
