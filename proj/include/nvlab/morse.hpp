#ifndef NVLAB_MORSE_HPP
#define NVLAB_MORSE_HPP

#include "nvlab/borel.hpp"
#include "nvlab/equivariant_system.hpp"
#include "nvlab/group.hpp"
#include "nvlab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nvlab {

/* Cellular model of one critical component, acted on by its stabilizer.
 * The action and fiber maps are indexed by position in the stabilizer
 * element list, not by ambient group element. */
struct ComponentModel {
    SimplicialComplex complex;
    EquivariantLocalSystem system;
    LocalSystem orientation;  // rank 1, transports +-1
    SimplicialAction action;
};

/* One critical component: its index, its stabilizer inside the ambient
 * group, and either a cellular model (the equivariant Poincare series is
 * then computed here) or that series supplied directly. */
struct CriticalComponent {
    std::string label;
    long index = 0;
    std::vector<long> stabilizer;  // ambient element ids; must form a subgroup
    std::optional<ComponentModel> model;
    std::optional<CountingSeries> series;
};

/* The subgroup on the listed elements, reindexed by list position.
 * SchemaViolation when the list is not closed or misses the identity. */
FiniteGroup subgroup_of(const FiniteGroup& g, const std::vector<long>& elements);

/* Stabilizer-equivariant Poincare series of the component in degrees
 * 0..p_max: dimensions of the stabilizer-equivariant cohomology of the
 * component with coefficients in the system tensored with the orientation
 * line. Supplied series are validated (NegativeSeriesCoefficient) and
 * re-truncated; they are polynomials, so missing high degrees are zeros. */
CountingSeries component_poincare_series(const CriticalComponent& z, const FiniteGroup& g,
                                         long p_max, long entry_limit = default_entry_limit());

/* Index-shifted, orbit-weighted sum over the listed components:
 * sum of lambda^{index(Z)} * |G_Z|/|G| * P_Z(lambda). Components are NOT
 * grouped into orbits here; callers list every component separately.
 * IndexNotDividing when a stabilizer's size does not divide the group's. */
CountingSeries morse_series(const std::vector<CriticalComponent>& components,
                            const FiniteGroup& g, long p_max,
                            long entry_limit = default_entry_limit());

enum class InequalityVerdict { Holds, Perfect, Fails };

/* gamma = morse - novikov must satisfy the alternating-sum conditions:
 * Q_p = gamma_p - Q_{p-1} (with Q_{-1} = 0) is required to be a
 * non-negative integer for every p, equivalently gamma = (1 + lambda) * Q.
 * Perfect means Q vanishes identically through p_max. */
struct InequalityReport {
    CountingSeries morse;
    CountingSeries novikov;
    CountingSeries q;
    InequalityVerdict verdict = InequalityVerdict::Holds;
    long first_failure = -1;  // first degree where q is negative or fractional
};

InequalityReport verify_inequalities(const CountingSeries& morse, const CountingSeries& novikov,
                                     long p_max);

/* Counting series for isolated critical orbits: rank * (1 - lambda^2)^{-torus_rank}
 * * sum of orbit_counts[i] * lambda^i, truncated. torus_rank 0 covers finite
 * groups, where the per-orbit series is the constant 1. */
CountingSeries isolated_case(const std::vector<long>& orbit_counts, long rank, long torus_rank,
                             long p_max);

/* A zero of the deformation direction together with the action of its
 * stabilizer on the fiber tensored with the orientation line. */
struct IsolatedPoint {
    std::string label;
    std::vector<QMatrix> stabilizer_actions;
};

/* Isolated counting is only meaningful when every stabilizer acts trivially
 * on the fiber datum; this confirms it (NontrivialStabilizerAction names
 * the offender). A connected symmetry group satisfies the condition
 * automatically, which the flag short-circuits. */
void validate_isolated_stabilizers(const std::vector<IsolatedPoint>& points,
                                   bool connected_group = false);

}  // namespace nvlab

#endif
