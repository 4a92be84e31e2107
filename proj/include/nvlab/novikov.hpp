#ifndef NVLAB_NOVIKOV_HPP
#define NVLAB_NOVIKOV_HPP

#include "nvlab/borel.hpp"
#include "nvlab/series.hpp"
#include "nvlab/twisted.hpp"

#include <vector>

namespace nvlab {

/* Equivariant background dimensions together with their jump structure.
 * numbers[i] is the dimension attained for all but finitely many parameter
 * values; jumps[i] locates the exceptional parameters. Everything reported
 * lies within the resolution's valid range, so the values are independent
 * of the resolution chosen. */
struct EquivariantNovikovResult {
    std::vector<long> numbers;       // degrees 0..i_max
    std::vector<JumpSummary> jumps;  // one summary per degree
    long acyclicity = 0;             // of the resolution actually used
    Integer clearing_factor = 1;     // t = clearing_factor * ln(s)
    CountingSeries series;           // sum of numbers[i] * lambda^i
};

/* Run the deformation through the Borel machinery: background dimensions
 * and per-degree jump loci in degrees 0..i_max, using a resolution of
 * acyclicity i_max + 1. With verify_stability the whole computation is
 * repeated at acyclicity i_max + 2 and compared (StabilityViolation on
 * mismatch, which would indicate an implementation defect). */
EquivariantNovikovResult equivariant_novikov(const SimplicialComplex& k, const FiniteGroup& g,
                                             const SimplicialAction& a,
                                             const EquivariantLocalSystem& f,
                                             const OneCocycle& theta, long i_max,
                                             bool verify_stability = false,
                                             long entry_limit = default_entry_limit());

/* Counting series of the numbers, truncated at p_max. p_max beyond the
 * computed range is refused (TruncationExceedsComputation), never padded. */
CountingSeries novikov_series(const EquivariantNovikovResult& r, long p_max);

}  // namespace nvlab

#endif
