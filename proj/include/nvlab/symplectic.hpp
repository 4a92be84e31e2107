#ifndef NVLAB_SYMPLECTIC_HPP
#define NVLAB_SYMPLECTIC_HPP

#include "nvlab/series.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nvlab {

/* Fixed-point component of a circle (or torus) action: the Poincare series
 * of its cohomology with restricted coefficients, and its index, which is
 * always even for such actions. */
struct FixedComponent {
    CountingSeries poincare;
    long index = 0;
};

struct FixedPointData {
    long ambient_dim = 0;  // dimension of the acted-on manifold
    long rank = 1;         // fiber rank of the coefficient system
    long torus_rank = 1;
    std::vector<FixedComponent> components;
};

/* Large-degree equivariant dimensions for a circle action: the even and odd
 * Betti sums of the fixed-point set. Input is the list of its cohomology
 * dimensions by degree. */
std::pair<long, long> stable_dims_via_localization(const std::vector<long>& fixed_betti);

/* Coefficient-by-coefficient comparison of
 * (1 - lambda^2)^{-torus_rank} * sum of lambda^{index(Z)} * P_Z(lambda)
 * against the supplied equivariant Novikov series, through p_max. */
struct PerfectnessReport {
    CountingSeries lhs;
    CountingSeries novikov;
    bool holds = false;
    long first_discrepancy = -1;
};

PerfectnessReport perfectness_check(const FixedPointData& data, const CountingSeries& novikov,
                                    long p_max);

/* Fixed-point counts recovered from the even Novikov coefficients:
 * m_{2i} = (beta_{2i} - beta_{2i-2}) / rank, odd counts zero. Counts are
 * reported through degree min(ambient_dim, p_max). Violations of the
 * expected growth and symmetry are flagged in the report, not thrown; a
 * nonzero odd coefficient or a non-integer count is a hard error
 * (OddNovikovNonzero, NonIntegerCount) since the formulas do not apply. */
struct FixedPointCounts {
    std::vector<long> counts;
    bool monotonicity_ok = true;
    long monotonicity_degree = -1;  // first even degree where beta decreases
    bool symmetry_checked = false;  // needs p_max >= ambient_dim
    bool symmetry_ok = true;
    long symmetry_degree = -1;      // first i with m_i != m_{n-i}
    bool stabilization_verified = false;
    long stable_value = 0;          // last even coefficient when verified
    long total = 0;                 // sum of the reported counts
    std::optional<bool> total_matches_stable;  // total * rank == stable_value
    std::optional<bool> euler_consistent;      // stable_value == rank * euler
};

FixedPointCounts fixed_point_counts(const CountingSeries& novikov, long rank, long ambient_dim,
                                    long p_max, std::optional<long> euler = std::nullopt);

/* The zero-deformation analogue on equivariant cohomology dimensions
 * directly: m_i = dims[i] - dims[i-2] in every degree, total fixed points
 * dims[ambient_dim]. A zero dimension in degree 0 is anomalous for a
 * nonempty manifold and flagged. */
struct KahlerReport {
    std::vector<long> counts;
    bool monotonicity_ok = true;
    long monotonicity_degree = -1;
    bool symmetry_checked = false;
    bool symmetry_ok = true;
    long symmetry_degree = -1;
    std::optional<long> total;  // dims[ambient_dim], when within range
    bool degree0_anomaly = false;
};

KahlerReport kahler_report(const std::vector<long>& dims, long ambient_dim, long p_max);

}  // namespace nvlab

#endif
