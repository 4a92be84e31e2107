#ifndef NVLAB_REPORT_HPP
#define NVLAB_REPORT_HPP

#include "nvlab/errors.hpp"
#include "nvlab/morse.hpp"
#include "nvlab/novikov.hpp"
#include "nvlab/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nvlab {

/* Decimal rendering of t = clearing * ln(s0), six digits; exactly "0" at
 * s0 = 1, symbolic when the clearing factor is too large to exponentiate. */
std::string deformation_parameter(const Rational& s0, const Integer& clearing);

/* Every renderer emits deterministic ASCII: no timestamps, no machine
 * identifiers, no locale-dependent formatting. Text and JSON renderings
 * carry the same facts. */

struct NovikovReport {
    std::vector<long> numbers;  // degrees 0..dim
    long rank = 1;
    Integer clearing_factor = 1;
    long euler_characteristic = 0;      // of the input complex
    std::vector<JumpSummary> jumps;     // empty unless requested
    std::optional<long> only_degree;    // restrict the table and jump blocks
};
std::string render_text(const NovikovReport& r);
std::string render_json(const NovikovReport& r);

struct EquivariantReport {
    std::vector<long> numbers;  // degrees 0..i_max
    long acyclicity = 0;
    Integer clearing_factor = 1;
    bool stability_checked = false;
    std::vector<JumpSummary> jumps;  // empty unless requested
};
std::string render_text(const EquivariantReport& r);
std::string render_json(const EquivariantReport& r);

struct VerifyReport {
    InequalityReport inequalities;
    long p_max = 0;
};
std::string render_text(const VerifyReport& r);
std::string render_json(const VerifyReport& r);

struct SymplecticReport {
    long stable_even = 0;
    long stable_odd = 0;
    PerfectnessReport perfectness;
    FixedPointCounts counts;
    bool no_fixed_points = false;  // empty fixed set, identity still holds
    long p_max = 0;
};
std::string render_text(const SymplecticReport& r);
std::string render_json(const SymplecticReport& r);

}  // namespace nvlab

#endif
