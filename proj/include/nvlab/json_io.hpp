#ifndef NVLAB_JSON_IO_HPP
#define NVLAB_JSON_IO_HPP

#include "nvlab/morse.hpp"
#include "nvlab/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nvlab {

/* One problem per JSON document. Which fields must be present depends on
 * the command consuming the descriptor; parsing only enforces shape and
 * cross-references (indices resolve, matrices match the declared rank).
 * Mathematical validation stays with the pipeline entry points.
 *
 * The full field reference lives in docs/schema.md. */
struct ProblemDescriptor {
    std::optional<SimplicialComplex> complex;
    OneCocycle cocycle;    // zero on every edge when the field is absent
    LocalSystem system;    // trivial of rank 1 when the field is absent

    std::optional<FiniteGroup> group;
    SimplicialAction action;                            // set iff group is
    std::optional<EquivariantLocalSystem> equivariant;  // assembled iff group is

    std::optional<std::vector<CriticalComponent>> components;
    std::optional<FixedPointData> fixed_points;
    std::optional<long> euler;
    std::optional<CountingSeries> novikov;  // supplied, not computed

    long entry_limit = 0;  // default_entry_limit() unless the file overrides
};

/* Read and shape-check one descriptor. Malformed JSON and schema problems
 * both surface as SchemaViolation; the message keeps the parser's position
 * information for syntax errors. */
ProblemDescriptor load_problem(const std::string& path);

/* Same, from an in-memory document (tests). */
ProblemDescriptor parse_problem(const std::string& text);

}  // namespace nvlab

#endif
